//! Structured errors and the exit-code contract.

use serde::Serialize;
use serde_json::{json, Value};

use qpmut::qpcore::Violation;
use qpmut::Error;

/// Process exit status. The numeric values are part of the interface.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exit {
    Ok = 0,
    Internal = 1,
    Precondition = 2,
    Inconclusive = 3,
    Failed = 4,
}

impl Exit {
    pub fn code(self) -> i32 {
        self as i32
    }

    /// The worse of two statuses, for commands that combine several checks.
    pub fn max(self, other: Exit) -> Exit {
        if other.code() > self.code() {
            other
        } else {
            self
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct ErrorBody {
    pub code: String,
    pub message: String,
    pub details: Value,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Failure {
    pub exit: Exit,
    pub body: ErrorBody,
}

impl Failure {
    pub fn new(exit: Exit, code: &str, message: impl Into<String>, details: Value) -> Failure {
        Failure {
            exit,
            body: ErrorBody {
                code: code.into(),
                message: message.into(),
                details,
            },
        }
    }

    pub fn input(message: impl Into<String>) -> Failure {
        Failure::new(Exit::Precondition, "bad_input", message, Value::Null)
    }

    pub fn not_mutable(violations: &[Violation]) -> Failure {
        let list: Vec<String> = violations.iter().map(ToString::to_string).collect();
        Failure::new(
            Exit::Precondition,
            "not_mutable",
            "vertex set violates the mutation conditions",
            json!({ "violations": list }),
        )
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.body).expect("error body serializes")
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let message = e.to_string();
        let (exit, code, details) = match &e {
            Error::UnboundedAtD(d) => (
                Exit::Inconclusive,
                "unbounded",
                json!({ "degree_bound": d }),
            ),
            Error::ReductionCap { cap } => {
                (Exit::Inconclusive, "reduction_cap", json!({ "cap": cap }))
            }
            Error::NotSelfinjective(v) => {
                (Exit::Failed, "not_selfinjective", json!({ "vertex": v }))
            }
            Error::NotMutable(s) => (
                Exit::Precondition,
                "not_mutable",
                json!({ "violations": [s] }),
            ),
            Error::OnTwoCycle(v) => (Exit::Precondition, "not_mutable", json!({ "vertex": v })),
            Error::UnknownVertex(v) => {
                (Exit::Precondition, "unknown_vertex", json!({ "vertex": v }))
            }
            Error::UnknownArrow(a) => (Exit::Precondition, "unknown_arrow", json!({ "arrow": a })),
            Error::Parse(_)
            | Error::NotACycle(_)
            | Error::Loop(_)
            | Error::DuplicateVertex(_)
            | Error::DuplicateArrow(_)
            | Error::Disconnected
            | Error::NotPrime(_)
            | Error::FieldMismatch(_)
            | Error::DivisionByZero => (Exit::Precondition, "bad_input", Value::Null),
            Error::NonSplitCorner(v) => (Exit::Precondition, "non_split", json!({ "vertex": v })),
            Error::Precondition(_) => (Exit::Precondition, "precondition", Value::Null),
            _ => (Exit::Internal, "internal", Value::Null),
        };
        Failure::new(exit, code, message, details)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure::input(e.to_string())
    }
}
