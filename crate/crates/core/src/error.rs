use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime modulus")]
    NotPrime(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("arrow `{0}` is a loop")]
    Loop(String),
    #[error("duplicate vertex label `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate arrow id `{0}`")]
    DuplicateArrow(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("quiver is not connected")]
    Disconnected,
    #[error("not a cycle: {0}")]
    NotACycle(String),
    #[error("element contains a trivial path")]
    TrivialTerm,
    #[error("substitution for `{arrow}` has a term with wrong endpoints")]
    SubstitutionMismatch { arrow: String },
    #[error("vertex `{0}` lies on a 2-cycle")]
    OnTwoCycle(String),
    #[error("vertex set violates the mutation conditions: {0}")]
    NotMutable(String),
    #[error("reduction did not converge within {cap} passes")]
    ReductionCap { cap: usize },
    #[error("Jacobian algebra is not certified finite-dimensional at degree bound {0}")]
    UnboundedAtD(usize),
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("idempotents are not complete and orthogonal: {0}")]
    BadIdempotents(String),
    #[error("local corner at vertex {0} does not split over the base field")]
    NonSplitCorner(usize),
    #[error("algebra mismatch between modules")]
    AlgebraMismatch,
    #[error("algebra is not selfinjective: no projective matches D(e_{0} A)")]
    NotSelfinjective(String),
    #[error("arrow `{0}` of the mutated quiver has no defining clause")]
    UnmatchedArrow(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
}
