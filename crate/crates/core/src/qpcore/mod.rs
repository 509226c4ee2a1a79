//! Quivers with potential, pre-mutation, reduction and mutation.

pub mod mutation;
pub mod qp;
pub mod reduce;
pub mod torus;

pub use mutation::{
    check_mutability, mutability_violations, mutate, mutate_with_summary, premutate, premutate_set,
    premutate_traced, ArrowOrigin, MutationPlan, Options, VertexPlan, Violation,
};
pub use qp::{parse_potential, QP};
pub use reduce::{split_reduce, TrivialSummary};

/// Opposite QP: every arrow and every cycle reversed.
pub fn opposite(qp: &QP) -> QP {
    qp.opposite()
}
