//! Scalars, quivers, paths, truncated path-algebra elements and potentials.

pub mod element;
pub mod potential;
pub mod quiver;
pub mod scalar;

pub use element::{Element, Path};
pub use potential::{
    canonical_rotation, cyclic_derivative, pair_derivative, right_derivative, substitute, Potential,
};
pub use quiver::{Arrow, Quiver};
pub use scalar::{Field, Scalar};

/// Concatenates `p` then `q`; `None` plays the role of the zero path.
pub fn compose_paths(p: &Path, q: &Path) -> Option<Path> {
    p.compose(q)
}
