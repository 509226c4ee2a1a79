//! Modules over finite-dimensional algebras, the Nakayama permutation and
//! selfinjectivity.

pub mod module;
pub mod nakayama;

pub use module::{
    algebra_generators, hom_space, injective_dual, module_isomorphic, projective, IsoVerdict,
    Module,
};
pub use nakayama::{
    is_selfinjective, nakayama_permutation, sigma_orbits, NakayamaPermutation, SelfinjVerdict,
};
