//! Mutation of quivers with potential, Jacobian algebras as finite-dimensional
//! algebras, and verification of derived equivalences given by two-term
//! silting complexes.

#![allow(clippy::needless_range_loop)]

pub mod document;
pub mod error;
pub mod fixtures;
pub mod jacobian;
pub mod linalg;
pub mod pathalg;
pub mod qpcore;
pub mod selfinj;
pub mod silting;

pub use error::{Error, Result};
