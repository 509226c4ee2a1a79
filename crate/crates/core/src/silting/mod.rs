//! Two-term complexes of projectives, the Okuyama–Rickard complex, its
//! endomorphism algebra and the comparison with the mutated Jacobian
//! algebra.

pub mod complex;
pub mod endo;
pub mod exactness;
pub mod hom;
pub mod okuyama;
pub mod phi;
pub mod setting;
pub mod verify;

pub use complex::{ChainMap, ProjMorphism, TwoTermComplex};
pub use endo::{end_algebra, EndAlgebra};
pub use exactness::{
    cone_sequence_check, resolution_maps, resolution_sequence, stalk_sequence_check,
    two_almost_split_check, weak_two_almost_split_check, ExactnessCertificate, ResolutionSequence,
};
pub use hom::{hom_homotopy, post_compose, pre_compose, HomLayout, HomSpace};
pub use okuyama::{
    approximation_map, is_tilting, okuyama_rickard, Approximation, OkuyamaRickard, TiltingVerdict,
};
pub use phi::{phi_prime, EndPresentation};
pub use setting::Setting;
pub use verify::{verify_theorem, OppositeCheck, RelationCheck, VerificationReport, VerifyOptions};
