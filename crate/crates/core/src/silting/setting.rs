use super::endo::{end_algebra, EndAlgebra};
use super::okuyama::{okuyama_rickard, OkuyamaRickard};
use super::phi::{phi_prime, EndPresentation};
use crate::error::Result;
use crate::jacobian::{fd_algebra, JacobianAlgebra};
use crate::qpcore::{check_mutability, QP};

/// Everything built from a QP and a mutation set: `Λ`, `T = μ_I(Λ)`,
/// `End(T)` and `φ′`.
#[derive(Clone, Debug)]
pub struct Setting {
    pub qp: QP,
    pub base: JacobianAlgebra,
    pub t: OkuyamaRickard,
    pub end: EndAlgebra,
    pub phi: EndPresentation,
}

impl Setting {
    pub fn new(qp: &QP, set: &[usize], bound: usize) -> Result<Setting> {
        check_mutability(qp, set)?;
        let base = fd_algebra(qp, bound)?;
        Setting::with_base(qp, set, base)
    }

    pub fn with_base(qp: &QP, set: &[usize], base: JacobianAlgebra) -> Result<Setting> {
        check_mutability(qp, set)?;
        let t = okuyama_rickard(&base, set)?;
        let end = end_algebra(base.algebra(), &t)?;
        let phi = phi_prime(&base, qp, &t, &end)?;
        Ok(Setting {
            qp: qp.clone(),
            base,
            t,
            end,
            phi,
        })
    }
}
