use super::complex::{ChainMap, ProjMorphism};
use super::endo::EndAlgebra;
use super::okuyama::OkuyamaRickard;
use crate::error::{Error, Result};
use crate::jacobian::{gabriel_quiver, JacobianAlgebra};
use crate::pathalg::{pair_derivative, Element, Quiver, Scalar};
use crate::qpcore::{premutate_traced, ArrowOrigin, QP};

/// The candidate presentation `φ′: K Q′ → End(T)` on the pre-mutation
/// `(Q′, W′)` of the QP at `I`.
#[derive(Clone, Debug)]
pub struct EndPresentation {
    pub premutation: QP,
    pub origins: Vec<ArrowOrigin>,
    /// `φ′(α)` for each arrow `α` of `Q′`, as an element of `End(T)`.
    pub images: Vec<Vec<Scalar>>,
    pub gabriel: Quiver,
}

impl EndPresentation {
    pub fn quiver(&self) -> &Quiver {
        self.premutation.quiver()
    }

    /// `φ′(x)` for an element of the path algebra of `Q′`.
    pub fn evaluate(&self, end: &EndAlgebra, x: &Element) -> Vec<Scalar> {
        let a = end.algebra();
        let mut out = a.zero_vec();
        for (p, c) in x.terms() {
            let mut v = a.unit_vec(a.idempotent(p.source()));
            for &arrow in p.arrows() {
                v = a.mul(&v, &self.images[arrow]);
                if v.iter().all(Scalar::is_zero) {
                    break;
                }
            }
            for (o, y) in out.iter_mut().zip(v) {
                if !y.is_zero() {
                    *o += &(&y * c);
                }
            }
        }
        out
    }

    /// Whether `φ′(α)` lies in the block `e_{s(α)} End e_{t(α)}`.
    pub fn respects_idempotents(&self, end: &EndAlgebra) -> bool {
        let a = end.algebra();
        let q = self.quiver();
        self.images.iter().enumerate().all(|(k, v)| {
            v.iter().enumerate().all(|(b, x)| {
                x.is_zero() || (a.source(b) == q.source(k) && a.target(b) == q.target(k))
            })
        })
    }
}

/// Builds `φ′` from the pre-mutation of `qp` at `set`:
/// a surviving arrow goes to its stalk map, `[ab]` to `a·b`, `a*` for `a`
/// into `l` to the `a`-component of `P_l* → V_l` whose degree-0 part is
/// `(∂_(a,b) W)_b`, and `b*` for `b` out of `l` to minus the inclusion of
/// the `b`-summand of `U_l` into `P_l*`.
pub fn phi_prime(
    j: &JacobianAlgebra,
    qp: &QP,
    t: &OkuyamaRickard,
    end: &EndAlgebra,
) -> Result<EndPresentation> {
    let a = j.algebra();
    let q = qp.quiver();
    let bound = j.bound();
    let (premutation, origins) = premutate_traced(qp, &t.set)?;
    let qq = premutation.quiver();
    let mut images = Vec::with_capacity(qq.num_arrows());
    for (k, origin) in origins.iter().enumerate() {
        let (s, u) = (qq.source(k), qq.target(k));
        let x = &t.summands[s];
        let y = &t.summands[u];
        let unmatched = || Error::UnmatchedArrow(qq.arrow(k).id.clone());
        let map = match *origin {
            ArrowOrigin::Kept(b) => {
                let mut f = ProjMorphism::zero(a, &[s], &[u]);
                f.set(0, 0, j.arrow_coords(b));
                ChainMap::stalk(a, f)
            }
            ArrowOrigin::Composite(p, r) => {
                let mut f = ProjMorphism::zero(a, &[s], &[u]);
                f.set(0, 0, a.mul(&j.arrow_coords(p), &j.arrow_coords(r)));
                ChainMap::stalk(a, f)
            }
            ArrowOrigin::Star(inc) if t.is_mutated(q.target(inc)) => {
                // a*: the a-component of g_l.
                let l = q.target(inc);
                let ap = t.approximation(l).ok_or_else(unmatched)?;
                let mut zero = ProjMorphism::zero(a, x.zero(), y.zero());
                for (row, &out) in ap.arrows.iter().enumerate() {
                    let d = pair_derivative(q, inc, out, qp.potential(), bound)?;
                    zero.set(row, 0, j.coords(&d));
                }
                ChainMap {
                    minus: ProjMorphism::zero(a, x.minus(), y.minus()),
                    zero,
                }
            }
            ArrowOrigin::Star(b) => {
                // b*: the b-component of −h_l.
                let l = q.source(b);
                let ap = t.approximation(l).ok_or_else(unmatched)?;
                let col = ap
                    .arrows
                    .iter()
                    .position(|&c| c == b)
                    .ok_or_else(unmatched)?;
                let mut zero = ProjMorphism::zero(a, x.zero(), y.zero());
                zero.set(
                    0,
                    col,
                    a.unit_vec(a.idempotent(s)).iter().map(|c| -c).collect(),
                );
                ChainMap {
                    minus: ProjMorphism::zero(a, x.minus(), y.minus()),
                    zero,
                }
            }
        };
        if !map.is_chain_map(a, x, y) {
            return Err(Error::Precondition(format!(
                "image of arrow {} is not a chain map",
                qq.arrow(k).id
            )));
        }
        images.push(end.element(s, u, &map)?);
    }
    let gabriel = gabriel_quiver(end.algebra())?;
    Ok(EndPresentation {
        premutation,
        origins,
        images,
        gabriel,
    })
}
