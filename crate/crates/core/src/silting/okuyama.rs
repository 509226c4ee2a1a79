use serde::Serialize;

use super::complex::{ProjMorphism, TwoTermComplex};
use super::hom::hom_homotopy;
use crate::error::{Error, Result};
use crate::jacobian::radical::radical_powers;
use crate::jacobian::JacobianAlgebra;
use crate::linalg::Span;
use crate::selfinj::NakayamaPermutation;

/// The arrow map `P_l → ⊕_{s(b)=l} P_{t(b)}` with its certificate.
#[derive(Clone, Debug)]
pub struct Approximation {
    pub vertex: usize,
    /// Arrows out of `vertex`, in quiver order; they index the summands.
    pub arrows: Vec<usize>,
    pub map: ProjMorphism,
    /// Every map `P_l → P_j` with `j ∉ I` factors through the arrow map.
    pub approximating: bool,
    /// The arrows are independent modulo `J²` in each target block.
    pub minimal: bool,
}

fn sorted_set(set: &[usize]) -> Vec<usize> {
    let mut s = set.to_vec();
    s.sort_unstable();
    s.dedup();
    s
}

/// Minimal left `add P_{Q_0 \ I}`-approximations of `P_l`, `l ∈ I`.
pub fn approximation_map(j: &JacobianAlgebra, set: &[usize]) -> Result<Vec<Approximation>> {
    let a = j.algebra();
    let q = j.quiver();
    let set = sorted_set(set);
    if let Some(&v) = set.iter().find(|&&v| v >= q.num_vertices()) {
        return Err(Error::UnknownVertex(format!("#{v}")));
    }
    let powers = radical_powers(a)?;
    let mut j2 = Span::new(a.field(), a.dim());
    if let Some(p) = powers.get(1) {
        for v in p {
            j2.insert(v);
        }
    }
    let mut out = Vec::new();
    for &l in &set {
        let arrows = q.arrows_from(l);
        let targets: Vec<usize> = arrows.iter().map(|&b| q.target(b)).collect();
        if let Some(&b) = arrows.iter().find(|&&b| set.contains(&q.target(b))) {
            let arrow = q.arrow(b);
            return Err(Error::NotMutable(format!(
                "arrow {}: {} -> {} joins two mutation vertices",
                arrow.id,
                q.label(arrow.source),
                q.label(arrow.target)
            )));
        }
        let mut map = ProjMorphism::zero(a, &[l], &targets);
        for (s, &b) in arrows.iter().enumerate() {
            map.set(0, s, j.arrow_coords(b));
        }
        let mut approximating = true;
        for v in (0..q.num_vertices()).filter(|v| !set.contains(v)) {
            let goal = a.block(l, v).len();
            let mut span = Span::new(a.field(), a.dim());
            for (s, &t) in targets.iter().enumerate() {
                for y in a.block(t, v) {
                    span.insert(&a.mul(map.entry(0, s), &a.unit_vec(y)));
                }
            }
            approximating &= span.dim() == goal;
        }
        let mut minimal = true;
        for &t in &targets {
            let mut span = j2.clone();
            for (s, &u) in targets.iter().enumerate() {
                if u == t {
                    minimal &= span.insert(map.entry(0, s));
                }
            }
        }
        out.push(Approximation {
            vertex: l,
            arrows,
            map,
            approximating,
            minimal,
        });
    }
    Ok(out)
}

/// `μ_I(Λ)`: the cones `P_l*` of the approximations for `l ∈ I` and the
/// stalks `P_j` for `j ∉ I`. `summands[v]` is the summand labelled `v`.
#[derive(Clone, Debug)]
pub struct OkuyamaRickard {
    pub set: Vec<usize>,
    pub summands: Vec<TwoTermComplex>,
    pub approximations: Vec<Approximation>,
}

impl OkuyamaRickard {
    pub fn is_mutated(&self, v: usize) -> bool {
        self.set.contains(&v)
    }

    pub fn approximation(&self, l: usize) -> Option<&Approximation> {
        self.approximations.iter().find(|ap| ap.vertex == l)
    }
}

pub fn okuyama_rickard(j: &JacobianAlgebra, set: &[usize]) -> Result<OkuyamaRickard> {
    let a = j.algebra();
    let q = j.quiver();
    let approximations = approximation_map(j, set)?;
    let summands = (0..q.num_vertices())
        .map(|v| match approximations.iter().find(|ap| ap.vertex == v) {
            Some(ap) => TwoTermComplex::new(format!("P{}*", q.label(v)), ap.map.clone()),
            None => TwoTermComplex::stalk(a, format!("P{}", q.label(v)), &[v]),
        })
        .collect();
    Ok(OkuyamaRickard {
        set: sorted_set(set),
        summands,
        approximations,
    })
}

/// Tilting test by two routes: the direct vanishing of `Hom(T, T[±1])`
/// and the criterion `σ I = I`.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct TiltingVerdict {
    /// `Σ dim Hom(T_s, T_t[1])`.
    pub hom_plus_one: usize,
    /// `Σ dim Hom(T_s, T_t[-1])`.
    pub hom_minus_one: usize,
    pub silting: bool,
    pub direct: bool,
    pub sigma_stable: Option<bool>,
    pub agree: bool,
}

impl TiltingVerdict {
    pub fn is_tilting(&self) -> bool {
        self.direct
    }
}

pub fn is_tilting(
    j: &JacobianAlgebra,
    t: &OkuyamaRickard,
    sigma: Option<&NakayamaPermutation>,
) -> Result<TiltingVerdict> {
    let a = j.algebra();
    let mut plus = 0;
    let mut minus = 0;
    for x in &t.summands {
        for y in &t.summands {
            plus += hom_homotopy(a, x, y, 1)?.dim();
            minus += hom_homotopy(a, x, y, -1)?.dim();
        }
    }
    let direct = plus == 0 && minus == 0;
    let sigma_stable = sigma.map(|s| s.stabilizes(&t.set));
    Ok(TiltingVerdict {
        hom_plus_one: plus,
        hom_minus_one: minus,
        silting: plus == 0,
        direct,
        sigma_stable,
        agree: sigma_stable.is_none_or(|s| s == direct),
    })
}
