use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;

use super::exactness::{
    cone_sequence_check, resolution_sequence, stalk_sequence_check, two_almost_split_check,
    weak_two_almost_split_check, ExactnessCertificate,
};
use super::okuyama::{is_tilting, TiltingVerdict};
use super::setting::Setting;
use crate::error::Result;
use crate::jacobian::radical::{gabriel_matrix, radical_basis};
use crate::jacobian::{fd_algebra, FDAlgebra};
use crate::linalg::Span;
use crate::pathalg::{cyclic_derivative, Scalar};
use crate::qpcore::{check_mutability, mutate_with_summary, Options, QP};
use crate::selfinj::{nakayama_permutation, NakayamaPermutation};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub mutation: Options,
    pub seed: u64,
    /// Also rerun the comparison on the opposite QP.
    pub opposite: bool,
    pub timings: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            mutation: Options::default(),
            seed: 0,
            opposite: true,
            timings: false,
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct RelationCheck {
    pub arrow: String,
    pub vanishes: bool,
}

/// The same comparison over the opposite QP.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct OppositeCheck {
    pub dim_end: usize,
    pub dim_mutation: usize,
    pub iso: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct VerificationReport {
    pub vertices: Vec<String>,
    pub degree_bound: usize,
    pub mutable: bool,
    pub nakayama: String,
    pub tilting: TiltingVerdict,
    pub approximations_certified: bool,
    pub dim_base: usize,
    pub dim_end: usize,
    pub dim_mutation: usize,
    pub dim_premutation: usize,
    pub dims_equal: bool,
    pub relations: Vec<RelationCheck>,
    pub relations_vanish: bool,
    pub images_in_radical: bool,
    pub generates: bool,
    pub gabriel_matches: bool,
    pub iso: bool,
    pub exactness: Vec<ExactnessCertificate>,
    pub exactness_holds: bool,
    pub opposite: Option<OppositeCheck>,
    pub truncated: bool,
    pub mutated_potential: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<String, u128>>,
}

impl VerificationReport {
    /// Every recorded check passed.
    pub fn passed(&self) -> bool {
        self.iso
            && self.gabriel_matches
            && self.images_in_radical
            && self.exactness_holds
            && self.tilting.silting
            && self.tilting.agree
            && self.approximations_certified
            && self
                .opposite
                .as_ref()
                .is_none_or(|o| o.iso && o.dim_end == self.dim_end)
    }
}

/// Span of all products of the given generators, including the generators.
fn multiplicative_closure(a: &FDAlgebra, gens: &[Vec<Scalar>]) -> usize {
    let mut span = Span::new(a.field(), a.dim());
    let mut layer: Vec<_> = gens.iter().filter(|g| span.insert(g)).cloned().collect();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for x in &layer {
            for g in gens {
                let p = a.mul(x, g);
                if span.insert(&p) {
                    next.push(p);
                }
            }
        }
        layer = next;
    }
    span.dim()
}

struct Core {
    dim_end: usize,
    dim_mutation: usize,
    dim_premutation: usize,
    relations: Vec<RelationCheck>,
    images_in_radical: bool,
    generates: bool,
    gabriel_matches: bool,
    truncated: bool,
    mutated_potential: String,
}

impl Core {
    fn iso(&self) -> bool {
        self.dim_end == self.dim_mutation
            && self.dim_end == self.dim_premutation
            && self.relations.iter().all(|r| r.vanishes)
            && self.generates
    }
}

fn compare(st: &Setting, opts: &VerifyOptions) -> Result<Core> {
    let bound = opts.mutation.degree_bound;
    let end = st.end.algebra();
    let pre = &st.phi.premutation;
    let (mu, summary) = mutate_with_summary(&st.qp, &st.t.set, opts.mutation)?;
    let dim_mutation = fd_algebra(&mu, bound)?.dim();
    let dim_premutation = fd_algebra(pre, bound)?.dim();
    let q = pre.quiver();
    let relations = (0..q.num_arrows())
        .map(|k| {
            let d = cyclic_derivative(q, k, pre.potential(), bound)?;
            let v = st.phi.evaluate(&st.end, &d);
            Ok(RelationCheck {
                arrow: q.arrow(k).id.clone(),
                vanishes: v.iter().all(|x| x.is_zero()),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut radical = Span::new(end.field(), end.dim());
    for v in radical_basis(end)? {
        radical.insert(&v);
    }
    let images_in_radical = st.phi.images.iter().all(|v| radical.contains(v));
    let mut gens: Vec<_> = end.idempotents().iter().map(|&e| end.unit_vec(e)).collect();
    gens.extend(st.phi.images.iter().cloned());
    let generates = multiplicative_closure(end, &gens) == end.dim();
    let gabriel_matches = gabriel_matrix(end)? == mu.quiver().multiplicity_matrix();
    Ok(Core {
        dim_end: end.dim(),
        dim_mutation,
        dim_premutation,
        relations,
        images_in_radical,
        generates,
        gabriel_matches,
        truncated: summary.truncated || mu.is_truncated(),
        mutated_potential: mu.display_potential(),
    })
}

/// Checks that `End(μ_I(Λ))` is the Jacobian algebra of `μ_I(qp)`.
///
/// The map `φ′` is built explicitly; the algebras are isomorphic when the
/// dimensions agree, `φ′` kills every cyclic derivative of `W′` and the
/// images of arrows and idempotents generate `End(T)`.
pub fn verify_theorem(qp: &QP, set: &[usize], opts: VerifyOptions) -> Result<VerificationReport> {
    let mut timings = BTreeMap::new();
    let clock = Instant::now();
    let mut lap = |name: &str, start: &mut Instant| {
        timings.insert(name.to_string(), start.elapsed().as_millis());
        *start = Instant::now();
    };
    let mut start = clock;
    let bound = opts.mutation.degree_bound;
    check_mutability(qp, set)?;
    let base = fd_algebra(qp, bound)?;
    let sigma: NakayamaPermutation = nakayama_permutation(base.algebra(), opts.seed)?;
    lap("base", &mut start);

    let st = Setting::with_base(qp, set, base)?;
    let tilting = is_tilting(&st.base, &st.t, Some(&sigma))?;
    let approximations_certified =
        st.t.approximations
            .iter()
            .all(|ap| ap.approximating && ap.minimal);
    lap("end", &mut start);

    let core = compare(&st, &opts)?;
    lap("compare", &mut start);

    let n = qp.quiver().num_vertices();
    let mut exactness = Vec::new();
    for v in 0..n {
        let r = resolution_sequence(&st.base, qp, v)?;
        exactness.push(r.at_u);
        exactness.push(r.at_v);
    }
    for v in 0..n {
        exactness.push(two_almost_split_check(&st, v)?);
    }
    for v in 0..n {
        if st.t.is_mutated(v) {
            exactness.extend(weak_two_almost_split_check(&st, v)?);
            exactness.push(cone_sequence_check(&st, v)?);
        } else {
            exactness.push(stalk_sequence_check(&st, v)?);
        }
    }
    let exactness_holds = exactness.iter().all(ExactnessCertificate::holds);
    lap("exactness", &mut start);

    let opposite = if opts.opposite {
        let op = qp.opposite();
        let st_op = Setting::new(&op, set, bound)?;
        let c = compare(&st_op, &opts)?;
        Some(OppositeCheck {
            dim_end: c.dim_end,
            dim_mutation: c.dim_mutation,
            iso: c.iso(),
        })
    } else {
        None
    };
    lap("opposite", &mut start);
    timings.insert("total".into(), clock.elapsed().as_millis());

    let mut labels: Vec<usize> = st.t.set.clone();
    labels.sort_unstable();
    Ok(VerificationReport {
        vertices: labels
            .iter()
            .map(|&v| qp.quiver().label(v).to_string())
            .collect(),
        degree_bound: bound,
        mutable: true,
        nakayama: sigma.to_string(),
        tilting,
        approximations_certified,
        dim_base: st.base.dim(),
        dim_end: core.dim_end,
        dim_mutation: core.dim_mutation,
        dim_premutation: core.dim_premutation,
        dims_equal: core.dim_end == core.dim_mutation && core.dim_end == core.dim_premutation,
        relations_vanish: core.relations.iter().all(|r| r.vanishes),
        iso: core.iso(),
        relations: core.relations,
        images_in_radical: core.images_in_radical,
        generates: core.generates,
        gabriel_matches: core.gabriel_matches,
        exactness,
        exactness_holds,
        opposite,
        truncated: core.truncated,
        mutated_potential: core.mutated_potential,
        timings_ms: opts.timings.then_some(timings),
    })
}
