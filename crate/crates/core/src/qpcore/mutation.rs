use std::collections::{BTreeSet, HashMap};

use super::qp::QP;
use super::reduce::{split_reduce, TrivialSummary};
use crate::error::{Error, Result};
use crate::pathalg::potential::rotate;
use crate::pathalg::{Arrow, Potential, Quiver};

/// Knobs shared by mutation and everything downstream of it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    pub degree_bound: usize,
    pub reduction_cap: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            degree_bound: 16,
            reduction_cap: 64,
        }
    }
}

/// Arrows around one mutation vertex and the names of the arrows that
/// replace them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexPlan {
    pub vertex: usize,
    pub incoming: Vec<usize>,
    pub outgoing: Vec<usize>,
    pub composites: Vec<(usize, usize, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MutationPlan {
    pub vertices: Vec<usize>,
    pub per_vertex: Vec<VertexPlan>,
}

/// One reason a vertex set cannot be mutated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    TwoCycle {
        vertex: String,
        arrows: (String, String),
    },
    InternalArrow {
        arrow: String,
        from: String,
        to: String,
    },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::TwoCycle { vertex, arrows } => {
                write!(
                    f,
                    "vertex {vertex} lies on the 2-cycle {}{}",
                    arrows.0, arrows.1
                )
            }
            Violation::InternalArrow { arrow, from, to } => {
                write!(
                    f,
                    "arrow {arrow}: {from} -> {to} joins two mutation vertices"
                )
            }
        }
    }
}

/// Every violation of the two mutation conditions for `vertices`.
pub fn mutability_violations(qp: &QP, vertices: &[usize]) -> Vec<Violation> {
    let q = qp.quiver();
    let set: BTreeSet<usize> = vertices.iter().copied().collect();
    let mut out = Vec::new();
    for &k in &set {
        for (a, b) in q.two_cycles_through(k) {
            out.push(Violation::TwoCycle {
                vertex: q.label(k).to_string(),
                arrows: (q.arrow(a).id.clone(), q.arrow(b).id.clone()),
            });
        }
    }
    for a in q.arrows() {
        if set.contains(&a.source) && set.contains(&a.target) {
            out.push(Violation::InternalArrow {
                arrow: a.id.clone(),
                from: q.label(a.source).to_string(),
                to: q.label(a.target).to_string(),
            });
        }
    }
    out
}

/// A plan for mutating at `vertices`, or `NotMutable` listing every violation.
pub fn check_mutability(qp: &QP, vertices: &[usize]) -> Result<MutationPlan> {
    let q = qp.quiver();
    if let Some(&v) = vertices.iter().find(|&&v| v >= q.num_vertices()) {
        return Err(Error::UnknownVertex(format!("#{v}")));
    }
    let violations = mutability_violations(qp, vertices);
    if !violations.is_empty() {
        let text = violations
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join("; ");
        return Err(Error::NotMutable(text));
    }
    let set: BTreeSet<usize> = vertices.iter().copied().collect();
    let per_vertex = set
        .iter()
        .map(|&k| {
            let incoming = q.arrows_into(k);
            let outgoing = q.arrows_from(k);
            let composites = incoming
                .iter()
                .flat_map(|&a| {
                    outgoing
                        .iter()
                        .map(move |&b| (a, b, format!("[{}{}]", q.arrow(a).id, q.arrow(b).id)))
                })
                .collect();
            VertexPlan {
                vertex: k,
                incoming,
                outgoing,
                composites,
            }
        })
        .collect();
    Ok(MutationPlan {
        vertices: set.into_iter().collect(),
        per_vertex,
    })
}

fn fresh_name(
    q_ids: &dyn Fn(&str) -> bool,
    taken: &BTreeSet<String>,
    base: String,
    step: usize,
) -> String {
    if !q_ids(&base) && !taken.contains(&base) {
        return base;
    }
    let mut n = step;
    loop {
        let cand = format!("{n}.{base}");
        if !q_ids(&cand) && !taken.contains(&cand) {
            return cand;
        }
        n += 1;
    }
}

/// Where an arrow of a pre-mutated quiver comes from, in terms of the
/// arrows of the original quiver.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArrowOrigin {
    Kept(usize),
    /// `a*`, reversing an arrow incident to a mutation vertex.
    Star(usize),
    /// `[ab]` for `a` into and `b` out of a mutation vertex.
    Composite(usize, usize),
}

/// Pre-mutation at `k` without touching the provenance log. `step` is used
/// only to disambiguate new arrow ids that would collide with old ones.
pub(crate) fn premutate_raw(qp: &QP, k: usize, step: usize) -> Result<QP> {
    premutate_traced_raw(qp, k, step).map(|(q, _)| q)
}

fn premutate_traced_raw(qp: &QP, k: usize, step: usize) -> Result<(QP, Vec<ArrowOrigin>)> {
    let q = qp.quiver();
    if k >= q.num_vertices() {
        return Err(Error::UnknownVertex(format!("#{k}")));
    }
    if !q.two_cycles_through(k).is_empty() {
        return Err(Error::OnTwoCycle(q.label(k).to_string()));
    }
    let incoming = q.arrows_into(k);
    let outgoing = q.arrows_from(k);
    let replaced: BTreeSet<usize> = incoming.iter().chain(&outgoing).copied().collect();
    let survivors = |id: &str| q.arrow_by_id(id).is_ok_and(|a| !replaced.contains(&a));
    let mut taken = BTreeSet::new();

    let mut arrows: Vec<Arrow> = Vec::new();
    let mut index: HashMap<usize, usize> = HashMap::new();
    let mut star: HashMap<usize, usize> = HashMap::new();
    let mut comp: HashMap<(usize, usize), usize> = HashMap::new();
    let mut origins: Vec<ArrowOrigin> = Vec::new();
    let mut push = |arrows: &mut Vec<Arrow>, id: String, s: usize, t: usize, o: ArrowOrigin| {
        arrows.push(Arrow {
            id,
            source: s,
            target: t,
        });
        origins.push(o);
        arrows.len() - 1
    };
    for (i, a) in q.arrows().iter().enumerate() {
        if a.target == k {
            let name = fresh_name(&survivors, &taken, format!("{}*", a.id), step);
            taken.insert(name.clone());
            star.insert(
                i,
                push(&mut arrows, name, k, a.source, ArrowOrigin::Star(i)),
            );
            for &b in &outgoing {
                let base = format!("[{}{}]", a.id, q.arrow(b).id);
                let name = fresh_name(&survivors, &taken, base, step);
                taken.insert(name.clone());
                comp.insert(
                    (i, b),
                    push(
                        &mut arrows,
                        name,
                        a.source,
                        q.target(b),
                        ArrowOrigin::Composite(i, b),
                    ),
                );
            }
        } else if a.source == k {
            let name = fresh_name(&survivors, &taken, format!("{}*", a.id), step);
            taken.insert(name.clone());
            star.insert(
                i,
                push(&mut arrows, name, a.target, k, ArrowOrigin::Star(i)),
            );
        } else {
            index.insert(
                i,
                push(
                    &mut arrows,
                    a.id.clone(),
                    a.source,
                    a.target,
                    ArrowOrigin::Kept(i),
                ),
            );
        }
    }
    let new_q = Quiver::from_indexed(q.vertices().to_vec(), arrows)?;

    let field = qp.field();
    let mut w = Potential::zero(field);
    w.set_truncated(qp.potential().is_truncated());
    for (c, x) in qp.potential().terms() {
        let start = (0..c.len())
            .find(|&i| q.source(c[i]) != k)
            .expect("a cycle without loops leaves every vertex");
        let c = rotate(c, start);
        let mut out = Vec::with_capacity(c.len());
        let mut i = 0;
        while i < c.len() {
            if q.target(c[i]) == k {
                out.push(comp[&(c[i], c[i + 1])]);
                i += 2;
            } else {
                out.push(index[&c[i]]);
                i += 1;
            }
        }
        w.add_cycle(&out, x.clone());
    }
    for &a in &incoming {
        for &b in &outgoing {
            w.add_cycle(&[comp[&(a, b)], star[&b], star[&a]], field.one());
        }
    }
    Ok((QP::from_parts(new_q, w, qp.provenance().to_vec()), origins))
}

/// Pre-mutation at a single vertex.
pub fn premutate(qp: &QP, k: usize) -> Result<QP> {
    let mut out = premutate_raw(qp, k, qp.provenance().len() + 1)?;
    let mut log = qp.provenance().to_vec();
    log.push(format!("premutate {}", qp.quiver().label(k)));
    out = out.with_provenance(log);
    Ok(out)
}

/// Pre-mutation at every vertex of `vertices`, without reduction.
pub fn premutate_set(qp: &QP, vertices: &[usize]) -> Result<QP> {
    let plan = check_mutability(qp, vertices)?;
    let step = qp.provenance().len() + 1;
    let mut cur = qp.clone();
    for &k in &plan.vertices {
        cur = premutate_raw(&cur, k, step)?;
    }
    Ok(cur)
}

/// Pre-mutation at `vertices` with the origin of every new arrow.
pub fn premutate_traced(qp: &QP, vertices: &[usize]) -> Result<(QP, Vec<ArrowOrigin>)> {
    let plan = check_mutability(qp, vertices)?;
    let step = qp.provenance().len() + 1;
    let mut cur = qp.clone();
    let mut origins: Vec<ArrowOrigin> = (0..qp.quiver().num_arrows())
        .map(ArrowOrigin::Kept)
        .collect();
    for &k in &plan.vertices {
        let (next, local) = premutate_traced_raw(&cur, k, step)?;
        let kept = |x: usize| match origins[x] {
            ArrowOrigin::Kept(o) => o,
            // No arrow joins two mutation vertices.
            _ => unreachable!("mutation vertices are not adjacent"),
        };
        origins = local
            .into_iter()
            .map(|o| match o {
                ArrowOrigin::Kept(x) => origins[x],
                ArrowOrigin::Star(x) => ArrowOrigin::Star(kept(x)),
                ArrowOrigin::Composite(x, y) => ArrowOrigin::Composite(kept(x), kept(y)),
            })
            .collect();
        cur = next;
    }
    Ok((cur, origins))
}

/// `μ_I`: pre-mutations at each vertex of `vertices`, then one reduction.
pub fn mutate(qp: &QP, vertices: &[usize], opts: Options) -> Result<QP> {
    mutate_with_summary(qp, vertices, opts).map(|(q, _)| q)
}

pub fn mutate_with_summary(
    qp: &QP,
    vertices: &[usize],
    opts: Options,
) -> Result<(QP, TrivialSummary)> {
    let pre = premutate_set(qp, vertices)?;
    let (mut out, summary) = split_reduce(&pre, opts.degree_bound, opts.reduction_cap)?;
    let mut sorted = vertices.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let labels: Vec<&str> = sorted.iter().map(|&v| qp.quiver().label(v)).collect();
    let mut log = qp.provenance().to_vec();
    log.push(format!("mutate {}", labels.join(",")));
    out = out.with_provenance(log);
    Ok((out, summary))
}
