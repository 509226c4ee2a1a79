use std::collections::{BTreeSet, HashMap};

use super::qp::QP;
use crate::error::{Error, Result};
use crate::pathalg::potential::rotate;
use crate::pathalg::{substitute, Arrow, Element, Path, Potential, Quiver, Scalar};

/// What the reduction removed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TrivialSummary {
    /// Deleted arrow pairs, as ids in the input quiver.
    pub deleted: Vec<(String, String)>,
    /// Human-readable substitutions in the order they were applied.
    pub substitutions: Vec<String>,
    /// Total passes of the splitting loop over all pairs.
    pub passes: usize,
    pub truncated: bool,
}

impl TrivialSummary {
    pub fn is_empty(&self) -> bool {
        self.deleted.is_empty()
    }
}

fn arrow_elem(q: &Quiver, a: usize, c: Scalar, bound: usize) -> Element {
    Element::from_path(Path::arrow(q, a), c, bound)
}

/// Splits off the trivial part of `qp`: returns the reduced part on the
/// quiver with the paired degree-2 arrows deleted.
///
/// Step one makes the degree-2 part a sum of disjoint products `x y` by
/// linear changes of arrows. Step two removes every other occurrence of
/// `x` and `y` by the substitutions `y ↦ y − F`, `x ↦ x − G`, where `x F`
/// collects the terms containing `x` (each rotated to its first `x`) and
/// `y G` the remaining terms containing `y`.
pub fn split_reduce(qp: &QP, bound: usize, cap: usize) -> Result<(QP, TrivialSummary)> {
    let q = qp.quiver();
    let field = qp.field();
    let mut w = qp.potential().clone();
    let mut summary = TrivialSummary::default();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut done: BTreeSet<usize> = BTreeSet::new();
    let name = |a: usize| q.arrow(a).id.clone();

    // Step one: linear normalization of the degree-2 part.
    loop {
        let quad: Vec<(usize, usize, Scalar)> = w
            .degree_two()
            .into_iter()
            .filter(|(x, y, _)| !done.contains(x) && !done.contains(y))
            .collect();
        let Some((x, y, cxy)) = quad.iter().max_by_key(|(x, y, _)| (*x, *y)).cloned() else {
            break;
        };
        let partner = |t: &(usize, usize, Scalar), a: usize| -> Option<(usize, Scalar)> {
            if t.0 == a {
                Some((t.1, t.2.clone()))
            } else if t.1 == a {
                Some((t.0, t.2.clone()))
            } else {
                None
            }
        };
        // y ↦ (y − Σ_{v≠y} C{x,v} v) / C{x,y}
        let inv = cxy.inv()?;
        let mut img = arrow_elem(q, y, inv.clone(), bound);
        let mut text = format!("{} -> ({}", name(y), name(y));
        for t in &quad {
            if let Some((v, c)) = partner(t, x) {
                if v != y {
                    img.add_term(Path::arrow(q, v), -&(&c * &inv));
                    text.push_str(&format!(" - {}·{}", c, name(v)));
                }
            }
        }
        text.push_str(&format!(")/{cxy}"));
        if !(img.len() == 1 && inv.is_one()) {
            summary.substitutions.push(text);
            w = substitute(q, &w, &HashMap::from([(y, img)]), bound)?;
        }
        // x ↦ x − Σ_{u≠x} C'{u,y} u
        let quad2 = w.degree_two();
        let mut img = arrow_elem(q, x, field.one(), bound);
        let mut text = name(x).to_string() + " -> " + &name(x);
        for t in &quad2 {
            if let Some((u, c)) = partner(t, y) {
                if u != x {
                    img.add_term(Path::arrow(q, u), -&c);
                    text.push_str(&format!(" - {}·{}", c, name(u)));
                }
            }
        }
        if img.len() > 1 {
            summary.substitutions.push(text);
            w = substitute(q, &w, &HashMap::from([(x, img)]), bound)?;
        }
        pairs.push((x, y));
        done.insert(x);
        done.insert(y);
    }

    // Step two: split each pair off.
    for &(a, b) in &pairs {
        let mut passes = 0;
        loop {
            let f = strip_first(q, &w, a, None, bound);
            if !f.is_zero() {
                summary.substitutions.push(format!(
                    "{} -> {} - ({})",
                    name(b),
                    name(b),
                    f.display(q)
                ));
                let img = arrow_elem(q, b, field.one(), bound).sub(&f);
                w = substitute(q, &w, &HashMap::from([(b, img)]), bound)?;
            }
            let g = strip_first(q, &w, b, Some(a), bound);
            if !g.is_zero() {
                summary.substitutions.push(format!(
                    "{} -> {} - ({})",
                    name(a),
                    name(a),
                    g.display(q)
                ));
                let img = arrow_elem(q, a, field.one(), bound).sub(&g);
                w = substitute(q, &w, &HashMap::from([(a, img)]), bound)?;
            }
            passes += 1;
            summary.passes += 1;
            if f.is_zero() && g.is_zero() {
                break;
            }
            if passes >= cap {
                return Err(Error::ReductionCap { cap });
            }
        }
        summary.deleted.push((name(a), name(b)));
    }

    // Step three: delete the pairs.
    let gone: BTreeSet<usize> = pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
    let mut map = HashMap::new();
    let mut arrows = Vec::new();
    for (i, arr) in q.arrows().iter().enumerate() {
        if !gone.contains(&i) {
            map.insert(i, arrows.len());
            arrows.push(Arrow {
                id: arr.id.clone(),
                source: arr.source,
                target: arr.target,
            });
        }
    }
    let mut rest = Potential::zero(field);
    rest.set_truncated(w.is_truncated());
    for (c, x) in w.terms() {
        if c.iter().any(|a| gone.contains(a)) {
            debug_assert!(c.len() == 2, "paired arrow left in a longer term");
            continue;
        }
        rest.add_cycle(c, x.clone());
    }
    let reduced = rest.reindex(&map);
    summary.truncated = reduced.is_truncated();
    let new_q = Quiver::from_indexed(q.vertices().to_vec(), arrows)?;
    Ok((
        QP::from_parts(new_q, reduced, qp.provenance().to_vec()),
        summary,
    ))
}

/// For every term except the degree-2 pair term containing `a` (and not
/// containing `skip`), the rotation starting at the first `a` with that
/// `a` removed.
fn strip_first(q: &Quiver, w: &Potential, a: usize, skip: Option<usize>, bound: usize) -> Element {
    let mut out = Element::zero(w.field(), bound);
    for (c, x) in w.terms() {
        if c.len() == 2 {
            continue;
        }
        if skip.is_some_and(|s| c.contains(&s)) {
            continue;
        }
        if let Some(i) = c.iter().position(|&y| y == a) {
            let r = rotate(c, i);
            out.add_term(
                Path::from_parts(q.target(a), q.source(a), r[1..].to_vec()),
                x.clone(),
            );
        }
    }
    out
}
