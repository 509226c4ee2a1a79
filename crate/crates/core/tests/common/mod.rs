//! Independent oracle: graded dimensions of `KQ / <∂W>` for a potential whose
//! cycles all have the same length, by brute-force linear algebra on paths.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use qpmut::linalg::Span;
use qpmut::pathalg::Scalar;
use qpmut::qpcore::QP;

type Path = (usize, Vec<usize>);

fn end_of(qp: &QP, p: &Path) -> usize {
    p.1.last().map_or(p.0, |&a| qp.quiver().target(a))
}

/// All paths of length `d`.
pub fn paths(qp: &QP, d: usize) -> Vec<Path> {
    let q = qp.quiver();
    let mut layer: Vec<Path> = (0..q.num_vertices()).map(|v| (v, vec![])).collect();
    for _ in 0..d {
        let mut next = Vec::new();
        for p in &layer {
            let e = end_of(qp, p);
            for a in 0..q.num_arrows() {
                if q.source(a) == e {
                    let mut w = p.1.clone();
                    w.push(a);
                    next.push((p.0, w));
                }
            }
        }
        layer = next;
    }
    layer
}

/// Cyclic derivatives straight from the cycle list.
pub fn derivatives(qp: &QP) -> Vec<HashMap<Path, Scalar>> {
    let q = qp.quiver();
    let mut out = Vec::new();
    for a in 0..q.num_arrows() {
        let mut rel: HashMap<Path, Scalar> = HashMap::new();
        for (c, x) in qp.potential().terms() {
            let n = c.len();
            for i in (0..n).filter(|&i| c[i] == a) {
                let rest: Vec<usize> = (1..n).map(|k| c[(i + k) % n]).collect();
                *rel.entry((q.target(a), rest))
                    .or_insert_with(|| qp.field().zero()) += x;
            }
        }
        rel.retain(|_, x| !x.is_zero());
        if !rel.is_empty() {
            out.push(rel);
        }
    }
    out
}

/// `dim e_u Λ_d e_v` keyed by `(u, v)`.
pub fn graded_blocks(qp: &QP, d: usize) -> BTreeMap<(usize, usize), usize> {
    let f = qp.field();
    let all = paths(qp, d);
    let index: HashMap<&Path, usize> = all.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut counts: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for p in &all {
        *counts.entry((p.0, end_of(qp, p))).or_default() += 1;
    }
    let mut spans: HashMap<(usize, usize), Span> = HashMap::new();
    for rel in derivatives(qp) {
        let (r0, _) = rel.keys().next().unwrap().clone();
        let r = rel.keys().next().unwrap();
        let (m, r1) = (r.1.len(), end_of(qp, r));
        if m > d {
            continue;
        }
        for k in 0..=(d - m) {
            let lefts: Vec<Path> = paths(qp, k)
                .into_iter()
                .filter(|p| end_of(qp, p) == r0)
                .collect();
            let rights: Vec<Path> = paths(qp, d - m - k)
                .into_iter()
                .filter(|p| p.0 == r1)
                .collect();
            for l in &lefts {
                for rt in &rights {
                    let mut v = vec![f.zero(); all.len()];
                    for (w, x) in &rel {
                        let mut word = l.1.clone();
                        word.extend(&w.1);
                        word.extend(&rt.1);
                        v[index[&(l.0, word)]] += x;
                    }
                    let key = (l.0, end_of(qp, rt));
                    spans
                        .entry(key)
                        .or_insert_with(|| Span::new(f, all.len()))
                        .insert(&v);
                }
            }
        }
    }
    for (key, n) in counts.iter_mut() {
        *n -= spans.get(key).map_or(0, Span::dim);
    }
    counts.retain(|_, n| *n > 0);
    counts
}

/// Graded dimensions up to the first vanishing degree (at most `max`).
pub fn graded_dims(qp: &QP, max: usize) -> Vec<usize> {
    let mut out = Vec::new();
    for d in 0..=max {
        let n: usize = graded_blocks(qp, d).values().sum();
        if n == 0 {
            break;
        }
        out.push(n);
    }
    out
}

/// For a graded selfinjective algebra: vertex `u` goes to the unique `v` with
/// `e_u Λ_top e_v ≠ 0`.
pub fn top_degree_pairing(qp: &QP, top: usize) -> Vec<usize> {
    let blocks = graded_blocks(qp, top);
    let n = qp.quiver().num_vertices();
    (0..n)
        .map(|u| {
            let hits: Vec<usize> = blocks.keys().filter(|k| k.0 == u).map(|k| k.1).collect();
            assert_eq!(hits.len(), 1, "socle of vertex {u} is not simple");
            hits[0]
        })
        .collect()
}
