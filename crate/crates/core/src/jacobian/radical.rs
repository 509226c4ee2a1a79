use super::algebra::FDAlgebra;
use crate::error::{Error, Result};
use crate::linalg::Span;
use crate::pathalg::{Arrow, Field, Quiver, Scalar};

/// Eigenvalue of a corner element whose minimal polynomial should be
/// `(t - λ)^r`, given `x^r = Σ_{k<r} c_k x^k`.
fn local_eigenvalue(field: Field, c: &[Scalar]) -> Option<Scalar> {
    let r = c.len();
    let rr = field.from_i64(r as i64);
    if !rr.is_zero() {
        return rr.inv().ok().map(|inv| &c[r - 1] * &inv);
    }
    // Characteristic divides r: look for a root of t^r - Σ c_k t^k.
    let Field::Prime(p) = field else { return None };
    (0..p.min(1 << 16))
        .map(|v| field.from_i64(v as i64))
        .find(|t| {
            let mut val = t.pow(r as u32);
            for (k, ck) in c.iter().enumerate() {
                val -= &(ck * &t.pow(k as u32));
            }
            val.is_zero()
        })
}

/// A basis of the Jacobson radical, each vector inside one block
/// `e_u A e_v`: all off-diagonal basis elements plus, for each local
/// corner, the elements `b - λ_b e` with `λ_b` the eigenvalue of `b`.
pub fn radical_basis(a: &FDAlgebra) -> Result<Vec<Vec<Scalar>>> {
    a.check_idempotents()?;
    let f = a.field();
    let mut out = Vec::new();
    for b in 0..a.dim() {
        if a.source(b) != a.target(b) {
            out.push(a.unit_vec(b));
        }
    }
    for v in 0..a.num_vertices() {
        let e = a.idempotent(v);
        for b in a.block(v, v) {
            if b == e {
                continue;
            }
            let x = a.unit_vec(b);
            let mut powers = vec![a.unit_vec(e)];
            let mut span = Span::new(f, a.dim());
            span.insert(&powers[0]);
            let coeffs = loop {
                let next = a.mul(powers.last().expect("nonempty"), &x);
                if let Some(c) = span.express(&next) {
                    break c;
                }
                span.insert(&next);
                powers.push(next);
            };
            let lambda = local_eigenvalue(f, &coeffs).ok_or(Error::NonSplitCorner(v))?;
            let mut n = x.clone();
            n[e] -= &lambda;
            let mut p = n.clone();
            for _ in 1..coeffs.len() {
                p = a.mul(&p, &n);
            }
            if !p.iter().all(Scalar::is_zero) {
                return Err(Error::NonSplitCorner(v));
            }
            out.push(n);
        }
    }
    Ok(out)
}

/// The radical powers `J, J^2, ...` down to zero, each as a spanning set
/// of block-homogeneous vectors.
pub fn radical_powers(a: &FDAlgebra) -> Result<Vec<Vec<Vec<Scalar>>>> {
    let j = radical_basis(a)?;
    let mut powers = vec![j.clone()];
    while !powers.last().expect("nonempty").is_empty() {
        if powers.len() > a.dim() + 1 {
            return Err(Error::Precondition("radical is not nilpotent".into()));
        }
        let next = a.product_span(powers.last().expect("nonempty"), &j);
        powers.push(next);
    }
    Ok(powers)
}

/// Dimensions of `J^m / J^{m+1}` for `m = 0, 1, ...` (the first entry is
/// `dim A/J`).
pub fn radical_layers(a: &FDAlgebra) -> Result<Vec<usize>> {
    let powers = radical_powers(a)?;
    let mut dims = vec![a.dim()];
    dims.extend(powers.iter().map(Vec::len));
    Ok(dims.windows(2).map(|w| w[0] - w[1]).collect())
}

/// Smallest `m` with `J^m = 0`.
pub fn loewy_length(a: &FDAlgebra) -> Result<usize> {
    Ok(radical_powers(a)?.len())
}

fn block_of(a: &FDAlgebra, v: &[Scalar]) -> Option<(usize, usize)> {
    v.iter()
        .position(|x| !x.is_zero())
        .map(|b| (a.source(b), a.target(b)))
}

/// `m[u][v] = dim e_u (J/J^2) e_v`: the number of arrows `u -> v` of the
/// Gabriel quiver.
pub fn gabriel_matrix(a: &FDAlgebra) -> Result<Vec<Vec<usize>>> {
    let powers = radical_powers(a)?;
    let n = a.num_vertices();
    let mut m = vec![vec![0usize; n]; n];
    for v in &powers[0] {
        if let Some((s, t)) = block_of(a, v) {
            m[s][t] += 1;
        }
    }
    if let Some(j2) = powers.get(1) {
        for v in j2 {
            if let Some((s, t)) = block_of(a, v) {
                m[s][t] -= 1;
            }
        }
    }
    Ok(m)
}

/// The Gabriel quiver, with arrows named `u-v.k`.
pub fn gabriel_quiver(a: &FDAlgebra) -> Result<Quiver> {
    let m = gabriel_matrix(a)?;
    let mut arrows = Vec::new();
    for (u, row) in m.iter().enumerate() {
        for (v, &count) in row.iter().enumerate() {
            for k in 0..count {
                arrows.push(Arrow {
                    id: format!("{}-{}.{}", a.vertices()[u], a.vertices()[v], k + 1),
                    source: u,
                    target: v,
                });
            }
        }
    }
    Quiver::from_indexed(a.vertices().to_vec(), arrows)
}
