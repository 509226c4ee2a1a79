//! Rescaling arrows by nonzero scalars (the action of the arrow torus on
//! potentials).

use std::collections::HashMap;

use num::{BigInt, BigRational, Integer, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::pathalg::potential::canonical_rotation;
use crate::pathalg::{Field, Potential, Scalar};

/// A torus-invariant monomial in the potential's coefficients: the cycles
/// with their exponents, and its value.
pub type Invariant = (Vec<(Vec<usize>, i64)>, Scalar);

/// Applies `a ↦ t_a a`: each term is multiplied by the product of the
/// scalars of its arrows.
pub fn rescale(w: &Potential, scale: &HashMap<usize, Scalar>) -> Potential {
    let mut out = Potential::zero(w.field());
    out.set_truncated(w.is_truncated());
    for (c, x) in w.terms() {
        let mut y = x.clone();
        for a in c {
            if let Some(t) = scale.get(a) {
                y *= t;
            }
        }
        out.add_cycle(c, y);
    }
    out
}

/// Rescales arrows so that each cycle in `units` gets coefficient 1. For
/// each unit term in turn the first arrow not occurring in an earlier unit
/// term is scaled. Returns the new potential and the accumulated scalars.
pub fn normalize(
    w: &Potential,
    units: &[Vec<usize>],
) -> Result<(Potential, HashMap<usize, Scalar>)> {
    let mut cur = w.clone();
    let mut scale: HashMap<usize, Scalar> = HashMap::new();
    let mut used: Vec<usize> = Vec::new();
    for u in units {
        let key = canonical_rotation(u);
        let c = cur.coeff(&key);
        if c.is_zero() {
            return Err(Error::Precondition(format!("unit term {key:?} is absent")));
        }
        let free = key
            .iter()
            .copied()
            .find(|a| !used.contains(a))
            .ok_or_else(|| Error::Precondition(format!("unit term {key:?} has no free arrow")))?;
        // The arrow may occur several times; only single occurrences are handled.
        if key.iter().filter(|&&a| a == free).count() != 1 {
            return Err(Error::Precondition("repeated arrow in unit term".into()));
        }
        let t = c.inv()?;
        cur = rescale(&cur, &HashMap::from([(free, t.clone())]));
        let entry = scale.entry(free).or_insert_with(|| w.field().one());
        *entry *= &t;
        used.extend(key.iter().copied());
    }
    Ok((cur, scale))
}

/// Exponent vectors `k` (over the integers) spanning the relations among
/// the terms of `w`: `Σ_c k_c · (arrow multiplicities of c) = 0`.
fn lattice(n_arrows: usize, cycles: &[Vec<usize>]) -> Vec<Vec<BigInt>> {
    let f = Field::Rational;
    let mut m = Matrix::zeros(f, n_arrows, cycles.len());
    for (j, c) in cycles.iter().enumerate() {
        for &a in c {
            m.add_to(a, j, &f.one());
        }
    }
    m.kernel()
        .into_iter()
        .map(|v| {
            let qs: Vec<BigRational> = v
                .iter()
                .map(|x| x.as_rational().expect("rational").clone())
                .collect();
            let den = qs.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            qs.iter()
                .map(|q| (q * BigRational::from_integer(den.clone())).to_integer())
                .collect()
        })
        .collect()
}

fn power(x: &Scalar, k: &BigInt) -> Result<Scalar> {
    let e = k
        .abs()
        .to_u32()
        .ok_or_else(|| Error::Precondition("exponent too large".into()))?;
    let p = x.pow(e);
    if k.is_negative() {
        p.inv()
    } else {
        Ok(p)
    }
}

/// Torus invariants of `w`: for each basis vector `k` of the relation
/// lattice over its support, the product `Π_c coeff(c)^{k_c}`.
pub fn invariants(n_arrows: usize, w: &Potential) -> Result<Vec<Invariant>> {
    let cycles: Vec<Vec<usize>> = w.terms().map(|(c, _)| c.clone()).collect();
    let mut out = Vec::new();
    for k in lattice(n_arrows, &cycles) {
        let mut val = w.field().one();
        let mut word = Vec::new();
        for (c, e) in cycles.iter().zip(&k) {
            if e.is_zero() {
                continue;
            }
            val *= &power(&w.coeff(c), e)?;
            word.push((c.clone(), e.to_i64().unwrap_or(0)));
        }
        out.push((word, val));
    }
    Ok(out)
}

/// Whether some rescaling of arrows (over the algebraic closure) carries
/// `w1` to `w2`: equal supports, and every lattice relation has the same
/// value on both coefficient vectors.
pub fn torus_equivalent(n_arrows: usize, w1: &Potential, w2: &Potential) -> Result<bool> {
    let s1: Vec<_> = w1.terms().map(|(c, _)| c.clone()).collect();
    let s2: Vec<_> = w2.terms().map(|(c, _)| c.clone()).collect();
    if s1 != s2 {
        return Ok(false);
    }
    for k in lattice(n_arrows, &s1) {
        let mut ratio = w1.field().one();
        for (c, e) in s1.iter().zip(&k) {
            if e.is_zero() {
                continue;
            }
            let r = w2.coeff(c).checked_div(&w1.coeff(c))?;
            ratio *= &power(&r, e)?;
        }
        if !ratio.is_one() {
            return Ok(false);
        }
    }
    Ok(true)
}
