use std::collections::{BTreeMap, HashMap};

use super::element::{Element, Path};
use super::quiver::Quiver;
use super::scalar::{Field, Scalar};
use crate::error::{Error, Result};

/// The lexicographically smallest rotation of a cyclic arrow sequence.
pub fn canonical_rotation(cycle: &[usize]) -> Vec<usize> {
    let n = cycle.len();
    (0..n)
        .map(|r| {
            cycle[r..]
                .iter()
                .chain(&cycle[..r])
                .copied()
                .collect::<Vec<_>>()
        })
        .min()
        .unwrap_or_default()
}

/// Rotation of `cycle` starting at position `start`.
pub fn rotate(cycle: &[usize], start: usize) -> Vec<usize> {
    cycle[start..]
        .iter()
        .chain(&cycle[..start])
        .copied()
        .collect()
}

/// A finite linear combination of cycles of length at least two, each stored
/// in canonical rotation with cyclically equal terms merged.
#[derive(Clone, Debug)]
pub struct Potential {
    field: Field,
    terms: BTreeMap<Vec<usize>, Scalar>,
    truncated: bool,
}

impl PartialEq for Potential {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.terms == other.terms
    }
}

impl Eq for Potential {}

impl Potential {
    pub fn zero(field: Field) -> Potential {
        Potential {
            field,
            terms: BTreeMap::new(),
            truncated: false,
        }
    }

    /// Builds a potential from raw cycles, validating each against the quiver.
    pub fn from_cycles<I>(quiver: &Quiver, field: Field, cycles: I) -> Result<Potential>
    where
        I: IntoIterator<Item = (Vec<usize>, Scalar)>,
    {
        let mut w = Potential::zero(field);
        for (c, x) in cycles {
            check_cycle(quiver, &c)?;
            if x.field() != field {
                return Err(Error::FieldMismatch(format!("{} vs {}", x.field(), field)));
            }
            w.add_cycle(&c, x);
        }
        Ok(w)
    }

    /// Adds `coeff · cycle` without validation; the caller guarantees that
    /// `cycle` is a cycle of length at least two.
    pub fn add_cycle(&mut self, cycle: &[usize], coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        let key = canonical_rotation(cycle);
        let sum = match self.terms.remove(&key) {
            Some(old) => &old + &coeff,
            None => coeff,
        };
        if !sum.is_zero() {
            self.terms.insert(key, sum);
        }
    }

    pub fn add_scaled(&mut self, other: &Potential, c: &Scalar) {
        self.truncated |= other.truncated;
        for (k, x) in &other.terms {
            self.add_cycle(k, x * c);
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    pub fn set_truncated(&mut self, t: bool) {
        self.truncated = t;
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, cycle: &[usize]) -> Scalar {
        self.terms
            .get(&canonical_rotation(cycle))
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn max_degree(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.terms.keys().map(Vec::len).min()
    }

    /// Terms of length exactly two.
    pub fn degree_two(&self) -> Vec<(usize, usize, Scalar)> {
        self.terms
            .iter()
            .filter(|(k, _)| k.len() == 2)
            .map(|(k, x)| (k[0], k[1], x.clone()))
            .collect()
    }

    pub fn uses_arrow(&self, a: usize) -> bool {
        self.terms.keys().any(|k| k.contains(&a))
    }

    /// Re-canonicalizes every term. Stored terms are already canonical, so
    /// this is the identity; it exists to state the idempotence property.
    pub fn canonical(&self) -> Potential {
        let mut w = Potential::zero(self.field);
        w.truncated = self.truncated;
        for (k, x) in &self.terms {
            w.add_cycle(k, x.clone());
        }
        w
    }

    /// Renames arrows through `map` (old index to new index); terms using
    /// an unmapped arrow are dropped.
    pub fn reindex(&self, map: &HashMap<usize, usize>) -> Potential {
        let mut w = Potential::zero(self.field);
        w.truncated = self.truncated;
        'terms: for (k, x) in &self.terms {
            let mut c = Vec::with_capacity(k.len());
            for a in k {
                match map.get(a) {
                    Some(&b) => c.push(b),
                    None => continue 'terms,
                }
            }
            w.add_cycle(&c, x.clone());
        }
        w
    }

    /// Reverses every cycle (for the opposite quiver with the same arrow ids).
    pub fn reversed(&self) -> Potential {
        let mut w = Potential::zero(self.field);
        w.truncated = self.truncated;
        for (k, x) in &self.terms {
            let mut c = k.clone();
            c.reverse();
            w.add_cycle(&c, x.clone());
        }
        w
    }

    pub fn display(&self, quiver: &Quiver) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut keys: Vec<_> = self.terms.iter().collect();
        keys.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then(a.0.cmp(b.0)));
        keys.into_iter()
            .map(|(k, c)| {
                let word: String = k.iter().map(|&a| quiver.arrow(a).id.as_str()).collect();
                if c.is_one() {
                    word
                } else {
                    format!("{c}·{word}")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

pub(crate) fn check_cycle(quiver: &Quiver, c: &[usize]) -> Result<()> {
    let describe = || {
        c.iter()
            .map(|&a| {
                if a < quiver.num_arrows() {
                    quiver.arrow(a).id.clone()
                } else {
                    format!("#{a}")
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    };
    if c.len() < 2 || c.iter().any(|&a| a >= quiver.num_arrows()) {
        return Err(Error::NotACycle(describe()));
    }
    for i in 0..c.len() {
        if quiver.target(c[i]) != quiver.source(c[(i + 1) % c.len()]) {
            return Err(Error::NotACycle(describe()));
        }
    }
    Ok(())
}

fn check_arrow(quiver: &Quiver, a: usize) -> Result<()> {
    if a >= quiver.num_arrows() {
        return Err(Error::UnknownArrow(format!("#{a}")));
    }
    Ok(())
}

/// `∂_a W`: for each occurrence of `a` in a cycle, the rest of the cycle
/// read from just after `a` round to just before it.
pub fn cyclic_derivative(
    quiver: &Quiver,
    a: usize,
    w: &Potential,
    bound: usize,
) -> Result<Element> {
    check_arrow(quiver, a)?;
    let mut out = Element::zero(w.field, bound);
    for (c, x) in &w.terms {
        for i in (0..c.len()).filter(|&i| c[i] == a) {
            let rest = rotate(c, (i + 1) % c.len());
            let p = Path::from_parts(
                quiver.target(a),
                quiver.source(a),
                rest[..c.len() - 1].to_vec(),
            );
            out.add_term(p, x.clone());
        }
    }
    if w.truncated {
        out.mark_truncated();
    }
    Ok(out)
}

/// `∂_(a,b) W`: for each cyclically adjacent occurrence `a b`, the rest of
/// the cycle after `b` round to just before `a`.
pub fn pair_derivative(
    quiver: &Quiver,
    a: usize,
    b: usize,
    w: &Potential,
    bound: usize,
) -> Result<Element> {
    check_arrow(quiver, a)?;
    check_arrow(quiver, b)?;
    let mut out = Element::zero(w.field, bound);
    for (c, x) in &w.terms {
        let m = c.len();
        for i in (0..m).filter(|&i| c[i] == a && c[(i + 1) % m] == b) {
            let rest = rotate(c, (i + 2) % m);
            let p = Path::from_parts(quiver.target(b), quiver.source(a), rest[..m - 2].to_vec());
            out.add_term(p, x.clone());
        }
    }
    if w.truncated {
        out.mark_truncated();
    }
    Ok(out)
}

/// `∂ᴿ_a x`: strips a trailing `a` from each term, killing the others.
pub fn right_derivative(quiver: &Quiver, a: usize, x: &Element) -> Result<Element> {
    check_arrow(quiver, a)?;
    let mut out = Element::zero(x.field(), x.bound());
    for (p, c) in x.terms() {
        if p.is_trivial() {
            return Err(Error::TrivialTerm);
        }
        if p.arrows().last() == Some(&a) {
            out.add_term(p.slice(quiver, 0, p.len() - 1), c.clone());
        }
    }
    if x.is_truncated() {
        out.mark_truncated();
    }
    Ok(out)
}

/// Substitutes `s(a)` for each arrow `a` in the domain of `s` and expands
/// every cycle multilinearly, dropping terms longer than `bound`.
pub fn substitute(
    quiver: &Quiver,
    w: &Potential,
    s: &HashMap<usize, Element>,
    bound: usize,
) -> Result<Potential> {
    for (&a, e) in s {
        check_arrow(quiver, a)?;
        for (p, _) in e.terms() {
            if p.is_trivial() || p.source() != quiver.source(a) || p.target() != quiver.target(a) {
                return Err(Error::SubstitutionMismatch {
                    arrow: quiver.arrow(a).id.clone(),
                });
            }
        }
    }
    let field = w.field;
    let mut out = Potential::zero(field);
    let mut truncated = w.truncated;
    for (c, x) in &w.terms {
        // Expand the cycle left to right as an element with arrow-sequence keys.
        let mut partial: Vec<(Vec<usize>, Scalar)> = vec![(Vec::new(), x.clone())];
        for &a in c {
            let image: Vec<(Vec<usize>, Scalar)> = match s.get(&a) {
                Some(e) => {
                    truncated |= e.is_truncated();
                    e.terms()
                        .map(|(p, y)| (p.arrows().to_vec(), y.clone()))
                        .collect()
                }
                None => vec![(vec![a], field.one())],
            };
            let mut next = Vec::with_capacity(partial.len() * image.len());
            for (p, y) in &partial {
                for (q, z) in &image {
                    if p.len() + q.len() > bound {
                        truncated = true;
                        continue;
                    }
                    let mut r = p.clone();
                    r.extend_from_slice(q);
                    next.push((r, y * z));
                }
            }
            partial = next;
        }
        for (cyc, y) in partial {
            out.add_cycle(&cyc, y);
        }
    }
    out.truncated = truncated;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pathalg::scalar::q;

    fn two_cycle() -> Quiver {
        Quiver::new(
            ["1", "2"],
            vec![
                ("a".to_string(), "1".to_string(), "2".to_string()),
                ("b".to_string(), "2".to_string(), "1".to_string()),
            ],
        )
        .unwrap()
    }

    #[test]
    fn canonical_rotation_is_lex_min() {
        assert_eq!(canonical_rotation(&[3, 1, 2]), vec![1, 2, 3]);
        assert_eq!(canonical_rotation(&[1, 0, 1, 0]), vec![0, 1, 0, 1]);
    }

    #[test]
    fn rotated_inputs_merge() {
        let qv = two_cycle();
        let w = Potential::from_cycles(
            &qv,
            Field::Rational,
            [(vec![0, 1], q(1, 1)), (vec![1, 0], q(2, 1))],
        )
        .unwrap();
        assert_eq!(w.len(), 1);
        assert_eq!(w.coeff(&[0, 1]), q(3, 1));
        let w2 = Potential::from_cycles(
            &qv,
            Field::Rational,
            [(vec![0, 1], q(1, 1)), (vec![1, 0], q(-1, 1))],
        )
        .unwrap();
        assert!(w2.is_zero());
    }

    #[test]
    fn rejects_non_cycles() {
        let qv = two_cycle();
        assert!(Potential::from_cycles(&qv, Field::Rational, [(vec![0], q(1, 1))]).is_err());
        assert!(Potential::from_cycles(&qv, Field::Rational, [(vec![0, 0], q(1, 1))]).is_err());
    }

    #[test]
    fn right_derivative_rejects_trivial_terms() {
        let qv = two_cycle();
        let x = Element::from_path(Path::trivial(0), q(1, 1), 8);
        assert_eq!(right_derivative(&qv, 0, &x), Err(Error::TrivialTerm));
    }

    #[test]
    fn unknown_arrow_is_an_error() {
        let qv = two_cycle();
        let w = Potential::zero(Field::Rational);
        assert!(cyclic_derivative(&qv, 7, &w, 8).is_err());
        assert!(pair_derivative(&qv, 0, 9, &w, 8).is_err());
    }

    #[test]
    fn substitution_type_mismatch() {
        let qv = two_cycle();
        let w = Potential::from_cycles(&qv, Field::Rational, [(vec![0, 1], q(1, 1))]).unwrap();
        let mut s = HashMap::new();
        s.insert(0, Element::arrow(&qv, 1, Field::Rational, 8));
        assert!(matches!(
            substitute(&qv, &w, &s, 8),
            Err(Error::SubstitutionMismatch { .. })
        ));
    }
}
