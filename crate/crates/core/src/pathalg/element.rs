use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use super::quiver::Quiver;
use super::scalar::{Field, Scalar};

/// A path in a quiver. Composition reads left to right: `a1 a2` is first
/// `a1`, then `a2`. An empty arrow list is the trivial path at `source`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    source: usize,
    target: usize,
    arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(vertex: usize) -> Path {
        Path {
            source: vertex,
            target: vertex,
            arrows: Vec::new(),
        }
    }

    pub fn arrow(quiver: &Quiver, a: usize) -> Path {
        Path {
            source: quiver.source(a),
            target: quiver.target(a),
            arrows: vec![a],
        }
    }

    /// Builds a path from an arrow sequence, checking that consecutive
    /// arrows compose. Returns `None` for an empty or broken sequence.
    pub fn from_arrows(quiver: &Quiver, arrows: &[usize]) -> Option<Path> {
        let first = *arrows.first()?;
        for w in arrows.windows(2) {
            if quiver.target(w[0]) != quiver.source(w[1]) {
                return None;
            }
        }
        Some(Path {
            source: quiver.source(first),
            target: quiver.target(*arrows.last().unwrap()),
            arrows: arrows.to_vec(),
        })
    }

    pub(crate) fn from_parts(source: usize, target: usize, arrows: Vec<usize>) -> Path {
        Path {
            source,
            target,
            arrows,
        }
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn arrows(&self) -> &[usize] {
        &self.arrows
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// Concatenation `p` then `q`, or `None` when `p` does not end where `q` starts.
    pub fn compose(&self, q: &Path) -> Option<Path> {
        if self.target != q.source {
            return None;
        }
        let mut arrows = Vec::with_capacity(self.len() + q.len());
        arrows.extend_from_slice(&self.arrows);
        arrows.extend_from_slice(&q.arrows);
        Some(Path {
            source: self.source,
            target: q.target,
            arrows,
        })
    }

    /// Sub-path `arrows[from..to]`; `from == to` gives a trivial path at the
    /// appropriate vertex.
    pub fn slice(&self, quiver: &Quiver, from: usize, to: usize) -> Path {
        if from == to {
            let v = if from == 0 {
                self.source
            } else {
                quiver.target(self.arrows[from - 1])
            };
            return Path::trivial(v);
        }
        Path {
            source: quiver.source(self.arrows[from]),
            target: quiver.target(self.arrows[to - 1]),
            arrows: self.arrows[from..to].to_vec(),
        }
    }

    /// First position where `pattern`'s arrows occur as a contiguous block.
    pub fn find(&self, pattern: &[usize]) -> Option<usize> {
        if pattern.is_empty() || pattern.len() > self.arrows.len() {
            return None;
        }
        self.arrows
            .windows(pattern.len())
            .position(|w| w == pattern)
    }

    pub fn display(&self, quiver: &Quiver) -> String {
        if self.arrows.is_empty() {
            return format!("e{}", quiver.label(self.source));
        }
        self.arrows
            .iter()
            .map(|&a| quiver.arrow(a).id.as_str())
            .collect::<Vec<_>>()
            .join("·")
    }
}

/// The term order: shorter paths first, then lexicographic on arrow indices.
/// Rewriting heads are the *smallest* terms of a relation.
impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        self.arrows
            .len()
            .cmp(&other.arrows.len())
            .then_with(|| self.arrows.cmp(&other.arrows))
            .then_with(|| self.source.cmp(&other.source))
            .then_with(|| self.target.cmp(&other.target))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A finite linear combination of paths, truncated at a degree bound.
///
/// Paths longer than `bound` are dropped; when a nonzero contribution is
/// dropped the element records `truncated`. Equality ignores the flag.
#[derive(Clone, Debug)]
pub struct Element {
    field: Field,
    bound: usize,
    terms: BTreeMap<Path, Scalar>,
    truncated: bool,
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.terms == other.terms
    }
}

impl Eq for Element {}

impl Element {
    pub fn zero(field: Field, bound: usize) -> Element {
        Element {
            field,
            bound,
            terms: BTreeMap::new(),
            truncated: false,
        }
    }

    pub fn from_path(path: Path, coeff: Scalar, bound: usize) -> Element {
        let mut e = Element::zero(coeff.field(), bound);
        e.add_term(path, coeff);
        e
    }

    pub fn arrow(quiver: &Quiver, a: usize, field: Field, bound: usize) -> Element {
        Element::from_path(Path::arrow(quiver, a), field.one(), bound)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    pub fn mark_truncated(&mut self) {
        self.truncated = true;
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Path, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, p: &Path) -> Scalar {
        self.terms
            .get(p)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    /// The smallest term under the path order.
    pub fn leading(&self) -> Option<(&Path, &Scalar)> {
        self.terms.iter().next()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.terms.keys().map(Path::len).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(Path::len).max()
    }

    pub fn add_term(&mut self, path: Path, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        if path.len() > self.bound {
            self.truncated = true;
            return;
        }
        match self.terms.entry(path) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Element, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        self.truncated |= other.truncated;
        for (p, x) in &other.terms {
            self.add_term(p.clone(), x * c);
        }
    }

    pub fn scaled(&self, c: &Scalar) -> Element {
        let mut e = Element::zero(self.field, self.bound);
        e.add_scaled(self, c);
        e
    }

    pub fn add(&self, other: &Element) -> Element {
        let mut e = self.clone();
        e.add_scaled(other, &self.field.one());
        e
    }

    pub fn sub(&self, other: &Element) -> Element {
        let mut e = self.clone();
        e.add_scaled(other, &-self.field.one());
        e
    }

    /// Product in the path algebra (`self` first, then `other`); paths that
    /// do not compose contribute nothing, paths beyond the bound are dropped.
    pub fn mul(&self, other: &Element) -> Element {
        let bound = self.bound.min(other.bound);
        let mut e = Element::zero(self.field, bound);
        e.truncated = self.truncated || other.truncated;
        for (p, x) in &self.terms {
            for (q, y) in &other.terms {
                if let Some(pq) = p.compose(q) {
                    e.add_term(pq, x * y);
                }
            }
        }
        e
    }

    /// Left and right multiplication by fixed paths.
    pub fn sandwich(&self, left: &Path, right: &Path) -> Element {
        let mut e = Element::zero(self.field, self.bound);
        e.truncated = self.truncated;
        for (p, x) in &self.terms {
            if let Some(lp) = left.compose(p) {
                if let Some(lpr) = lp.compose(right) {
                    e.add_term(lpr, x.clone());
                }
            }
        }
        e
    }

    /// Drops every term longer than `bound` and lowers the bound.
    pub fn truncate_to(&self, bound: usize) -> Element {
        let mut e = Element::zero(self.field, bound.min(self.bound));
        e.truncated = self.truncated;
        for (p, x) in &self.terms {
            e.add_term(p.clone(), x.clone());
        }
        e
    }

    pub fn display(&self, quiver: &Quiver) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(p, c)| {
                if c.is_one() {
                    p.display(quiver)
                } else {
                    format!("{}·{}", c, p.display(quiver))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{:?}", self.source, self.arrows)
    }
}
