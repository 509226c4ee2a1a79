use std::fmt;

use crate::jacobian::FDAlgebra;
use crate::linalg::is_zero_vec;
use crate::pathalg::Scalar;

/// A map between direct sums of indecomposable projectives.
///
/// `Hom(P_i, P_j)` is `e_i Λ e_j` and maps compose left to right, so entry
/// `(r, s)` lies in `e_{source[r]} Λ e_{target[s]}` and `f` then `g` is the
/// matrix product `f · g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjMorphism {
    source: Vec<usize>,
    target: Vec<usize>,
    entries: Vec<Vec<Vec<Scalar>>>,
}

impl ProjMorphism {
    pub fn zero(a: &FDAlgebra, source: &[usize], target: &[usize]) -> ProjMorphism {
        let entries = vec![vec![a.zero_vec(); target.len()]; source.len()];
        ProjMorphism {
            source: source.to_vec(),
            target: target.to_vec(),
            entries,
        }
    }

    pub fn identity(a: &FDAlgebra, vertices: &[usize]) -> ProjMorphism {
        let mut m = ProjMorphism::zero(a, vertices, vertices);
        for (r, &v) in vertices.iter().enumerate() {
            m.entries[r][r] = a.unit_vec(a.idempotent(v));
        }
        m
    }

    pub fn source(&self) -> &[usize] {
        &self.source
    }

    pub fn target(&self) -> &[usize] {
        &self.target
    }

    pub fn entry(&self, r: usize, s: usize) -> &[Scalar] {
        &self.entries[r][s]
    }

    pub fn set(&mut self, r: usize, s: usize, x: Vec<Scalar>) {
        self.entries[r][s] = x;
    }

    /// Whether every entry lies in its block.
    pub fn respects_blocks(&self, a: &FDAlgebra) -> bool {
        self.entries.iter().enumerate().all(|(r, row)| {
            row.iter().enumerate().all(|(s, x)| {
                x.iter().enumerate().all(|(b, c)| {
                    c.is_zero() || (a.source(b) == self.source[r] && a.target(b) == self.target[s])
                })
            })
        })
    }

    pub fn compose(&self, a: &FDAlgebra, g: &ProjMorphism) -> ProjMorphism {
        assert_eq!(self.target, g.source, "morphisms do not compose");
        let mut out = ProjMorphism::zero(a, &self.source, &g.target);
        for r in 0..self.source.len() {
            for t in 0..g.target.len() {
                let mut acc = a.zero_vec();
                for s in 0..self.target.len() {
                    let x = &self.entries[r][s];
                    let y = &g.entries[s][t];
                    if is_zero_vec(x) || is_zero_vec(y) {
                        continue;
                    }
                    for (k, c) in a.mul(x, y).into_iter().enumerate() {
                        if !c.is_zero() {
                            acc[k] += &c;
                        }
                    }
                }
                out.entries[r][t] = acc;
            }
        }
        out
    }

    pub fn add_scaled(&mut self, other: &ProjMorphism, c: &Scalar) {
        assert!(self.source == other.source && self.target == other.target);
        for (row, orow) in self.entries.iter_mut().zip(&other.entries) {
            for (x, y) in row.iter_mut().zip(orow) {
                for (u, v) in x.iter_mut().zip(y) {
                    if !v.is_zero() {
                        *u += &(v * c);
                    }
                }
            }
        }
    }

    pub fn scaled(&self, c: &Scalar) -> ProjMorphism {
        let mut out = self.clone();
        for x in out.entries.iter_mut().flatten().flatten() {
            *x *= c;
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(|x| is_zero_vec(x))
    }

    /// The rows selected by `rows`, in that order.
    pub fn restrict_rows(&self, rows: &[usize]) -> ProjMorphism {
        ProjMorphism {
            source: rows.iter().map(|&r| self.source[r]).collect(),
            target: self.target.clone(),
            entries: rows.iter().map(|&r| self.entries[r].clone()).collect(),
        }
    }

    /// The columns selected by `cols`, in that order.
    pub fn restrict_cols(&self, cols: &[usize]) -> ProjMorphism {
        ProjMorphism {
            source: self.source.clone(),
            target: cols.iter().map(|&s| self.target[s]).collect(),
            entries: self
                .entries
                .iter()
                .map(|row| cols.iter().map(|&s| row[s].clone()).collect())
                .collect(),
        }
    }
}

/// `X^{-1} → X^0`, concentrated in degrees −1 and 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoTermComplex {
    pub label: String,
    pub differential: ProjMorphism,
}

impl TwoTermComplex {
    pub fn new(label: impl Into<String>, differential: ProjMorphism) -> TwoTermComplex {
        TwoTermComplex {
            label: label.into(),
            differential,
        }
    }

    /// `P_{v_1} ⊕ ... ⊕ P_{v_n}` in degree 0.
    pub fn stalk(a: &FDAlgebra, label: impl Into<String>, vertices: &[usize]) -> TwoTermComplex {
        TwoTermComplex::new(label, ProjMorphism::zero(a, &[], vertices))
    }

    pub fn minus(&self) -> &[usize] {
        self.differential.source()
    }

    pub fn zero(&self) -> &[usize] {
        self.differential.target()
    }

    pub fn is_stalk(&self) -> bool {
        self.minus().is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.minus().is_empty() && self.zero().is_empty()
    }
}

impl fmt::Display for TwoTermComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}

/// A chain map between two-term complexes: `minus: X^{-1} → Y^{-1}`,
/// `zero: X^0 → Y^0` with `d_X · zero = minus · d_Y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap {
    pub minus: ProjMorphism,
    pub zero: ProjMorphism,
}

impl ChainMap {
    pub fn zero_map(a: &FDAlgebra, x: &TwoTermComplex, y: &TwoTermComplex) -> ChainMap {
        ChainMap {
            minus: ProjMorphism::zero(a, x.minus(), y.minus()),
            zero: ProjMorphism::zero(a, x.zero(), y.zero()),
        }
    }

    pub fn identity(a: &FDAlgebra, x: &TwoTermComplex) -> ChainMap {
        ChainMap {
            minus: ProjMorphism::identity(a, x.minus()),
            zero: ProjMorphism::identity(a, x.zero()),
        }
    }

    /// A map of stalk complexes.
    pub fn stalk(a: &FDAlgebra, f: ProjMorphism) -> ChainMap {
        ChainMap {
            minus: ProjMorphism::zero(a, &[], &[]),
            zero: f,
        }
    }

    pub fn is_chain_map(&self, a: &FDAlgebra, x: &TwoTermComplex, y: &TwoTermComplex) -> bool {
        let left = x.differential.compose(a, &self.zero);
        let right = self.minus.compose(a, &y.differential);
        left == right
    }

    pub fn compose(&self, a: &FDAlgebra, g: &ChainMap) -> ChainMap {
        ChainMap {
            minus: self.minus.compose(a, &g.minus),
            zero: self.zero.compose(a, &g.zero),
        }
    }

    pub fn add_scaled(&mut self, other: &ChainMap, c: &Scalar) {
        self.minus.add_scaled(&other.minus, c);
        self.zero.add_scaled(&other.zero, c);
    }

    pub fn scaled(&self, c: &Scalar) -> ChainMap {
        ChainMap {
            minus: self.minus.scaled(c),
            zero: self.zero.scaled(c),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.minus.is_zero() && self.zero.is_zero()
    }
}
