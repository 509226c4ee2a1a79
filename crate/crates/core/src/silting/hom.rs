use super::complex::{ChainMap, ProjMorphism, TwoTermComplex};
use crate::error::{Error, Result};
use crate::jacobian::FDAlgebra;
use crate::linalg::{Matrix, Quotient};
use crate::pathalg::Scalar;

/// Linear coordinates on `Hom(⊕ P_{x_r}, ⊕ P_{y_s})`: one coordinate per
/// algebra basis element of each block `e_{x_r} Λ e_{y_s}`.
#[derive(Clone, Debug)]
pub struct HomLayout {
    source: Vec<usize>,
    target: Vec<usize>,
    slots: Vec<(usize, usize, usize)>,
}

impl HomLayout {
    pub fn new(a: &FDAlgebra, source: &[usize], target: &[usize]) -> HomLayout {
        let mut slots = Vec::new();
        for (r, &u) in source.iter().enumerate() {
            for (s, &v) in target.iter().enumerate() {
                for b in a.block(u, v) {
                    slots.push((r, s, b));
                }
            }
        }
        HomLayout {
            source: source.to_vec(),
            target: target.to_vec(),
            slots,
        }
    }

    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    pub fn to_vec(&self, f: &ProjMorphism) -> Vec<Scalar> {
        self.slots
            .iter()
            .map(|&(r, s, b)| f.entry(r, s)[b].clone())
            .collect()
    }

    pub fn from_vec(&self, a: &FDAlgebra, v: &[Scalar]) -> ProjMorphism {
        let mut f = ProjMorphism::zero(a, &self.source, &self.target);
        for (&(r, s, b), x) in self.slots.iter().zip(v) {
            if !x.is_zero() {
                let mut e = f.entry(r, s).to_vec();
                e[b] = x.clone();
                f.set(r, s, e);
            }
        }
        f
    }

    pub fn unit(&self, a: &FDAlgebra, k: usize) -> ProjMorphism {
        let (r, s, b) = self.slots[k];
        let mut f = ProjMorphism::zero(a, &self.source, &self.target);
        f.set(r, s, a.unit_vec(b));
        f
    }
}

/// `Hom(X, Y[shift])` in the homotopy category, for `shift ∈ {−1, 0, 1}`.
///
/// For shift 0 the ambient space holds pairs `(f^{-1}, f^0)`; for shift 1
/// it is `Hom(X^{-1}, Y^0)`; for shift −1 it is `Hom(X^0, Y^{-1})`.
#[derive(Clone, Debug)]
pub struct HomSpace {
    shift: i32,
    source: TwoTermComplex,
    target: TwoTermComplex,
    layouts: Vec<HomLayout>,
    cycles: usize,
    quotient: Quotient,
}

impl HomSpace {
    pub fn shift(&self) -> i32 {
        self.shift
    }

    pub fn source(&self) -> &TwoTermComplex {
        &self.source
    }

    pub fn target(&self) -> &TwoTermComplex {
        &self.target
    }

    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    /// Dimension of the cycle space before dividing out homotopies.
    pub fn cycles_dim(&self) -> usize {
        self.cycles
    }

    pub fn boundaries_dim(&self) -> usize {
        self.cycles - self.dim()
    }

    fn ambient(&self, f: &ChainMap) -> Vec<Scalar> {
        let mut v = self.layouts[0].to_vec(&f.minus);
        v.extend(self.layouts[1].to_vec(&f.zero));
        v
    }

    fn chain_map_at(&self, a: &FDAlgebra, v: &[Scalar]) -> ChainMap {
        let n = self.layouts[0].len();
        ChainMap {
            minus: self.layouts[0].from_vec(a, &v[..n]),
            zero: self.layouts[1].from_vec(a, &v[n..]),
        }
    }

    /// Representative chain maps of the basis (shift 0 only).
    pub fn reps(&self, a: &FDAlgebra) -> Vec<ChainMap> {
        assert_eq!(self.shift, 0, "chain-map representatives need shift 0");
        self.quotient
            .reps()
            .iter()
            .map(|v| self.chain_map_at(a, v))
            .collect()
    }

    pub fn rep(&self, a: &FDAlgebra, i: usize) -> ChainMap {
        assert_eq!(self.shift, 0, "chain-map representatives need shift 0");
        self.chain_map_at(a, &self.quotient.reps()[i])
    }

    /// Coordinates of the class of `f` (shift 0), `None` if `f` is not a
    /// chain map between the right complexes.
    pub fn coords(&self, f: &ChainMap) -> Option<Vec<Scalar>> {
        if self.shift != 0
            || f.minus.source() != self.source.minus()
            || f.minus.target() != self.target.minus()
            || f.zero.source() != self.source.zero()
            || f.zero.target() != self.target.zero()
        {
            return None;
        }
        self.quotient.coords(&self.ambient(f))
    }

    pub fn is_null_homotopic(&self, f: &ChainMap) -> bool {
        self.coords(f)
            .is_some_and(|c| c.iter().all(Scalar::is_zero))
    }
}

fn matrix_from_columns(a: &FDAlgebra, rows: usize, cols: &[Vec<Scalar>]) -> Matrix {
    let mut m = Matrix::zeros(a.field(), rows, cols.len());
    for (j, c) in cols.iter().enumerate() {
        for (i, x) in c.iter().enumerate() {
            if !x.is_zero() {
                m.set(i, j, x.clone());
            }
        }
    }
    m
}

/// `Hom_K(X, Y[shift])` by exact linear algebra: cycles are the kernel of
/// the commutation system, boundaries the image of the homotopy map. For
/// `X = Y` at shift 0 the identity is the first representative.
pub fn hom_homotopy(
    a: &FDAlgebra,
    x: &TwoTermComplex,
    y: &TwoTermComplex,
    shift: i32,
) -> Result<HomSpace> {
    let f = a.field();
    let dx = &x.differential;
    let dy = &y.differential;
    let (layouts, cycles, boundaries, preferred) = match shift {
        0 => {
            let lm = HomLayout::new(a, x.minus(), y.minus());
            let l0 = HomLayout::new(a, x.zero(), y.zero());
            let lt = HomLayout::new(a, x.minus(), y.zero());
            let lh = HomLayout::new(a, x.zero(), y.minus());
            let minus_one = -&f.one();
            let mut cols = Vec::new();
            for k in 0..lm.len() {
                cols.push(lt.to_vec(&lm.unit(a, k).compose(a, dy).scaled(&minus_one)));
            }
            for k in 0..l0.len() {
                cols.push(lt.to_vec(&dx.compose(a, &l0.unit(a, k))));
            }
            let cycles = matrix_from_columns(a, lt.len(), &cols).kernel();
            let boundaries: Vec<Vec<Scalar>> = (0..lh.len())
                .map(|k| {
                    let h = lh.unit(a, k);
                    let mut v = lm.to_vec(&dx.compose(a, &h));
                    v.extend(l0.to_vec(&h.compose(a, dy)));
                    v
                })
                .collect();
            let mut preferred = Vec::new();
            if x == y && !x.is_zero() {
                let id = ChainMap::identity(a, x);
                let mut v = lm.to_vec(&id.minus);
                v.extend(l0.to_vec(&id.zero));
                preferred.push(v);
            }
            (vec![lm, l0], cycles, boundaries, preferred)
        }
        1 => {
            let lt = HomLayout::new(a, x.minus(), y.zero());
            let l0 = HomLayout::new(a, x.zero(), y.zero());
            let lm = HomLayout::new(a, x.minus(), y.minus());
            let cycles: Vec<Vec<Scalar>> = (0..lt.len())
                .map(|k| {
                    let mut v = vec![f.zero(); lt.len()];
                    v[k] = f.one();
                    v
                })
                .collect();
            let mut boundaries: Vec<Vec<Scalar>> = (0..l0.len())
                .map(|k| lt.to_vec(&dx.compose(a, &l0.unit(a, k))))
                .collect();
            boundaries.extend((0..lm.len()).map(|k| lt.to_vec(&lm.unit(a, k).compose(a, dy))));
            (vec![lt], cycles, boundaries, Vec::new())
        }
        -1 => {
            let lh = HomLayout::new(a, x.zero(), y.minus());
            let lm = HomLayout::new(a, x.minus(), y.minus());
            let l0 = HomLayout::new(a, x.zero(), y.zero());
            let cols: Vec<Vec<Scalar>> = (0..lh.len())
                .map(|k| {
                    let h = lh.unit(a, k);
                    let mut v = lm.to_vec(&dx.compose(a, &h));
                    v.extend(l0.to_vec(&h.compose(a, dy)));
                    v
                })
                .collect();
            let cycles = matrix_from_columns(a, lm.len() + l0.len(), &cols).kernel();
            (vec![lh], cycles, Vec::new(), Vec::new())
        }
        s => {
            return Err(Error::Precondition(format!(
                "shift {s} is outside {{-1, 0, 1}}"
            )))
        }
    };
    let len = layouts.iter().map(HomLayout::len).sum();
    let quotient = Quotient::new(f, len, &boundaries, &preferred, &cycles);
    Ok(HomSpace {
        shift,
        source: x.clone(),
        target: y.clone(),
        layouts,
        cycles: cycles.len(),
        quotient,
    })
}

/// The matrix of `Hom(X, Y) → Hom(X, Z)`, `f ↦ f · g`, in the bases of the
/// two spaces (columns indexed by the basis of `from`).
pub fn post_compose(a: &FDAlgebra, from: &HomSpace, g: &ChainMap, to: &HomSpace) -> Result<Matrix> {
    let cols = from
        .reps(a)
        .iter()
        .map(|f| to.coords(&f.compose(a, g)).ok_or(Error::AlgebraMismatch))
        .collect::<Result<Vec<_>>>()?;
    Ok(matrix_from_columns(a, to.dim(), &cols))
}

/// The matrix of `Hom(Y, X) → Hom(Z, X)`, `f ↦ g · f`.
pub fn pre_compose(a: &FDAlgebra, g: &ChainMap, from: &HomSpace, to: &HomSpace) -> Result<Matrix> {
    let cols = from
        .reps(a)
        .iter()
        .map(|f| to.coords(&g.compose(a, f)).ok_or(Error::AlgebraMismatch))
        .collect::<Result<Vec<_>>>()?;
    Ok(matrix_from_columns(a, to.dim(), &cols))
}
