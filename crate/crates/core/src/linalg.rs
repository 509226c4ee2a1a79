//! Dense exact linear algebra over a [`Field`].
//!
//! Vectors are rows; a matrix acts on column vectors by `M x`. Elimination
//! skips zero entries, which keeps the sparse systems met here cheap.

use crate::pathalg::{Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Vec<Scalar>>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            data: vec![vec![field.zero(); cols]; rows],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i][i] = field.one();
        }
        m
    }

    pub fn from_rows(field: Field, cols: usize, rows: Vec<Vec<Scalar>>) -> Matrix {
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        Matrix {
            field,
            rows: rows.len(),
            cols,
            data: rows,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Scalar) {
        self.data[i][j] = x;
    }

    pub fn add_to(&mut self, i: usize, j: usize, x: &Scalar) {
        self.data[i][j] += x;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i]
    }

    pub fn into_rows(self) -> Vec<Vec<Scalar>> {
        self.data
    }

    pub fn push_row(&mut self, row: Vec<Scalar>) {
        assert_eq!(row.len(), self.cols);
        self.data.push(row);
        self.rows += 1;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.iter().all(Scalar::is_zero))
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if !self.data[i][j].is_zero() {
                    t.data[j][i] = self.data[i][j].clone();
                }
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut m = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let x = &self.data[i][k];
                if x.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let y = &other.data[k][j];
                    if !y.is_zero() {
                        m.data[i][j] += &(x * y);
                    }
                }
            }
        }
        m
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut s = self.field.zero();
                for (x, y) in self.data[i].iter().zip(v) {
                    if !x.is_zero() && !y.is_zero() {
                        s += &(x * y);
                    }
                }
                s
            })
            .collect()
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = rref_in_place(&mut m.data, self.cols);
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{x : M x = 0}`.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![None; self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            is_pivot[p] = Some(i);
        }
        let mut out = Vec::new();
        for free in (0..self.cols).filter(|&j| is_pivot[j].is_none()) {
            let mut v = vec![self.field.zero(); self.cols];
            v[free] = self.field.one();
            for (i, &p) in pivots.iter().enumerate() {
                let x = &r.data[i][free];
                if !x.is_zero() {
                    v[p] = -x;
                }
            }
            out.push(v);
        }
        out
    }

    /// Some `x` with `M x = b`, if one exists.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows);
        let mut aug: Vec<Vec<Scalar>> = self
            .data
            .iter()
            .zip(b)
            .map(|(r, x)| {
                let mut r = r.clone();
                r.push(x.clone());
                r
            })
            .collect();
        let pivots = rref_in_place(&mut aug, self.cols + 1);
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = aug[i][self.cols].clone();
        }
        Some(x)
    }

    pub fn determinant(&self) -> Scalar {
        assert_eq!(self.rows, self.cols);
        let mut m = self.data.clone();
        let n = self.rows;
        let mut det = self.field.one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
                return self.field.zero();
            };
            if p != c {
                m.swap(p, c);
                det = -det;
            }
            det *= &m[c][c];
            let inv = m[c][c].inv().expect("nonzero pivot");
            for r in c + 1..n {
                if m[r][c].is_zero() {
                    continue;
                }
                let f = &m[r][c] * &inv;
                for k in c..n {
                    if !m[c][k].is_zero() {
                        let d = &f * &m[c][k];
                        m[r][k] -= &d;
                    }
                }
            }
        }
        det
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }
}

fn rref_in_place(m: &mut [Vec<Scalar>], cols: usize) -> Vec<usize> {
    let rows = m.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(p, r);
        let inv = m[r][c].inv().expect("nonzero pivot");
        if !inv.is_one() {
            for x in m[r].iter_mut().skip(c) {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
        }
        let (head, tail) = m.split_at_mut(r);
        let (pivot_row, tail) = tail.split_first_mut().expect("pivot row");
        for other in head.iter_mut().chain(tail.iter_mut()) {
            let f = other[c].clone();
            if f.is_zero() {
                continue;
            }
            for k in c..cols {
                if !pivot_row[k].is_zero() {
                    let d = &f * &pivot_row[k];
                    other[k] -= &d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// An incrementally built subspace in echelon form. Each stored row keeps
/// its expression in terms of the accepted generators, so membership tests
/// also return coordinates.
#[derive(Clone, Debug)]
pub struct Span {
    field: Field,
    len: usize,
    rows: Vec<(usize, Vec<Scalar>, Vec<Scalar>)>,
    generators: usize,
}

impl Span {
    pub fn new(field: Field, len: usize) -> Span {
        Span {
            field,
            len,
            rows: Vec::new(),
            generators: 0,
        }
    }

    pub fn dim(&self) -> usize {
        self.generators
    }

    pub fn ambient(&self) -> usize {
        self.len
    }

    /// Reduces `v` against the stored rows; returns the residue and the
    /// combination of generators that was subtracted.
    fn reduce(&self, v: &[Scalar]) -> (Vec<Scalar>, Vec<Scalar>) {
        let mut v = v.to_vec();
        let mut combo = vec![self.field.zero(); self.generators];
        for (p, row, c) in &self.rows {
            let f = v[*p].clone();
            if f.is_zero() {
                continue;
            }
            for (k, x) in row.iter().enumerate().skip(*p) {
                if !x.is_zero() {
                    v[k] -= &(&f * x);
                }
            }
            for (k, x) in c.iter().enumerate() {
                if !x.is_zero() {
                    combo[k] += &(&f * x);
                }
            }
        }
        (v, combo)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).0.iter().all(Scalar::is_zero)
    }

    /// Coefficients expressing `v` in the accepted generators, if `v` lies in the span.
    pub fn express(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let (r, combo) = self.reduce(v);
        r.iter().all(Scalar::is_zero).then_some(combo)
    }

    /// Adds `v` if it is independent of the current span. Returns whether
    /// it was accepted; accepted vectors are numbered in insertion order.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.len);
        let (mut r, mut combo) = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let g = self.generators;
        for (_, _, c) in &mut self.rows {
            c.push(self.field.zero());
        }
        // New row = (v - combo) / r[p], as a combination: e_g - combo.
        for x in combo.iter_mut() {
            *x = -&*x;
        }
        combo.push(self.field.one());
        let inv = r[p].inv().expect("nonzero pivot");
        for x in r.iter_mut().chain(combo.iter_mut()) {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        // Keep rows fully reduced at the new pivot.
        for (_, row, c) in &mut self.rows {
            let f = row[p].clone();
            if f.is_zero() {
                continue;
            }
            for (k, x) in r.iter().enumerate() {
                if !x.is_zero() {
                    row[k] -= &(&f * x);
                }
            }
            for (k, x) in combo.iter().enumerate() {
                if !x.is_zero() {
                    c[k] -= &(&f * x);
                }
            }
        }
        self.rows.push((p, r, combo));
        self.generators = g + 1;
        true
    }
}

/// A quotient `Z / B` of a space `Z` by a subspace `B ⊆ Z`, presented by a
/// fixed echelon section: coordinates of `z ∈ Z` are those on the chosen
/// representatives after discarding the `B` part.
#[derive(Clone, Debug)]
pub struct Quotient {
    span: Span,
    sub_dim: usize,
    /// For each accepted generator after the sub-space ones, the
    /// representative vector.
    reps: Vec<Vec<Scalar>>,
}

impl Quotient {
    /// `preferred` vectors are tried first as representatives (in order),
    /// then `z_basis`.
    pub fn new(
        field: Field,
        len: usize,
        sub: &[Vec<Scalar>],
        preferred: &[Vec<Scalar>],
        z_basis: &[Vec<Scalar>],
    ) -> Quotient {
        let mut span = Span::new(field, len);
        for b in sub {
            span.insert(b);
        }
        let sub_dim = span.dim();
        let mut reps = Vec::new();
        for z in preferred.iter().chain(z_basis) {
            if span.insert(z) {
                reps.push(z.clone());
            }
        }
        Quotient {
            span,
            sub_dim,
            reps,
        }
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    pub fn reps(&self) -> &[Vec<Scalar>] {
        &self.reps
    }

    /// Coordinates of the class of `v`, or `None` if `v` is outside `Z`.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        self.span.express(v).map(|c| c[self.sub_dim..].to_vec())
    }

    /// Whether `v` lies in the sub-space `B`.
    pub fn is_trivial(&self, v: &[Scalar]) -> bool {
        self.coords(v)
            .is_some_and(|c| c.iter().all(Scalar::is_zero))
    }
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pathalg::scalar::q;

    fn m(rows: &[&[i64]]) -> Matrix {
        let cols = rows[0].len();
        Matrix::from_rows(
            Field::Rational,
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&x| q(x, 1)).collect())
                .collect(),
        )
    }

    #[test]
    fn rank_kernel_solve() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let k = a.kernel();
        assert_eq!(k.len(), 1);
        assert!(is_zero_vec(&a.apply(&k[0])));
        let x = a.solve(&[q(6, 1), q(12, 1), q(2, 1)]).unwrap();
        assert_eq!(a.apply(&x), vec![q(6, 1), q(12, 1), q(2, 1)]);
        assert!(a.solve(&[q(1, 1), q(0, 1), q(0, 1)]).is_none());
    }

    #[test]
    fn determinant_matches_rank() {
        let a = m(&[&[2, 1], &[1, 1]]);
        assert_eq!(a.determinant(), q(1, 1));
        assert!(a.is_invertible());
        assert_eq!(m(&[&[1, 2], &[2, 4]]).determinant(), q(0, 1));
    }

    #[test]
    fn span_expresses_in_generators() {
        let mut s = Span::new(Field::Rational, 3);
        assert!(s.insert(&[q(1, 1), q(1, 1), q(0, 1)]));
        assert!(s.insert(&[q(0, 1), q(1, 1), q(1, 1)]));
        assert!(!s.insert(&[q(1, 1), q(2, 1), q(1, 1)]));
        let c = s.express(&[q(2, 1), q(3, 1), q(1, 1)]).unwrap();
        assert_eq!(c, vec![q(2, 1), q(1, 1)]);
        assert!(s.express(&[q(0, 1), q(0, 1), q(1, 1)]).is_none());
    }

    #[test]
    fn quotient_coordinates() {
        let e = |a, b, c| vec![q(a, 1), q(b, 1), q(c, 1)];
        let qt = Quotient::new(
            Field::Rational,
            3,
            &[e(1, 0, 0)],
            &[],
            &[e(1, 0, 0), e(1, 1, 0), e(0, 0, 1)],
        );
        assert_eq!(qt.dim(), 2);
        assert_eq!(qt.coords(&e(5, 2, 3)).unwrap(), vec![q(2, 1), q(3, 1)]);
        assert!(qt.is_trivial(&e(7, 0, 0)));
    }
}
