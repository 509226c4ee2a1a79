use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::Span;
use crate::pathalg::{Field, Scalar};

/// Sparse coordinate vector: `(basis index, coefficient)` with nonzero
/// coefficients and increasing indices.
pub type Sparse = Vec<(usize, Scalar)>;

/// A finite-dimensional basic algebra given by structure constants.
///
/// Every basis element `b` lies in a single block `e_u A e_v`, recorded as
/// `source(b) = u`, `target(b) = v`; products of basis elements are zero
/// unless the target of the first equals the source of the second. The
/// vertex idempotents are themselves basis elements.
#[derive(Clone, Debug)]
pub struct FDAlgebra {
    field: Field,
    vertices: Vec<String>,
    labels: Vec<String>,
    source: Vec<usize>,
    target: Vec<usize>,
    idempotents: Vec<usize>,
    table: Vec<Vec<Sparse>>,
    provenance: String,
}

impl FDAlgebra {
    /// Builds an algebra from block data and a product function on basis
    /// elements. `mult(i, j)` is only called for composable pairs.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        field: Field,
        vertices: Vec<String>,
        labels: Vec<String>,
        source: Vec<usize>,
        target: Vec<usize>,
        idempotents: Vec<usize>,
        provenance: String,
        mut mult: impl FnMut(usize, usize) -> Sparse,
    ) -> FDAlgebra {
        let n = labels.len();
        let mut table = vec![vec![Vec::new(); n]; n];
        for i in 0..n {
            for j in 0..n {
                if target[i] == source[j] {
                    table[i][j] = mult(i, j);
                }
            }
        }
        FDAlgebra {
            field,
            vertices,
            labels,
            source,
            target,
            idempotents,
            table,
            provenance,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn source(&self, b: usize) -> usize {
        self.source[b]
    }

    pub fn target(&self, b: usize) -> usize {
        self.target[b]
    }

    pub fn idempotent(&self, v: usize) -> usize {
        self.idempotents[v]
    }

    pub fn idempotents(&self) -> &[usize] {
        &self.idempotents
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    /// Product of two basis elements.
    pub fn basis_mul(&self, i: usize, j: usize) -> &Sparse {
        &self.table[i][j]
    }

    /// Basis elements of the block `e_u A e_v`.
    pub fn block(&self, u: usize, v: usize) -> Vec<usize> {
        (0..self.dim())
            .filter(|&b| self.source[b] == u && self.target[b] == v)
            .collect()
    }

    pub fn zero_vec(&self) -> Vec<Scalar> {
        vec![self.field.zero(); self.dim()]
    }

    pub fn unit_vec(&self, b: usize) -> Vec<Scalar> {
        let mut v = self.zero_vec();
        v[b] = self.field.one();
        v
    }

    /// Product of two dense elements.
    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.zero_vec();
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() || self.target[i] != self.source[j] {
                    continue;
                }
                let ab = a * b;
                for (k, c) in &self.table[i][j] {
                    out[*k] += &(&ab * c);
                }
            }
        }
        out
    }

    /// Cartan matrix: entry `(i, j)` is `dim e_j A e_i`, the number of basis
    /// elements from vertex `j` to vertex `i`.
    pub fn cartan_matrix(&self) -> Vec<Vec<usize>> {
        let n = self.num_vertices();
        let mut c = vec![vec![0; n]; n];
        for b in 0..self.dim() {
            c[self.target[b]][self.source[b]] += 1;
        }
        c
    }

    fn check_product_blocks(&self) -> Result<()> {
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                for (k, _) in &self.table[i][j] {
                    if self.source[*k] != self.source[i] || self.target[*k] != self.target[j] {
                        return Err(Error::Precondition(format!(
                            "product {} · {} leaves its block",
                            self.labels[i], self.labels[j]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Idempotents are orthogonal, act as identities on their blocks and
    /// sum to the unit.
    pub fn check_idempotents(&self) -> Result<()> {
        if self.idempotents.len() != self.num_vertices() {
            return Err(Error::BadIdempotents(
                "one idempotent per vertex required".into(),
            ));
        }
        for (v, &e) in self.idempotents.iter().enumerate() {
            if self.source[e] != v || self.target[e] != v {
                return Err(Error::BadIdempotents(format!(
                    "e_{} is not in its corner",
                    self.vertices[v]
                )));
            }
            for b in 0..self.dim() {
                let one = vec![(b, self.field.one())];
                if self.source[b] == v && self.table[e][b] != one {
                    return Err(Error::BadIdempotents(format!(
                        "e_{} · {} ≠ {}",
                        v, self.labels[b], self.labels[b]
                    )));
                }
                if self.target[b] == v && self.table[b][e] != one {
                    return Err(Error::BadIdempotents(format!(
                        "{} · e_{} ≠ {}",
                        self.labels[b], v, self.labels[b]
                    )));
                }
            }
        }
        self.check_product_blocks()
    }

    fn associator_vanishes(&self, i: usize, j: usize, k: usize) -> bool {
        if self.target[i] != self.source[j] || self.target[j] != self.source[k] {
            return true;
        }
        let mut left = self.zero_vec();
        for (m, c) in &self.table[i][j] {
            for (n, d) in &self.table[*m][k] {
                left[*n] += &(c * d);
            }
        }
        let mut right = self.zero_vec();
        for (m, c) in &self.table[j][k] {
            for (n, d) in &self.table[i][*m] {
                right[*n] += &(c * d);
            }
        }
        left == right
    }

    /// Associativity: exhaustive up to dimension 64, otherwise on `samples`
    /// seeded random triples.
    pub fn check_associative(&self, seed: u64, samples: usize) -> Result<()> {
        let n = self.dim();
        if n <= 64 {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        if !self.associator_vanishes(i, j, k) {
                            return Err(Error::Precondition(format!(
                                "not associative at ({}, {}, {})",
                                self.labels[i], self.labels[j], self.labels[k]
                            )));
                        }
                    }
                }
            }
            return Ok(());
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..samples {
            let (i, j, k) = (
                rng.gen_range(0..n),
                rng.gen_range(0..n),
                rng.gen_range(0..n),
            );
            if !self.associator_vanishes(i, j, k) {
                return Err(Error::Precondition(format!(
                    "not associative at ({}, {}, {})",
                    self.labels[i], self.labels[j], self.labels[k]
                )));
            }
        }
        Ok(())
    }

    /// The opposite algebra (same basis, reversed products and blocks).
    pub fn opposite(&self) -> FDAlgebra {
        let n = self.dim();
        let table = (0..n)
            .map(|i| (0..n).map(|j| self.table[j][i].clone()).collect())
            .collect();
        FDAlgebra {
            field: self.field,
            vertices: self.vertices.clone(),
            labels: self.labels.clone(),
            source: self.target.clone(),
            target: self.source.clone(),
            idempotents: self.idempotents.clone(),
            table,
            provenance: format!("opposite of {}", self.provenance),
        }
    }

    /// Span of the products `x · y` over the given spanning sets.
    pub fn product_span(&self, xs: &[Vec<Scalar>], ys: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
        let mut span = Span::new(self.field, self.dim());
        let mut out = Vec::new();
        for x in xs {
            for y in ys {
                let p = self.mul(x, y);
                if span.insert(&p) {
                    out.push(p);
                }
            }
        }
        out
    }
}
