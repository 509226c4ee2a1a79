use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::jacobian::radical::radical_powers;
use crate::jacobian::FDAlgebra;
use crate::linalg::{Matrix, Span};
use crate::pathalg::{Field, Scalar};

/// Idempotents followed by radical elements independent modulo `J^2`.
/// Together they generate the algebra.
pub fn algebra_generators(a: &FDAlgebra) -> Result<Vec<Vec<Scalar>>> {
    let mut gens: Vec<Vec<Scalar>> = a.idempotents().iter().map(|&e| a.unit_vec(e)).collect();
    let powers = radical_powers(a)?;
    let mut span = Span::new(a.field(), a.dim());
    if let Some(j2) = powers.get(1) {
        for v in j2 {
            span.insert(v);
        }
    }
    for v in &powers[0] {
        if span.insert(v) {
            gens.push(v.clone());
        }
    }
    Ok(gens)
}

/// A finite-dimensional left module given by the action of a generating set.
#[derive(Clone, Debug)]
pub struct Module {
    field: Field,
    dim: usize,
    /// Vertex `v` with `e_v` fixing the coordinate.
    coord_vertex: Vec<usize>,
    weights: Vec<usize>,
    /// One matrix per generator (acting on column vectors).
    actions: Vec<Matrix>,
    label: String,
}

impl Module {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn weights(&self) -> &[usize] {
        &self.weights
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.actions
    }

    fn from_coords(
        a: &FDAlgebra,
        gens: &[Vec<Scalar>],
        coord_vertex: Vec<usize>,
        label: String,
        act: impl Fn(&[Scalar], usize) -> Vec<Scalar>,
    ) -> Module {
        let n = coord_vertex.len();
        let mut weights = vec![0; a.num_vertices()];
        for &v in &coord_vertex {
            weights[v] += 1;
        }
        let actions = gens
            .iter()
            .map(|g| {
                let mut m = Matrix::zeros(a.field(), n, n);
                for col in 0..n {
                    let image = act(g, col);
                    for (row, x) in image.into_iter().enumerate() {
                        if !x.is_zero() {
                            m.set(row, col, x);
                        }
                    }
                }
                m
            })
            .collect();
        Module {
            field: a.field(),
            dim: n,
            coord_vertex,
            weights,
            actions,
            label,
        }
    }
}

/// The projective `A e_k`, on the basis elements ending at `k`.
pub fn projective(a: &FDAlgebra, gens: &[Vec<Scalar>], k: usize) -> Module {
    let basis: Vec<usize> = (0..a.dim()).filter(|&b| a.target(b) == k).collect();
    let pos: std::collections::HashMap<usize, usize> =
        basis.iter().enumerate().map(|(i, &b)| (b, i)).collect();
    let coord_vertex = basis.iter().map(|&b| a.source(b)).collect();
    Module::from_coords(
        a,
        gens,
        coord_vertex,
        format!("P{}", a.vertices()[k]),
        |g, col| {
            let prod = a.mul(g, &a.unit_vec(basis[col]));
            let mut out = vec![a.field().zero(); basis.len()];
            for (b, x) in prod.into_iter().enumerate() {
                if !x.is_zero() {
                    out[pos[&b]] = x;
                }
            }
            out
        },
    )
}

/// `D(e_k A)`: the dual of the right projective `e_k A`, with
/// `(x·φ)(y) = φ(y x)`.
pub fn injective_dual(a: &FDAlgebra, gens: &[Vec<Scalar>], k: usize) -> Module {
    let basis: Vec<usize> = (0..a.dim()).filter(|&b| a.source(b) == k).collect();
    let coord_vertex = basis.iter().map(|&b| a.target(b)).collect();
    Module::from_coords(
        a,
        gens,
        coord_vertex,
        format!("D(e{}A)", a.vertices()[k]),
        |g, col| {
            // Coefficient of φ_d in g·φ_c is coeff_c(d · g).
            let c = basis[col];
            let mut out = vec![a.field().zero(); basis.len()];
            for (row, &d) in basis.iter().enumerate() {
                let prod = a.mul(&a.unit_vec(d), g);
                if !prod[c].is_zero() {
                    out[row] = prod[c].clone();
                }
            }
            out
        },
    )
}

/// Basis of `Hom_A(M, N)` as matrices `dim N × dim M`.
pub fn hom_space(m: &Module, n: &Module) -> Result<Vec<Matrix>> {
    if m.actions.len() != n.actions.len() || m.field != n.field {
        return Err(Error::AlgebraMismatch);
    }
    let f = m.field;
    // Unknowns: entries (i, j) with matching vertices.
    let mut vars = Vec::new();
    for i in 0..n.dim {
        for j in 0..m.dim {
            if n.coord_vertex[i] == m.coord_vertex[j] {
                vars.push((i, j));
            }
        }
    }
    let var_index: std::collections::HashMap<(usize, usize), usize> =
        vars.iter().enumerate().map(|(k, &ij)| (ij, k)).collect();
    let mut eqs = Matrix::zeros(f, 0, vars.len());
    for (am, an) in m.actions.iter().zip(&n.actions) {
        // (F·am − an·F)[i][l] = Σ_j F[i][j] am[j][l] − Σ_j an[i][j] F[j][l]
        for i in 0..n.dim {
            for l in 0..m.dim {
                let mut row = vec![f.zero(); vars.len()];
                let mut any = false;
                for j in 0..m.dim {
                    let x = am.get(j, l);
                    if !x.is_zero() {
                        if let Some(&k) = var_index.get(&(i, j)) {
                            row[k] += x;
                            any = true;
                        }
                    }
                }
                for j in 0..n.dim {
                    let x = an.get(i, j);
                    if !x.is_zero() {
                        if let Some(&k) = var_index.get(&(j, l)) {
                            row[k] -= x;
                            any = true;
                        }
                    }
                }
                if any && row.iter().any(|x| !x.is_zero()) {
                    eqs.push_row(row);
                }
            }
        }
    }
    Ok(eqs
        .kernel()
        .into_iter()
        .map(|v| {
            let mut h = Matrix::zeros(f, n.dim, m.dim);
            for (k, x) in v.into_iter().enumerate() {
                if !x.is_zero() {
                    let (i, j) = vars[k];
                    h.set(i, j, x);
                }
            }
            h
        })
        .collect())
}

/// How an isomorphism question was settled.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoVerdict {
    /// An invertible homomorphism.
    Iso(Matrix),
    /// Dimensions or vertex weights differ.
    DifferentShape,
    /// Hom is zero or every element is singular (exhaustive search).
    NoExhaustive,
    /// All samples and a generic line gave singular maps.
    NoOnLine,
}

impl IsoVerdict {
    pub fn is_iso(&self) -> bool {
        matches!(self, IsoVerdict::Iso(_))
    }
}

fn combine(field: Field, basis: &[Matrix], coeffs: &[Scalar]) -> Matrix {
    let mut m = Matrix::zeros(field, basis[0].rows(), basis[0].cols());
    for (h, c) in basis.iter().zip(coeffs) {
        if c.is_zero() {
            continue;
        }
        for i in 0..h.rows() {
            for j in 0..h.cols() {
                let x = h.get(i, j);
                if !x.is_zero() {
                    m.add_to(i, j, &(x * c));
                }
            }
        }
    }
    m
}

/// Searches `Hom(M, N)` for an invertible element.
pub fn module_isomorphic(m: &Module, n: &Module, seed: u64) -> Result<IsoVerdict> {
    if m.dim != n.dim || m.weights != n.weights {
        return Ok(IsoVerdict::DifferentShape);
    }
    let f = m.field;
    if m.dim == 0 {
        return Ok(IsoVerdict::Iso(Matrix::zeros(f, 0, 0)));
    }
    let basis = hom_space(m, n)?;
    if basis.is_empty() {
        return Ok(IsoVerdict::NoExhaustive);
    }
    if let Field::Prime(p) = f {
        let k = basis.len() as u32;
        if k <= 3 && p.checked_pow(k).is_some_and(|t| t <= 1 << 20) {
            let total = p.pow(k);
            for code in 0..total {
                let mut c = Vec::new();
                let mut r = code;
                for _ in 0..k {
                    c.push(f.from_i64((r % p) as i64));
                    r /= p;
                }
                let h = combine(f, &basis, &c);
                if h.is_invertible() {
                    return Ok(IsoVerdict::Iso(h));
                }
            }
            return Ok(IsoVerdict::NoExhaustive);
        }
    }
    // A single basis element is tried first: it is often the identity.
    for h in &basis {
        if h.is_invertible() {
            return Ok(IsoVerdict::Iso(h.clone()));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draw = |rng: &mut ChaCha8Rng| -> Vec<Scalar> {
        (0..basis.len())
            .map(|_| f.from_i64(rng.gen_range(-10..=10)))
            .collect()
    };
    for _ in 0..32 {
        let c = draw(&mut rng);
        let h = combine(f, &basis, &c);
        if h.is_invertible() {
            return Ok(IsoVerdict::Iso(h));
        }
    }
    let u = combine(f, &basis, &draw(&mut rng));
    let v = combine(f, &basis, &draw(&mut rng));
    for t in 0..=m.dim as i64 {
        let h = combine(f, &[u.clone(), v.clone()], &[f.one(), f.from_i64(t)]);
        if !h.determinant().is_zero() {
            return Ok(IsoVerdict::Iso(h));
        }
    }
    Ok(IsoVerdict::NoOnLine)
}
