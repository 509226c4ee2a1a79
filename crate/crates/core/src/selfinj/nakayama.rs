use std::fmt;

use super::module::{
    algebra_generators, injective_dual, module_isomorphic, projective, IsoVerdict,
};
use crate::error::{Error, Result};
use crate::jacobian::{fd_algebra, FDAlgebra};
use crate::linalg::Matrix;
use crate::qpcore::QP;

/// A permutation of the vertices with `D(e_k A) ≅ A e_σ(k)`.
#[derive(Clone, Debug)]
pub struct NakayamaPermutation {
    labels: Vec<String>,
    sigma: Vec<usize>,
    witnesses: Vec<Matrix>,
}

impl NakayamaPermutation {
    pub fn apply(&self, k: usize) -> usize {
        self.sigma[k]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.sigma
    }

    pub fn witnesses(&self) -> &[Matrix] {
        &self.witnesses
    }

    pub fn is_identity(&self) -> bool {
        self.sigma.iter().enumerate().all(|(i, &s)| i == s)
    }

    /// Cycles in order of their smallest vertex index, fixed points included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.sigma.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut c = Vec::new();
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                c.push(k);
                k = self.sigma[k];
            }
            out.push(c);
        }
        out
    }

    /// Whether `σ I = I`.
    pub fn stabilizes(&self, set: &[usize]) -> bool {
        let mut a: Vec<usize> = set.to_vec();
        let mut b: Vec<usize> = set.iter().map(|&k| self.sigma[k]).collect();
        a.sort_unstable();
        b.sort_unstable();
        a.dedup();
        b.dedup();
        a == b
    }

    /// Same permutation on vertex labels.
    pub fn same_as(&self, other: &NakayamaPermutation) -> bool {
        self.labels.len() == other.labels.len()
            && (0..self.sigma.len()).all(|k| {
                other
                    .labels
                    .iter()
                    .position(|l| *l == self.labels[k])
                    .is_some_and(|j| other.labels[other.sigma[j]] == self.labels[self.sigma[k]])
            })
    }
}

impl fmt::Display for NakayamaPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in self.cycles() {
            let names: Vec<&str> = c.iter().map(|&k| self.labels[k].as_str()).collect();
            write!(f, "({})", names.join(" "))?;
        }
        Ok(())
    }
}

/// Matches each `D(e_k A)` with an indecomposable projective. Candidates
/// are filtered by dimension and vertex weights before any Hom is solved.
pub fn nakayama_permutation(a: &FDAlgebra, seed: u64) -> Result<NakayamaPermutation> {
    let gens = algebra_generators(a)?;
    let n = a.num_vertices();
    let projectives: Vec<_> = (0..n).map(|j| projective(a, &gens, j)).collect();
    let mut sigma = Vec::with_capacity(n);
    let mut witnesses = Vec::with_capacity(n);
    for k in 0..n {
        let dual = injective_dual(a, &gens, k);
        let mut found = None;
        for (j, p) in projectives.iter().enumerate() {
            if p.dim() != dual.dim() || p.weights() != dual.weights() {
                continue;
            }
            if let IsoVerdict::Iso(h) = module_isomorphic(&dual, p, seed)? {
                found = Some((j, h));
                break;
            }
        }
        let (j, h) = found.ok_or_else(|| Error::NotSelfinjective(a.vertices()[k].clone()))?;
        sigma.push(j);
        witnesses.push(h);
    }
    let mut sorted = sigma.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != n {
        return Err(Error::Precondition(
            "Nakayama matching is not a bijection".into(),
        ));
    }
    Ok(NakayamaPermutation {
        labels: a.vertices().to_vec(),
        sigma,
        witnesses,
    })
}

/// Outcome of a selfinjectivity test on a QP.
#[derive(Clone, Debug)]
pub enum SelfinjVerdict {
    Selfinjective {
        dim: usize,
        nakayama: NakayamaPermutation,
    },
    NotSelfinjective {
        dim: usize,
        vertex: String,
    },
    /// Finite dimensionality could not be certified at the bound.
    Unbounded {
        bound: usize,
    },
}

impl SelfinjVerdict {
    pub fn is_selfinjective(&self) -> bool {
        matches!(self, SelfinjVerdict::Selfinjective { .. })
    }
}

pub fn is_selfinjective(qp: &QP, bound: usize, seed: u64) -> Result<SelfinjVerdict> {
    let j = match fd_algebra(qp, bound) {
        Ok(j) => j,
        Err(Error::UnboundedAtD(b)) => return Ok(SelfinjVerdict::Unbounded { bound: b }),
        Err(e) => return Err(e),
    };
    match nakayama_permutation(j.algebra(), seed) {
        Ok(nakayama) => Ok(SelfinjVerdict::Selfinjective {
            dim: j.dim(),
            nakayama,
        }),
        Err(Error::NotSelfinjective(v)) => Ok(SelfinjVerdict::NotSelfinjective {
            dim: j.dim(),
            vertex: v,
        }),
        Err(e) => Err(e),
    }
}

/// The σ-orbits as vertex sets.
pub fn sigma_orbits(sigma: &NakayamaPermutation) -> Vec<Vec<usize>> {
    sigma
        .cycles()
        .into_iter()
        .map(|mut c| {
            c.sort_unstable();
            c
        })
        .collect()
}
