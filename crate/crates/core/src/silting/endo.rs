use super::complex::ChainMap;
use super::hom::{hom_homotopy, HomSpace};
use super::okuyama::OkuyamaRickard;
use crate::error::{Error, Result};
use crate::jacobian::{FDAlgebra, Sparse};
use crate::pathalg::Scalar;

/// `End(T)` as a finite-dimensional algebra. Its vertices are the summands
/// of `T`; a basis element in block `(s, t)` is a map `T_s → T_t`.
#[derive(Clone, Debug)]
pub struct EndAlgebra {
    algebra: FDAlgebra,
    homs: Vec<Vec<HomSpace>>,
    offsets: Vec<Vec<usize>>,
}

impl EndAlgebra {
    pub fn algebra(&self) -> &FDAlgebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn hom(&self, s: usize, t: usize) -> &HomSpace {
        &self.homs[s][t]
    }

    /// The element of `End(T)` given by a chain map `T_s → T_t`.
    pub fn element(&self, s: usize, t: usize, f: &ChainMap) -> Result<Vec<Scalar>> {
        let c = self.homs[s][t].coords(f).ok_or(Error::AlgebraMismatch)?;
        let mut v = self.algebra.zero_vec();
        for (k, x) in c.into_iter().enumerate() {
            v[self.offsets[s][t] + k] = x;
        }
        Ok(v)
    }
}

/// Assembles the pairwise Hom spaces of the summands into one algebra.
/// Structure constants come from composing the fixed representatives.
pub fn end_algebra(base: &FDAlgebra, t: &OkuyamaRickard) -> Result<EndAlgebra> {
    let n = t.summands.len();
    let homs = t
        .summands
        .iter()
        .map(|x| {
            t.summands
                .iter()
                .map(|y| hom_homotopy(base, x, y, 0))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let mut offsets = vec![vec![0; n]; n];
    let mut source = Vec::new();
    let mut target = Vec::new();
    let mut labels = Vec::new();
    let mut reps = Vec::new();
    for s in 0..n {
        for u in 0..n {
            offsets[s][u] = source.len();
            for (k, r) in homs[s][u].reps(base).into_iter().enumerate() {
                source.push(s);
                target.push(u);
                labels.push(format!("{}>{}#{}", t.summands[s], t.summands[u], k + 1));
                reps.push(r);
            }
        }
    }
    let mut idempotents = Vec::with_capacity(n);
    for (s, row) in homs.iter().enumerate() {
        if row[s].dim() == 0 {
            return Err(Error::Precondition(format!(
                "summand {} is zero in the homotopy category",
                t.summands[s]
            )));
        }
        idempotents.push(offsets[s][s]);
    }
    let vertices = base.vertices().to_vec();
    let mut failure = None;
    let algebra = FDAlgebra::new(
        base.field(),
        vertices,
        labels,
        source.clone(),
        target.clone(),
        idempotents,
        "endomorphism algebra".into(),
        |i, j| {
            let (s, u) = (source[i], target[j]);
            let prod = reps[i].compose(base, &reps[j]);
            match homs[s][u].coords(&prod) {
                Some(c) => c
                    .into_iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(k, x)| (offsets[s][u] + k, x))
                    .collect::<Sparse>(),
                None => {
                    failure = Some((i, j));
                    Vec::new()
                }
            }
        },
    );
    if let Some((i, j)) = failure {
        return Err(Error::Precondition(format!(
            "composition {} · {} is not a chain map",
            algebra.labels()[i],
            algebra.labels()[j]
        )));
    }
    Ok(EndAlgebra {
        algebra,
        homs,
        offsets,
    })
}
