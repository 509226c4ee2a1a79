//! Jacobian algebras as concrete finite-dimensional algebras.

pub mod algebra;
pub mod radical;
pub mod rewrite;

use std::collections::HashMap;

pub use algebra::{FDAlgebra, Sparse};
pub use radical::{gabriel_matrix, gabriel_quiver, loewy_length, radical_basis, radical_layers};
pub use rewrite::{complete_rewrite, RewriteSystem, Status};

use crate::error::{Error, Result};
use crate::pathalg::{cyclic_derivative, Element, Path, Quiver, Scalar};
use crate::qpcore::QP;

/// Critical pairs examined before completion gives up.
pub const PAIR_BUDGET: usize = 500_000;
/// Normal-form paths enumerated before the algebra is declared unbounded.
pub const BASIS_LIMIT: usize = 20_000;

/// `[∂_a W for every arrow a]`, zeros omitted.
pub fn jacobian_relations(qp: &QP, bound: usize) -> Vec<Element> {
    (0..qp.quiver().num_arrows())
        .map(|a| cyclic_derivative(qp.quiver(), a, qp.potential(), bound).expect("arrow exists"))
        .filter(|e| !e.is_zero())
        .collect()
}

/// A Jacobian algebra with its rewriting system and path basis.
#[derive(Clone, Debug)]
pub struct JacobianAlgebra {
    quiver: Quiver,
    system: RewriteSystem,
    basis: Vec<Path>,
    index: HashMap<Path, usize>,
    algebra: FDAlgebra,
    empty_layer: usize,
}

impl JacobianAlgebra {
    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn system(&self) -> &RewriteSystem {
        &self.system
    }

    pub fn algebra(&self) -> &FDAlgebra {
        &self.algebra
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// The first empty normal-form layer: every path of this length is zero.
    pub fn vanishing_degree(&self) -> usize {
        self.empty_layer
    }

    pub fn bound(&self) -> usize {
        self.system.bound()
    }

    /// Coordinates of an element of the path algebra in the normal-form basis.
    pub fn coords(&self, x: &Element) -> Vec<Scalar> {
        let nf = self.system.reduce(x);
        let mut v = self.algebra.zero_vec();
        for (p, c) in nf.terms() {
            let i = self.index.get(p).expect("normal forms lie in the basis");
            v[*i] = c.clone();
        }
        v
    }

    pub fn path_coords(&self, p: &Path) -> Vec<Scalar> {
        let f = self.algebra.field();
        self.coords(&Element::from_path(p.clone(), f.one(), self.bound()))
    }

    pub fn arrow_coords(&self, a: usize) -> Vec<Scalar> {
        self.path_coords(&Path::arrow(&self.quiver, a))
    }

    /// Index of a normal-form path in the basis.
    pub fn basis_index(&self, p: &Path) -> Option<usize> {
        self.index.get(p).copied()
    }
}

/// Realizes `P(Q, W)` with paths truncated at `bound`.
///
/// Finite dimensionality is certified by an empty normal-form layer `d`
/// with `d < bound - (max head degree)`; otherwise the result is
/// `UnboundedAtD`.
pub fn fd_algebra(qp: &QP, bound: usize) -> Result<JacobianAlgebra> {
    let q = qp.quiver().clone();
    let field = qp.field();
    let rels = jacobian_relations(qp, bound);
    let system = complete_rewrite(&q, field, &rels, bound, PAIR_BUDGET);
    if system.status() == Status::Capped {
        return Err(Error::UnboundedAtD(bound));
    }
    let limit = bound.saturating_sub(system.max_head_degree());
    let mut basis: Vec<Path> = (0..q.num_vertices()).map(Path::trivial).collect();
    let mut layer: Vec<Path> = basis.clone();
    let mut empty_layer = None;
    for d in 1..limit {
        let mut next = Vec::new();
        for p in &layer {
            for a in q.arrows_from(p.target()) {
                let mut arrows = p.arrows().to_vec();
                arrows.push(a);
                if !system.has_head_suffix(&arrows) {
                    next.push(Path::from_parts(p.source(), q.target(a), arrows));
                }
            }
        }
        if next.is_empty() {
            empty_layer = Some(d);
            break;
        }
        next.sort();
        basis.extend(next.iter().cloned());
        if basis.len() > BASIS_LIMIT {
            break;
        }
        layer = next;
    }
    let Some(empty_layer) = empty_layer else {
        return Err(Error::UnboundedAtD(bound));
    };
    let index: HashMap<Path, usize> = basis
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect();
    let labels = basis.iter().map(|p| p.display(&q)).collect();
    let source = basis.iter().map(Path::source).collect();
    let target = basis.iter().map(Path::target).collect();
    let idempotents = (0..q.num_vertices()).collect();
    let algebra = FDAlgebra::new(
        field,
        q.vertices().to_vec(),
        labels,
        source,
        target,
        idempotents,
        "Jacobian algebra".into(),
        |i, j| {
            let p = basis[i].compose(&basis[j]).expect("composable");
            let nf = system.reduce(&Element::from_path(p, field.one(), bound));
            let mut v: Sparse = nf.terms().map(|(p, c)| (index[p], c.clone())).collect();
            v.sort_by_key(|(k, _)| *k);
            v
        },
    );
    Ok(JacobianAlgebra {
        quiver: q,
        system,
        basis,
        index,
        algebra,
        empty_layer,
    })
}

/// `dim P(Q, W)` at the given bound.
pub fn jacobian_dim(qp: &QP, bound: usize) -> Result<usize> {
    fd_algebra(qp, bound).map(|j| j.dim())
}

/// Cartan matrix of an algebra (see [`FDAlgebra::cartan_matrix`]).
pub fn cartan_matrix(a: &FDAlgebra) -> Vec<Vec<usize>> {
    a.cartan_matrix()
}
