use serde::Serialize;

use super::complex::{ChainMap, ProjMorphism, TwoTermComplex};
use super::hom::{hom_homotopy, post_compose, HomLayout};
use super::setting::Setting;
use crate::error::Result;
use crate::jacobian::radical::radical_basis;
use crate::jacobian::{FDAlgebra, JacobianAlgebra};
use crate::linalg::{Matrix, Span};
use crate::pathalg::{cyclic_derivative, pair_derivative, right_derivative, Element, Scalar};
use crate::qpcore::{ArrowOrigin, QP};

/// Rank data for one exactness claim.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ExactnessCertificate {
    pub claim: String,
    pub vertex: String,
    /// Dimensions of the spaces in the checked sequence.
    pub dims: Vec<usize>,
    /// Ranks of the maps between them.
    pub ranks: Vec<usize>,
    /// Consecutive maps compose to zero.
    pub complex: bool,
    pub exact: bool,
    /// The image of the last map is the radical part of its target, when
    /// that is part of the claim.
    pub radical_image: Option<bool>,
}

impl ExactnessCertificate {
    pub fn holds(&self) -> bool {
        self.complex && self.exact && self.radical_image.unwrap_or(true)
    }
}

/// `m_out · m_in = 0` and `rank m_in = dim ker m_out` (maps act on columns).
fn exact_at(m_in: &Matrix, m_out: &Matrix) -> (bool, bool) {
    let complex = m_out.mul(m_in).is_zero();
    let exact = m_in.rank() + m_out.rank() == m_out.cols();
    (complex, exact)
}

fn columns(a: &FDAlgebra, rows: usize, cols: Vec<Vec<Scalar>>) -> Matrix {
    let mut m = Matrix::zeros(a.field(), rows, cols.len());
    for (j, c) in cols.into_iter().enumerate() {
        for (i, x) in c.into_iter().enumerate() {
            if !x.is_zero() {
                m.set(i, j, x);
            }
        }
    }
    m
}

/// `Hom(⊕ P_w, X) → Hom(⊕ P_w, Y)`, `f ↦ f · m`, for `w` in `from`.
fn post_matrix(a: &FDAlgebra, from: &[usize], m: &ProjMorphism) -> Matrix {
    let dom = HomLayout::new(a, from, m.source());
    let cod = HomLayout::new(a, from, m.target());
    columns(
        a,
        cod.len(),
        (0..dom.len())
            .map(|k| cod.to_vec(&dom.unit(a, k).compose(a, m)))
            .collect(),
    )
}

/// `Hom(Y, ⊕ P_w) → Hom(X, ⊕ P_w)`, `f ↦ m · f`.
fn pre_matrix(a: &FDAlgebra, m: &ProjMorphism, to: &[usize]) -> Matrix {
    let dom = HomLayout::new(a, m.target(), to);
    let cod = HomLayout::new(a, m.source(), to);
    columns(
        a,
        cod.len(),
        (0..dom.len())
            .map(|k| cod.to_vec(&m.compose(a, &dom.unit(a, k))))
            .collect(),
    )
}

fn all_vertices(a: &FDAlgebra) -> Vec<usize> {
    (0..a.num_vertices()).collect()
}

/// Whether the columns of `image` span exactly the radical vectors with
/// the given end vertex, in the coordinates of `layout`.
fn spans_radical(
    a: &FDAlgebra,
    radical: &[Vec<Scalar>],
    image: &Matrix,
    layout: &HomLayout,
    end: End,
) -> bool {
    let mut jspan = Span::new(a.field(), layout.len());
    for v in radical {
        let Some(b) = v.iter().position(|x| !x.is_zero()) else {
            continue;
        };
        let m = match end {
            End::Target(i) if a.target(b) == i => {
                let mut m = ProjMorphism::zero(a, &all_vertices(a), &[i]);
                m.set(a.source(b), 0, v.clone());
                m
            }
            End::Source(i) if a.source(b) == i => {
                let mut m = ProjMorphism::zero(a, &[i], &all_vertices(a));
                m.set(0, a.target(b), v.clone());
                m
            }
            _ => continue,
        };
        jspan.insert(&layout.to_vec(&m));
    }
    let cols = image.transpose().into_rows();
    cols.iter().all(|c| jspan.contains(c)) && image.rank() == jspan.dim()
}

#[derive(Clone, Copy)]
enum End {
    Target(usize),
    Source(usize),
}

/// The maps of `P_i → U_i → V_i → P_i`: `(b)_b`, `(∂_(a,b) W)`, `(a)_a`,
/// with `b` running over arrows out of `i` and `a` over arrows into `i`.
pub fn resolution_maps(j: &JacobianAlgebra, qp: &QP, i: usize) -> Result<[ProjMorphism; 3]> {
    let a = j.algebra();
    let q = qp.quiver();
    let outs = q.arrows_from(i);
    let ins = q.arrows_into(i);
    let u: Vec<usize> = outs.iter().map(|&b| q.target(b)).collect();
    let v: Vec<usize> = ins.iter().map(|&x| q.source(x)).collect();
    let mut f2 = ProjMorphism::zero(a, &[i], &u);
    for (s, &b) in outs.iter().enumerate() {
        f2.set(0, s, j.arrow_coords(b));
    }
    let mut f1 = ProjMorphism::zero(a, &u, &v);
    for (r, &b) in outs.iter().enumerate() {
        for (s, &x) in ins.iter().enumerate() {
            f1.set(
                r,
                s,
                j.coords(&pair_derivative(q, x, b, qp.potential(), j.bound())?),
            );
        }
    }
    let mut f0 = ProjMorphism::zero(a, &v, &[i]);
    for (r, &x) in ins.iter().enumerate() {
        f0.set(r, 0, j.arrow_coords(x));
    }
    Ok([f2, f1, f0])
}

/// The four-term sequence at vertex `i` with its exactness certificate.
#[derive(Clone, Debug)]
pub struct ResolutionSequence {
    pub maps: [ProjMorphism; 3],
    pub at_u: ExactnessCertificate,
    pub at_v: ExactnessCertificate,
}

/// Exactness as modules is tested on `Hom(Λ, −)`, summed over all vertices.
pub fn resolution_sequence(j: &JacobianAlgebra, qp: &QP, i: usize) -> Result<ResolutionSequence> {
    let a = j.algebra();
    let maps = resolution_maps(j, qp, i)?;
    let from = all_vertices(a);
    let m: Vec<Matrix> = maps.iter().map(|f| post_matrix(a, &from, f)).collect();
    let cert = |name: &str, m_in: &Matrix, m_out: &Matrix| {
        let (complex, exact) = exact_at(m_in, m_out);
        ExactnessCertificate {
            claim: name.into(),
            vertex: qp.quiver().label(i).into(),
            dims: vec![m_in.cols(), m_in.rows(), m_out.rows()],
            ranks: vec![m_in.rank(), m_out.rank()],
            complex,
            exact,
            radical_image: None,
        }
    };
    let at_u = cert("resolution exact at U", &m[0], &m[1]);
    let at_v = cert("resolution exact at V", &m[1], &m[2]);
    Ok(ResolutionSequence { maps, at_u, at_v })
}

fn index_of(origins: &[ArrowOrigin], o: ArrowOrigin) -> usize {
    origins
        .iter()
        .position(|&x| x == o)
        .expect("arrow of the pre-mutation")
}

/// `Hom(T, −)` applied to `⊕_β T_{t(β)} → ⊕_α T_{s(α)} → T_v`, where `α`
/// runs over arrows of `Q′` into `v`, `β` over arrows out of `v`, the first
/// map has entries `φ′(∂ᴿ_α ∂_β W′)` and the second `φ′(α)`.
///
/// For `v ∈ I` this is `⊕ P_{s(a)} → ⊕ P_{t(b)} → P_v*` with maps `([ab])`
/// and `(b*)`; for `v ∉ I` it is the block complex assembled from the pair
/// derivatives of `[W]`, the arrows into `v` and the stars of arrows out of
/// `v` into `I`.
pub fn two_almost_split_check(st: &Setting, v: usize) -> Result<ExactnessCertificate> {
    let g = st.end.algebra();
    let pre = &st.phi.premutation;
    let q = pre.quiver();
    let bound = st.base.bound();
    let ins = q.arrows_into(v);
    let outs = q.arrows_from(v);
    let mid: Vec<usize> = ins.iter().map(|&x| q.source(x)).collect();
    let first: Vec<usize> = outs.iter().map(|&x| q.target(x)).collect();
    let mut m0 = ProjMorphism::zero(g, &mid, &[v]);
    for (r, &x) in ins.iter().enumerate() {
        m0.set(r, 0, st.phi.images[x].clone());
    }
    let mut m1 = ProjMorphism::zero(g, &first, &mid);
    for (r, &beta) in outs.iter().enumerate() {
        let rel = cyclic_derivative(q, beta, pre.potential(), bound)?;
        for (s, &alpha) in ins.iter().enumerate() {
            let entry: Element = right_derivative(q, alpha, &rel)?;
            m1.set(r, s, st.phi.evaluate(&st.end, &entry));
        }
    }
    let from = all_vertices(g);
    let a1 = post_matrix(g, &from, &m1);
    let a0 = post_matrix(g, &from, &m0);
    let (complex, exact) = exact_at(&a1, &a0);
    let radical = radical_basis(g)?;
    let layout = HomLayout::new(g, &from, &[v]);
    let claim = if st.t.is_mutated(v) {
        "right 2-almost split ending at a mutated summand"
    } else {
        "right 2-almost split ending at a stalk summand"
    };
    Ok(ExactnessCertificate {
        claim: claim.into(),
        vertex: q.label(v).into(),
        dims: vec![a1.cols(), a1.rows(), a0.rows()],
        ranks: vec![a1.rank(), a0.rank()],
        complex,
        exact,
        radical_image: Some(spans_radical(g, &radical, &a0, &layout, End::Target(v))),
    })
}

/// `P_l* → V_l → U_l → P_l*` with maps `g_l`, `f_{l0} f_{l2}` and `h_l`:
/// both its right half (under `Hom(T, −)`) and its left half (under
/// `Hom(−, T)`) are certified.
pub fn weak_two_almost_split_check(st: &Setting, l: usize) -> Result<[ExactnessCertificate; 2]> {
    let g = st.end.algebra();
    let q = st.qp.quiver();
    let origins = &st.phi.origins;
    let ins = q.arrows_into(l);
    let outs = q.arrows_from(l);
    let v: Vec<usize> = ins.iter().map(|&x| q.source(x)).collect();
    let u: Vec<usize> = outs.iter().map(|&x| q.target(x)).collect();
    let image = |o| st.phi.images[index_of(origins, o)].clone();
    let mut gl = ProjMorphism::zero(g, &[l], &v);
    for (s, &a) in ins.iter().enumerate() {
        gl.set(0, s, image(ArrowOrigin::Star(a)));
    }
    let mut f = ProjMorphism::zero(g, &v, &u);
    for (r, &a) in ins.iter().enumerate() {
        for (s, &b) in outs.iter().enumerate() {
            f.set(r, s, image(ArrowOrigin::Composite(a, b)));
        }
    }
    let mut h = ProjMorphism::zero(g, &u, &[l]);
    for (r, &b) in outs.iter().enumerate() {
        h.set(
            r,
            0,
            image(ArrowOrigin::Star(b)).iter().map(|c| -c).collect(),
        );
    }
    let from = all_vertices(g);
    let radical = radical_basis(g)?;
    let label = q.label(l).to_string();

    let r_in = post_matrix(g, &from, &f);
    let r_out = post_matrix(g, &from, &h);
    let (c1, e1) = exact_at(&r_in, &r_out);
    let right = ExactnessCertificate {
        claim: "weak 2-almost split, right half".into(),
        vertex: label.clone(),
        dims: vec![r_in.cols(), r_in.rows(), r_out.rows()],
        ranks: vec![r_in.rank(), r_out.rank()],
        complex: c1,
        exact: e1,
        radical_image: Some(spans_radical(
            g,
            &radical,
            &r_out,
            &HomLayout::new(g, &from, &[l]),
            End::Target(l),
        )),
    };

    let l_in = pre_matrix(g, &f, &from);
    let l_out = pre_matrix(g, &gl, &from);
    let (c2, e2) = exact_at(&l_in, &l_out);
    let left = ExactnessCertificate {
        claim: "weak 2-almost split, left half".into(),
        vertex: label,
        dims: vec![l_in.cols(), l_in.rows(), l_out.rows()],
        ranks: vec![l_in.rank(), l_out.rank()],
        complex: c2,
        exact: e2,
        radical_image: Some(spans_radical(
            g,
            &radical,
            &l_out,
            &HomLayout::new(g, &[l], &from),
            End::Source(l),
        )),
    };
    Ok([right, left])
}

/// Exactness of `Hom(X, Y) → Hom(X, Z) → Hom(X, W)` in the homotopy
/// category for every summand `X` of `T`, dimensions summed.
fn hom_exact_over_t(
    st: &Setting,
    claim: &str,
    vertex: usize,
    spaces: [&TwoTermComplex; 3],
    maps: [&ChainMap; 2],
) -> Result<ExactnessCertificate> {
    let a = st.base.algebra();
    let mut dims = vec![0; 3];
    let mut ranks = vec![0; 2];
    let mut complex = true;
    let mut exact = true;
    for x in &st.t.summands {
        let hs = spaces.map(|y| hom_homotopy(a, x, y, 0));
        let [h0, h1, h2] = hs;
        let (h0, h1, h2) = (h0?, h1?, h2?);
        let m_in = post_compose(a, &h0, maps[0], &h1)?;
        let m_out = post_compose(a, &h1, maps[1], &h2)?;
        let (c, e) = exact_at(&m_in, &m_out);
        complex &= c;
        exact &= e;
        for (d, h) in dims.iter_mut().zip([&h0, &h1, &h2]) {
            *d += h.dim();
        }
        ranks[0] += m_in.rank();
        ranks[1] += m_out.rank();
    }
    Ok(ExactnessCertificate {
        claim: claim.into(),
        vertex: st.qp.quiver().label(vertex).into(),
        dims,
        ranks,
        complex,
        exact,
        radical_image: None,
    })
}

/// For `l ∈ I`: `Hom(T, P_l*) → Hom(T, V_l) → Hom(T, P_l)` via `g_l` and
/// `f_{l0}` is exact.
pub fn cone_sequence_check(st: &Setting, l: usize) -> Result<ExactnessCertificate> {
    let a = st.base.algebra();
    let [_, f1, f0] = resolution_maps(&st.base, &st.qp, l)?;
    let star = &st.t.summands[l];
    let v = TwoTermComplex::stalk(a, "V", f1.target());
    let p = TwoTermComplex::stalk(a, "P", &[l]);
    let g = ChainMap {
        minus: ProjMorphism::zero(a, star.minus(), &[]),
        zero: f1,
    };
    let f0 = ChainMap::stalk(a, f0);
    hom_exact_over_t(
        st,
        "Hom(T, -) exact on the cone sequence",
        l,
        [star, &v, &p],
        [&g, &f0],
    )
}

/// For `j ∉ I`: `Hom(T, U_j) → Hom(T, V_j) → Hom(T, P_j)` via `f_{j1}` and
/// `f_{j0}` is exact.
pub fn stalk_sequence_check(st: &Setting, j: usize) -> Result<ExactnessCertificate> {
    let a = st.base.algebra();
    let [_, f1, f0] = resolution_maps(&st.base, &st.qp, j)?;
    let u = TwoTermComplex::stalk(a, "U", f1.source());
    let v = TwoTermComplex::stalk(a, "V", f1.target());
    let p = TwoTermComplex::stalk(a, "P", &[j]);
    let f1 = ChainMap::stalk(a, f1);
    let f0 = ChainMap::stalk(a, f0);
    hom_exact_over_t(
        st,
        "Hom(T, -) exact on the resolution middle",
        j,
        [&u, &v, &p],
        [&f1, &f0],
    )
}
