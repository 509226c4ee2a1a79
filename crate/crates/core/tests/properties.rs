use proptest::prelude::*;
use proptest::sample::subsequence;

use qpmut::fixtures;
use qpmut::jacobian::{fd_algebra, FDAlgebra};
use qpmut::pathalg::potential::rotate;
use qpmut::pathalg::{cyclic_derivative, Field, Potential, Scalar};
use qpmut::qpcore::{mutability_violations, mutate, premutate_set, split_reduce, Options, QP};

fn fixture(k: usize) -> QP {
    match k % 4 {
        0 => fixtures::hex(),
        1 => fixtures::grid3(),
        2 => fixtures::tub2(),
        _ => fixtures::tub3(),
    }
}

fn mu(qp: &QP, vs: &[usize]) -> QP {
    mutate(qp, vs, Options::default()).unwrap()
}

fn cartan(qp: &QP) -> Vec<Vec<usize>> {
    fd_algebra(qp, 16).unwrap().algebra().cartan_matrix()
}

/// Random cycles of the quiver, found by walking from a vertex.
fn cycles(qp: &QP, seeds: &[(usize, u8, i64)]) -> Vec<(Vec<usize>, Scalar)> {
    let q = qp.quiver();
    let mut out = Vec::new();
    for &(start, choice, coeff) in seeds {
        let v0 = start % q.num_vertices();
        let (mut v, mut path, mut c) = (v0, Vec::new(), choice as usize);
        for _ in 0..8 {
            let outs = q.arrows_from(v);
            if outs.is_empty() {
                break;
            }
            let a = outs[c % outs.len()];
            c = c / 2 + 3;
            path.push(a);
            v = q.target(a);
            if v == v0 && path.len() >= 2 {
                out.push((path.clone(), Field::Rational.from_i64(coeff)));
                break;
            }
        }
    }
    out
}

fn random_potential(qp: &QP, seeds: &[(usize, u8, i64)]) -> Potential {
    Potential::from_cycles(qp.quiver(), qp.field(), cycles(qp, seeds)).unwrap()
}

fn random_element(a: &FDAlgebra, coeffs: &[i64]) -> Vec<Scalar> {
    (0..a.dim())
        .map(|i| a.field().from_i64(coeffs[i % coeffs.len()]))
        .collect()
}

fn seeds() -> impl Strategy<Value = Vec<(usize, u8, i64)>> {
    prop::collection::vec((0usize..9, any::<u8>(), -3i64..4), 1..6)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn canonicalization_is_idempotent(f in 0usize..4, s in seeds()) {
        let w = random_potential(&fixture(f), &s);
        prop_assert_eq!(w.canonical(), w.clone());
        prop_assert_eq!(w.canonical().canonical(), w.canonical());
    }

    #[test]
    fn rotated_cycles_are_equal(f in 0usize..4, s in seeds(), shift in 0usize..8) {
        let qp = fixture(f);
        let cs = cycles(&qp, &s);
        let rotated: Vec<_> = cs.iter().map(|(c, x)| (rotate(c, shift % c.len()), x.clone())).collect();
        let a = Potential::from_cycles(qp.quiver(), qp.field(), cs).unwrap();
        let b = Potential::from_cycles(qp.quiver(), qp.field(), rotated).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn cyclic_derivative_is_linear(f in 0usize..4, s in seeds(), t in seeds(), x in -3i64..4) {
        let qp = fixture(f);
        let (w1, w2) = (random_potential(&qp, &s), random_potential(&qp, &t));
        let c = Field::Rational.from_i64(x);
        let mut sum = w2.clone();
        sum.add_scaled(&w1, &c);
        let q = qp.quiver();
        for a in 0..q.num_arrows() {
            let lhs = cyclic_derivative(q, a, &sum, 16).unwrap();
            let rhs = cyclic_derivative(q, a, &w1, 16).unwrap().scaled(&c)
                .add(&cyclic_derivative(q, a, &w2, 16).unwrap());
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn truncation_is_monotone(f in 0usize..4, s in seeds(), b1 in 1usize..8, b2 in 1usize..8) {
        let qp = fixture(f);
        let w = random_potential(&qp, &s);
        let q = qp.quiver();
        let (lo, hi) = (b1.min(b2), b1.max(b2));
        for a in 0..q.num_arrows() {
            let d = cyclic_derivative(q, a, &w, 16).unwrap();
            prop_assert_eq!(d.truncate_to(hi).truncate_to(lo), d.truncate_to(lo));
            prop_assert!(d.truncate_to(lo).len() <= d.truncate_to(hi).len());
        }
    }

    #[test]
    fn mutation_squared_restores_quiver_and_dimension(f in 0usize..4, k in 0usize..9) {
        let qp = fixture(f);
        let k = k % qp.quiver().num_vertices();
        let once = mu(&qp, &[k]);
        prop_assume!(mutability_violations(&once, &[k]).is_empty());
        let twice = mu(&once, &[k]);
        prop_assert_eq!(twice.quiver().multiplicity_matrix(), qp.quiver().multiplicity_matrix());
        prop_assert_eq!(fd_algebra(&twice, 16).unwrap().dim(), fd_algebra(&qp, 16).unwrap().dim());
    }

    #[test]
    fn set_mutation_ignores_order(f in 0usize..4, vs in subsequence((0usize..9).collect::<Vec<_>>(), 1..4), rev in any::<bool>()) {
        let qp = fixture(f);
        let mut vs: Vec<usize> = vs.into_iter().filter(|&v| v < qp.quiver().num_vertices()).collect();
        prop_assume!(!vs.is_empty() && mutability_violations(&qp, &vs).is_empty());
        let whole = mu(&qp, &vs);
        if rev {
            vs.reverse();
        }
        let mut step = qp.clone();
        for &v in &vs {
            step = mu(&step, &[v]);
        }
        prop_assert_eq!(step.quiver().multiplicity_matrix(), whole.quiver().multiplicity_matrix());
        prop_assert_eq!(cartan(&step), cartan(&whole));
    }

    #[test]
    fn opposite_transposes_cartan(f in 0usize..4, vs in subsequence((0usize..9).collect::<Vec<_>>(), 0..3)) {
        let qp = fixture(f);
        let vs: Vec<usize> = vs.into_iter().filter(|&v| v < qp.quiver().num_vertices()).collect();
        prop_assume!(mutability_violations(&qp, &vs).is_empty());
        let m = if vs.is_empty() { qp.clone() } else { mu(&qp, &vs) };
        let c = cartan(&m);
        let co = cartan(&m.opposite());
        let n = c.len();
        for i in 0..n {
            for j in 0..n {
                prop_assert_eq!(c[i][j], co[j][i]);
            }
        }
        if !vs.is_empty() {
            let mo = mu(&qp.opposite(), &vs);
            prop_assert_eq!(cartan(&mo), co);
        }
    }

    #[test]
    fn reduction_keeps_the_jacobian_algebra(f in 0usize..4, vs in subsequence((0usize..9).collect::<Vec<_>>(), 1..3)) {
        let qp = fixture(f);
        let vs: Vec<usize> = vs.into_iter().filter(|&v| v < qp.quiver().num_vertices()).collect();
        prop_assume!(!vs.is_empty() && mutability_violations(&qp, &vs).is_empty());
        let pre = premutate_set(&qp, &vs).unwrap();
        let (red, _) = split_reduce(&pre, 16, 64).unwrap();
        prop_assert!(red.is_reduced());
        prop_assert_eq!(cartan(&red), cartan(&pre));
    }

    #[test]
    fn jacobian_algebra_is_associative(f in 0usize..4, x in prop::collection::vec(-2i64..3, 1..7), y in prop::collection::vec(-2i64..3, 1..7), z in prop::collection::vec(-2i64..3, 1..7)) {
        let j = fd_algebra(&fixture(f), 16).unwrap();
        let a = j.algebra();
        let (x, y, z) = (random_element(a, &x), random_element(a, &y), random_element(a, &z));
        prop_assert_eq!(a.mul(&a.mul(&x, &y), &z), a.mul(&x, &a.mul(&y, &z)));
    }
}
