mod common;

use qpmut::fixtures;
use qpmut::jacobian::fd_algebra;
use qpmut::qpcore::QP;
use qpmut::qpcore::{mutate, Options};
use qpmut::selfinj::{
    is_selfinjective, nakayama_permutation, sigma_orbits, NakayamaPermutation, SelfinjVerdict,
};

fn sigma(qp: &QP) -> NakayamaPermutation {
    match is_selfinjective(qp, 16, 7).unwrap() {
        SelfinjVerdict::Selfinjective { nakayama, .. } => nakayama,
        other => panic!("expected selfinjective, got {other:?}"),
    }
}

fn mu(qp: &QP, vs: &[&str]) -> QP {
    mutate(qp, &qp.vertices_of(vs).unwrap(), Options::default()).unwrap()
}

#[test]
fn fixture_permutations() {
    assert_eq!(sigma(&fixtures::hex()).to_string(), "(1 5 3)(2 6 4)");
    assert_eq!(
        sigma(&fixtures::grid3()).to_string(),
        "(1 9)(2 8)(3 7)(4 6)(5)"
    );
    assert!(sigma(&fixtures::tub2()).is_identity());
    assert!(sigma(&fixtures::tub3()).is_identity());
}

#[test]
fn permutations_agree_with_top_degree_oracle() {
    for (name, qp) in fixtures::all() {
        let top = common::graded_dims(&qp, 8).len() - 1;
        let oracle = common::top_degree_pairing(&qp, top);
        let s = sigma(&qp);
        let got: Vec<usize> = (0..oracle.len()).map(|k| s.apply(k)).collect();
        assert_eq!(got, oracle, "{name}");
    }
}

#[test]
fn permutation_is_seed_independent() {
    let j = fd_algebra(&fixtures::grid3(), 16).unwrap();
    let a = nakayama_permutation(j.algebra(), 1).unwrap();
    let b = nakayama_permutation(j.algebra(), 99).unwrap();
    assert!(a.same_as(&b));
}

#[test]
fn unstable_mutation_is_not_selfinjective() {
    let v = is_selfinjective(&mu(&fixtures::hex(), &["1"]), 16, 7).unwrap();
    assert!(
        matches!(v, SelfinjVerdict::NotSelfinjective { .. }),
        "{v:?}"
    );
}

#[test]
fn stable_mutations_keep_the_permutation() {
    for (qp, vs) in [
        (fixtures::hex(), vec!["1", "3", "5"]),
        (fixtures::hex(), vec!["2", "4", "6"]),
        (fixtures::grid3(), vec!["1", "9"]),
        (fixtures::grid3(), vec!["5"]),
        (fixtures::tub2(), vec!["2"]),
        (fixtures::tub3(), vec!["3"]),
    ] {
        let s = sigma(&qp);
        assert!(s.stabilizes(&qp.vertices_of(&vs).unwrap()));
        assert!(sigma(&mu(&qp, &vs)).same_as(&s), "{vs:?}");
    }
}

#[test]
fn orbits_of_grid() {
    let orbits = sigma_orbits(&sigma(&fixtures::grid3()));
    assert_eq!(
        orbits,
        vec![vec![0, 8], vec![1, 7], vec![2, 6], vec![3, 5], vec![4]]
    );
}
