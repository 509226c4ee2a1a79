use qpmut::fixtures;
use qpmut::pathalg::scalar::q;
use qpmut::qpcore::{mutate, torus, Options, QP};

fn mu(qp: &QP, vs: &[&str]) -> QP {
    mutate(qp, &qp.vertices_of(vs).unwrap(), Options::default()).unwrap()
}

#[test]
fn hex_single_vertex() {
    let m = mu(&fixtures::hex(), &["1"]);
    let expected = m.parse_potential("[a6a1]a1*a6* + [a6a1]a2a3a4a5").unwrap();
    assert_eq!(m.potential(), &expected);
    assert_eq!(m.quiver().num_arrows(), 7);
    assert!(!m.is_truncated());
}

#[test]
fn hex_alternate_vertices() {
    let m = mu(&fixtures::hex(), &["1", "3", "5"]);
    assert_eq!(m.quiver().num_arrows(), 9);
    assert_eq!(m.potential().len(), 4);
    assert!(!m.is_truncated());
}

#[test]
fn grid_corners() {
    let m = mu(&fixtures::grid3(), &["1", "9"]);
    assert_eq!(m.quiver().num_arrows(), 14);
    assert!(!m.is_truncated());
}

#[test]
fn three_cycle_loses_its_potential() {
    let m = mu(&fixtures::three_cycle(), &["2"]);
    assert!(m.potential().is_zero());
    assert_eq!(m.quiver().num_arrows(), 2);
}

#[test]
fn tub_lambda_prime() {
    for (qp, lam) in [(fixtures::tub2(), q(2, 1)), (fixtures::tub3(), q(3, 1))] {
        let m = mu(&qp, &["2"]);
        let cycle = |t: &str| {
            m.parse_potential(t)
                .unwrap()
                .terms()
                .next()
                .unwrap()
                .0
                .clone()
        };
        let units: Vec<Vec<usize>> = ["bb'e", "cc'e", "dd'e", "dd'a'*a*"]
            .iter()
            .map(|t| cycle(t))
            .collect();
        let (n, _) = torus::normalize(m.potential(), &units).unwrap();
        let lp = lam.checked_div(&(&lam - &q(1, 1))).unwrap();
        assert_eq!(n.coeff(&cycle("bb'a'*a*")), lp);
        let target = m
            .parse_potential(&format!("bb'e+cc'e+dd'e+{lp}bb'a'*a*+dd'a'*a*"))
            .unwrap();
        assert!(torus::torus_equivalent(m.quiver().num_arrows(), m.potential(), &target).unwrap());
    }
}
