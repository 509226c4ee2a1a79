mod common;

use qpmut::fixtures;
use qpmut::jacobian::{fd_algebra, radical_layers};

#[test]
fn oracle_matches_jacobian_dimensions() {
    for (name, qp) in fixtures::all() {
        let oracle = common::graded_dims(&qp, 8);
        let j = fd_algebra(&qp, 16).unwrap();
        assert_eq!(oracle.iter().sum::<usize>(), j.dim(), "{name}");
        assert_eq!(radical_layers(j.algebra()).unwrap(), oracle, "{name}");
    }
}

#[test]
fn hex_dimension_by_path_enumeration() {
    let hex = fixtures::hex();
    assert_eq!(common::graded_dims(&hex, 8), vec![6; 5]);
    let cartan = fd_algebra(&hex, 16).unwrap().algebra().cartan_matrix();
    for row in &cartan {
        assert_eq!(row.iter().sum::<usize>(), 5);
    }
}

#[test]
fn oracle_cartan_blocks() {
    for (name, qp) in fixtures::all() {
        let j = fd_algebra(&qp, 16).unwrap();
        let cartan = j.algebra().cartan_matrix();
        let n = qp.quiver().num_vertices();
        let mut oracle = vec![vec![0usize; n]; n];
        for d in 0..8 {
            for ((u, v), k) in common::graded_blocks(&qp, d) {
                oracle[v][u] += k;
            }
        }
        assert_eq!(cartan, oracle, "{name}");
    }
}
