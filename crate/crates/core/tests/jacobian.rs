use qpmut::fixtures;
use qpmut::jacobian::{fd_algebra, gabriel_matrix, radical_layers};
use qpmut::qpcore::{mutate, premutate_set, Options};

#[test]
fn fixture_dimensions() {
    for (name, qp, dim, layers) in [
        ("HEX", fixtures::hex(), 30, vec![6, 6, 6, 6, 6]),
        ("GRID3", fixtures::grid3(), 58, vec![9, 12, 16, 12, 9]),
        ("TUB(2)", fixtures::tub2(), 32, vec![6, 10, 10, 6]),
        ("TUB(3)", fixtures::tub3(), 32, vec![6, 10, 10, 6]),
    ] {
        let j = fd_algebra(&qp, 16).unwrap();
        assert_eq!(j.dim(), dim, "{name}");
        assert_eq!(radical_layers(j.algebra()).unwrap(), layers, "{name}");
        assert_eq!(
            gabriel_matrix(j.algebra()).unwrap(),
            qp.quiver().multiplicity_matrix(),
            "{name}"
        );
    }
}

#[test]
fn hex_cartan_rows() {
    let j = fd_algebra(&fixtures::hex(), 16).unwrap();
    for row in j.algebra().cartan_matrix() {
        assert_eq!(row.iter().sum::<usize>(), 5);
    }
}

#[test]
fn mutation_and_premutation_dimensions() {
    for (qp, vs, dim) in [
        (fixtures::hex(), vec!["1"], 24),
        (fixtures::hex(), vec!["1", "3", "5"], 21),
        (fixtures::grid3(), vec!["1", "9"], 58),
        (fixtures::tub2(), vec!["2"], 38),
    ] {
        let i = qp.vertices_of(&vs).unwrap();
        let mu = mutate(&qp, &i, Options::default()).unwrap();
        let pre = premutate_set(&qp, &i).unwrap();
        assert_eq!(fd_algebra(&mu, 16).unwrap().dim(), dim, "{vs:?}");
        assert_eq!(fd_algebra(&pre, 16).unwrap().dim(), dim, "{vs:?}");
    }
}
