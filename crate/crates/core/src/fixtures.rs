//! Built-in example QPs.

use crate::document::QPDocument;
use crate::pathalg::{Field, Quiver, Scalar};
use crate::qpcore::QP;

pub const HEX_JSON: &str = include_str!("../fixtures/hex.qp.json");
pub const GRID3_JSON: &str = include_str!("../fixtures/grid3.qp.json");
pub const TUB2_JSON: &str = include_str!("../fixtures/tub2.qp.json");
pub const TUB3_JSON: &str = include_str!("../fixtures/tub3.qp.json");

fn load(text: &str) -> QP {
    QPDocument::from_json(text)
        .and_then(|d| d.to_qp())
        .expect("built-in fixture is valid")
}

/// Oriented 6-cycle `a1 ... a6` with `W = a1a2a3a4a5a6`.
pub fn hex() -> QP {
    load(HEX_JSON)
}

/// 3×3 grid with alternating square orientations; `W` = sum of the four squares.
pub fn grid3() -> QP {
    load(GRID3_JSON)
}

/// The tubular QP of type (2,2,2,2) for a parameter `λ ∉ {0, 1}`.
pub fn tub(lambda: Scalar) -> QP {
    let field = lambda.field();
    let arrows = [
        ("a", "1", "2"),
        ("b", "1", "3"),
        ("c", "1", "4"),
        ("d", "1", "5"),
        ("a'", "2", "6"),
        ("b'", "3", "6"),
        ("c'", "4", "6"),
        ("d'", "5", "6"),
        ("e", "6", "1"),
        ("f", "6", "1"),
    ];
    let q = Quiver::new(["1", "2", "3", "4", "5", "6"], owned(&arrows)).expect("valid quiver");
    let one = field.one();
    QP::from_words(
        q,
        field,
        [
            (vec!["a", "a'", "e"], one.clone()),
            (vec!["b", "b'", "e"], one.clone()),
            (vec!["c", "c'", "e"], one.clone()),
            (vec!["a", "a'", "f"], one.clone()),
            (vec!["b", "b'", "f"], lambda),
            (vec!["d", "d'", "f"], one),
        ],
    )
    .expect("valid potential")
}

pub fn tub2() -> QP {
    load(TUB2_JSON)
}

pub fn tub3() -> QP {
    load(TUB3_JSON)
}

/// `a: 1 -> 2, b: 2 -> 1` with `W = ab`.
pub fn two_cycle() -> QP {
    let q =
        Quiver::new(["1", "2"], owned(&[("a", "1", "2"), ("b", "2", "1")])).expect("valid quiver");
    QP::from_words(
        q,
        Field::Rational,
        [(vec!["a", "b"], Field::Rational.one())],
    )
    .expect("valid")
}

/// `a: 1 -> 2, b: 2 -> 3, c: 3 -> 1` with `W = abc`.
pub fn three_cycle() -> QP {
    let q = Quiver::new(
        ["1", "2", "3"],
        owned(&[("a", "1", "2"), ("b", "2", "3"), ("c", "3", "1")]),
    )
    .expect("valid quiver");
    QP::from_words(
        q,
        Field::Rational,
        [(vec!["a", "b", "c"], Field::Rational.one())],
    )
    .expect("valid")
}

/// `a: 1 -> 2` with `W = 0`.
pub fn a2() -> QP {
    let q = Quiver::new(["1", "2"], owned(&[("a", "1", "2")])).expect("valid quiver");
    QP::from_words(q, Field::Rational, []).expect("valid")
}

/// Every named fixture, in a fixed order.
pub fn all() -> Vec<(&'static str, QP)> {
    vec![
        ("HEX", hex()),
        ("GRID3", grid3()),
        ("TUB(2)", tub2()),
        ("TUB(3)", tub3()),
    ]
}

/// Looks up a fixture by name (case-insensitive; `tub2` and `TUB(2)` both work).
pub fn by_name(name: &str) -> Option<QP> {
    let key: String = name
        .chars()
        .filter(|c| c.is_ascii_alphanumeric())
        .collect::<String>()
        .to_lowercase();
    match key.as_str() {
        "hex" => Some(hex()),
        "grid3" => Some(grid3()),
        "tub2" => Some(tub2()),
        "tub3" => Some(tub3()),
        "twocycle" => Some(two_cycle()),
        "threecycle" => Some(three_cycle()),
        "a2" => Some(a2()),
        _ => None,
    }
}

fn owned(a: &[(&str, &str, &str)]) -> Vec<(String, String, String)> {
    a.iter()
        .map(|(i, s, t)| (i.to_string(), s.to_string(), t.to_string()))
        .collect()
}
