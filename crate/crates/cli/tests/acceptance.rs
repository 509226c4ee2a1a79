//! One PASS/FAIL line per acceptance criterion. Exits nonzero if any fails.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::process::Command;
use std::time::{Duration, Instant};

use qpmut::fixtures;
use qpmut::jacobian::fd_algebra;
use qpmut::pathalg::scalar::q;
use qpmut::qpcore::{mutability_violations, mutate, torus, Options, QP};
use qpmut::selfinj::{
    is_selfinjective, nakayama_permutation, sigma_orbits, NakayamaPermutation, SelfinjVerdict,
};
use qpmut::silting::{resolution_sequence, verify_theorem, VerificationReport, VerifyOptions};

type Check = Result<String, String>;

fn ensure(ok: bool, what: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn e<T: std::fmt::Display>(x: T) -> String {
    x.to_string()
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < limit, format!("{what} took {t:?}, limit {limit:?}"))
}

fn set(qp: &QP, vs: &[&str]) -> Vec<usize> {
    qp.vertices_of(vs).unwrap()
}

fn mu(qp: &QP, vs: &[usize]) -> QP {
    mutate(qp, vs, Options::default()).unwrap()
}

fn sigma(qp: &QP) -> Result<NakayamaPermutation, String> {
    let j = fd_algebra(qp, 16).map_err(e)?;
    nakayama_permutation(j.algebra(), 0).map_err(e)
}

/// Runs the binary and returns stdout.
fn cli(args: &[&str]) -> Result<String, String> {
    let o = Command::new(env!("CARGO_BIN_EXE_qpmut"))
        .args(args)
        .output()
        .map_err(e)?;
    ensure(
        o.status.success(),
        format!("qpmut {args:?} exited with {:?}", o.status.code()),
    )?;
    String::from_utf8(o.stdout).map_err(e)
}

fn arrows_of(doc: &str) -> Result<Vec<(String, String, String)>, String> {
    let v: serde_json::Value = serde_json::from_str(doc).map_err(e)?;
    let mut out: Vec<_> = v["arrows"]
        .as_array()
        .ok_or("no arrows")?
        .iter()
        .map(|a| {
            (
                a["id"].as_str().unwrap().to_string(),
                a["from"].as_str().unwrap().to_string(),
                a["to"].as_str().unwrap().to_string(),
            )
        })
        .collect();
    out.sort();
    Ok(out)
}

fn owned(v: &[(&str, &str, &str)]) -> Vec<(String, String, String)> {
    let mut out: Vec<_> = v
        .iter()
        .map(|(a, b, c)| (a.to_string(), b.to_string(), c.to_string()))
        .collect();
    out.sort();
    out
}

fn displayed_mutation(vs: &str, arrows: &[(&str, &str, &str)], potential: &str) -> Check {
    let start = Instant::now();
    let doc = cli(&["mutate", "HEX", "-v", vs])?;
    within(start, Duration::from_secs(1), "mutate")?;
    ensure(
        arrows_of(&doc)? == owned(arrows),
        "quiver differs from the displayed one",
    )?;
    let qp = qpmut::document::QPDocument::from_json(&doc)
        .map_err(e)?
        .to_qp()
        .map_err(e)?;
    let want = qp.parse_potential(potential).map_err(e)?;
    ensure(
        qp.potential() == &want,
        format!("potential {} differs", qp.display_potential()),
    )?;
    Ok(format!(
        "{} arrows, W = {}, {:?}",
        arrows.len(),
        qp.display_potential(),
        start.elapsed()
    ))
}

fn hex_single() -> Check {
    displayed_mutation(
        "1",
        &[
            ("a1*", "2", "1"),
            ("a6*", "1", "6"),
            ("[a6a1]", "6", "2"),
            ("a2", "2", "3"),
            ("a3", "3", "4"),
            ("a4", "4", "5"),
            ("a5", "5", "6"),
        ],
        "[a6a1]a1*a6*+[a6a1]a2a3a4a5",
    )
}

fn hex_orbit() -> Check {
    displayed_mutation(
        "1,3,5",
        &[
            ("a1*", "2", "1"),
            ("a6*", "1", "6"),
            ("[a6a1]", "6", "2"),
            ("[a2a3]", "2", "4"),
            ("a2*", "3", "2"),
            ("a3*", "4", "3"),
            ("[a4a5]", "4", "6"),
            ("a5*", "6", "5"),
            ("a4*", "5", "4"),
        ],
        "[a6a1]a1*a6*+[a2a3]a3*a2*+[a4a5]a5*a4*+[a6a1][a2a3][a4a5]",
    )
}

fn nakayama() -> Check {
    let mut notes = Vec::new();
    for (name, want) in [
        ("HEX", "(1 5 3)(2 6 4)"),
        ("GRID3", "(1 9)(2 8)(3 7)(4 6)(5)"),
        ("TUB(2)", "(1)(2)(3)(4)(5)(6)"),
    ] {
        let start = Instant::now();
        let got = cli(&["nakayama", name])?;
        within(start, Duration::from_secs(5), name)?;
        ensure(got.trim() == want, format!("{name}: {}", got.trim()))?;
        notes.push(format!("{name} {want} {:?}", start.elapsed()));
    }
    Ok(notes.join("; "))
}

struct Case {
    label: String,
    qp: QP,
    set: Vec<usize>,
}

fn theorem_cases() -> Vec<Case> {
    let hex = fixtures::hex();
    let grid = fixtures::grid3();
    let grid19 = mu(&grid, &set(&grid, &["1", "9"]));
    let mk = |label: &str, qp: &QP, vs: &[&str]| Case {
        label: label.into(),
        set: set(qp, vs),
        qp: qp.clone(),
    };
    vec![
        mk("HEX/{1}", &hex, &["1"]),
        mk("HEX/{1,3,5}", &hex, &["1", "3", "5"]),
        mk("GRID3/{1,9}", &grid, &["1", "9"]),
        mk("mu19(GRID3)/{3,7}", &grid19, &["3", "7"]),
        mk("TUB(2)/{2}", &fixtures::tub2(), &["2"]),
        mk("TUB(3)/{2}", &fixtures::tub3(), &["2"]),
    ]
}

fn verify(c: &Case) -> Result<(VerificationReport, Duration), String> {
    let start = Instant::now();
    let r = verify_theorem(&c.qp, &c.set, VerifyOptions::default()).map_err(e)?;
    Ok((r, start.elapsed()))
}

fn theorem(reports: &[(String, VerificationReport, Duration)]) -> Check {
    let mut notes = Vec::new();
    for (label, r, t) in reports {
        ensure(*t < Duration::from_secs(60), format!("{label} took {t:?}"))?;
        ensure(!r.truncated, format!("{label}: truncated"))?;
        ensure(
            r.dims_equal,
            format!(
                "{label}: dims {} {} {}",
                r.dim_end, r.dim_mutation, r.dim_premutation
            ),
        )?;
        ensure(r.relations_vanish, format!("{label}: a relation survives"))?;
        ensure(r.generates, format!("{label}: images do not generate"))?;
        ensure(
            r.iso && r.passed(),
            format!("{label}: iso {} passed {}", r.iso, r.passed()),
        )?;
        notes.push(format!("{label} dim {} {:?}", r.dim_end, t));
    }
    Ok(notes.join("; "))
}

fn tilting(reports: &[(String, VerificationReport, Duration)]) -> Check {
    for (label, r, _) in reports {
        ensure(
            r.tilting.agree,
            format!("{label}: direct and σ-criterion disagree"),
        )?;
        let expected = label != "HEX/{1}";
        ensure(
            r.tilting.is_tilting() == expected,
            format!("{label}: tilting = {}", r.tilting.is_tilting()),
        )?;
    }
    let hex = fixtures::hex();
    let m1 = mu(&hex, &set(&hex, &["1"]));
    let v = is_selfinjective(&m1, 16, 0).map_err(e)?;
    ensure(
        matches!(v, SelfinjVerdict::NotSelfinjective { .. }),
        format!("mu1(HEX): {v:?}"),
    )?;
    Ok("HEX/{1} not tilting, mu1(HEX) not selfinjective, all other cases tilting".into())
}

fn lambda_prime() -> Check {
    let mut notes = Vec::new();
    for (qp, lam, want) in [
        (fixtures::tub2(), q(2, 1), q(2, 1)),
        (fixtures::tub3(), q(3, 1), q(3, 2)),
    ] {
        let m = mu(&qp, &set(&qp, &["2"]));
        let cycle = |t: &str| {
            m.parse_potential(t)
                .map(|w| w.terms().next().unwrap().0.clone())
        };
        let units = ["bb'e", "cc'e", "dd'e", "dd'a'*a*"]
            .iter()
            .map(|t| cycle(t))
            .collect::<Result<Vec<_>, _>>()
            .map_err(e)?;
        let (n, _) = torus::normalize(m.potential(), &units).map_err(e)?;
        let got = n.coeff(&cycle("bb'a'*a*").map_err(e)?);
        let formula = lam.checked_div(&(&lam - &q(1, 1))).map_err(e)?;
        ensure(
            got == want && got == formula,
            format!("λ = {lam}: got {got}"),
        )?;
        notes.push(format!("λ={lam} → {got}"));
    }
    Ok(notes.join(", "))
}

/// Every nonempty union of σ-orbits that satisfies the mutation conditions.
fn stable_sets(qp: &QP, s: &NakayamaPermutation) -> Vec<Vec<usize>> {
    let orbits = sigma_orbits(s);
    let mut out = Vec::new();
    for mask in 1u32..(1 << orbits.len()) {
        let mut vs: Vec<usize> = (0..orbits.len())
            .filter(|k| mask >> k & 1 == 1)
            .flat_map(|k| orbits[k].clone())
            .collect();
        vs.sort_unstable();
        if mutability_violations(qp, &vs).is_empty() {
            out.push(vs);
        }
    }
    out
}

fn stable_mutations() -> Check {
    let mut count = 0;
    for (name, qp) in fixtures::all() {
        let s = sigma(&qp)?;
        for vs in stable_sets(&qp, &s) {
            let m = mu(&qp, &vs);
            let t = sigma(&m).map_err(|err| format!("{name}/{vs:?}: {err}"))?;
            ensure(t.same_as(&s), format!("{name}/{vs:?}: {t} vs {s}"))?;
            count += 1;
        }
    }
    Ok(format!(
        "{count} σ-stable mutations, all selfinjective with the same permutation"
    ))
}

fn exactness(reports: &[(String, VerificationReport, Duration)]) -> Check {
    let mut resolutions = 0;
    for (name, qp) in fixtures::all() {
        let j = fd_algebra(&qp, 16).map_err(e)?;
        for v in 0..qp.quiver().num_vertices() {
            let r = resolution_sequence(&j, &qp, v).map_err(e)?;
            ensure(
                r.at_u.holds() && r.at_v.holds(),
                format!("{name}: resolution at vertex {v}"),
            )?;
            resolutions += 1;
        }
    }
    let mut certs = 0;
    for (label, r, _) in reports {
        for c in &r.exactness {
            ensure(c.holds(), format!("{label}: {} at {}", c.claim, c.vertex))?;
            certs += 1;
        }
    }
    // Every σ-stable mutation of HEX and TUB(2) as well.
    for qp in [fixtures::hex(), fixtures::tub2()] {
        let s = sigma(&qp)?;
        for vs in stable_sets(&qp, &s) {
            let o = VerifyOptions {
                opposite: false,
                ..VerifyOptions::default()
            };
            let r = verify_theorem(&qp, &vs, o).map_err(e)?;
            ensure(r.exactness_holds, format!("exactness fails at {vs:?}"))?;
            certs += r.exactness.len();
        }
    }
    Ok(format!("{resolutions} resolutions, {certs} certificates"))
}

fn permutations(v: &[usize]) -> Vec<Vec<usize>> {
    if v.len() <= 1 {
        return vec![v.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..v.len() {
        let mut rest = v.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

fn involution() -> Check {
    let mut squares = 0;
    let mut orders = 0;
    for (name, qp) in fixtures::all() {
        let dim = fd_algebra(&qp, 16).map_err(e)?.dim();
        for k in 0..qp.quiver().num_vertices() {
            let once = mu(&qp, &[k]);
            let twice = mu(&once, &[k]);
            ensure(
                twice.quiver().multiplicity_matrix() == qp.quiver().multiplicity_matrix(),
                format!("{name}: μ_{k}² quiver"),
            )?;
            ensure(
                fd_algebra(&twice, 16).map_err(e)?.dim() == dim,
                format!("{name}: μ_{k}² dimension"),
            )?;
            squares += 1;
        }
        let s = sigma(&qp)?;
        for vs in stable_sets(&qp, &s).into_iter().filter(|v| v.len() <= 4) {
            let whole = mu(&qp, &vs);
            let cartan = fd_algebra(&whole, 16).map_err(e)?.algebra().cartan_matrix();
            for order in permutations(&vs) {
                let mut cur = qp.clone();
                for &v in &order {
                    cur = mu(&cur, &[v]);
                }
                ensure(
                    cur.quiver().multiplicity_matrix() == whole.quiver().multiplicity_matrix(),
                    format!("{name}: order {order:?}"),
                )?;
                ensure(
                    cur.potential().len() == whole.potential().len(),
                    format!("{name}: terms in order {order:?}"),
                )?;
                ensure(
                    fd_algebra(&cur, 16).map_err(e)?.algebra().cartan_matrix() == cartan,
                    format!("{name}: Cartan in order {order:?}"),
                )?;
                orders += 1;
            }
        }
    }
    Ok(format!("{squares} squares, {orders} orderings"))
}

fn hex_dimension() -> Check {
    let hex = fixtures::hex();
    let oracle: usize = common::graded_dims(&hex, 8).iter().sum();
    let j = fd_algebra(&hex, 16).map_err(e)?;
    ensure(
        oracle == 30 && j.dim() == 30,
        format!("oracle {oracle}, engine {}", j.dim()),
    )?;
    let sums: Vec<usize> = j
        .algebra()
        .cartan_matrix()
        .iter()
        .map(|r| r.iter().sum())
        .collect();
    ensure(sums.iter().all(|&s| s == 5), format!("row sums {sums:?}"))?;
    Ok("dim 30 = oracle 30, Cartan row sums all 5".into())
}

fn main() {
    let mut reports = Vec::new();
    let mut setup = Ok(());
    for c in theorem_cases() {
        match verify(&c) {
            Ok((r, t)) => reports.push((c.label, r, t)),
            Err(err) => setup = Err(format!("{}: {err}", c.label)),
        }
    }
    let with_reports = |f: fn(&[(String, VerificationReport, Duration)]) -> Check| match &setup {
        Ok(()) => f(&reports),
        Err(err) => Err(err.clone()),
    };
    let results: Vec<(&str, Check)> = vec![
        (
            "HEX single mutation reproduces the displayed QP",
            hex_single(),
        ),
        (
            "HEX orbit mutation reproduces the displayed QP",
            hex_orbit(),
        ),
        ("Nakayama permutations of HEX, GRID3, TUB(2)", nakayama()),
        (
            "Theorem verification on all six cases",
            with_reports(theorem),
        ),
        (
            "Tilting cross-check and mu1(HEX) not selfinjective",
            with_reports(tilting),
        ),
        ("TUB coefficient law λ/(λ-1)", lambda_prime()),
        (
            "σ-stable mutations keep selfinjectivity and the permutation",
            stable_mutations(),
        ),
        ("Exactness suite", with_reports(exactness)),
        ("Involution and order independence", involution()),
        (
            "dim P(HEX) = 30 against the path oracle, Cartan row sums 5",
            hex_dimension(),
        ),
    ];
    let mut failed = 0;
    for (name, r) in &results {
        match r {
            Ok(note) => println!("PASS  {name}  [{note}]"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}  [{why}]");
            }
        }
    }
    println!(
        "{} of {} criteria pass",
        results.len() - failed,
        results.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
