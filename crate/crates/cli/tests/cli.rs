use std::path::PathBuf;
use std::process::{Command, Output};

fn qpmut(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qpmut"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

/// Compares against a checked-in file; `QPMUT_BLESS=1` rewrites it.
fn golden(name: &str, args: &[&str]) {
    let o = qpmut(args);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let got = stdout(&o);
    let path = golden_path(name);
    if std::env::var_os("QPMUT_BLESS").is_some() {
        std::fs::write(&path, &got).unwrap();
    }
    let want = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden {name}"));
    assert_eq!(got, want, "{name} differs from the golden file");
}

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/fixtures")
        .join(name)
        .display()
        .to_string()
}

#[test]
fn golden_mutations() {
    golden(
        "hex_mu1.qp.json",
        &["mutate", "-i", &fixture("hex.qp.json"), "-v", "1"],
    );
    golden(
        "hex_mu135.qp.json",
        &["mutate", "-i", &fixture("hex.qp.json"), "-v", "1,3,5"],
    );
    golden(
        "grid3_chain.json",
        &["chain", "GRID3", "--orbits", "1,9", "--orbits", "3,7"],
    );
    golden(
        "tub2_verify.json",
        &[
            "verify-theorem",
            "-i",
            &fixture("tub2.qp.json"),
            "-v",
            "2",
            "--normalize",
            "bb'e,cc'e,dd'e,dd'a'*a*",
        ],
    );
}

#[test]
fn golden_output_is_stable_across_runs() {
    let args = ["verify-theorem", "HEX", "-v", "1,3,5"];
    assert_eq!(stdout(&qpmut(&args)), stdout(&qpmut(&args)));
}

#[test]
fn fixture_names_and_files_agree() {
    let a = qpmut(&["emit", "HEX"]);
    let b = qpmut(&["emit", &fixture("hex.qp.json")]);
    let strip = |s: String| {
        s.lines()
            .filter(|l| !l.contains("\"name\""))
            .collect::<Vec<_>>()
            .join("\n")
    };
    assert_eq!(
        strip(stdout(&a)).replace(",\n  \"metadata\": {}", ""),
        strip(stdout(&b)).replace(",\n  \"metadata\": {}", "")
    );
}

#[test]
fn emit_round_trips() {
    let first = qpmut(&["mutate", "GRID3", "-v", "1,9"]);
    let tmp = std::env::temp_dir().join(format!("qpmut-rt-{}.json", std::process::id()));
    std::fs::write(&tmp, &first.stdout).unwrap();
    let second = qpmut(&["emit", tmp.to_str().unwrap()]);
    assert_eq!(stdout(&first), stdout(&second));
    std::fs::remove_file(tmp).ok();
}

#[test]
fn nakayama_permutations() {
    assert_eq!(
        stdout(&qpmut(&["nakayama", "-i", &fixture("grid3.qp.json")])),
        "(1 9)(2 8)(3 7)(4 6)(5)\n"
    );
    assert_eq!(stdout(&qpmut(&["nakayama", "HEX"])), "(1 5 3)(2 6 4)\n");
    assert_eq!(
        stdout(&qpmut(&["nakayama", "TUB(2)"])),
        "(1)(2)(3)(4)(5)(6)\n"
    );
}

#[test]
fn exit_codes() {
    let bad = qpmut(&["mutate", "HEX", "-v", "1,2"]);
    assert_eq!(bad.status.code(), Some(2));
    let err: serde_json::Value = serde_json::from_slice(&bad.stderr).unwrap();
    assert_eq!(err["code"], "not_mutable");
    assert!(err["message"].is_string() && err["details"]["violations"].is_array());

    assert_eq!(qpmut(&["mutate", "HEX", "-v", "7"]).status.code(), Some(2));
    assert_eq!(
        qpmut(&["nakayama", "no-such-file.json"]).status.code(),
        Some(2)
    );

    let tmp = std::env::temp_dir().join(format!("qpmut-mu1-{}.json", std::process::id()));
    qpmut(&["mutate", "HEX", "-v", "1", "-o", tmp.to_str().unwrap()]);
    assert_eq!(
        qpmut(&["check-selfinjective", tmp.to_str().unwrap()])
            .status
            .code(),
        Some(4)
    );
    assert_eq!(
        qpmut(&["nakayama", tmp.to_str().unwrap()]).status.code(),
        Some(4)
    );
    std::fs::remove_file(tmp).ok();

    // HEX needs paths of length 5; a bound of 3 cannot certify finiteness.
    let low = qpmut(&["jacobian", "HEX", "--degree-bound", "3"]);
    assert_eq!(low.status.code(), Some(3));
    let err: serde_json::Value = serde_json::from_slice(&low.stderr).unwrap();
    assert_eq!(err["code"], "unbounded");
}

#[test]
fn config_file_and_flag_precedence() {
    let cfg = std::env::temp_dir().join(format!("qpmut-cfg-{}.toml", std::process::id()));
    std::fs::write(&cfg, "degree_bound = 3\nseed = 5\n").unwrap();
    let c = cfg.to_str().unwrap();
    assert_eq!(
        qpmut(&["jacobian", "HEX", "--dim", "--config", c])
            .status
            .code(),
        Some(3)
    );
    let o = qpmut(&[
        "jacobian",
        "HEX",
        "--dim",
        "--config",
        c,
        "--degree-bound",
        "16",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["dim"], 30);
    assert_eq!(v["degree_bound"], 16);

    std::fs::write(&cfg, "field = \"GF(7)\"\n").unwrap();
    let o = qpmut(&["emit", "HEX", "--config", c]);
    assert!(stdout(&o).contains("\"GF(7)\""));
    let o = qpmut(&["emit", "HEX", "--config", c, "--field", "Q"]);
    assert!(stdout(&o).contains("\"Q\""));

    std::fs::write(&cfg, "degree_bnd = 3\n").unwrap();
    assert_eq!(
        qpmut(&["emit", "HEX", "--config", c]).status.code(),
        Some(2)
    );
    std::fs::remove_file(cfg).ok();
}

#[test]
fn jacobian_fields() {
    let o = qpmut(&["jacobian", "HEX", "--cartan"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v.get("dim").is_none());
    for row in v["cartan"].as_array().unwrap() {
        assert_eq!(
            row.as_array()
                .unwrap()
                .iter()
                .map(|x| x.as_u64().unwrap())
                .sum::<u64>(),
            5
        );
    }
}

#[test]
fn orbits_and_parse() {
    let v: serde_json::Value = serde_json::from_slice(&qpmut(&["orbits", "HEX"]).stdout).unwrap();
    assert_eq!(
        v["orbits"][0]["vertices"],
        serde_json::json!(["1", "3", "5"])
    );
    assert_eq!(v["orbits"][0]["mutable"], true);
    let p: serde_json::Value = serde_json::from_slice(&qpmut(&["parse", "GRID3"]).stdout).unwrap();
    assert_eq!(p["arrows"], 12);
    assert_eq!(p["terms"], 4);
}
