//! Operations shared by the command line and the HTTP service. Each returns
//! a JSON-serializable value together with the exit status it implies.

use serde::Serialize;
use serde_json::{json, Value};

use crate::config::Settings;
use crate::failure::{Exit, Failure};
use crate::input::mutation_set;
use qpmut::document::QPDocument;
use qpmut::jacobian::{fd_algebra, radical_layers};
use qpmut::qpcore::{mutability_violations, mutate_with_summary, torus, QP};
use qpmut::selfinj::{
    is_selfinjective, nakayama_permutation, sigma_orbits, NakayamaPermutation, SelfinjVerdict,
};
use qpmut::silting::{verify_theorem, VerificationReport, VerifyOptions};

pub type Outcome<T> = Result<(T, Exit), Failure>;

fn labels(qp: &QP, vs: &[usize]) -> Vec<String> {
    vs.iter()
        .map(|&v| qp.quiver().label(v).to_string())
        .collect()
}

/// Vertices that lie on no 2-cycle.
fn mutable_vertices(qp: &QP) -> Vec<String> {
    let n = qp.quiver().num_vertices();
    let ok: Vec<usize> = (0..n)
        .filter(|&v| mutability_violations(qp, &[v]).is_empty())
        .collect();
    labels(qp, &ok)
}

pub fn summary(qp: &QP, name: Option<&str>) -> Value {
    json!({
        "name": name,
        "field": qp.field().to_string(),
        "vertices": qp.quiver().num_vertices(),
        "arrows": qp.quiver().num_arrows(),
        "terms": qp.potential().len(),
        "reduced": qp.is_reduced(),
        "potential": qp.display_potential(),
        "mutable_vertices": mutable_vertices(qp),
    })
}

/// Rescales arrows so each listed cycle has coefficient 1.
pub fn normalized(qp: &QP, units: &[String]) -> Result<String, Failure> {
    let mut cycles = Vec::new();
    for u in units {
        let w = qp.parse_potential(u)?;
        let mut terms = w.terms();
        match (terms.next(), terms.next()) {
            (Some((c, _)), None) => cycles.push(c.clone()),
            _ => return Err(Failure::input(format!("`{u}` is not a single cycle"))),
        }
    }
    let (w, _) = torus::normalize(qp.potential(), &cycles)?;
    Ok(w.display(qp.quiver()))
}

/// `μ_I` at the given labels. Truncation makes the result inconclusive.
pub fn mutate(qp: &QP, vertices: &[String], s: &Settings) -> Outcome<QP> {
    let set = mutation_set(qp, vertices)?;
    let (mu, summary) = mutate_with_summary(qp, &set, s.options())?;
    let exit = if summary.truncated || mu.is_truncated() {
        Exit::Inconclusive
    } else {
        Exit::Ok
    };
    Ok((mu, exit))
}

pub fn document(qp: &QP, name: Option<String>) -> QPDocument {
    QPDocument::from_qp(qp, name)
}

#[derive(Clone, Copy, Debug, Default)]
pub struct JacobianFields {
    pub dim: bool,
    pub cartan: bool,
    pub layers: bool,
}

pub fn jacobian(qp: &QP, s: &Settings, fields: JacobianFields) -> Outcome<Value> {
    let j = fd_algebra(qp, s.degree_bound)?;
    let all = !(fields.dim || fields.cartan || fields.layers);
    let mut out = serde_json::Map::new();
    out.insert("degree_bound".into(), json!(s.degree_bound));
    if all || fields.dim {
        out.insert("dim".into(), json!(j.dim()));
    }
    if all || fields.cartan {
        out.insert("cartan".into(), json!(j.algebra().cartan_matrix()));
    }
    if all || fields.layers {
        out.insert("layers".into(), json!(radical_layers(j.algebra())?));
    }
    Ok((Value::Object(out), Exit::Ok))
}

pub fn nakayama(qp: &QP, s: &Settings) -> Result<NakayamaPermutation, Failure> {
    let j = fd_algebra(qp, s.degree_bound)?;
    Ok(nakayama_permutation(j.algebra(), s.seed)?)
}

pub fn check_selfinjective(qp: &QP, s: &Settings) -> Outcome<Value> {
    Ok(match is_selfinjective(qp, s.degree_bound, s.seed)? {
        SelfinjVerdict::Selfinjective { dim, nakayama } => (
            json!({ "selfinjective": true, "dim": dim, "nakayama": nakayama.to_string() }),
            Exit::Ok,
        ),
        SelfinjVerdict::NotSelfinjective { dim, vertex } => (
            json!({ "selfinjective": false, "dim": dim, "vertex": vertex }),
            Exit::Failed,
        ),
        SelfinjVerdict::Unbounded { bound } => (
            json!({ "selfinjective": null, "degree_bound": bound }),
            Exit::Inconclusive,
        ),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct Orbit {
    pub vertices: Vec<String>,
    pub mutable: bool,
}

pub fn orbits(qp: &QP, sigma: &NakayamaPermutation) -> Vec<Orbit> {
    sigma_orbits(sigma)
        .into_iter()
        .map(|o| Orbit {
            mutable: mutability_violations(qp, &o).is_empty(),
            vertices: labels(qp, &o),
        })
        .collect()
}

/// The cheap part of an analysis: dimension, selfinjectivity and orbits.
pub fn analysis(qp: &QP, s: &Settings) -> Value {
    let base = json!({
        "vertices": qp.quiver().vertices(),
        "arrows": qp.quiver().num_arrows(),
        "potential": qp.display_potential(),
        "truncated": qp.is_truncated(),
        "mutable_vertices": mutable_vertices(qp),
    });
    let mut out = base.as_object().cloned().unwrap_or_default();
    match fd_algebra(qp, s.degree_bound) {
        Ok(j) => {
            out.insert("dim".into(), json!(j.dim()));
            match nakayama_permutation(j.algebra(), s.seed) {
                Ok(sigma) => {
                    out.insert("selfinjective".into(), json!(true));
                    out.insert("nakayama".into(), json!(sigma.to_string()));
                    out.insert("orbits".into(), json!(orbits(qp, &sigma)));
                }
                Err(_) => {
                    out.insert("selfinjective".into(), json!(false));
                }
            }
        }
        Err(e) => {
            out.insert("dim".into(), Value::Null);
            out.insert("selfinjective".into(), Value::Null);
            out.insert("error".into(), json!(Failure::from(e).body));
        }
    }
    Value::Object(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyOutput {
    pub passed: bool,
    #[serde(flatten)]
    pub report: VerificationReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub normalized_potential: Option<String>,
}

#[derive(Clone, Debug, Default)]
pub struct VerifyFlags {
    pub skip_opposite: bool,
    pub timings: bool,
    pub normalize: Vec<String>,
}

fn verify_exit(r: &VerificationReport) -> Exit {
    if r.truncated {
        Exit::Inconclusive
    } else if r.passed() {
        Exit::Ok
    } else {
        Exit::Failed
    }
}

pub fn verify(
    qp: &QP,
    vertices: &[String],
    s: &Settings,
    flags: &VerifyFlags,
) -> Outcome<VerifyOutput> {
    let set = mutation_set(qp, vertices)?;
    let opts = VerifyOptions {
        mutation: s.options(),
        seed: s.seed,
        opposite: !flags.skip_opposite,
        timings: flags.timings,
    };
    let report = verify_theorem(qp, &set, opts)?;
    let normalized_potential = if flags.normalize.is_empty() {
        None
    } else {
        let (mu, _) = mutate_with_summary(qp, &set, s.options())?;
        Some(normalized(&mu, &flags.normalize)?)
    };
    let exit = verify_exit(&report);
    Ok((
        VerifyOutput {
            passed: report.passed(),
            report,
            normalized_potential,
        },
        exit,
    ))
}

#[derive(Clone, Debug, Serialize)]
pub struct ChainStep {
    pub vertices: Vec<String>,
    pub passed: bool,
    pub iso: bool,
    pub tilting: bool,
    pub sigma_stable: Option<bool>,
    pub dim_end: usize,
    pub dim_mutation: usize,
    pub nakayama: String,
    pub exactness_holds: bool,
    pub truncated: bool,
    pub mutated_potential: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ChainOutput {
    pub steps: Vec<ChainStep>,
    pub passed: bool,
    pub result: QPDocument,
}

/// Verifies and applies each orbit mutation in turn.
pub fn chain(
    qp: &QP,
    steps: &[Vec<String>],
    s: &Settings,
    name: Option<String>,
) -> Outcome<ChainOutput> {
    if steps.is_empty() {
        return Err(Failure::input("no orbits given"));
    }
    let flags = VerifyFlags {
        skip_opposite: false,
        timings: false,
        normalize: vec![],
    };
    let mut cur = qp.clone();
    let mut out = Vec::new();
    let mut exit = Exit::Ok;
    for vs in steps {
        let (v, e) = verify(&cur, vs, s, &flags)?;
        let (next, e2) = mutate(&cur, vs, s)?;
        exit = exit.max(e).max(e2);
        let r = &v.report;
        out.push(ChainStep {
            vertices: r.vertices.clone(),
            passed: v.passed,
            iso: r.iso,
            tilting: r.tilting.is_tilting(),
            sigma_stable: r.tilting.sigma_stable,
            dim_end: r.dim_end,
            dim_mutation: r.dim_mutation,
            nakayama: r.nakayama.clone(),
            exactness_holds: r.exactness_holds,
            truncated: r.truncated,
            mutated_potential: r.mutated_potential.clone(),
        });
        cur = next;
    }
    let passed = out.iter().all(|s| s.passed);
    Ok((
        ChainOutput {
            steps: out,
            passed,
            result: document(&cur, name),
        },
        exit,
    ))
}
