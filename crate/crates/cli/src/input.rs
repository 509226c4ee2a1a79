//! Reading QPs from files, stdin or the built-in fixtures.

use std::io::Read;
use std::path::Path;

use crate::failure::Failure;
use qpmut::document::QPDocument;
use qpmut::fixtures;
use qpmut::pathalg::Field;
use qpmut::qpcore::{mutability_violations, QP};

/// A loaded QP and the name recorded in its document, if any.
#[derive(Clone, Debug)]
pub struct Loaded {
    pub qp: QP,
    pub name: Option<String>,
}

/// Parses a document, optionally reading its coefficients over `field`.
pub fn from_document(mut doc: QPDocument, field: Option<Field>) -> Result<Loaded, Failure> {
    if let Some(f) = field {
        doc.field = f.to_string();
    }
    let qp = doc.to_qp()?;
    Ok(Loaded {
        qp,
        name: doc.metadata.name,
    })
}

/// `-` is stdin, an existing path is a document, anything else is looked up
/// among the fixtures (`HEX`, `GRID3`, `TUB(2)`, `tub3`, ...).
pub fn load(source: &str, field: Option<Field>) -> Result<Loaded, Failure> {
    let text = if source == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else if Path::new(source).is_file() {
        std::fs::read_to_string(source)?
    } else if let Some(qp) = fixtures::by_name(source) {
        let name = fixture_name(source);
        return from_document(QPDocument::from_qp(&qp, Some(name)), field);
    } else {
        return Err(Failure::input(format!(
            "`{source}` is neither a file nor a fixture name"
        )));
    };
    from_document(QPDocument::from_json(&text)?, field)
}

fn fixture_name(source: &str) -> String {
    fixtures::all()
        .into_iter()
        .map(|(n, _)| n)
        .find(|n| {
            let key = |s: &str| {
                s.chars()
                    .filter(char::is_ascii_alphanumeric)
                    .collect::<String>()
                    .to_lowercase()
            };
            key(n) == key(source)
        })
        .unwrap_or(source)
        .to_string()
}

/// Vertex labels from `1,3,5` (commas or whitespace).
pub fn split_labels(text: &str) -> Vec<String> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(str::to_string)
        .collect()
}

/// Resolves labels to indices and checks the mutation conditions.
pub fn mutation_set(qp: &QP, labels: &[String]) -> Result<Vec<usize>, Failure> {
    if labels.is_empty() {
        return Err(Failure::input("no vertices given"));
    }
    let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    let set = qp.vertices_of(&refs)?;
    let violations = mutability_violations(qp, &set);
    if !violations.is_empty() {
        return Err(Failure::not_mutable(&violations));
    }
    Ok(set)
}
