//! The JSON exchange format for quivers with potential.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pathalg::{Field, Potential, Quiver};
use crate::qpcore::QP;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowRecord {
    pub id: String,
    pub from: String,
    pub to: String,
}

/// A coefficient is written as a string (`"3/2"`, `"-1"`); integers are
/// also accepted as bare JSON numbers on input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coefficient {
    Text(String),
    Integer(i64),
}

impl Coefficient {
    fn as_text(&self) -> String {
        match self {
            Coefficient::Text(s) => s.clone(),
            Coefficient::Integer(n) => n.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub coeff: Coefficient,
    pub cycle: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metadata {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub provenance: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QPDocument {
    pub field: String,
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowRecord>,
    pub potential: Vec<TermRecord>,
    #[serde(default)]
    pub metadata: Metadata,
}

impl QPDocument {
    pub fn from_json(text: &str) -> Result<QPDocument> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }

    pub fn to_qp(&self) -> Result<QP> {
        let field: Field = self.field.parse()?;
        let quiver = Quiver::new(
            self.vertices.iter().cloned(),
            self.arrows
                .iter()
                .map(|a| (a.id.clone(), a.from.clone(), a.to.clone())),
        )?;
        let mut cycles = Vec::new();
        for t in &self.potential {
            let c = t
                .cycle
                .iter()
                .map(|id| quiver.arrow_by_id(id))
                .collect::<Result<Vec<_>>>()?;
            cycles.push((c, field.parse(&t.coeff.as_text())?));
        }
        let w = Potential::from_cycles(&quiver, field, cycles)?;
        Ok(QP::new(quiver, w)?.with_provenance(self.metadata.provenance.clone()))
    }

    /// Canonical document: terms in canonical rotation, ordered by length
    /// and then by arrow order.
    pub fn from_qp(qp: &QP, name: Option<String>) -> QPDocument {
        let q = qp.quiver();
        let mut terms: Vec<_> = qp.potential().terms().collect();
        terms.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then(a.0.cmp(b.0)));
        QPDocument {
            field: qp.field().to_string(),
            vertices: q.vertices().to_vec(),
            arrows: q
                .arrows()
                .iter()
                .map(|a| ArrowRecord {
                    id: a.id.clone(),
                    from: q.label(a.source).to_string(),
                    to: q.label(a.target).to_string(),
                })
                .collect(),
            potential: terms
                .into_iter()
                .map(|(c, x)| TermRecord {
                    coeff: Coefficient::Text(x.to_string()),
                    cycle: c.iter().map(|&a| q.arrow(a).id.clone()).collect(),
                })
                .collect(),
            metadata: Metadata {
                name,
                provenance: qp.provenance().to_vec(),
            },
        }
    }
}
