use crate::error::{Error, Result};
use crate::pathalg::potential::check_cycle;
use crate::pathalg::{Field, Potential, Quiver, Scalar};

/// A quiver with potential over an exact field, with a log of the mutations
/// that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QP {
    quiver: Quiver,
    potential: Potential,
    field: Field,
    provenance: Vec<String>,
}

impl QP {
    /// Validates connectivity, the field of every coefficient and that each
    /// term is a cycle of the quiver.
    pub fn new(quiver: Quiver, potential: Potential) -> Result<QP> {
        if !quiver.is_connected() {
            return Err(Error::Disconnected);
        }
        for (c, _) in potential.terms() {
            check_cycle(&quiver, c)?;
        }
        Ok(QP {
            field: potential.field(),
            quiver,
            potential,
            provenance: Vec::new(),
        })
    }

    /// Builds a QP from arrow-id words such as `(["a1","a2"], coeff)`.
    pub fn from_words<'a, I>(quiver: Quiver, field: Field, terms: I) -> Result<QP>
    where
        I: IntoIterator<Item = (Vec<&'a str>, Scalar)>,
    {
        let mut cycles = Vec::new();
        for (word, x) in terms {
            let c = word
                .iter()
                .map(|id| quiver.arrow_by_id(id))
                .collect::<Result<Vec<_>>>()?;
            cycles.push((c, x));
        }
        let w = Potential::from_cycles(&quiver, field, cycles)?;
        QP::new(quiver, w)
    }

    pub(crate) fn from_parts(quiver: Quiver, potential: Potential, provenance: Vec<String>) -> QP {
        QP {
            field: potential.field(),
            quiver,
            potential,
            provenance,
        }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn potential(&self) -> &Potential {
        &self.potential
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn provenance(&self) -> &[String] {
        &self.provenance
    }

    pub fn with_provenance(mut self, provenance: Vec<String>) -> QP {
        self.provenance = provenance;
        self
    }

    /// No degree-2 terms in the potential.
    pub fn is_reduced(&self) -> bool {
        self.potential.degree_two().is_empty()
    }

    pub fn is_truncated(&self) -> bool {
        self.potential.is_truncated()
    }

    /// Vertex indices for the given labels.
    pub fn vertices_of(&self, labels: &[&str]) -> Result<Vec<usize>> {
        labels.iter().map(|l| self.quiver.vertex(l)).collect()
    }

    pub fn display_potential(&self) -> String {
        self.potential.display(&self.quiver)
    }

    /// Reverses every arrow and every cycle.
    pub fn opposite(&self) -> QP {
        let mut provenance = self.provenance.clone();
        provenance.push("opposite".into());
        QP::from_parts(
            self.quiver.opposite(),
            self.potential.reversed(),
            provenance,
        )
    }

    /// Parses a potential written as `"[a6a1]a1*a6* + 2[a6a1]a2a3a4a5"` over
    /// this QP's quiver. Arrow ids are matched greedily, longest first.
    pub fn parse_potential(&self, text: &str) -> Result<Potential> {
        parse_potential(&self.quiver, self.field, text)
    }
}

/// See [`QP::parse_potential`]. Terms are separated by `+` or `-` at top
/// level (outside brackets); a term may start with a rational coefficient,
/// optionally followed by `*` or `·`.
pub fn parse_potential(quiver: &Quiver, field: Field, text: &str) -> Result<Potential> {
    let mut ids: Vec<&str> = quiver.arrows().iter().map(|a| a.id.as_str()).collect();
    ids.sort_by_key(|s| std::cmp::Reverse(s.len()));
    let mut w = Potential::zero(field);
    let text: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if text.is_empty() || text == "0" {
        return Ok(w);
    }
    let mut terms = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let bytes: Vec<char> = text.chars().collect();
    for (i, &ch) in bytes.iter().enumerate() {
        match ch {
            '[' | '(' => depth += 1,
            ']' | ')' => depth -= 1,
            '+' | '-' if depth == 0 && i > start => {
                terms.push(bytes[start..i].iter().collect::<String>());
                start = i;
            }
            _ => {}
        }
    }
    terms.push(bytes[start..].iter().collect::<String>());
    for t in terms {
        let (sign, body) = match t.strip_prefix('-') {
            Some(r) => (-field.one(), r.to_string()),
            None => (field.one(), t.trim_start_matches('+').to_string()),
        };
        // Leading coefficient: digits, '/', '.', up to an optional separator.
        let num_len = body
            .char_indices()
            .take_while(|(_, c)| c.is_ascii_digit() || *c == '/' || *c == '.')
            .map(|(i, c)| i + c.len_utf8())
            .last()
            .unwrap_or(0);
        let (coeff, mut rest) = if num_len > 0 && !ids.iter().any(|id| body.starts_with(id)) {
            (field.parse(&body[..num_len])?, &body[num_len..])
        } else {
            (field.one(), body.as_str())
        };
        rest = rest.trim_start_matches(['*', '·']);
        let mut word = Vec::new();
        while !rest.is_empty() {
            let rest_trim = rest.trim_start_matches('·');
            let id = ids
                .iter()
                .find(|id| rest_trim.starts_with(**id))
                .ok_or_else(|| Error::Parse(format!("cannot read arrow at `{rest_trim}`")))?;
            word.push(quiver.arrow_by_id(id)?);
            rest = &rest_trim[id.len()..];
        }
        check_cycle(quiver, &word)?;
        w.add_cycle(&word, &sign * &coeff);
    }
    Ok(w)
}
