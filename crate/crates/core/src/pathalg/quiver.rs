use std::collections::{BTreeMap, HashMap, VecDeque};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub id: String,
    pub source: usize,
    pub target: usize,
}

/// A finite quiver without loops. Vertices and arrows are indexed by their
/// position in input order, which is also the order used for canonical
/// rotations and term orders.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    vertex_index: BTreeMap<String, usize>,
    arrow_index: BTreeMap<String, usize>,
}

impl Quiver {
    /// Builds a quiver from vertex labels and `(id, source, target)` triples.
    pub fn new<V, A>(vertices: V, arrows: A) -> Result<Quiver>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        A: IntoIterator<Item = (String, String, String)>,
    {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let mut vertex_index = BTreeMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if vertex_index.insert(v.clone(), i).is_some() {
                return Err(Error::DuplicateVertex(v.clone()));
            }
        }
        let mut q = Quiver {
            vertices,
            arrows: Vec::new(),
            vertex_index,
            arrow_index: BTreeMap::new(),
        };
        for (id, s, t) in arrows {
            let source = q.vertex(&s)?;
            let target = q.vertex(&t)?;
            q.push_arrow(id, source, target)?;
        }
        Ok(q)
    }

    /// Same as [`Quiver::new`] with vertex indices instead of labels.
    pub fn from_indexed(vertices: Vec<String>, arrows: Vec<Arrow>) -> Result<Quiver> {
        let mut q = Quiver::new(vertices, Vec::new())?;
        for a in arrows {
            if a.source >= q.vertices.len() || a.target >= q.vertices.len() {
                return Err(Error::UnknownVertex(format!("#{}", a.source.max(a.target))));
            }
            q.push_arrow(a.id, a.source, a.target)?;
        }
        Ok(q)
    }

    fn push_arrow(&mut self, id: String, source: usize, target: usize) -> Result<()> {
        if source == target {
            return Err(Error::Loop(id));
        }
        if self.arrow_index.contains_key(&id) {
            return Err(Error::DuplicateArrow(id));
        }
        self.arrow_index.insert(id.clone(), self.arrows.len());
        self.arrows.push(Arrow { id, source, target });
        Ok(())
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, index: usize) -> &Arrow {
        &self.arrows[index]
    }

    pub fn label(&self, vertex: usize) -> &str {
        &self.vertices[vertex]
    }

    pub fn vertex(&self, label: &str) -> Result<usize> {
        self.vertex_index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn arrow_by_id(&self, id: &str) -> Result<usize> {
        self.arrow_index
            .get(id)
            .copied()
            .ok_or_else(|| Error::UnknownArrow(id.to_string()))
    }

    pub fn has_arrow_id(&self, id: &str) -> bool {
        self.arrow_index.contains_key(id)
    }

    pub fn source(&self, a: usize) -> usize {
        self.arrows[a].source
    }

    pub fn target(&self, a: usize) -> usize {
        self.arrows[a].target
    }

    /// Arrows starting at `v`, in input order.
    pub fn arrows_from(&self, v: usize) -> Vec<usize> {
        (0..self.arrows.len())
            .filter(|&a| self.arrows[a].source == v)
            .collect()
    }

    /// Arrows ending at `v`, in input order.
    pub fn arrows_into(&self, v: usize) -> Vec<usize> {
        (0..self.arrows.len())
            .filter(|&a| self.arrows[a].target == v)
            .collect()
    }

    /// Pairs of arrows `(a, b)` with `a: v -> u`, `b: u -> v`.
    pub fn two_cycles_through(&self, v: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in self.arrows_from(v) {
            for b in self.arrows_into(v) {
                if self.arrows[b].source == self.arrows[a].target {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertices.len();
        if n == 0 {
            return true;
        }
        let mut adj: HashMap<usize, Vec<usize>> = HashMap::new();
        for a in &self.arrows {
            adj.entry(a.source).or_default().push(a.target);
            adj.entry(a.target).or_default().push(a.source);
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for &w in adj.get(&v).map(Vec::as_slice).unwrap_or(&[]) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// `m[i][j]` = number of arrows `i -> j`.
    pub fn multiplicity_matrix(&self) -> Vec<Vec<usize>> {
        let n = self.vertices.len();
        let mut m = vec![vec![0; n]; n];
        for a in &self.arrows {
            m[a.source][a.target] += 1;
        }
        m
    }

    /// Same vertices and arrow ids, every arrow reversed.
    pub fn opposite(&self) -> Quiver {
        let mut q = self.clone();
        for a in &mut q.arrows {
            std::mem::swap(&mut a.source, &mut a.target);
        }
        q
    }
}
