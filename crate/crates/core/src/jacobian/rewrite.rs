//! Noncommutative rewriting for quotients of a truncated path algebra.
//!
//! The term order is degree first, then lexicographic on arrow indices. A
//! rule's head is the *smallest* term of its relation, so rewriting never
//! lowers the degree and every computation stays inside paths of length at
//! most the bound `D`.

use std::collections::{BTreeMap, HashMap, VecDeque};

use crate::pathalg::{Element, Field, Path, Quiver, Scalar};

#[derive(Clone, Debug)]
pub struct Rule {
    pub head: Path,
    pub tail: Element,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    /// All critical pairs up to the bound were resolved.
    Complete,
    /// The pair budget ran out first.
    Capped,
}

#[derive(Clone, Debug)]
pub struct RewriteSystem {
    field: Field,
    bound: usize,
    rules: Vec<Rule>,
    by_first: HashMap<usize, Vec<usize>>,
    status: Status,
    truncated: bool,
}

impl RewriteSystem {
    fn empty(field: Field, bound: usize) -> RewriteSystem {
        RewriteSystem {
            field,
            bound,
            rules: Vec::new(),
            by_first: HashMap::new(),
            status: Status::Complete,
            truncated: false,
        }
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn status(&self) -> Status {
        self.status
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    /// Whether a discarded term beyond the bound arose while completing.
    pub fn truncated(&self) -> bool {
        self.truncated
    }

    pub fn max_head_degree(&self) -> usize {
        self.rules.iter().map(|r| r.head.len()).max().unwrap_or(0)
    }

    fn rebuild_index(&mut self) {
        self.by_first.clear();
        for (i, r) in self.rules.iter().enumerate() {
            self.by_first.entry(r.head.arrows()[0]).or_default().push(i);
        }
    }

    /// Leftmost occurrence of a head in `arrows`: `(rule, position)`.
    pub fn find_head(&self, arrows: &[usize]) -> Option<(usize, usize)> {
        for pos in 0..arrows.len() {
            if let Some(cands) = self.by_first.get(&arrows[pos]) {
                for &r in cands {
                    let h = self.rules[r].head.arrows();
                    if arrows.len() - pos >= h.len() && &arrows[pos..pos + h.len()] == h {
                        return Some((r, pos));
                    }
                }
            }
        }
        None
    }

    /// Whether some head is a suffix of `arrows`.
    pub fn has_head_suffix(&self, arrows: &[usize]) -> bool {
        self.rules.iter().any(|r| arrows.ends_with(r.head.arrows()))
    }

    pub fn is_normal(&self, p: &Path) -> bool {
        self.find_head(p.arrows()).is_none()
    }

    /// Normal form of `x` modulo the rules and paths longer than the bound.
    pub fn reduce(&self, x: &Element) -> Element {
        let bound = self.bound.min(x.bound());
        let mut work: BTreeMap<Path, Scalar> =
            x.terms().map(|(p, c)| (p.clone(), c.clone())).collect();
        let mut out = Element::zero(x.field(), bound);
        if x.is_truncated() {
            out.mark_truncated();
        }
        while let Some((p, c)) = work.pop_first() {
            match self.find_head(p.arrows()) {
                None => out.add_term(p, c),
                Some((r, pos)) => {
                    let rule = &self.rules[r];
                    let a = p.arrows();
                    let (u, v) = (&a[..pos], &a[pos + rule.head.len()..]);
                    for (t, tc) in rule.tail.terms() {
                        let len = u.len() + t.len() + v.len();
                        if len > bound {
                            out.mark_truncated();
                            continue;
                        }
                        let mut arrows = Vec::with_capacity(len);
                        arrows.extend_from_slice(u);
                        arrows.extend_from_slice(t.arrows());
                        arrows.extend_from_slice(v);
                        let q = Path::from_parts(p.source(), p.target(), arrows);
                        let y = &c * tc;
                        match work.entry(q) {
                            std::collections::btree_map::Entry::Vacant(e) => {
                                e.insert(y);
                            }
                            std::collections::btree_map::Entry::Occupied(mut e) => {
                                let s = e.get() + &y;
                                if s.is_zero() {
                                    e.remove();
                                } else {
                                    *e.get_mut() = s;
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }

    pub fn field(&self) -> Field {
        self.field
    }
}

/// Turns a nonzero relation into a rule: its smallest term becomes the head.
fn make_rule(r: &Element) -> Rule {
    let (h, c) = r.leading().expect("nonzero relation");
    let (h, c) = (h.clone(), c.clone());
    let inv = c.inv().expect("nonzero coefficient");
    let mut tail = Element::zero(r.field(), r.bound());
    for (p, x) in r.terms() {
        if *p != h {
            tail.add_term(p.clone(), -&(x * &inv));
        }
    }
    Rule { head: h, tail }
}

/// Completes `rels` to a rewriting system that is confluent on paths of
/// length at most `bound`. `pair_budget` bounds the number of critical
/// pairs examined; running out yields `Status::Capped`.
pub fn complete_rewrite(
    quiver: &Quiver,
    field: Field,
    rels: &[Element],
    bound: usize,
    pair_budget: usize,
) -> RewriteSystem {
    let mut sys = RewriteSystem::empty(field, bound);
    let mut alive: Vec<bool> = Vec::new();
    let mut pending: VecDeque<Element> = rels.iter().map(|r| r.truncate_to(bound)).collect();
    let mut pairs: VecDeque<(usize, usize)> = VecDeque::new();
    let mut examined = 0usize;

    loop {
        while let Some(r) = pending.pop_front() {
            if r.is_truncated() {
                sys.truncated = true;
            }
            let r = sys.reduce(&r);
            if r.is_truncated() {
                sys.truncated = true;
            }
            if r.is_zero() {
                continue;
            }
            let rule = make_rule(&r);
            let n = sys.rules.len();
            // Rules whose head contains the new head are re-queued as relations.
            for i in 0..n {
                if alive[i] && sys.rules[i].head.find(rule.head.arrows()).is_some() {
                    alive[i] = false;
                    let old = &sys.rules[i];
                    let rel =
                        Element::from_path(old.head.clone(), field.one(), bound).sub(&old.tail);
                    pending.push_back(rel);
                }
            }
            sys.rules.push(rule);
            alive.push(true);
            // Keep only live rules indexed; dead ones stay as placeholders.
            sys.by_first.clear();
            for (i, r) in sys.rules.iter().enumerate() {
                if alive[i] {
                    sys.by_first.entry(r.head.arrows()[0]).or_default().push(i);
                }
            }
            for m in 0..=n {
                if alive[m] {
                    pairs.push_back((n, m));
                    if m != n {
                        pairs.push_back((m, n));
                    }
                }
            }
        }
        let Some((i, j)) = pairs.pop_front() else {
            break;
        };
        if !alive[i] || !alive[j] {
            continue;
        }
        examined += 1;
        if examined > pair_budget {
            sys.status = Status::Capped;
            break;
        }
        let (hi, hj) = (sys.rules[i].head.clone(), sys.rules[j].head.clone());
        let (li, lj) = (hi.len(), hj.len());
        for k in 1..li.min(lj) {
            if li + lj - k > bound {
                continue;
            }
            if hi.arrows()[li - k..] != hj.arrows()[..k] {
                continue;
            }
            let u = hi.slice(quiver, 0, li - k);
            let w = hj.slice(quiver, k, lj);
            let left = sys.rules[i].tail.sandwich(&Path::trivial(hi.source()), &w);
            let right = sys.rules[j].tail.sandwich(&u, &Path::trivial(hj.target()));
            let s = left.sub(&right);
            if !s.is_zero() {
                pending.push_back(s);
            }
        }
    }

    // Drop dead rules and interreduce the tails.
    let live: Vec<Rule> = sys
        .rules
        .iter()
        .zip(&alive)
        .filter(|(_, &a)| a)
        .map(|(r, _)| r.clone())
        .collect();
    sys.rules = live;
    sys.rules.sort_by(|a, b| a.head.cmp(&b.head));
    sys.rebuild_index();
    for i in 0..sys.rules.len() {
        let t = sys.reduce(&sys.rules[i].tail);
        if t.is_truncated() {
            sys.truncated = true;
        }
        sys.rules[i].tail = t;
    }
    sys
}
