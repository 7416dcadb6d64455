//! Finite posets, their Hasse diagrams, and the jump number.

use std::collections::HashSet;

use serde::Serialize;

use super::{min_pages_for_order, queue_number_with_cap, Layout, PageKind, LAYOUT_CAP};
use crate::error::{Error, Result};
use crate::graph::iso::canonical_from_relation;
use crate::graph::{bits, Graph};
use crate::report::{Check, Quantity};

/// Default element cap for [`jump_number`].
pub const JUMP_NUMBER_CAP: usize = 9;

/// A strict partial order on `0..n`, stored transitively closed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poset {
    /// `above[x]` has bit `y` set iff `x < y`.
    above: Vec<u64>,
}

impl Serialize for Poset {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.relations().serialize(s)
    }
}

impl Poset {
    /// Transitive closure of the pairs `a < b`; rejects cycles.
    pub fn from_relations(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n > 64 {
            return Err(Error::invalid("posets are limited to 64 elements"));
        }
        let mut above = vec![0u64; n];
        for (a, b) in pairs {
            if a >= n || b >= n {
                return Err(Error::VertexOutOfRange { vertex: a.max(b), n });
            }
            above[a] |= 1 << b;
        }
        // Warshall over bitmasks.
        for k in 0..n {
            for x in 0..n {
                if above[x] >> k & 1 == 1 {
                    above[x] |= above[k];
                }
            }
        }
        if let Some(x) = (0..n).find(|&x| above[x] >> x & 1 == 1) {
            return Err(Error::invalid(format!("relation has a cycle through {x}")));
        }
        Ok(Poset { above })
    }

    /// Reads lines `a b` (meaning `a < b`); a lone id declares an element.
    pub fn parse(text: &str) -> Result<Self> {
        let mut n = 0;
        let mut pairs = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let ids = line
                .split_whitespace()
                .map(|t| t.parse::<usize>().map_err(|_| Error::Parse { line: i + 1, msg: format!("bad element {t:?}") }))
                .collect::<Result<Vec<_>>>()?;
            match ids[..] {
                [a] => n = n.max(a + 1),
                [a, b] => {
                    n = n.max(a.max(b) + 1);
                    pairs.push((a, b));
                }
                _ => return Err(Error::Parse { line: i + 1, msg: "expected \"a b\"".into() }),
            }
        }
        Poset::from_relations(n, pairs)
    }

    pub fn chain(n: usize) -> Self {
        Poset::from_relations(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    pub fn antichain(n: usize) -> Self {
        Poset::from_relations(n, []).unwrap()
    }

    /// Subsets of a `k`-set ordered by inclusion; element `i` is the subset with bitmask `i`.
    pub fn boolean_lattice(k: usize) -> Self {
        let n = 1usize << k;
        let pairs = (0..n).flat_map(|a| (0..n).filter(move |&b| a != b && a & b == a).map(move |b| (a, b)));
        Poset::from_relations(n, pairs).unwrap()
    }

    pub fn len(&self) -> usize {
        self.above.len()
    }

    pub fn is_empty(&self) -> bool {
        self.above.is_empty()
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        self.above[x] >> y & 1 == 1
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        x == y || self.lt(x, y) || self.lt(y, x)
    }

    /// All pairs `(a, b)` with `a < b`.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        (0..self.len()).flat_map(|a| bits(self.above[a]).map(move |b| (a, b))).collect()
    }

    /// Whether `y` covers `x`: `x < y` with nothing strictly between.
    pub fn covers(&self, x: usize, y: usize) -> bool {
        self.lt(x, y) && bits(self.above[x]).all(|z| !self.lt(z, y))
    }
}

/// The cover graph of `p`.
pub fn hasse_diagram(p: &Poset) -> Graph {
    let n = p.len();
    let edges = (0..n).flat_map(|x| (0..n).filter(move |&y| p.covers(x, y)).map(move |y| (x, y)));
    Graph::from_edges(n, edges).expect("cover pairs are distinct elements")
}

/// Minimum number of incomparable consecutive pairs over all linear
/// extensions, with an extension attaining it.
pub fn jump_number(p: &Poset) -> Result<(usize, Vec<usize>)> {
    jump_number_with_cap(p, JUMP_NUMBER_CAP)
}

pub fn jump_number_with_cap(p: &Poset, cap: usize) -> Result<(usize, Vec<usize>)> {
    let n = p.len();
    if n > cap {
        return Err(Error::CapExceeded { what: "jump_number", size: n, cap });
    }
    if n == 0 {
        return Ok((0, Vec::new()));
    }
    let below: Vec<u64> = (0..n).map(|y| (0..n).filter(|&x| p.lt(x, y)).fold(0, |m, x| m | 1 << x)).collect();
    struct State<'a> {
        p: &'a Poset,
        below: Vec<u64>,
        prefix: Vec<usize>,
        best: (usize, Vec<usize>),
    }
    fn extend(s: &mut State, placed: u64, jumps: usize) {
        let n = s.p.len();
        if jumps >= s.best.0 {
            return;
        }
        if s.prefix.len() == n {
            s.best = (jumps, s.prefix.clone());
            return;
        }
        let last = *s.prefix.last().expect("nonempty prefix");
        for x in 0..n {
            if placed >> x & 1 == 1 || s.below[x] & !placed != 0 {
                continue;
            }
            let jump = !s.p.comparable(last, x) as usize;
            s.prefix.push(x);
            extend(s, placed | 1 << x, jumps + jump);
            s.prefix.pop();
        }
    }
    let mut state = State { p, below, prefix: Vec::new(), best: (n, Vec::new()) };
    for x in 0..n {
        if state.below[x] == 0 {
            state.prefix.push(x);
            extend(&mut state, 1 << x, 0);
            state.prefix.pop();
        }
    }
    Ok(state.best)
}

#[derive(Clone, Debug, Serialize)]
pub struct JumpQueueAudit {
    pub jump_number: usize,
    pub extension: Vec<usize>,
    pub hasse: Graph,
    /// Queue layout of the Hasse diagram along `extension`, when one with
    /// at most `jump_number + 1` queues exists.
    pub layout: Option<Layout>,
    /// Exact queue-number of the Hasse diagram, within [`LAYOUT_CAP`].
    pub queue_number: Option<usize>,
    pub checks: Vec<Check>,
}

/// Lays out the Hasse diagram along a jump-optimal linear extension and
/// checks `qn(H(P)) <= jn(P) + 1`, exactly when the diagram is small enough.
pub fn audit_jump_queue(p: &Poset, cap: usize) -> Result<JumpQueueAudit> {
    let (jn, extension) = jump_number_with_cap(p, cap)?;
    let hasse = hasse_diagram(p);
    let layout = min_pages_for_order(&hasse, &extension, PageKind::Queue, jn + 1)?;
    let pages = layout.as_ref().map(|l| l.page_count());
    let mut checks = vec![Check::holds("extension order has a (jn+1)-queue layout", pages.is_some())];
    let queue_number = if hasse.n() <= LAYOUT_CAP { Some(queue_number_with_cap(&hasse, LAYOUT_CAP)?.0) } else { None };
    let bound = Quantity::int(jn as i64 + 1);
    checks.push(match queue_number {
        Some(q) => Check::le("qn(H(P)) <= jn(P) + 1", Quantity::int(q as i64), bound),
        None => Check::le("qn(H(P)) <= jn(P) + 1", Quantity::int(pages.unwrap_or(jn + 2) as i64), bound)
            .with_note("left side is the page count along the extension"),
    });
    Ok(JumpQueueAudit { jump_number: jn, extension, hasse, layout, queue_number, checks })
}

/// All posets on `n` elements up to isomorphism.
pub fn all_posets(n: usize) -> Vec<Poset> {
    let mut level = vec![Poset { above: Vec::new() }];
    for k in 1..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for p in &level {
            let old = k - 1;
            // The new element k-1 sits above an order ideal of the old poset.
            for ideal in 0u64..1 << old {
                let closed = bits(ideal).all(|y| (0..old).all(|x| !p.lt(x, y) || ideal >> x & 1 == 1));
                if !closed {
                    continue;
                }
                let mut above = p.above.clone();
                for x in bits(ideal) {
                    above[x] |= 1 << old;
                }
                above.push(0);
                let q = Poset { above };
                if seen.insert(canonical_from_relation(k, |a, b| q.lt(a, b), true)) {
                    next.push(q);
                }
            }
        }
        level = next;
    }
    level
}
