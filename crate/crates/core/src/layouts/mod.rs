//! Queue and stack layouts: a vertex ordering plus a partition of the edges
//! into pages. In a queue page no two edges nest; in a stack page no two
//! edges cross.

mod audit;
mod contract;
mod poset;
mod search;

pub use audit::{
    audit_queue_density, audit_queue_expansion, audit_stack_expansion, audit_subdivision_layout_bounds,
    ExpansionAudit, SubdivisionLayoutAudit,
};
pub use contract::{contract_queue_layout, contraction_page_bound, ContractedLayout};
pub use poset::{
    all_posets, audit_jump_queue, hasse_diagram, jump_number, jump_number_with_cap, JumpQueueAudit, Poset,
    JUMP_NUMBER_CAP,
};
pub use search::{
    min_pages_for_order, queue_number, queue_number_with_cap, stack_number, stack_number_with_cap, LAYOUT_CAP,
};

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PageKind {
    Queue,
    Stack,
}

impl PageKind {
    /// Whether two edges, each given by positions `(left, right)`, may not share a page.
    pub fn conflict(self, e: (usize, usize), f: (usize, usize)) -> bool {
        let (e, f) = if e.0 <= f.0 { (e, f) } else { (f, e) };
        match self {
            PageKind::Queue => e.0 < f.0 && f.1 < e.1,
            PageKind::Stack => e.0 < f.0 && f.0 < e.1 && e.1 < f.1,
        }
    }
}

impl fmt::Display for PageKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PageKind::Queue => "queue",
            PageKind::Stack => "stack",
        })
    }
}

impl FromStr for PageKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "queue" => Ok(PageKind::Queue),
            "stack" => Ok(PageKind::Stack),
            other => Err(Error::MalformedLayout(format!("unknown page kind {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Page {
    pub kind: PageKind,
    /// Edges as `(u, v)` with `u < v`.
    pub edges: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Layout {
    /// `order[i]` is the vertex at position `i`.
    pub order: Vec<usize>,
    pub pages: Vec<Page>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub page: usize,
    /// The two offending edges, each written left endpoint first.
    pub edges: [(usize, usize); 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LayoutCheck {
    pub valid: bool,
    pub violations: Vec<Violation>,
}

impl Layout {
    pub fn new(order: Vec<usize>, pages: Vec<Page>) -> Self {
        let pages = pages
            .into_iter()
            .map(|p| Page { kind: p.kind, edges: p.edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect() })
            .collect();
        Layout { order, pages }
    }

    /// A one-kind layout from an order and a page index per edge.
    pub fn from_assignment(order: Vec<usize>, kind: PageKind, assignment: &[((usize, usize), usize)]) -> Self {
        let k = assignment.iter().map(|&(_, p)| p + 1).max().unwrap_or(0);
        let mut pages = vec![Page { kind, edges: Vec::new() }; k];
        for &((u, v), p) in assignment {
            pages[p].edges.push((u.min(v), u.max(v)));
        }
        for p in &mut pages {
            p.edges.sort_unstable();
        }
        Layout { order, pages }
    }

    /// `position[v]`, or `None` when `order` is not a permutation of `0..n`.
    pub fn positions(&self) -> Option<Vec<usize>> {
        let n = self.order.len();
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in self.order.iter().enumerate() {
            if v >= n || pos[v] != usize::MAX {
                return None;
            }
            pos[v] = i;
        }
        Some(pos)
    }

    /// The common kind of all pages, if there is one.
    pub fn kind(&self) -> Option<PageKind> {
        let first = self.pages.first()?.kind;
        self.pages.iter().all(|p| p.kind == first).then_some(first)
    }

    pub fn page_count(&self) -> usize {
        self.pages.len()
    }

    /// Reads the text format: `order: v0 v1 ...` followed by lines
    /// `page <i> <queue|stack>: u1 v1, u2 v2, ...`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let bad = |line: usize, msg: &str| Error::Parse { line, msg: msg.to_string() };
        let (line, first) = lines.next().ok_or_else(|| Error::MalformedLayout("empty layout".into()))?;
        let rest = first.strip_prefix("order:").ok_or_else(|| bad(line, "expected \"order:\""))?;
        let order = rest
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| bad(line, "bad vertex id")))
            .collect::<Result<Vec<_>>>()?;
        let mut pages: Vec<Option<Page>> = Vec::new();
        for (line, l) in lines {
            let (head, body) = l.split_once(':').ok_or_else(|| bad(line, "expected \"page <i> <kind>: ...\""))?;
            let head: Vec<&str> = head.split_whitespace().collect();
            let ["page", index, kind] = head[..] else { return Err(bad(line, "expected \"page <i> <kind>:\"")) };
            let index: usize = index.parse().map_err(|_| bad(line, "bad page index"))?;
            let kind: PageKind = kind.parse()?;
            let mut edges = Vec::new();
            for pair in body.split(',').map(str::trim).filter(|p| !p.is_empty()) {
                let ids = pair
                    .split_whitespace()
                    .map(|t| t.parse::<usize>().map_err(|_| bad(line, "bad vertex id")))
                    .collect::<Result<Vec<_>>>()?;
                let [u, v] = ids[..] else { return Err(bad(line, "edges are written \"u v\"")) };
                edges.push((u.min(v), u.max(v)));
            }
            if pages.len() <= index {
                pages.resize(index + 1, None);
            }
            if pages[index].replace(Page { kind, edges }).is_some() {
                return Err(bad(line, "page index repeated"));
            }
        }
        let pages = pages
            .into_iter()
            .enumerate()
            .map(|(i, p)| p.ok_or_else(|| Error::MalformedLayout(format!("page {i} missing"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Layout { order, pages })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::from("order:");
        for v in &self.order {
            out.push_str(&format!(" {v}"));
        }
        out.push('\n');
        for (i, p) in self.pages.iter().enumerate() {
            let edges: Vec<String> = p.edges.iter().map(|(u, v)| format!("{u} {v}")).collect();
            out.push_str(&format!("page {i} {}: {}\n", p.kind, edges.join(", ")));
        }
        out
    }
}

/// Checks every page of `layout` against `g`.
///
/// Errors if the order is not a permutation of `g`'s vertices or the pages
/// do not partition `g`'s edges; otherwise lists every offending pair.
pub fn validate_layout(g: &Graph, layout: &Layout) -> Result<LayoutCheck> {
    if layout.order.len() != g.n() {
        return Err(Error::MalformedLayout(format!("order has {} vertices, graph has {}", layout.order.len(), g.n())));
    }
    let pos = layout.positions().ok_or_else(|| Error::MalformedLayout("order is not a permutation".into()))?;
    let mut seen = BTreeSet::new();
    for p in &layout.pages {
        for &(u, v) in &p.edges {
            let e = (u.min(v), u.max(v));
            if !g.has_edge(e.0, e.1) {
                return Err(Error::MalformedLayout(format!("{}-{} is not an edge", e.0, e.1)));
            }
            if !seen.insert(e) {
                return Err(Error::MalformedLayout(format!("edge {}-{} on two pages", e.0, e.1)));
            }
        }
    }
    if seen.len() != g.m() {
        let missing = g.edges().find(|e| !seen.contains(e)).expect("some edge unassigned");
        return Err(Error::MalformedLayout(format!("edge {}-{} on no page", missing.0, missing.1)));
    }
    let mut violations = Vec::new();
    for (i, p) in layout.pages.iter().enumerate() {
        let spans: Vec<((usize, usize), (usize, usize))> = p
            .edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = if pos[u] < pos[v] { (u, v) } else { (v, u) };
                ((pos[a], pos[b]), (a, b))
            })
            .collect();
        for (x, &(se, e)) in spans.iter().enumerate() {
            for &(sf, f) in &spans[x + 1..] {
                if p.kind.conflict(se, sf) {
                    let pair = if se.0 <= sf.0 { [e, f] } else { [f, e] };
                    violations.push(Violation { page: i, edges: pair });
                }
            }
        }
    }
    Ok(LayoutCheck { valid: violations.is_empty(), violations })
}
