//! Exhaustive queue-number and stack-number.
//!
//! Vertices are placed left to right; each time a vertex is placed, its edges
//! back to placed vertices receive pages. A new edge `(a, p)` ends at the
//! rightmost position so far, which makes the conflict test against a placed
//! edge `(b, c)` one comparison pair. Page labels are introduced in order,
//! twins (vertices with equal open or closed neighbourhoods) appear in
//! increasing order, queue layouts are taken up to reversal, and stack
//! layouts up to rotation and reflection.

use super::{Layout, PageKind};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default vertex cap for [`queue_number`] and [`stack_number`].
pub const LAYOUT_CAP: usize = 8;

struct Search<'a> {
    g: &'a Graph,
    kind: PageKind,
    k: usize,
    /// Least member of each vertex's twin class.
    class: Vec<usize>,
    pos: Vec<Option<usize>>,
    order: Vec<usize>,
    /// Edges of each page as position pairs.
    pages: Vec<Vec<(usize, usize)>>,
    assignment: Vec<((usize, usize), usize)>,
    used: usize,
    found: Option<Layout>,
}

impl Search<'_> {
    fn clashes(&self, page: usize, a: usize, p: usize) -> bool {
        self.pages[page].iter().any(|&(b, c)| match self.kind {
            PageKind::Queue => a < b && c < p,
            PageKind::Stack => b < a && a < c && c < p,
        })
    }

    fn allowed(&self, v: usize) -> bool {
        let twins_first = (self.class[v]..v).all(|u| self.class[u] != self.class[v] || self.pos[u].is_some());
        twins_first && (self.kind == PageKind::Queue || self.order.is_empty() == (v == 0))
    }

    /// Picks one layout out of each reversal (queue) or reflection (stack) pair.
    fn canonical_end(&self) -> bool {
        let n = self.order.len();
        let c = |i: usize| self.class[self.order[i]];
        match self.kind {
            PageKind::Queue => n < 2 || c(0) <= c(n - 1),
            PageKind::Stack => n < 3 || c(1) <= c(n - 1),
        }
    }

    fn place(&mut self, p: usize) -> bool {
        let n = self.g.n();
        if p == n {
            if !self.canonical_end() {
                return false;
            }
            self.found = Some(Layout::from_assignment(self.order.clone(), self.kind, &self.assignment));
            return true;
        }
        for v in 0..n {
            if self.pos[v].is_some() || !self.allowed(v) {
                continue;
            }
            self.pos[v] = Some(p);
            self.order.push(v);
            let mut earlier: Vec<(usize, usize)> =
                self.g.neighbours(v).filter_map(|w| self.pos[w].filter(|&q| q < p).map(|q| (q, w))).collect();
            earlier.sort_unstable();
            if self.assign(v, p, &earlier, 0) {
                return true;
            }
            self.order.pop();
            self.pos[v] = None;
        }
        false
    }

    fn assign(&mut self, v: usize, p: usize, earlier: &[(usize, usize)], i: usize) -> bool {
        let Some(&(a, w)) = earlier.get(i) else { return self.place(p + 1) };
        for page in 0..(self.used + 1).min(self.k) {
            if self.clashes(page, a, p) {
                continue;
            }
            self.pages[page].push((a, p));
            self.assignment.push(((w, v), page));
            let before = self.used;
            self.used = self.used.max(page + 1);
            if self.assign(v, p, earlier, i + 1) {
                return true;
            }
            self.used = before;
            self.assignment.pop();
            self.pages[page].pop();
        }
        false
    }
}

fn twin_classes(g: &Graph) -> Vec<usize> {
    let n = g.n();
    (0..n)
        .map(|v| {
            (0..v)
                .find(|&u| {
                    let strip = |x: usize, y: usize| g.neighbours(x).filter(move |&z| z != y);
                    strip(u, v).eq(strip(v, u))
                })
                .map_or(v, |u| u)
        })
        .collect()
}

/// A layout of `g` with exactly `k` pages of the given kind, if one exists.
fn layout_with_pages(g: &Graph, kind: PageKind, k: usize) -> Option<Layout> {
    let mut s = Search {
        g,
        kind,
        k,
        class: twin_classes(g),
        pos: vec![None; g.n()],
        order: Vec::new(),
        pages: vec![Vec::new(); k],
        assignment: Vec::new(),
        used: 0,
        found: None,
    };
    s.place(0);
    s.found.map(|mut l| {
        l.pages.resize(k.max(l.pages.len()), super::Page { kind, edges: Vec::new() });
        l.pages.truncate(l.pages.iter().rposition(|p| !p.edges.is_empty()).map_or(0, |i| i + 1));
        l
    })
}

fn minimum(g: &Graph, kind: PageKind, cap: usize) -> Result<(usize, Layout)> {
    if g.n() > cap {
        let what = match kind {
            PageKind::Queue => "queue_number",
            PageKind::Stack => "stack_number",
        };
        return Err(Error::CapExceeded { what, size: g.n(), cap });
    }
    for k in 0.. {
        if let Some(l) = layout_with_pages(g, kind, k) {
            return Ok((k, l));
        }
    }
    unreachable!("every graph has a layout with one page per edge")
}

/// Minimum number of queues over all vertex orderings, with a witness.
pub fn queue_number(g: &Graph) -> Result<(usize, Layout)> {
    minimum(g, PageKind::Queue, LAYOUT_CAP)
}

pub fn queue_number_with_cap(g: &Graph, cap: usize) -> Result<(usize, Layout)> {
    minimum(g, PageKind::Queue, cap)
}

/// Minimum number of stacks over all vertex orderings, with a witness.
pub fn stack_number(g: &Graph) -> Result<(usize, Layout)> {
    minimum(g, PageKind::Stack, LAYOUT_CAP)
}

pub fn stack_number_with_cap(g: &Graph, cap: usize) -> Result<(usize, Layout)> {
    minimum(g, PageKind::Stack, cap)
}

/// Fewest pages for a fixed vertex order, if at most `max_pages` suffice.
pub fn min_pages_for_order(g: &Graph, order: &[usize], kind: PageKind, max_pages: usize) -> Result<Option<Layout>> {
    let probe = Layout::new(order.to_vec(), Vec::new());
    let pos = probe
        .positions()
        .filter(|p| p.len() == g.n())
        .ok_or_else(|| Error::MalformedLayout("order is not a permutation of the vertices".into()))?;
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    edges.sort_by_key(|&(u, v)| (pos[u].min(pos[v]), pos[u].max(pos[v])));
    let span = |(u, v): (usize, usize)| (pos[u].min(pos[v]), pos[u].max(pos[v]));
    let m = edges.len();
    let conflicts: Vec<Vec<usize>> = (0..m)
        .map(|i| (0..i).filter(|&j| kind.conflict(span(edges[i]), span(edges[j]))).collect())
        .collect();
    fn colour(i: usize, k: usize, used: usize, conflicts: &[Vec<usize>], page: &mut Vec<usize>) -> bool {
        if i == conflicts.len() {
            return true;
        }
        for c in 0..(used + 1).min(k) {
            if conflicts[i].iter().any(|&j| page[j] == c) {
                continue;
            }
            page.push(c);
            if colour(i + 1, k, used.max(c + 1), conflicts, page) {
                return true;
            }
            page.pop();
        }
        false
    }
    for k in 0..=max_pages {
        let mut page = Vec::with_capacity(m);
        if colour(0, k, 0, &conflicts, &mut page) {
            let assignment: Vec<_> = edges.iter().copied().zip(page).collect();
            return Ok(Some(Layout::from_assignment(order.to_vec(), kind, &assignment)));
        }
    }
    Ok(None)
}
