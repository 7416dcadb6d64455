//! Grads and top-grads: exact maximum densities of shallow minors and shallow
//! topological minors, found by exhaustive search on small graphs.
//!
//! Every value comes with a witness that [`verify_witness`] re-checks against
//! the host graph without touching the search code. Depth "infinity" is
//! expressed as `d = |G|`, since no part can have a larger radius.

mod audit;
mod shallow;
mod topological;

pub use audit::{audit_grad_inequalities, audit_grad_inequalities_with_cap, GradAudit};
pub use shallow::{grad, grad_with_cap, hadwiger, hadwiger_model, hadwiger_with_cap};
pub use topological::{top_grad, top_grad_with};

use std::collections::BTreeSet;

use num::rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, RadiusCertificate};
use crate::report::serialize_ratio;

/// Default vertex cap for [`grad`] and [`top_grad`].
pub const GRAD_CAP: usize = 12;
/// Default vertex cap for [`hadwiger`].
pub const HADWIGER_CAP: usize = 10;

/// Which family of paths may realise the edges of a topological minor.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TopMinorMode {
    /// Paths with pairwise disjoint interiors: a subdivision sitting in `G` as a subgraph.
    #[default]
    Strict,
    /// Pairwise edge-disjoint induced paths whose interiors may meet.
    Loose,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShallowMinorWitness {
    pub depth: usize,
    /// Minor vertex `i` is the contraction of `parts[i]`.
    pub parts: Vec<RadiusCertificate>,
    /// Edges of the quotient kept in the minor, as pairs of part indices.
    pub kept_edges: Vec<(usize, usize)>,
    pub minor: Graph,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TopMinorPath {
    /// Minor edge `(i, j)` with `i < j`.
    pub edge: (usize, usize),
    /// Host path from `branch[i]` to `branch[j]`.
    pub path: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TopMinorWitness {
    pub depth: usize,
    pub mode: TopMinorMode,
    /// Host vertex of each minor vertex.
    pub branch: Vec<usize>,
    pub paths: Vec<TopMinorPath>,
    pub minor: Graph,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Shallow(ShallowMinorWitness),
    Topological(TopMinorWitness),
}

impl Witness {
    pub fn minor(&self) -> &Graph {
        match self {
            Witness::Shallow(w) => &w.minor,
            Witness::Topological(w) => &w.minor,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DensityReport {
    #[serde(serialize_with = "serialize_ratio")]
    pub value: Ratio<i64>,
    pub witness: Witness,
}

pub(crate) fn check_cap(what: &'static str, g: &Graph, cap: usize) -> Result<()> {
    if g.n() > cap {
        return Err(Error::CapExceeded { what, size: g.n(), cap });
    }
    if cap > 64 {
        return Err(Error::invalid("search caps above 64 vertices are not supported"));
    }
    Ok(())
}

/// `a/b > c/d` for non-negative counts with positive denominators.
pub(crate) fn denser(a: usize, b: usize, c: usize, d: usize) -> bool {
    a * d > c * b
}

/// Re-checks a witness against `g`. Returns the first broken invariant.
pub fn verify_witness(g: &Graph, w: &Witness) -> std::result::Result<(), String> {
    match w {
        Witness::Shallow(w) => verify_shallow(g, w),
        Witness::Topological(w) => verify_topological(g, w),
    }
}

fn verify_shallow(g: &Graph, w: &ShallowMinorWitness) -> std::result::Result<(), String> {
    let mut owner = vec![None; g.n()];
    for (i, cert) in w.parts.iter().enumerate() {
        if cert.component.is_empty() {
            return Err(format!("part {i} is empty"));
        }
        for &v in &cert.component {
            if v >= g.n() {
                return Err(format!("part {i} names vertex {v} outside the graph"));
            }
            if owner[v].replace(i).is_some() {
                return Err(format!("vertex {v} lies in two parts"));
            }
        }
        if cert.radius > w.depth {
            return Err(format!("part {i} has radius {} above depth {}", cert.radius, w.depth));
        }
        if !cert.holds(g) {
            return Err(format!("radius certificate of part {i} does not hold"));
        }
    }
    let k = w.parts.len();
    let mut kept = BTreeSet::new();
    for &(i, j) in &w.kept_edges {
        if i >= j || j >= k {
            return Err(format!("kept edge ({i}, {j}) is not a pair of distinct parts in order"));
        }
        if !kept.insert((i, j)) {
            return Err(format!("kept edge ({i}, {j}) repeated"));
        }
        let touching = w.parts[i]
            .component
            .iter()
            .any(|&u| w.parts[j].component.iter().any(|&v| g.has_edge(u, v)));
        if !touching {
            return Err(format!("parts {i} and {j} are not adjacent in the host"));
        }
    }
    let expected = Graph::from_edges(k, kept.iter().copied()).map_err(|e| e.to_string())?;
    if expected != w.minor {
        return Err("minor differs from the contracted graph restricted to kept edges".into());
    }
    Ok(())
}

fn verify_topological(g: &Graph, w: &TopMinorWitness) -> std::result::Result<(), String> {
    let k = w.branch.len();
    let mut is_branch = vec![false; g.n()];
    for &b in &w.branch {
        if b >= g.n() {
            return Err(format!("branch vertex {b} outside the graph"));
        }
        if std::mem::replace(&mut is_branch[b], true) {
            return Err(format!("branch vertex {b} used twice"));
        }
    }
    let mut interiors_used = vec![false; g.n()];
    let mut edges_used = BTreeSet::new();
    let mut minor_edges = BTreeSet::new();
    for p in &w.paths {
        let (i, j) = p.edge;
        if i >= j || j >= k {
            return Err(format!("minor edge ({i}, {j}) is not a pair of distinct vertices in order"));
        }
        if !minor_edges.insert((i, j)) {
            return Err(format!("minor edge ({i}, {j}) realised twice"));
        }
        let path = &p.path;
        if path.len() < 2 || path[0] != w.branch[i] || path[path.len() - 1] != w.branch[j] {
            return Err(format!("path for ({i}, {j}) does not join its branch vertices"));
        }
        if path.len() - 1 > 2 * w.depth + 1 {
            return Err(format!("path for ({i}, {j}) has length {} above {}", path.len() - 1, 2 * w.depth + 1));
        }
        let distinct: BTreeSet<usize> = path.iter().copied().collect();
        if distinct.len() != path.len() {
            return Err(format!("path for ({i}, {j}) repeats a vertex"));
        }
        for pair in path.windows(2) {
            if !g.has_edge(pair[0], pair[1]) {
                return Err(format!("path for ({i}, {j}) uses non-edge {}-{}", pair[0], pair[1]));
            }
            let e = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if !edges_used.insert(e) {
                return Err(format!("edge {}-{} used by two paths", e.0, e.1));
            }
        }
        for &v in &path[1..path.len() - 1] {
            if is_branch[v] {
                return Err(format!("path for ({i}, {j}) passes through branch vertex {v}"));
            }
            if w.mode == TopMinorMode::Strict && std::mem::replace(&mut interiors_used[v], true) {
                return Err(format!("vertex {v} is interior to two paths"));
            }
        }
        if w.mode == TopMinorMode::Loose {
            for (x, &u) in path.iter().enumerate() {
                for &v in path.iter().skip(x + 2) {
                    if g.has_edge(u, v) {
                        return Err(format!("path for ({i}, {j}) is not induced: chord {u}-{v}"));
                    }
                }
            }
        }
    }
    let expected = Graph::from_edges(k, minor_edges.iter().copied()).map_err(|e| e.to_string())?;
    if expected != w.minor {
        return Err("minor differs from the realised edges".into());
    }
    Ok(())
}

/// Restricts a search to each connected component and keeps the densest answer.
/// Disjoint unions are never denser than their densest component.
pub(crate) fn per_component<T>(
    g: &Graph,
    mut search: impl FnMut(&Graph) -> Option<(usize, usize, T)>,
    mut relabel: impl FnMut(T, &[usize]) -> T,
) -> Option<(usize, usize, T)> {
    let mut best: Option<(usize, usize, T)> = None;
    for comp in g.components() {
        let sub = g.induced(&comp);
        if let Some((e, k, t)) = search(&sub) {
            if best.as_ref().map_or(true, |&(be, bk, _)| denser(e, k, be, bk)) {
                best = Some((e, k, relabel(t, &comp)));
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::radius_certificate;

    #[test]
    fn rejects_wide_part() {
        let g = Graph::path(5);
        let cert = radius_certificate(&g, &[0, 1, 2, 3, 4]).unwrap();
        let w = Witness::Shallow(ShallowMinorWitness {
            depth: 1,
            parts: vec![cert],
            kept_edges: vec![],
            minor: Graph::empty(1),
        });
        assert!(verify_witness(&g, &w).unwrap_err().contains("radius"));
    }

    #[test]
    fn rejects_shared_interior() {
        // Branch vertices 0, 1, 2 around a hub 3.
        let g = Graph::star(3);
        let w = Witness::Topological(TopMinorWitness {
            depth: 1,
            mode: TopMinorMode::Strict,
            branch: vec![1, 2, 3],
            paths: vec![
                TopMinorPath { edge: (0, 1), path: vec![1, 0, 2] },
                TopMinorPath { edge: (0, 2), path: vec![1, 0, 3] },
            ],
            minor: Graph::from_edges(3, [(0, 1), (0, 2)]).unwrap(),
        });
        assert!(verify_witness(&g, &w).unwrap_err().contains("edge 0-1 used by two paths"));
        let w2 = Witness::Topological(TopMinorWitness {
            depth: 1,
            mode: TopMinorMode::Strict,
            branch: vec![1, 2, 3, 4],
            paths: vec![
                TopMinorPath { edge: (0, 1), path: vec![1, 0, 2] },
                TopMinorPath { edge: (2, 3), path: vec![3, 0, 4] },
            ],
            minor: Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap(),
        });
        assert!(verify_witness(&Graph::star(4), &w2).unwrap_err().contains("interior to two paths"));
    }
}
