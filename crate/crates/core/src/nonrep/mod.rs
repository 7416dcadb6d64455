//! Non-repetitive colourings: square-free words, repetition search, exact
//! `π` on tiny graphs, and the colouring constructions that move between a
//! graph and its subdivisions.
//!
//! A colouring is repetitive on a path `v_1 … v_2s` when `c(v_i) = c(v_{i+s})`
//! for every `i`. Constructions return their colourings with colour ids
//! renumbered `0..c` in order of first appearance.

mod classes;
mod complete;
mod construct;
mod repetition;
mod thue;

pub use classes::{check_star_acyclic, chromatic_number, star_chromatic_number, ColouringMode, StructureCheck};
pub use complete::{
    audit_knd_lower_bound, colour_kn_prime, colour_knd, kn_prime_colour_count, knd_parameters, KnPrimeColouring,
    KndAudit, KndColouring,
};
pub use construct::{
    acyclic_from_subdivision, colour_subdivision, forest_classes_from_arcs, nonrep_forest, nonrep_graph,
    pi_from_subdivision, AcyclicReport, ForestReport, NonRepGraphReport, PiFromSubdivisionReport,
};
pub use repetition::{
    find_repetition, find_repetition_with_budget, is_nonrepetitive, nonrep_colouring, pi_exact, pi_exact_with_cap,
    PI_CAP, REPETITION_BUDGET,
};
pub use thue::{is_square_free, thue_word, SquareFreeWord};

use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A total map from the vertices of a graph to colour ids.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Colouring {
    #[serde(skip)]
    graph: Graph,
    colours: Vec<usize>,
}

impl Colouring {
    pub fn new(graph: Graph, colours: Vec<usize>) -> Result<Self> {
        if colours.len() != graph.n() {
            return Err(Error::invalid(format!(
                "colouring has {} entries for a graph on {} vertices",
                colours.len(),
                graph.n()
            )));
        }
        Ok(Colouring { graph, colours })
    }

    /// Colours arbitrary hashable labels, renumbered by first appearance.
    pub fn from_labels<T: Eq + Hash + Clone>(graph: Graph, labels: &[T]) -> Result<Self> {
        let mut ids: HashMap<T, usize> = HashMap::new();
        let colours = labels
            .iter()
            .map(|l| {
                let next = ids.len();
                *ids.entry(l.clone()).or_insert(next)
            })
            .collect();
        Colouring::new(graph, colours)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn colour(&self, v: usize) -> usize {
        self.colours[v]
    }

    pub fn colours(&self) -> &[usize] {
        &self.colours
    }

    /// Number of distinct colours.
    pub fn colours_used(&self) -> usize {
        let mut seen: Vec<usize> = self.colours.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    /// The same partition with ids `0..c` in order of first appearance.
    pub fn canonical(&self) -> Colouring {
        Colouring::from_labels(self.graph.clone(), &self.colours).expect("same length")
    }

    /// Reads lines `v colour`; every vertex must be coloured exactly once.
    pub fn parse(graph: Graph, text: &str) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = |msg: String| Error::Parse { line: i + 1, msg };
            let fields: Vec<&str> = line.split_whitespace().collect();
            let [v, c] = fields[..] else { return Err(bad("expected \"v colour\"".into())) };
            let v: usize = v.parse().map_err(|_| bad(format!("bad vertex {v:?}")))?;
            let c: usize = c.parse().map_err(|_| bad(format!("bad colour {c:?}")))?;
            if v >= graph.n() {
                return Err(Error::VertexOutOfRange { vertex: v, n: graph.n() });
            }
            if map.insert(v, c).is_some() {
                return Err(bad(format!("vertex {v} coloured twice")));
            }
        }
        if let Some(v) = (0..graph.n()).find(|v| !map.contains_key(v)) {
            return Err(Error::invalid(format!("vertex {v} has no colour")));
        }
        let colours = map.into_values().collect();
        Colouring::new(graph, colours)
    }

    pub fn to_text(&self) -> String {
        self.colours.iter().enumerate().map(|(v, c)| format!("{v} {c}\n")).collect()
    }
}

/// A forest with one root per component and parent pointers toward the roots.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootedForest {
    forest: Graph,
    roots: Vec<usize>,
    parent: Vec<Option<usize>>,
}

impl RootedForest {
    pub fn new(forest: Graph, roots: &[usize]) -> Result<Self> {
        if !forest.is_forest() {
            return Err(Error::invalid("graph has a cycle"));
        }
        let n = forest.n();
        let mut parent = vec![None; n];
        let mut seen = vec![false; n];
        for &r in roots {
            if r >= n {
                return Err(Error::VertexOutOfRange { vertex: r, n });
            }
            if seen[r] {
                return Err(Error::invalid(format!("two roots in the component of {r}")));
            }
            seen[r] = true;
            let mut stack = vec![r];
            while let Some(v) = stack.pop() {
                for w in forest.neighbours(v) {
                    if !seen[w] {
                        seen[w] = true;
                        parent[w] = Some(v);
                        stack.push(w);
                    }
                }
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(Error::invalid(format!("the component of {v} has no root")));
        }
        let mut roots = roots.to_vec();
        roots.sort_unstable();
        Ok(RootedForest { forest, roots, parent })
    }

    /// Roots every component at its least vertex.
    pub fn least_roots(forest: Graph) -> Result<Self> {
        let roots: Vec<usize> = forest.components().iter().map(|c| c[0]).collect();
        RootedForest::new(forest, &roots)
    }

    pub fn forest(&self) -> &Graph {
        &self.forest
    }

    pub fn roots(&self) -> &[usize] {
        &self.roots
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn is_root(&self, v: usize) -> bool {
        self.parent[v].is_none()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn colouring_file_round_trip() {
        let c = Colouring::new(Graph::path(3), vec![2, 0, 2]).unwrap();
        let back = Colouring::parse(Graph::path(3), &c.to_text()).unwrap();
        assert_eq!(back, c);
        assert_eq!(c.canonical().colours(), &[0, 1, 0]);
        assert_eq!(c.colours_used(), 2);
        assert!(Colouring::parse(Graph::path(3), "0 1\n1 2\n").is_err());
        assert!(Colouring::parse(Graph::path(2), "0 1\n0 2\n1 1\n").is_err());
        assert!(Colouring::new(Graph::path(2), vec![0]).is_err());
    }

    #[test]
    fn rooting() {
        let f = Graph::from_edges(5, [(0, 1), (1, 2), (3, 4)]).unwrap();
        let r = RootedForest::new(f.clone(), &[1, 4]).unwrap();
        assert_eq!(r.parent(0), Some(1));
        assert_eq!(r.parent(3), Some(4));
        assert!(r.is_root(1));
        assert!(RootedForest::new(f.clone(), &[1]).is_err());
        assert!(RootedForest::new(f.clone(), &[0, 2, 3]).is_err());
        assert!(RootedForest::new(Graph::cycle(3), &[0]).is_err());
        assert_eq!(RootedForest::least_roots(f).unwrap().roots(), &[0, 3]);
    }
}
