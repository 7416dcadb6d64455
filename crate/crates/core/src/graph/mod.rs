//! Simple undirected graphs on vertices `0..n` and the machinery built on them:
//! parsing and encoding, subdivisions, contractions, isomorphism of tiny
//! graphs, exhaustive enumeration, and straight-line drawings.

pub(crate) mod bitset;
mod contract;
pub mod drawing;
pub mod enumerate;
pub mod io;
pub mod iso;
mod subdivision;

pub use contract::{contract_components, radius_certificate, RadiusCertificate};
pub use drawing::{audit_crossing_lemma, audit_crossings_per_edge, count_crossings, Drawing};
pub use io::{encode_graph6, parse_edge_list, parse_graph, parse_graph6, write_edge_list, GraphFormat};
pub use subdivision::{subdivide, subdivide_uniform, Provenance, SubdividedGraph};

use std::collections::{BTreeSet, VecDeque};

use num::rational::Ratio;

use crate::error::{Error, Result};

/// A simple undirected graph with vertex set `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<BTreeSet<usize>>,
    m: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![BTreeSet::new(); n], m: 0 }
    }

    /// Builds a graph from an edge list. Duplicate edges collapse, loops are rejected.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds `uv`, returning whether it was new.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        let n = self.n();
        for x in [u, v] {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let fresh = self.adj[u].insert(v);
        self.adj[v].insert(u);
        if fresh {
            self.m += 1;
        }
        Ok(fresh)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbours(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn neighbour_set(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(&v)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.range(u + 1..).map(move |&v| (u, v)))
    }

    /// `‖G‖ / |G|`, or zero for the null graph.
    pub fn density(&self) -> Ratio<i64> {
        if self.n() == 0 {
            Ratio::from_integer(0)
        } else {
            Ratio::new(self.m as i64, self.n() as i64)
        }
    }

    /// Subgraph induced by `vertices`, relabelled `0..k` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut h = Graph::empty(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            for w in self.neighbours(v) {
                let j = index[w];
                if j != usize::MAX && i < j {
                    h.add_edge(i, j).expect("induced edge");
                }
            }
        }
        h
    }

    /// Breadth-first distances from `source`, restricted to `allowed` (all vertices if `None`).
    pub fn bfs_distances(&self, source: usize, allowed: Option<&[bool]>) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            let dv = dist[v].unwrap();
            for w in self.neighbours(v) {
                if dist[w].is_none() && allowed.map_or(true, |a| a[w]) {
                    dist[w] = Some(dv + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Connected components, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(v) = stack.pop() {
                comp.push(v);
                for w in self.neighbours(v) {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    pub fn is_forest(&self) -> bool {
        self.m + self.components().len() == self.n()
    }

    /// Neighbourhood bitmasks. Only for graphs on at most 64 vertices.
    pub fn masks(&self) -> Vec<u64> {
        assert!(self.n() <= 64, "bitmask view needs at most 64 vertices");
        self.adj.iter().map(|nb| nb.iter().fold(0u64, |acc, &w| acc | (1 << w))).collect()
    }

    pub fn from_masks(masks: &[u64]) -> Graph {
        let mut g = Graph::empty(masks.len());
        for (u, &mask) in masks.iter().enumerate() {
            for v in bits(mask) {
                if u < v {
                    g.add_edge(u, v).expect("mask edge");
                }
            }
        }
        g
    }

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need at least three vertices");
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    /// Star with centre 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).unwrap()
    }

    pub fn petersen() -> Graph {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Graph::from_edges(10, outer.chain(spokes).chain(inner)).unwrap()
    }
}

/// Iterates the set bits of a mask in increasing order.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b)
        }
    })
}

impl serde::Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Graph", 2)?;
        st.serialize_field("n", &self.n())?;
        st.serialize_field("edges", &self.edges().collect::<Vec<_>>())?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edges(3, [(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(g.m(), 2);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn loops_and_out_of_range_rejected() {
        assert!(matches!(Graph::from_edges(2, [(1, 1)]), Err(Error::SelfLoop(1))));
        assert!(matches!(
            Graph::from_edges(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        ));
    }

    #[test]
    fn petersen_is_cubic() {
        let p = Graph::petersen();
        assert_eq!((p.n(), p.m()), (10, 15));
        assert!((0..10).all(|v| p.degree(v) == 3));
    }

    #[test]
    fn masks_round_trip() {
        let g = Graph::petersen();
        assert_eq!(Graph::from_masks(&g.masks()), g);
    }

    #[test]
    fn forest_detection() {
        assert!(Graph::path(5).is_forest());
        assert!(!Graph::cycle(4).is_forest());
        assert!(Graph::empty(3).is_forest());
    }
}
