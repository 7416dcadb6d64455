use std::collections::BTreeMap;

use super::Graph;
use crate::error::{Error, Result};

/// Where a vertex of a subdivision comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub enum Provenance {
    Original(usize),
    /// `index`-th division vertex (0-based) on base edge `edge`, counted from `edge.0`.
    Division { edge: (usize, usize), index: usize },
}

/// A base graph together with one of its subdivisions.
///
/// Original vertices keep their ids. Division vertices follow in lexicographic
/// edge order, each edge's path numbered from its smaller endpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubdividedGraph {
    base: Graph,
    divisions: BTreeMap<(usize, usize), Vec<usize>>,
    result: Graph,
    provenance: Vec<Provenance>,
}

impl SubdividedGraph {
    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn result(&self) -> &Graph {
        &self.result
    }

    pub fn provenance(&self, v: usize) -> Provenance {
        self.provenance[v]
    }

    /// Division vertices on base edge `{u, v}`, listed from `u` toward `v`.
    pub fn division_path(&self, u: usize, v: usize) -> Option<Vec<usize>> {
        let key = (u.min(v), u.max(v));
        let path = self.divisions.get(&key)?;
        Some(if u <= v { path.clone() } else { path.iter().rev().copied().collect() })
    }

    pub fn divisions(&self) -> &BTreeMap<(usize, usize), Vec<usize>> {
        &self.divisions
    }

    /// Largest number of division vertices on a single edge.
    pub fn max_divisions(&self) -> usize {
        self.divisions.values().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_original(&self, v: usize) -> bool {
        matches!(self.provenance[v], Provenance::Original(_))
    }
}

/// Replaces each edge `uv` of `g` by a path with `counts[uv]` internal vertices.
///
/// Keys of `counts` may be given in either orientation.
pub fn subdivide(g: &Graph, counts: &BTreeMap<(usize, usize), usize>) -> Result<SubdividedGraph> {
    let normalised: BTreeMap<(usize, usize), usize> =
        counts.iter().map(|(&(u, v), &c)| ((u.min(v), u.max(v)), c)).collect();
    for &key in normalised.keys() {
        if !g.has_edge(key.0, key.1) {
            return Err(Error::NotAnEdge(key.0, key.1));
        }
    }
    let mut provenance: Vec<Provenance> = (0..g.n()).map(Provenance::Original).collect();
    let mut divisions = BTreeMap::new();
    let mut path_edges = Vec::new();
    for (u, v) in g.edges() {
        let &count = normalised.get(&(u, v)).ok_or(Error::MissingEdge(u, v))?;
        let ids: Vec<usize> = (0..count).map(|i| provenance.len() + i).collect();
        provenance.extend((0..count).map(|index| Provenance::Division { edge: (u, v), index }));
        let mut prev = u;
        for &x in &ids {
            path_edges.push((prev, x));
            prev = x;
        }
        path_edges.push((prev, v));
        divisions.insert((u, v), ids);
    }
    let result = Graph::from_edges(provenance.len(), path_edges)?;
    Ok(SubdividedGraph { base: g.clone(), divisions, result, provenance })
}

/// The `t`-subdivision: every edge receives exactly `t` division vertices.
pub fn subdivide_uniform(g: &Graph, t: usize) -> SubdividedGraph {
    let counts = g.edges().map(|e| (e, t)).collect();
    subdivide(g, &counts).expect("uniform counts cover every edge")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_subdivision_of_triangle_is_hexagon() {
        let s = subdivide_uniform(&Graph::complete(3), 1);
        assert_eq!((s.result().n(), s.result().m()), (6, 6));
        assert!((3..6).all(|v| s.result().degree(v) == 2));
        assert!(crate::graph::iso::are_isomorphic(s.result(), &Graph::cycle(6)));
    }

    #[test]
    fn two_subdivision_of_k4_counts() {
        let s = subdivide_uniform(&Graph::complete(4), 2);
        assert_eq!((s.result().n(), s.result().m()), (16, 18));
        assert_eq!(s.max_divisions(), 2);
    }

    #[test]
    fn identity_subdivision() {
        let p2 = Graph::path(2);
        let s = subdivide(&p2, &BTreeMap::from([((0, 1), 0)])).unwrap();
        assert_eq!(s.result(), &p2);
        assert_eq!(s.division_path(1, 0), Some(vec![]));
    }

    #[test]
    fn missing_count_is_an_error() {
        let err = subdivide(&Graph::path(3), &BTreeMap::from([((1, 0), 1)])).unwrap_err();
        assert!(matches!(err, Error::MissingEdge(1, 2)));
    }

    #[test]
    fn division_paths_are_oriented() {
        let s = subdivide(&Graph::path(2), &BTreeMap::from([((0, 1), 3)])).unwrap();
        assert_eq!(s.division_path(0, 1), Some(vec![2, 3, 4]));
        assert_eq!(s.division_path(1, 0), Some(vec![4, 3, 2]));
        assert_eq!(s.provenance(3), Provenance::Division { edge: (0, 1), index: 1 });
    }
}
