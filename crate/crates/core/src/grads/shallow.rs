use num::rational::Ratio;

use super::{check_cap, denser, per_component, DensityReport, ShallowMinorWitness, Witness, GRAD_CAP, HADWIGER_CAP};
use crate::error::Result;
use crate::graph::bitset::{boundary, full, is_connected, radius};
use crate::graph::{bits, radius_certificate, Graph};

/// Connected vertex sets of radius at most `max_radius`, grouped by least
/// vertex, each with its outer boundary.
fn parts_by_least_vertex(adj: &[u64], max_radius: usize) -> Vec<Vec<(u64, u64)>> {
    let n = adj.len();
    let mut by_min = vec![Vec::new(); n];
    for set in 1..=full(n) {
        if !is_connected(adj, set) {
            continue;
        }
        if radius(adj, set).is_some_and(|r| r <= max_radius) {
            by_min[set.trailing_zeros() as usize].push((set, boundary(adj, set)));
        }
    }
    by_min
}

struct Search<'a> {
    n: usize,
    parts: &'a [Vec<(u64, u64)>],
    /// Every vertex must be covered (safe once radii are unconstrained).
    cover_all: bool,
    /// Density that cannot be beaten; reaching it ends the search.
    ceiling: (usize, usize),
    current: Vec<(u64, u64)>,
    best: Option<(usize, usize, Vec<u64>)>,
    done: bool,
}

impl Search<'_> {
    fn record(&mut self, edges: usize) {
        let k = self.current.len();
        if k == 0 {
            return;
        }
        if self.best.as_ref().map_or(true, |&(be, bk, _)| denser(edges, k, be, bk)) {
            self.best = Some((edges, k, self.current.iter().map(|&(s, _)| s).collect()));
            if !denser(self.ceiling.0, self.ceiling.1, edges, k) {
                self.done = true;
            }
        }
    }

    fn run(&mut self, start: usize, used: u64, edges: usize) {
        if !self.cover_all || used == full(self.n) {
            self.record(edges);
        }
        for v in start..self.n {
            if self.done {
                return;
            }
            if used >> v & 1 == 1 {
                continue;
            }
            for &(set, bound) in &self.parts[v] {
                if set & used != 0 {
                    continue;
                }
                let gained = self.current.iter().filter(|&&(s, _)| bound & s != 0).count();
                self.current.push((set, bound));
                self.run(v + 1, used | set, edges + gained);
                self.current.pop();
                if self.done {
                    return;
                }
            }
            if self.cover_all {
                // The least uncovered vertex has to start the next part.
                return;
            }
        }
    }
}

/// Largest density `e/k` any `k`-vertex graph with at most `m` edges can reach.
fn density_ceiling(n: usize, m: usize) -> (usize, usize) {
    (1..=n.max(1))
        .map(|k| ((k * (k - 1) / 2).min(m), k))
        .fold((0, 1), |best, c| if denser(c.0, c.1, best.0, best.1) { c } else { best })
}

fn densest_minor(g: &Graph, d: usize) -> Option<(usize, usize, Vec<u64>)> {
    let adj = g.masks();
    let parts = parts_by_least_vertex(&adj, d);
    let mut search = Search {
        n: g.n(),
        parts: &parts,
        cover_all: d + 1 >= g.n() && g.is_connected(),
        ceiling: density_ceiling(g.n(), g.m()),
        current: Vec::new(),
        best: None,
        done: false,
    };
    search.run(0, 0, 0);
    search.best
}

/// `∇_d(g)`: the greatest density `‖H‖/|H|` of a minor of `g` obtained by
/// contracting disjoint connected parts of radius at most `d`.
pub fn grad(g: &Graph, d: usize) -> Result<DensityReport> {
    grad_with_cap(g, d, GRAD_CAP)
}

pub fn grad_with_cap(g: &Graph, d: usize, cap: usize) -> Result<DensityReport> {
    check_cap("grad", g, cap)?;
    if g.n() == 0 {
        return Ok(DensityReport {
            value: Ratio::from_integer(0),
            witness: Witness::Shallow(ShallowMinorWitness { depth: d, parts: vec![], kept_edges: vec![], minor: Graph::empty(0) }),
        });
    }
    let relabel = |sets: Vec<u64>, comp: &[usize]| -> Vec<u64> {
        sets.into_iter().map(|s| bits(s).fold(0u64, |acc, v| acc | 1 << comp[v])).collect()
    };
    let (_, _, sets) = per_component(g, |sub| densest_minor(sub, d), relabel).expect("nonempty graph");
    let witness = shallow_witness(g, d, &sets)?;
    let value = Ratio::new(witness.minor.m() as i64, witness.minor.n() as i64);
    Ok(DensityReport { value, witness: Witness::Shallow(witness) })
}

fn shallow_witness(g: &Graph, d: usize, sets: &[u64]) -> Result<ShallowMinorWitness> {
    let adj = g.masks();
    let parts = sets
        .iter()
        .map(|&s| radius_certificate(g, &bits(s).collect::<Vec<_>>()))
        .collect::<Result<Vec<_>>>()?;
    let mut kept_edges = Vec::new();
    for (i, &a) in sets.iter().enumerate() {
        for (j, &b) in sets.iter().enumerate().skip(i + 1) {
            if boundary(&adj, a) & b != 0 {
                kept_edges.push((i, j));
            }
        }
    }
    let minor = Graph::from_edges(sets.len(), kept_edges.iter().copied())?;
    Ok(ShallowMinorWitness { depth: d, parts, kept_edges, minor })
}

/// Hadwiger number: the largest `t` such that `K_t` is a minor of `g`.
pub fn hadwiger(g: &Graph) -> Result<usize> {
    hadwiger_with_cap(g, HADWIGER_CAP)
}

pub fn hadwiger_with_cap(g: &Graph, cap: usize) -> Result<usize> {
    Ok(hadwiger_model_with_cap(g, cap)?.len())
}

/// Branch sets of a largest clique minor.
pub fn hadwiger_model(g: &Graph) -> Result<Vec<Vec<usize>>> {
    hadwiger_model_with_cap(g, HADWIGER_CAP)
}

fn hadwiger_model_with_cap(g: &Graph, cap: usize) -> Result<Vec<Vec<usize>>> {
    check_cap("hadwiger", g, cap)?;
    let adj = g.masks();
    let parts = parts_by_least_vertex(&adj, g.n());
    let mut best: Vec<u64> = Vec::new();
    let mut current: Vec<(u64, u64)> = Vec::new();
    fn extend(
        parts: &[Vec<(u64, u64)>],
        start: usize,
        used: u64,
        current: &mut Vec<(u64, u64)>,
        best: &mut Vec<u64>,
    ) {
        if current.len() > best.len() {
            *best = current.iter().map(|&(s, _)| s).collect();
        }
        let free = (start..parts.len()).filter(|&v| used >> v & 1 == 0).count();
        if current.len() + free <= best.len() {
            return;
        }
        for (v, sets) in parts.iter().enumerate().skip(start) {
            if used >> v & 1 == 1 {
                continue;
            }
            for &(set, bound) in sets {
                if set & used != 0 || current.iter().any(|&(s, _)| bound & s == 0) {
                    continue;
                }
                current.push((set, bound));
                extend(parts, v + 1, used | set, current, best);
                current.pop();
            }
        }
    }
    extend(&parts, 0, 0, &mut current, &mut best);
    Ok(best.into_iter().map(|s| bits(s).collect()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grads::verify_witness;
    use crate::graph::subdivide_uniform;

    fn value(g: &Graph, d: usize) -> Ratio<i64> {
        let r = grad(g, d).unwrap();
        verify_witness(g, &r.witness).unwrap();
        r.value
    }

    #[test]
    fn paths_stay_below_one() {
        for d in 0..6 {
            assert_eq!(value(&Graph::path(5), d), Ratio::new(4, 5));
        }
    }

    #[test]
    fn complete_graph_depth_zero() {
        assert_eq!(value(&Graph::complete(5), 0), Ratio::new(2, 1));
    }

    #[test]
    fn subdivided_k4_recovers_k4() {
        let g = subdivide_uniform(&Graph::complete(4), 1);
        assert_eq!(value(g.result(), 0), Ratio::new(12, 10));
        assert_eq!(value(g.result(), 1), Ratio::new(3, 2));
    }

    #[test]
    fn disconnected_graph_uses_best_component() {
        let g = Graph::from_edges(7, [(0, 1), (2, 3), (3, 4), (4, 2), (5, 6)]).unwrap();
        assert_eq!(value(&g, 0), Ratio::new(1, 1));
        assert_eq!(value(&Graph::empty(3), 2), Ratio::new(0, 1));
    }

    #[test]
    fn cycle_contracts_to_triangle() {
        assert_eq!(value(&Graph::cycle(9), 1), Ratio::new(1, 1));
        assert_eq!(value(&Graph::cycle(9), 9), Ratio::new(1, 1));
    }

    #[test]
    fn hadwiger_numbers() {
        assert_eq!(hadwiger(&Graph::complete(5)).unwrap(), 5);
        // K6 would need 15 edges between parts, yet joining 10 vertices into
        // 6 connected parts uses at least 4 of the 15 edges inside them.
        assert_eq!(hadwiger(&Graph::petersen()).unwrap(), 5);
        assert_eq!(hadwiger(&Graph::star(4)).unwrap(), 2);
        assert_eq!(hadwiger(&Graph::cycle(7)).unwrap(), 3);
        assert_eq!(hadwiger(&Graph::empty(2)).unwrap(), 1);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(grad(&Graph::path(13), 1).is_err());
        assert!(grad_with_cap(&Graph::path(13), 1, 13).is_ok());
        assert!(hadwiger(&Graph::path(11)).is_err());
    }
}
