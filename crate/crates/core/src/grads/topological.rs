use std::collections::BTreeMap;

use num::rational::Ratio;

use super::{check_cap, denser, per_component, DensityReport, TopMinorMode, TopMinorPath, TopMinorWitness, Witness, GRAD_CAP};
use crate::error::Result;
use crate::graph::bitset::{full, inner_edges, is_connected};
use crate::graph::{bits, Graph};

/// Vertex set of an induced path, with the vertices that may attach to
/// either end of it. A branch vertex `a` may use end `ends.0` iff it sees
/// exactly that vertex of the set.
#[derive(Clone, Debug)]
struct InducedPath {
    set: u64,
    ends: (usize, usize),
    attach: (u64, u64),
}

fn induced_paths(adj: &[u64], max_len: usize) -> Vec<InducedPath> {
    let n = adj.len();
    let mut out = Vec::new();
    for set in 1..=full(n) {
        let k = set.count_ones() as usize;
        if k > max_len || !is_connected(adj, set) || inner_edges(adj, set) != k - 1 {
            continue;
        }
        let ends: Vec<usize> = bits(set).filter(|&v| (adj[v] & set).count_ones() <= 1).collect();
        if ends.len() != if k == 1 { 1 } else { 2 } {
            continue;
        }
        let (e1, e2) = (ends[0], *ends.last().unwrap());
        let sees_only = |e: usize| (0..n).filter(|&a| set >> a & 1 == 0 && adj[a] & set == 1 << e).fold(0u64, |m, a| m | 1 << a);
        out.push(InducedPath { set, ends: (e1, e2), attach: (sees_only(e1), sees_only(e2)) });
    }
    out
}

/// Vertices of the path with interior `set`, walked from `first` to the end.
fn walk(adj: &[u64], set: u64, first: usize) -> Vec<usize> {
    let mut order = vec![first];
    let mut seen = 1u64 << first;
    while let Some(next) = bits(adj[*order.last().unwrap()] & set & !seen).next() {
        seen |= 1 << next;
        order.push(next);
    }
    order
}

struct Candidate {
    pair: (usize, usize),
    /// Interior vertex set, interior walked from `pair.0`, and edge set.
    options: Vec<(u64, usize, u128)>,
}

struct Packing<'a> {
    mode: TopMinorMode,
    candidates: &'a [Candidate],
    chosen: Vec<Option<usize>>,
    best: (usize, Vec<Option<usize>>),
}

impl Packing<'_> {
    fn run(&mut self, i: usize, count: usize, used_vertices: u64, used_edges: u128, free: usize) {
        if count > self.best.0 {
            self.best = (count, self.chosen.clone());
        }
        if i == self.candidates.len() {
            return;
        }
        let remaining = self.candidates.len() - i;
        let room = match self.mode {
            TopMinorMode::Strict => remaining.min(free),
            TopMinorMode::Loose => remaining,
        };
        if count + room <= self.best.0 {
            return;
        }
        for (o, &(set, _, edges)) in self.candidates[i].options.iter().enumerate() {
            let clash = match self.mode {
                TopMinorMode::Strict => set & used_vertices != 0,
                TopMinorMode::Loose => edges & used_edges != 0,
            };
            if clash {
                continue;
            }
            self.chosen[i] = Some(o);
            let left = free.saturating_sub(set.count_ones() as usize);
            self.run(i + 1, count + 1, used_vertices | set, used_edges | edges, left);
            self.chosen[i] = None;
        }
        self.run(i + 1, count, used_vertices, used_edges, free);
    }
}

type TopChoice = (u64, Vec<((usize, usize), Vec<usize>)>);

fn densest_top_minor(g: &Graph, d: usize, mode: TopMinorMode) -> Option<(usize, usize, TopChoice)> {
    let n = g.n();
    let adj = g.masks();
    let edge_index: BTreeMap<(usize, usize), usize> = g.edges().enumerate().map(|(i, e)| (e, i)).collect();
    let edge_bit = |u: usize, v: usize| 1u128 << edge_index[&(u.min(v), u.max(v))];
    let paths = induced_paths(&adj, (2 * d).min(n));
    let mut best: Option<(usize, usize, TopChoice)> = None;
    for branch in 1..=full(n) {
        let h = branch.count_ones() as usize;
        let direct = inner_edges(&adj, branch);
        let missing = h * (h - 1) / 2 - direct;
        let extra_room = match mode {
            TopMinorMode::Strict => missing.min(n - h),
            TopMinorMode::Loose => missing,
        };
        if let Some((be, bk, _)) = best {
            if !denser(direct + extra_room, h, be, bk) {
                continue;
            }
        }
        let mut by_pair: BTreeMap<(usize, usize), Vec<(u64, usize, u128)>> = BTreeMap::new();
        if extra_room > 0 {
            for p in paths.iter().filter(|p| p.set & branch == 0) {
                for (from, to, first) in [(p.attach.0, p.attach.1, p.ends.0), (p.attach.1, p.attach.0, p.ends.1)] {
                    for a in bits(from & branch) {
                        for b in bits(to & branch).filter(|&b| b > a && adj[a] >> b & 1 == 0) {
                            let inner = walk(&adj, p.set, first);
                            let mut edges = edge_bit(a, inner[0]) | edge_bit(*inner.last().unwrap(), b);
                            for w in inner.windows(2) {
                                edges |= edge_bit(w[0], w[1]);
                            }
                            let list = by_pair.entry((a, b)).or_default();
                            if !list.iter().any(|&(s, _, _)| s == p.set) {
                                list.push((p.set, first, edges));
                            }
                        }
                    }
                }
            }
        }
        let candidates: Vec<Candidate> =
            by_pair.into_iter().map(|(pair, options)| Candidate { pair, options }).collect();
        let mut packing = Packing { mode, candidates: &candidates, chosen: vec![None; candidates.len()], best: (0, Vec::new()) };
        packing.run(0, 0, 0, 0, n - h);
        let (extra, choice) = packing.best;
        let total = direct + extra;
        if best.as_ref().map_or(true, |&(be, bk, _)| denser(total, h, be, bk)) {
            let mut realised: Vec<((usize, usize), Vec<usize>)> = Vec::new();
            for a in bits(branch) {
                for b in bits(adj[a] & branch).filter(|&b| b > a) {
                    realised.push(((a, b), vec![a, b]));
                }
            }
            for (c, o) in candidates.iter().zip(choice.iter()) {
                if let Some(o) = *o {
                    let (set, first, _) = c.options[o];
                    let mut path = vec![c.pair.0];
                    path.extend(walk(&adj, set, first));
                    path.push(c.pair.1);
                    realised.push((c.pair, path));
                }
            }
            realised.sort();
            best = Some((total, h, (branch, realised)));
        }
    }
    best
}

/// `∇̃_d(g)`: the greatest density of a graph `H` such that `g` contains a
/// subdivision of `H` in which every edge becomes a path of length at most
/// `2d + 1`, with pairwise disjoint interiors avoiding the branch vertices.
pub fn top_grad(g: &Graph, d: usize) -> Result<DensityReport> {
    top_grad_with(g, d, TopMinorMode::Strict, GRAD_CAP)
}

pub fn top_grad_with(g: &Graph, d: usize, mode: TopMinorMode, cap: usize) -> Result<DensityReport> {
    check_cap("top_grad", g, cap)?;
    if g.m() > 128 {
        return Err(crate::error::Error::invalid("top_grad handles at most 128 edges"));
    }
    let empty = TopMinorWitness { depth: d, mode, branch: vec![], paths: vec![], minor: Graph::empty(0) };
    if g.n() == 0 {
        return Ok(DensityReport { value: Ratio::from_integer(0), witness: Witness::Topological(empty) });
    }
    let relabel = |(set, paths): TopChoice, comp: &[usize]| -> TopChoice {
        let set = bits(set).fold(0u64, |acc, v| acc | 1 << comp[v]);
        let paths = paths
            .into_iter()
            .map(|((a, b), p)| ((comp[a], comp[b]), p.into_iter().map(|v| comp[v]).collect()))
            .collect();
        (set, paths)
    };
    let (_, _, (branch_set, realised)) =
        per_component(g, |sub| densest_top_minor(sub, d, mode), relabel).expect("nonempty graph");
    let branch: Vec<usize> = bits(branch_set).collect();
    let index = |v: usize| branch.binary_search(&v).expect("branch vertex");
    let mut paths: Vec<TopMinorPath> = realised
        .into_iter()
        .map(|((a, b), path)| TopMinorPath { edge: (index(a), index(b)), path })
        .collect();
    paths.sort_by_key(|p| p.edge);
    let minor = Graph::from_edges(branch.len(), paths.iter().map(|p| p.edge))?;
    let value = Ratio::new(minor.m() as i64, minor.n() as i64);
    Ok(DensityReport { value, witness: Witness::Topological(TopMinorWitness { depth: d, mode, branch, paths, minor }) })
}
