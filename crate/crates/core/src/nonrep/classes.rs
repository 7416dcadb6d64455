use std::str::FromStr;

use serde::Serialize;

use super::Colouring;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Conditions on the subgraphs spanned by pairs of colour classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ColouringMode {
    /// No monochromatic edge.
    Proper,
    /// Proper, and no path on four vertices uses two colours.
    Star,
    /// Proper, and no cycle uses two colours.
    Acyclic,
    /// Proper, and the edges between any two classes share one vertex.
    StrongStar,
}

impl FromStr for ColouringMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "proper" => Ok(ColouringMode::Proper),
            "star" => Ok(ColouringMode::Star),
            "acyclic" => Ok(ColouringMode::Acyclic),
            "strong_star" | "strong-star" => Ok(ColouringMode::StrongStar),
            _ => Err(Error::invalid(format!("unknown colouring mode {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureCheck {
    pub mode: ColouringMode,
    pub valid: bool,
    /// Edges of a violating subgraph when `valid` is false.
    pub witness: Vec<(usize, usize)>,
}

fn monochromatic_edge(c: &Colouring) -> Option<(usize, usize)> {
    c.graph().edges().find(|&(u, v)| c.colour(u) == c.colour(v))
}

fn bichromatic_p4(c: &Colouring) -> Option<Vec<(usize, usize)>> {
    let g = c.graph();
    for (b, x) in g.edges() {
        for (b, x) in [(b, x), (x, b)] {
            let a = g.neighbours(b).find(|&a| a != x && c.colour(a) == c.colour(x));
            let d = g.neighbours(x).find(|&d| d != b && c.colour(d) == c.colour(b));
            if let (Some(a), Some(d)) = (a, d) {
                return Some(vec![(a, b), (b, x), (x, d)]);
            }
        }
    }
    None
}

/// A cycle in the subgraph of edges joining colours `i` and `j`.
fn bichromatic_cycle(c: &Colouring, i: usize, j: usize) -> Option<Vec<(usize, usize)>> {
    let g = c.graph();
    let inside = |v: usize| c.colour(v) == i || c.colour(v) == j;
    let mut parent: Vec<Option<usize>> = vec![None; g.n()];
    let mut seen = vec![false; g.n()];
    for s in (0..g.n()).filter(|&v| inside(v)) {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for w in g.neighbours(v).filter(|&w| inside(w) && c.colour(w) != c.colour(v)) {
                if Some(w) == parent[v] {
                    continue;
                }
                if seen[w] {
                    // Close the cycle through the lowest common ancestor.
                    let up = |mut x: usize| {
                        let mut chain = vec![x];
                        while let Some(p) = parent[x] {
                            chain.push(p);
                            x = p;
                        }
                        chain
                    };
                    let (a, b) = (up(v), up(w));
                    let lca = *a.iter().find(|x| b.contains(x)).expect("same tree");
                    let mut walk: Vec<usize> = a.iter().copied().take_while(|&x| x != lca).collect();
                    walk.push(lca);
                    walk.extend(b.iter().copied().take_while(|&x| x != lca).collect::<Vec<_>>().into_iter().rev());
                    let mut edges: Vec<(usize, usize)> = walk.windows(2).map(|p| (p[0], p[1])).collect();
                    edges.push((w, v));
                    return Some(edges);
                }
                seen[w] = true;
                parent[w] = Some(v);
                stack.push(w);
            }
        }
    }
    None
}

/// Two edges between the same pair of classes with no common end.
fn disjoint_bichromatic_edges(c: &Colouring) -> Option<Vec<(usize, usize)>> {
    let edges: Vec<(usize, usize)> = c.graph().edges().collect();
    let key = |(u, v): (usize, usize)| (c.colour(u).min(c.colour(v)), c.colour(u).max(c.colour(v)));
    for (x, &e) in edges.iter().enumerate() {
        for &f in &edges[x + 1..] {
            if key(e) == key(f) && e.0 != f.0 && e.0 != f.1 && e.1 != f.0 && e.1 != f.1 {
                return Some(vec![e, f]);
            }
        }
    }
    None
}

pub fn check_star_acyclic(c: &Colouring, mode: ColouringMode) -> StructureCheck {
    let done = |witness: Option<Vec<(usize, usize)>>| StructureCheck {
        mode,
        valid: witness.is_none(),
        witness: witness.unwrap_or_default(),
    };
    if let Some(e) = monochromatic_edge(c) {
        return done(Some(vec![e]));
    }
    match mode {
        ColouringMode::Proper => done(None),
        ColouringMode::Star => done(bichromatic_p4(c)),
        ColouringMode::StrongStar => done(disjoint_bichromatic_edges(c)),
        ColouringMode::Acyclic => {
            let k = c.colours().iter().max().map_or(0, |&m| m + 1);
            let cycle = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).find_map(|(i, j)| bichromatic_cycle(c, i, j));
            done(cycle)
        }
    }
}

fn least_colours(g: &Graph, mode: ColouringMode) -> (usize, Colouring) {
    fn place(g: &Graph, mode: ColouringMode, k: usize, colours: &mut Vec<usize>, used: usize) -> bool {
        let v = colours.len();
        if v == g.n() {
            return true;
        }
        for c in 0..(used + 1).min(k) {
            if g.neighbours(v).any(|w| w < v && colours[w] == c) {
                continue;
            }
            colours.push(c);
            let prefix = Colouring::new(g.induced(&(0..=v).collect::<Vec<_>>()), colours.clone()).expect("lengths agree");
            if check_star_acyclic(&prefix, mode).valid && place(g, mode, k, colours, used.max(c + 1)) {
                return true;
            }
            colours.pop();
        }
        false
    }
    for k in 0.. {
        let mut colours = Vec::with_capacity(g.n());
        if place(g, mode, k, &mut colours, 0) {
            return (k, Colouring::new(g.clone(), colours).expect("complete"));
        }
    }
    unreachable!()
}

/// `χ(g)` by exhaustive search, with an optimal colouring.
pub fn chromatic_number(g: &Graph) -> (usize, Colouring) {
    least_colours(g, ColouringMode::Proper)
}

/// `χ_st(g)` by exhaustive search, with an optimal star colouring.
pub fn star_chromatic_number(g: &Graph) -> (usize, Colouring) {
    least_colours(g, ColouringMode::Star)
}
