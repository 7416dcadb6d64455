//! Isomorphism for tiny graphs by exhaustive permutation search.
//!
//! Vertices are first split into classes by a cheap invariant (degree, then
//! the sorted degrees of the neighbours); only labellings that respect the
//! class order are tried. Meant for graphs on about ten vertices.

use super::Graph;

/// A complete isomorphism invariant of a small (di)graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    classes: Vec<u64>,
    code: u128,
}

/// Maximum number of vertices supported by [`canonical_form`].
pub const CANONICAL_MAX_N: usize = 11;

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let masks = g.masks();
    canonical_from_relation(g.n(), |u, v| masks[u] >> v & 1 == 1, false)
}

/// Canonical form of a relation on `0..n`; `directed` controls whether
/// `rel(u, v)` and `rel(v, u)` are recorded separately.
pub fn canonical_from_relation(
    n: usize,
    rel: impl Fn(usize, usize) -> bool,
    directed: bool,
) -> CanonicalForm {
    assert!(n <= CANONICAL_MAX_N, "canonical forms are limited to {CANONICAL_MAX_N} vertices");
    let out_deg: Vec<u64> = (0..n).map(|u| (0..n).filter(|&v| v != u && rel(u, v)).count() as u64).collect();
    let in_deg: Vec<u64> = (0..n).map(|v| (0..n).filter(|&u| u != v && rel(u, v)).count() as u64).collect();
    let base: Vec<u64> = (0..n).map(|v| out_deg[v] << 8 | in_deg[v]).collect();
    // One refinement round: own invariant plus a hash of the neighbours' invariants.
    let inv: Vec<u64> = (0..n)
        .map(|v| {
            let mut nb: Vec<u64> = (0..n)
                .filter(|&w| w != v && (rel(v, w) || rel(w, v)))
                .map(|w| base[w] << 2 | rel(v, w) as u64 * 2 | rel(w, v) as u64)
                .collect();
            nb.sort_unstable();
            nb.iter().fold(base[v].wrapping_mul(0x9E37_79B9_7F4A_7C15), |h, &x| {
                (h ^ x).wrapping_mul(0x0100_0000_01B3).rotate_left(17)
            })
        })
        .collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| inv[v]);
    let classes: Vec<u64> = order.iter().map(|&v| inv[v]).collect();

    let mut search = Search {
        n,
        rel: &rel,
        directed,
        classes: &classes,
        vertex_inv: order.iter().copied().zip(classes.iter().copied()).collect(),
        placed: Vec::with_capacity(n),
        used: vec![false; n],
        best: None,
    };
    search.run(0, 0, 0);
    let code = search.best.unwrap_or(0);
    CanonicalForm { n, classes, code }
}

struct Search<'a, F: Fn(usize, usize) -> bool> {
    n: usize,
    rel: &'a F,
    directed: bool,
    classes: &'a [u64],
    vertex_inv: Vec<(usize, u64)>,
    placed: Vec<usize>,
    used: Vec<bool>,
    best: Option<u128>,
}

impl<F: Fn(usize, usize) -> bool> Search<'_, F> {
    fn bits_per_position(&self, p: usize) -> u32 {
        if self.directed {
            2 * p as u32
        } else {
            p as u32
        }
    }

    fn total_bits(&self) -> u32 {
        (0..self.n).map(|p| self.bits_per_position(p)).sum()
    }

    /// `code` holds `len` bits describing the relation among positions `0..p`.
    fn run(&mut self, p: usize, code: u128, len: u32) {
        if let Some(best) = self.best {
            let prefix = best >> (self.total_bits() - len);
            if code < prefix {
                return;
            }
        }
        if p == self.n {
            if self.best.map_or(true, |b| code > b) {
                self.best = Some(code);
            }
            return;
        }
        for i in 0..self.vertex_inv.len() {
            let (v, inv) = self.vertex_inv[i];
            if self.used[v] || inv != self.classes[p] {
                continue;
            }
            let mut next = code;
            for &u in &self.placed {
                next = next << 1 | (self.rel)(u, v) as u128;
                if self.directed {
                    next = next << 1 | (self.rel)(v, u) as u128;
                }
            }
            self.used[v] = true;
            self.placed.push(v);
            self.run(p + 1, next, len + self.bits_per_position(p));
            self.placed.pop();
            self.used[v] = false;
        }
    }
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.n() == h.n() && g.m() == h.m() && canonical_form(g) == canonical_form(h)
}

/// An explicit isomorphism `g -> h` (as a vertex map), found by backtracking.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.n() != h.n() || g.m() != h.m() {
        return None;
    }
    fn extend(g: &Graph, h: &Graph, map: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let v = map.len();
        if v == g.n() {
            return true;
        }
        for w in 0..h.n() {
            if used[w] || g.degree(v) != h.degree(w) {
                continue;
            }
            if (0..v).any(|u| g.has_edge(u, v) != h.has_edge(map[u], w)) {
                continue;
            }
            used[w] = true;
            map.push(w);
            if extend(g, h, map, used) {
                return true;
            }
            map.pop();
            used[w] = false;
        }
        false
    }
    let mut map = Vec::with_capacity(g.n());
    let mut used = vec![false; h.n()];
    extend(g, h, &mut map, &mut used).then_some(map)
}
