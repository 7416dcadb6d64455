//! Bitmask helpers for graphs on at most 64 vertices.

use super::bits;

/// Vertices of `set` reachable from `start` inside `set`, with BFS layers.
fn layers(adj: &[u64], set: u64, start: usize) -> (u64, usize) {
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    let mut depth = 0;
    loop {
        let mut next = 0;
        for v in bits(frontier) {
            next |= adj[v];
        }
        next &= set & !seen;
        if next == 0 {
            return (seen, depth);
        }
        seen |= next;
        frontier = next;
        depth += 1;
    }
}

pub(crate) fn is_connected(adj: &[u64], set: u64) -> bool {
    set == 0 || layers(adj, set, set.trailing_zeros() as usize).0 == set
}

/// Eccentricity of `centre` in the subgraph induced by `set`, if it reaches all of it.
pub(crate) fn eccentricity(adj: &[u64], set: u64, centre: usize) -> Option<usize> {
    let (seen, depth) = layers(adj, set, centre);
    (seen == set).then_some(depth)
}

/// Radius of the subgraph induced by a nonempty `set`; `None` if disconnected.
pub(crate) fn radius(adj: &[u64], set: u64) -> Option<usize> {
    bits(set).map(|c| eccentricity(adj, set, c)).min().flatten()
}

/// Union of neighbourhoods of `set`, excluding `set` itself.
pub(crate) fn boundary(adj: &[u64], set: u64) -> u64 {
    bits(set).fold(0, |acc, v| acc | adj[v]) & !set
}

/// Edges with both ends in `set`.
pub(crate) fn inner_edges(adj: &[u64], set: u64) -> usize {
    bits(set).map(|v| (adj[v] & set).count_ones() as usize).sum::<usize>() / 2
}

pub(crate) fn full(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}
