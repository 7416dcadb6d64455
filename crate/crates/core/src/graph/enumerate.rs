//! Exhaustive generation of small graphs up to isomorphism.
//!
//! Graphs on `n` vertices are grown from those on `n - 1` by adding a vertex
//! with every possible neighbourhood and keeping one representative per
//! canonical form. Every graph arises this way (delete any vertex), so the
//! lists are complete.

use std::collections::HashSet;

use super::iso::{canonical_form, CANONICAL_MAX_N};
use super::Graph;

/// All graphs on exactly `n` vertices, one per isomorphism class.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= CANONICAL_MAX_N.min(8), "exhaustive graph lists stop at 8 vertices");
    let mut level = vec![Graph::empty(0)];
    for k in 1..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            for nb in 0u64..1 << (k - 1) {
                let mut masks = g.masks();
                masks.push(nb);
                for (u, m) in masks.iter_mut().enumerate().take(k - 1) {
                    *m |= (nb >> u & 1) << (k - 1);
                }
                let h = Graph::from_masks(&masks);
                if seen.insert(canonical_form(&h)) {
                    next.push(h);
                }
            }
        }
        level = next;
    }
    level
}

pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n).into_iter().filter(Graph::is_connected).collect()
}

pub fn forests(n: usize) -> Vec<Graph> {
    all_graphs(n).into_iter().filter(Graph::is_forest).collect()
}
