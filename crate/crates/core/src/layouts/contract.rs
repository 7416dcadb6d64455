//! Contracting bounded-radius parts of a queue-laid-out graph.
//!
//! Each part gets a centre and every vertex a shortest path from that
//! centre. An edge is signed `+q` when it runs left to right along its page
//! `q` and `-q` otherwise; a vertex carries the signs along its root path.
//! A surviving edge is coloured by (signs to its left end, its own sign,
//! signs to its right end), where "left" refers to the order of centres.
//! Edges of one colour then never nest in the contracted order.

use std::collections::{BTreeMap, BTreeSet};

use num::bigint::BigInt;
use num::rational::BigRational;
use serde::Serialize;

use super::{audit_queue_density, validate_layout, Layout, PageKind};
use crate::error::{Error, Result};
use crate::graph::{contract_components, radius_certificate, Graph};
use crate::report::{Check, Quantity};

/// Colour of a contracted edge: root-path signs, edge sign, root-path signs.
pub type EdgeColour = (Vec<i64>, i64, Vec<i64>);

#[derive(Clone, Debug, Serialize)]
pub struct ContractedLayout {
    pub graph: Graph,
    pub layout: Layout,
    /// `projection[v]` is the vertex of the contracted graph containing `v`.
    pub projection: Vec<usize>,
    /// Centre of each contracted vertex.
    pub centres: Vec<usize>,
    pub edge_colours: Vec<((usize, usize), EdgeColour)>,
    pub colours: usize,
    pub bound: Quantity,
    pub checks: Vec<Check>,
}

/// `2k [((2k)^(r+1) - 1) / (2k - 1)]^2`, the page bound after contracting
/// parts of radius at most `r` in a `k`-queue graph.
pub fn contraction_page_bound(k: usize, r: usize) -> BigInt {
    let x = BigInt::from(2 * k);
    let geometric: BigInt = (0..=r).map(|s| num::pow(x.clone(), s)).sum();
    &x * &geometric * &geometric
}

fn bfs(g: &Graph, inside: &[bool], source: usize) -> Vec<Option<usize>> {
    g.bfs_distances(source, Some(inside))
}

/// Lexicographically least shortest path from `centre` to `target` inside the part.
fn root_path(g: &Graph, inside: &[bool], from_centre: &[Option<usize>], centre: usize, target: usize) -> Vec<usize> {
    let to_target = bfs(g, inside, target);
    let s = from_centre[target].expect("part is connected");
    let mut path = vec![centre];
    let mut current = centre;
    for step in 1..=s {
        current = g
            .neighbours(current)
            .find(|&x| inside[x] && from_centre[x] == Some(step) && to_target[x] == Some(s - step))
            .expect("a shortest path continues");
        path.push(current);
    }
    path
}

/// Contracts each of `parts` (connected, radius at most `r`) in a graph with
/// a queue layout, and lays out the result in queues indexed by edge colour.
pub fn contract_queue_layout(g: &Graph, layout: &Layout, parts: &[Vec<usize>], r: usize) -> Result<ContractedLayout> {
    let check = validate_layout(g, layout)?;
    if layout.pages.iter().any(|p| p.kind != PageKind::Queue) {
        return Err(Error::invalid("contraction needs a layout made of queues"));
    }
    if !check.valid {
        return Err(Error::invalid(format!("input layout is not a queue layout: {:?}", check.violations[0])));
    }
    let k = layout.page_count();
    let pos = layout.positions().expect("validated");
    let mut page_of = BTreeMap::new();
    for (i, p) in layout.pages.iter().enumerate() {
        for &e in &p.edges {
            page_of.insert(e, i as i64 + 1);
        }
    }
    let signed = |v: usize, w: usize| {
        let q = page_of[&(v.min(w), v.max(w))];
        if pos[v] < pos[w] {
            q
        } else {
            -q
        }
    };

    let (h, projection) = contract_components(g, parts)?;
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); h.n()];
    for v in 0..g.n() {
        members[projection[v]].push(v);
    }
    let mut centres = vec![0; h.n()];
    let mut root_signs: Vec<Vec<i64>> = vec![Vec::new(); g.n()];
    for (x, part) in members.iter().enumerate() {
        let cert = radius_certificate(g, part)?;
        if cert.radius > r {
            return Err(Error::RadiusTooLarge { part: cert.component, radius: cert.radius, max: r });
        }
        centres[x] = cert.centre;
        let mut inside = vec![false; g.n()];
        for &v in part {
            inside[v] = true;
        }
        let from_centre = bfs(g, &inside, cert.centre);
        for &v in part {
            let path = root_path(g, &inside, &from_centre, cert.centre, v);
            root_signs[v] = path.windows(2).map(|p| signed(p[0], p[1])).collect();
        }
    }

    let mut kept: BTreeMap<(usize, usize), EdgeColour> = BTreeMap::new();
    for (a, b) in g.edges() {
        let (x, y) = (projection[a], projection[b]);
        if x == y {
            continue;
        }
        let (v, w) = if pos[centres[x]] < pos[centres[y]] { (a, b) } else { (b, a) };
        let colour = (root_signs[v].clone(), signed(v, w), root_signs[w].clone());
        let key = (x.min(y), x.max(y));
        kept.entry(key).and_modify(|c| *c = c.clone().min(colour.clone())).or_insert(colour);
    }
    let palette: BTreeSet<&EdgeColour> = kept.values().collect();
    let index: BTreeMap<&EdgeColour, usize> = palette.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let assignment: Vec<((usize, usize), usize)> = kept.iter().map(|(&e, c)| (e, index[c])).collect();
    let mut order: Vec<usize> = (0..h.n()).collect();
    order.sort_by_key(|&x| pos[centres[x]]);
    let out = Layout::from_assignment(order, PageKind::Queue, &assignment);
    let colours = palette.len();

    let bound = Quantity::Exact(BigRational::from_integer(contraction_page_bound(k, r)));
    let valid = validate_layout(&h, &out)?.valid;
    let checks = vec![
        Check::le("colours <= f_r(k)", Quantity::int(colours as i64), bound.clone()),
        Check::holds("contracted layout is a queue layout", valid),
        audit_queue_density(&h, &out),
    ];
    let edge_colours = kept.into_iter().collect();
    Ok(ContractedLayout { graph: h, layout: out, projection, centres, edge_colours, colours, bound, checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{iso::are_isomorphic, subdivide_uniform};
    use crate::layouts::{queue_number, Page};
    use crate::report::all_pass;

    #[test]
    fn page_bound_values() {
        assert_eq!(contraction_page_bound(1, 1), BigInt::from(18));
        assert_eq!(contraction_page_bound(3, 0), BigInt::from(6));
        assert_eq!(contraction_page_bound(2, 2), BigInt::from(4 * 21 * 21));
    }

    #[test]
    fn contract_middle_of_path() {
        let g = Graph::path(4);
        let l = Layout::new(vec![0, 1, 2, 3], vec![Page { kind: PageKind::Queue, edges: g.edges().collect() }]);
        let c = contract_queue_layout(&g, &l, &[vec![1, 2]], 1).unwrap();
        assert!(are_isomorphic(&c.graph, &Graph::path(3)));
        assert!(all_pass(&c.checks));
        assert!(c.colours <= 18);
    }

    #[test]
    fn no_contraction_refines_pages() {
        let g = Graph::complete(4);
        let (k, l) = queue_number(&g).unwrap();
        let c = contract_queue_layout(&g, &l, &[], 0).unwrap();
        assert_eq!(c.graph, g);
        assert!(c.colours <= 2 * k);
        assert!(all_pass(&c.checks));
    }

    #[test]
    fn subdivided_triangle_contracts_to_triangle() {
        let sg = subdivide_uniform(&Graph::complete(3), 1);
        let g = sg.result().clone();
        let (_, l) = queue_number(&g).unwrap();
        let div = |u: usize, v: usize| sg.divisions()[&(u, v)][0];
        let parts = vec![vec![1, div(0, 1)], vec![2, div(1, 2)], vec![0, div(0, 2)]];
        let c = contract_queue_layout(&g, &l, &parts, 1).unwrap();
        assert_eq!(c.graph, Graph::complete(3));
        assert!(c.colours <= 18);
        assert!(all_pass(&c.checks));
    }

    #[test]
    fn rejects_wide_parts_and_bad_layouts() {
        let g = Graph::path(5);
        let l = Layout::new((0..5).collect(), vec![Page { kind: PageKind::Queue, edges: g.edges().collect() }]);
        assert!(matches!(
            contract_queue_layout(&g, &l, &[vec![0, 1, 2, 3, 4]], 1),
            Err(Error::RadiusTooLarge { .. })
        ));
        let nested = Graph::from_edges(4, [(0, 3), (1, 2)]).unwrap();
        let bad = Layout::new((0..4).collect(), vec![Page { kind: PageKind::Queue, edges: nested.edges().collect() }]);
        assert!(contract_queue_layout(&nested, &bad, &[], 0).is_err());
    }
}
