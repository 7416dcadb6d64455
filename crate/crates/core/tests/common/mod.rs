//! Brute-force oracles written independently of the library's searches.

#![allow(dead_code)]

use bounded_expansion::Graph;
use itertools::Itertools;
use num::rational::Ratio;

/// Every simple path of `g` as a vertex sequence, in both directions.
pub fn all_paths(g: &Graph) -> Vec<Vec<usize>> {
    fn grow(g: &Graph, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(path.clone());
        let last = *path.last().unwrap();
        for w in g.neighbours(last).collect::<Vec<_>>() {
            if !path.contains(&w) {
                path.push(w);
                grow(g, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    for v in 0..g.n() {
        grow(g, &mut vec![v], &mut out);
    }
    out
}

/// Whether some path `v_1 .. v_2s` has `c(v_i) = c(v_{i+s})` for all `i`.
pub fn has_repetition(g: &Graph, colours: &[usize]) -> bool {
    all_paths(g).iter().filter(|p| p.len() % 2 == 0).any(|p| {
        let s = p.len() / 2;
        (0..s).all(|i| colours[p[i]] == colours[p[i + s]])
    })
}

/// Least `k` admitting a non-repetitive `k`-colouring, by trying all colourings.
pub fn pi_brute(g: &Graph) -> usize {
    let paths: Vec<Vec<usize>> = all_paths(g).into_iter().filter(|p| p.len() % 2 == 0).collect();
    if g.n() == 0 {
        return 0;
    }
    (1..)
        .find(|&k| {
            (0..g.n()).map(|_| 0..k).multi_cartesian_product().any(|c| {
                paths.iter().all(|p| {
                    let s = p.len() / 2;
                    !(0..s).all(|i| c[p[i]] == c[p[i + s]])
                })
            })
        })
        .unwrap()
}

/// Proper, and every two colour classes induce a forest.
pub fn is_acyclic_colouring(g: &Graph, colours: &[usize]) -> bool {
    if g.edges().any(|(u, v)| colours[u] == colours[v]) {
        return false;
    }
    let palette: Vec<usize> = colours.iter().copied().sorted().dedup().collect();
    for (a, b) in palette.iter().tuple_combinations() {
        let mut root: Vec<usize> = (0..g.n()).collect();
        fn find(root: &mut [usize], x: usize) -> usize {
            if root[x] != x {
                let r = find(root, root[x]);
                root[x] = r;
            }
            root[x]
        }
        for (u, v) in g.edges() {
            let pair = [colours[u], colours[v]];
            if pair.contains(a) && pair.contains(b) {
                let (x, y) = (find(&mut root, u), find(&mut root, v));
                if x == y {
                    return false;
                }
                root[x] = y;
            }
        }
    }
    true
}

/// Two edges given by positions conflict on a queue (nest) or a stack (cross).
pub fn conflict(queue: bool, e: (usize, usize), f: (usize, usize)) -> bool {
    let (e, f) = if e.0 <= f.0 { (e, f) } else { (f, e) };
    if e.0 == f.0 || e.1 == f.1 || e.1 == f.0 {
        return false;
    }
    if queue {
        f.1 < e.1
    } else {
        f.0 < e.1 && e.1 < f.1
    }
}

/// Fewest pages over all orders and all page assignments, trying orders in
/// the order given by `orders`.
pub fn pages_brute(g: &Graph, queue: bool, orders: impl Iterator<Item = Vec<usize>>) -> usize {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut best = edges.len().max(1);
    if edges.is_empty() {
        return 0;
    }
    for order in orders {
        let mut pos = vec![0; g.n()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let spans: Vec<(usize, usize)> =
            edges.iter().map(|&(u, v)| (pos[u].min(pos[v]), pos[u].max(pos[v]))).collect();
        for k in 1..best {
            let ok = (0..edges.len()).map(|_| 0..k).multi_cartesian_product().any(|a| {
                (0..edges.len())
                    .tuple_combinations()
                    .all(|(i, j)| a[i] != a[j] || !conflict(queue, spans[i], spans[j]))
            });
            if ok {
                best = k;
                break;
            }
        }
    }
    best
}

/// Largest `‖H‖/|H|` over nonempty induced subgraphs.
pub fn max_subgraph_density(g: &Graph) -> Ratio<i64> {
    let n = g.n();
    (1u32..1 << n)
        .map(|m| {
            let vs: Vec<usize> = (0..n).filter(|&v| m >> v & 1 == 1).collect();
            let e = g.edges().filter(|&(u, v)| m >> u & 1 == 1 && m >> v & 1 == 1).count();
            Ratio::new(e as i64, vs.len() as i64)
        })
        .max()
        .unwrap_or(Ratio::from_integer(0))
}

/// Cycles of length `t` counted as vertex sequences up to rotation and reflection.
pub fn cycles_brute(g: &Graph, t: usize) -> u64 {
    let mut count = 0u64;
    for set in (0..g.n()).combinations(t) {
        let first = set[0];
        for rest in set[1..].iter().copied().permutations(t - 1) {
            if rest[0] > rest[t - 2] {
                continue;
            }
            let mut cyc = vec![first];
            cyc.extend(rest);
            if (0..t).all(|i| g.has_edge(cyc[i], cyc[(i + 1) % t])) {
                count += 1;
            }
        }
    }
    count
}

/// Proper crossings between straight-line edges, by orientation tests.
pub fn segment_crossings(points: &[(i64, i64)], edges: &[(usize, usize)]) -> usize {
    fn orient(a: (i64, i64), b: (i64, i64), c: (i64, i64)) -> i128 {
        (b.0 - a.0) as i128 * (c.1 - a.1) as i128 - (b.1 - a.1) as i128 * (c.0 - a.0) as i128
    }
    edges
        .iter()
        .tuple_combinations()
        .filter(|(&(a, b), &(c, d))| {
            if a == c || a == d || b == c || b == d {
                return false;
            }
            let (p, q, r, s) = (points[a], points[b], points[c], points[d]);
            let o1 = orient(p, q, r).signum();
            let o2 = orient(p, q, s).signum();
            let o3 = orient(r, s, p).signum();
            let o4 = orient(r, s, q).signum();
            o1 * o2 < 0 && o3 * o4 < 0
        })
        .count()
}

/// Jump number by trying every permutation that is a linear extension.
pub fn jump_number_brute(n: usize, lt: impl Fn(usize, usize) -> bool) -> usize {
    (0..n)
        .permutations(n)
        .filter(|p| (0..n).tuple_combinations().all(|(i, j)| !lt(p[j], p[i])))
        .map(|p| p.windows(2).filter(|w| !lt(w[0], w[1]) && !lt(w[1], w[0])).count())
        .min()
        .unwrap_or(0)
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
