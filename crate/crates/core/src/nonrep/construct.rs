//! Colourings built from other colourings: adding division vertices, and
//! recovering colourings of a graph from colourings of its 1-subdivision.

use std::collections::{BTreeMap, BTreeSet};

use num::bigint::BigInt;
use num::rational::BigRational;
use serde::Serialize;

use super::{check_star_acyclic, find_repetition, thue_word, Colouring, ColouringMode, RootedForest};
use crate::error::{Error, Result};
use crate::graph::{subdivide_uniform, Graph, SubdividedGraph};
use crate::report::{Check, Quantity};

fn require_nonrepetitive(c: &Colouring) -> Result<()> {
    match find_repetition(c, c.graph().n() / 2)? {
        Some(path) => Err(Error::Repetitive(path)),
        None => Ok(()),
    }
}

fn nonrepetitive_check(name: &str, c: &Colouring) -> Result<Check> {
    Ok(Check::holds(name, find_repetition(c, c.graph().n() / 2)?.is_none()))
}

/// `base^exp`, exact while it stays modest and as a base-2 logarithm beyond.
fn power(base: &BigInt, exp: u64) -> Quantity {
    if base.bits() * exp <= 4096 {
        Quantity::int(num::pow(base.clone(), exp as usize))
    } else {
        Quantity::Log2(exp as f64 * base_log2(base))
    }
}

fn base_log2(x: &BigInt) -> f64 {
    let shift = x.bits().saturating_sub(60);
    let top: BigInt = x >> shift;
    shift as f64 + (top.to_string().parse::<f64>().unwrap_or(1.0)).log2()
}

fn times(a: &Quantity, b: &BigInt) -> Quantity {
    match a {
        Quantity::Exact(r) => Quantity::Exact(r * BigRational::from_integer(b.clone())),
        Quantity::Log2(l) => Quantity::Log2(l + base_log2(b)),
        Quantity::Approx(x) => Quantity::Approx(x * base_log2(b).exp2()),
    }
}

fn subdivision_colours_match(g: &Graph, c: &Colouring) -> Result<SubdividedGraph> {
    let sub = subdivide_uniform(g, 1);
    if c.graph() != sub.result() {
        return Err(Error::invalid("colouring is not on the 1-subdivision of the graph"));
    }
    Ok(sub)
}

/// Extends a non-repetitive colouring of `sg.base()` to the subdivision
/// `sg.result()`: one fresh colour when no edge has more than one division
/// vertex, two when none has more than two, and otherwise three fresh
/// colours laid along each division path (oriented from the smaller end) as
/// a square-free word.
pub fn colour_subdivision(c: &Colouring, sg: &SubdividedGraph) -> Result<Colouring> {
    if c.graph() != sg.base() {
        return Err(Error::invalid("colouring is not on the base of the subdivision"));
    }
    require_nonrepetitive(c)?;
    let fresh = c.colours().iter().max().map_or(0, |&m| m + 1);
    let t = sg.max_divisions();
    let word = thue_word(t).as_colours();
    let mut colours: Vec<usize> = c.colours().to_vec();
    colours.resize(sg.result().n(), 0);
    for path in sg.divisions().values() {
        for (i, &x) in path.iter().enumerate() {
            colours[x] = fresh + if t <= 2 { i } else { word[i] };
        }
    }
    Colouring::new(sg.result().clone(), colours)
}

/// Vertex classes of a rooted forest whose arcs point toward the roots and
/// carry colours `arc_colour[v] ∈ 1..=k` (given for every non-root `v`),
/// such that between any two classes all arcs run the same way and share a
/// colour. Uses at most `2k + 1` classes: a child sits `arc colour` steps
/// after its parent in `Z_{2k+1}`.
pub fn forest_classes_from_arcs(f: &RootedForest, arc_colour: &[Option<usize>]) -> Result<Colouring> {
    let n = f.forest().n();
    if arc_colour.len() != n {
        return Err(Error::invalid("one arc colour entry per vertex is required"));
    }
    for v in 0..n {
        match (f.parent(v), arc_colour[v]) {
            (Some(_), Some(a)) if a >= 1 => {}
            (None, None) => {}
            _ => return Err(Error::invalid(format!("vertex {v}: arc colours in 1..=k exactly on non-roots"))),
        }
    }
    let k = arc_colour.iter().flatten().max().copied().unwrap_or(0);
    let modulus = 2 * k + 1;
    let mut class: Vec<Option<usize>> = vec![None; n];
    fn resolve(v: usize, f: &RootedForest, arcs: &[Option<usize>], m: usize, class: &mut [Option<usize>]) -> usize {
        if let Some(c) = class[v] {
            return c;
        }
        let c = match f.parent(v) {
            None => 0,
            Some(p) => (resolve(p, f, arcs, m, class) + arcs[v].expect("non-root")) % m,
        };
        class[v] = Some(c);
        c
    }
    for v in 0..n {
        resolve(v, f, arc_colour, modulus, &mut class);
    }
    let class: Vec<usize> = class.into_iter().map(|c| c.expect("resolved")).collect();

    let mut between: BTreeMap<(usize, usize), (usize, usize)> = BTreeMap::new();
    for v in 0..n {
        let Some(p) = f.parent(v) else { continue };
        let (a, b) = (class[v], class[p]);
        if a == b {
            return Err(Error::Construction(format!("arc {v}->{p} lies inside one class")));
        }
        let seen = *between.entry((a.min(b), a.max(b))).or_insert((a, arc_colour[v].unwrap()));
        if seen != (a, arc_colour[v].unwrap()) {
            return Err(Error::Construction(format!("classes {a} and {b} see arcs of two kinds")));
        }
    }
    Ok(Colouring::from_labels(f.forest().clone(), &class)?)
}

#[derive(Clone, Debug, Serialize)]
pub struct ForestReport {
    pub colouring: Colouring,
    /// Colours used by the colouring of the 1-subdivision.
    pub k: usize,
    pub bound: Quantity,
    pub checks: Vec<Check>,
}

/// Colours a rooted forest from a non-repetitive colouring `c` of its
/// 1-subdivision by `q(v) = (c(v), class(v), colour of v's parent edge)`.
pub fn nonrep_forest(f: &RootedForest, c: &Colouring) -> Result<ForestReport> {
    let g = f.forest();
    let sub = subdivision_colours_match(g, c)?;
    require_nonrepetitive(c)?;
    let palette: BTreeSet<usize> = c.colours().iter().copied().collect();
    let rank = |x: usize| palette.range(..x).count() + 1;
    let k = palette.len();
    let div = |u: usize, v: usize| sub.division_path(u, v).expect("edge")[0];
    let edge_colour = |u: usize, v: usize| c.colour(div(u, v));

    let arcs: Vec<Option<usize>> = (0..g.n()).map(|v| f.parent(v).map(|p| rank(edge_colour(v, p)))).collect();
    let classes = forest_classes_from_arcs(f, &arcs)?;
    let labels: Vec<(usize, usize, usize)> =
        (0..g.n()).map(|v| (rank(c.colour(v)), classes.colour(v), arcs[v].unwrap_or(0))).collect();
    let q = Colouring::from_labels(g.clone(), &labels)?;

    let arcs_both: Vec<(usize, usize)> = g.edges().flat_map(|(u, v)| [(u, v), (v, u)]).collect();
    let a = arcs_both.iter().all(|&(v, w)| {
        arcs_both
            .iter()
            .filter(|&&(x, y)| q.colour(v) == q.colour(x) && q.colour(w) == q.colour(y))
            .all(|&(x, y)| edge_colour(v, w) == edge_colour(x, y))
    });
    let non_roots: Vec<usize> = (0..g.n()).filter(|&v| !f.is_root(v)).collect();
    let parent_edge = |v: usize| edge_colour(v, f.parent(v).expect("non-root"));
    let b = non_roots.iter().all(|&v| {
        non_roots.iter().filter(|&&x| q.colour(v) == q.colour(x)).all(|&x| parent_edge(v) == parent_edge(x))
    });
    let roots_apart = f.roots().iter().all(|&r| non_roots.iter().all(|&v| q.colour(r) != q.colour(v)));
    let d = (0..g.n()).all(|v| (0..g.n()).all(|w| q.colour(v) != q.colour(w) || c.colour(v) == c.colour(w)));

    let bound = BigInt::from(k * (k + 1) * (2 * k + 1));
    let checks = vec![
        Check::holds("(a) equal end colours give equal division colours", a),
        Check::holds("(b) equal colours give equal parent-edge colours", b),
        Check::holds("(c) roots and non-roots never share a colour", roots_apart),
        Check::holds("(d) equal colours imply equal colours in c", d),
        nonrepetitive_check("forest colouring is non-repetitive", &q)?,
        Check::le("colours <= k(k+1)(2k+1)", Quantity::int(q.colours_used() as i64), Quantity::int(bound.clone())),
    ];
    Ok(ForestReport { colouring: q, k, bound: Quantity::int(bound), checks })
}

#[derive(Clone, Debug, Serialize)]
pub struct AcyclicReport {
    pub colouring: Colouring,
    pub k: usize,
    pub bound: Quantity,
    pub checks: Vec<Check>,
}

/// Acyclic colouring of `g` from a non-repetitive colouring `c` of its
/// 1-subdivision: each vertex gets its own colour together with the set of
/// (direction, edge colour, neighbour colour) triples around it, edges
/// oriented from the smaller id.
pub fn acyclic_from_subdivision(g: &Graph, c: &Colouring) -> Result<AcyclicReport> {
    let sub = subdivision_colours_match(g, c)?;
    require_nonrepetitive(c)?;
    let k = c.colours_used();
    type Signature = (usize, BTreeSet<(bool, usize, usize)>);
    let labels: Vec<Signature> = (0..g.n())
        .map(|v| {
            let around = g
                .neighbours(v)
                .map(|w| (v < w, c.colour(sub.division_path(v, w).expect("edge")[0]), c.colour(w)))
                .collect();
            (c.colour(v), around)
        })
        .collect();
    let q = Colouring::from_labels(g.clone(), &labels)?;
    let bound = times(&power(&BigInt::from(2), 2 * (k * k) as u64), &BigInt::from(k));
    let acyclic = check_star_acyclic(&q, ColouringMode::Acyclic);
    let checks = vec![
        Check::holds("colouring is acyclic", acyclic.valid),
        Check::le("colours <= k * 2^(2k^2)", Quantity::int(q.colours_used() as i64), bound.clone()),
    ];
    Ok(AcyclicReport { colouring: q, k, bound, checks })
}

#[derive(Clone, Debug, Serialize)]
pub struct NonRepGraphReport {
    pub colouring: Colouring,
    /// Colours of the acyclic colouring.
    pub l: usize,
    /// Colours of the colouring of the 1-subdivision.
    pub k: usize,
    pub bound: Quantity,
    pub checks: Vec<Check>,
}

/// Non-repetitive colouring of `g` from an acyclic colouring `p` of `g` and a
/// non-repetitive colouring `c` of its 1-subdivision. Each two-coloured
/// forest of `p`, rooted at its least vertices, is coloured by
/// [`nonrep_forest`]; a vertex then carries `p(v)` and its colour in every
/// forest that contains it.
pub fn nonrep_graph(g: &Graph, p: &Colouring, c: &Colouring) -> Result<NonRepGraphReport> {
    if p.graph() != g {
        return Err(Error::invalid("acyclic colouring is not on the graph"));
    }
    let sub = subdivision_colours_match(g, c)?;
    let acyclic = check_star_acyclic(p, ColouringMode::Acyclic);
    if !acyclic.valid {
        return Err(Error::invalid(format!("colouring is not acyclic: {:?}", acyclic.witness)));
    }
    require_nonrepetitive(c)?;
    let p = p.canonical();
    let l = p.colours_used();
    let k = c.colours_used();
    let mut in_forest: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    let mut forest_checks_pass = true;
    for i in 0..l {
        for j in i + 1..l {
            let vertices: Vec<usize> = (0..g.n()).filter(|&v| p.colour(v) == i || p.colour(v) == j).collect();
            let h = g.induced(&vertices);
            let h_sub = subdivide_uniform(&h, 1);
            let mut colours: Vec<usize> = vertices.iter().map(|&v| c.colour(v)).collect();
            colours.resize(h_sub.result().n(), 0);
            for (&(a, b), path) in h_sub.divisions() {
                let x = sub.division_path(vertices[a], vertices[b]).expect("induced edge")[0];
                colours[path[0]] = c.colour(x);
            }
            let restricted = Colouring::new(h_sub.result().clone(), colours)?;
            let report = nonrep_forest(&RootedForest::least_roots(h)?, &restricted)?;
            forest_checks_pass &= report.checks.iter().all(|ch| ch.pass);
            in_forest.insert((i, j), report.colouring.colours().to_vec());
        }
    }
    let labels: Vec<(usize, Vec<(usize, usize)>)> = (0..g.n())
        .map(|v| {
            let i = p.colour(v);
            let mine: Vec<(usize, usize)> = (0..l)
                .filter(|&j| j != i)
                .map(|j| {
                    let key = (i.min(j), i.max(j));
                    let members: Vec<usize> = (0..g.n()).filter(|&x| p.colour(x) == key.0 || p.colour(x) == key.1).collect();
                    let local = members.binary_search(&v).expect("member");
                    (j, in_forest[&key][local])
                })
                .collect();
            (i, mine)
        })
        .collect();
    let q = Colouring::from_labels(g.clone(), &labels)?;
    let per_forest = BigInt::from(k * (k + 1) * (2 * k + 1));
    let bound = times(&power(&per_forest, l.saturating_sub(1) as u64), &BigInt::from(l));
    let checks = vec![
        Check::holds("forest audits (a)-(d) hold on every two-coloured forest", forest_checks_pass),
        nonrepetitive_check("colouring is non-repetitive", &q)?,
        Check::le("colours <= l (k(k+1)(2k+1))^(l-1)", Quantity::int(q.colours_used() as i64), bound.clone()),
    ];
    Ok(NonRepGraphReport { colouring: q, l, k, bound, checks })
}

#[derive(Clone, Debug, Serialize)]
pub struct PiFromSubdivisionReport {
    pub colouring: Colouring,
    /// The input colouring extended to the full 1-subdivision.
    pub padded: Colouring,
    pub acyclic: AcyclicReport,
    pub graph: NonRepGraphReport,
    pub bound: Quantity,
    pub checks: Vec<Check>,
}

/// Non-repetitive colouring of `sg.base()` from a non-repetitive colouring of
/// a subdivision with at most one division vertex per edge.
pub fn pi_from_subdivision(sg: &SubdividedGraph, c: &Colouring) -> Result<PiFromSubdivisionReport> {
    if sg.max_divisions() > 1 {
        return Err(Error::invalid("at most one division vertex per edge is allowed"));
    }
    if c.graph() != sg.result() {
        return Err(Error::invalid("colouring is not on the subdivision"));
    }
    require_nonrepetitive(c)?;
    let g = sg.base();
    let k = c.colours_used();
    let full = subdivide_uniform(g, 1);
    let fresh = c.colours().iter().max().map_or(0, |&m| m + 1);
    let mut colours: Vec<usize> = (0..g.n()).map(|v| c.colour(v)).collect();
    colours.resize(full.result().n(), 0);
    for (&(u, v), path) in full.divisions() {
        colours[path[0]] = match sg.division_path(u, v).as_deref() {
            Some([x]) => c.colour(*x),
            _ => fresh,
        };
    }
    let padded = Colouring::new(full.result().clone(), colours)?;
    let acyclic = acyclic_from_subdivision(g, &padded)?;
    let graph = nonrep_graph(g, &acyclic.colouring, &padded)?;
    let colouring = graph.colouring.clone();

    let k1 = (k + 1) as f64;
    let l_log2 = k1.log2() + 2.0 * k1 * k1;
    let l = l_log2.exp2();
    let bound = Quantity::Log2(l_log2 + (l - 1.0) * (k1 * (k1 + 1.0) * (2.0 * k1 + 1.0)).log2());
    let checks = vec![
        Check::holds("padded colouring is non-repetitive", find_repetition(&padded, padded.graph().n() / 2)?.is_none()),
        Check::holds("intermediate colouring is acyclic", acyclic.checks[0].pass),
        nonrepetitive_check("colouring is non-repetitive", &colouring)?,
        Check::le("colours within the composed bound", Quantity::int(colouring.colours_used() as i64), bound.clone()),
    ];
    Ok(PiFromSubdivisionReport { colouring, padded, acyclic, graph, bound, checks })
}
