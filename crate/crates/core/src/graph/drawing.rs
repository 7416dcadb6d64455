//! Drawings of graphs and audits of crossing inequalities.
//!
//! A drawing is either straight-line (one point per vertex) or an explicit
//! list of crossing edge pairs. Straight-line orientation tests are exact
//! when every coordinate is a decimal or fraction; otherwise they fall back
//! to `f64` with tolerance [`FLOAT_EPS`]. Degenerate inputs, where a vertex
//! sits on a non-incident edge or two vertices coincide, are rejected.

use std::collections::BTreeSet;
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Signed, Zero};
use serde::Serialize;

use super::Graph;
use crate::error::{Error, Result};
use crate::report::{Check, Quantity};

pub const FLOAT_EPS: f64 = 1e-9;

/// Edge-count constant for drawings with at most `k` crossings per edge.
pub const PER_EDGE_CROSSING_CONSTANT: f64 = 4.108;

type Edge = (usize, usize);

#[derive(Clone, Debug, PartialEq)]
enum Points {
    Exact(Vec<(BigRational, BigRational)>),
    Float(Vec<(f64, f64)>),
}

#[derive(Clone, Debug, PartialEq)]
enum Geometry {
    Points(Points),
    Crossings(BTreeSet<(Edge, Edge)>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Drawing {
    graph: Graph,
    geometry: Geometry,
}

fn norm(e: Edge) -> Edge {
    (e.0.min(e.1), e.0.max(e.1))
}

fn parse_rational(tok: &str) -> Option<BigRational> {
    if let Some((a, b)) = tok.split_once('/') {
        let (a, b) = (BigInt::from_str(a).ok()?, BigInt::from_str(b).ok()?);
        return (!b.is_zero()).then(|| BigRational::new(a, b));
    }
    let (neg, body) = match tok.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, tok.strip_prefix('+').unwrap_or(tok)),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if int.is_empty() && frac.is_empty() {
        return None;
    }
    if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{int}{frac}");
    let num = BigInt::from_str(if digits.is_empty() { "0" } else { &digits }).ok()?;
    let den = BigInt::from(10).pow(frac.len() as u32);
    let r = BigRational::new(num, den);
    Some(if neg { -r } else { r })
}

impl Drawing {
    /// Straight-line drawing from textual coordinates (decimals, `a/b`, or floats).
    pub fn with_coordinates(graph: Graph, coords: &[(String, String)]) -> Result<Self> {
        if coords.len() != graph.n() {
            return Err(Error::invalid(format!(
                "{} coordinates for {} vertices",
                coords.len(),
                graph.n()
            )));
        }
        let exact: Option<Vec<_>> = coords
            .iter()
            .map(|(x, y)| Some((parse_rational(x)?, parse_rational(y)?)))
            .collect();
        let points = match exact {
            Some(p) => Points::Exact(p),
            None => Points::Float(
                coords
                    .iter()
                    .map(|(x, y)| {
                        let parse = |t: &String| {
                            t.parse::<f64>()
                                .ok()
                                .filter(|v| v.is_finite())
                                .ok_or_else(|| Error::invalid(format!("bad coordinate {t:?}")))
                        };
                        Ok((parse(x)?, parse(y)?))
                    })
                    .collect::<Result<_>>()?,
            ),
        };
        let d = Drawing { graph, geometry: Geometry::Points(points) };
        d.check_nondegenerate()?;
        Ok(d)
    }

    /// Straight-line drawing with integer coordinates.
    pub fn with_integer_points(graph: Graph, points: &[(i64, i64)]) -> Result<Self> {
        let coords: Vec<(String, String)> =
            points.iter().map(|(x, y)| (x.to_string(), y.to_string())).collect();
        Drawing::with_coordinates(graph, &coords)
    }

    /// Drawing given only by its set of crossing pairs of disjoint edges.
    pub fn with_crossings(graph: Graph, pairs: impl IntoIterator<Item = (Edge, Edge)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (e, f) in pairs {
            let (e, f) = (norm(e), norm(f));
            for x in [e, f] {
                if !graph.has_edge(x.0, x.1) {
                    return Err(Error::NotAnEdge(x.0, x.1));
                }
            }
            if e.0 == f.0 || e.0 == f.1 || e.1 == f.0 || e.1 == f.1 {
                return Err(Error::DegenerateDrawing(format!(
                    "edges {e:?} and {f:?} share an endpoint and cannot cross"
                )));
            }
            set.insert((e.min(f), e.max(f)));
        }
        Ok(Drawing { graph, geometry: Geometry::Crossings(set) })
    }

    /// Reads the drawing file format: a `coords` header followed by `v x y`
    /// lines, or a `crossings` header followed by `u1 v1 u2 v2` lines.
    pub fn parse(graph: Graph, text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines.next().ok_or_else(|| Error::invalid("empty drawing file"))?;
        let bad = |line: usize, msg: &str| Error::Parse { line, msg: msg.to_string() };
        match header {
            "coords" => {
                let mut coords = vec![None; graph.n()];
                for (line, l) in lines {
                    let toks: Vec<&str> = l.split_whitespace().collect();
                    let [v, x, y] = toks[..] else { return Err(bad(line, "expected \"v x y\"")) };
                    let v: usize = v.parse().map_err(|_| bad(line, "bad vertex id"))?;
                    if v >= graph.n() {
                        return Err(Error::VertexOutOfRange { vertex: v, n: graph.n() });
                    }
                    coords[v] = Some((x.to_string(), y.to_string()));
                }
                let coords = coords
                    .into_iter()
                    .enumerate()
                    .map(|(v, c)| c.ok_or_else(|| Error::invalid(format!("vertex {v} has no coordinates"))))
                    .collect::<Result<Vec<_>>>()?;
                Drawing::with_coordinates(graph, &coords)
            }
            "crossings" => {
                let mut pairs = Vec::new();
                for (line, l) in lines {
                    let ids = l
                        .split_whitespace()
                        .map(|t| t.parse::<usize>().map_err(|_| bad(line, "bad vertex id")))
                        .collect::<Result<Vec<_>>>()?;
                    let [a, b, c, d] = ids[..] else { return Err(bad(line, "expected \"u1 v1 u2 v2\"")) };
                    pairs.push(((a, b), (c, d)));
                }
                Drawing::with_crossings(graph, pairs)
            }
            _ => Err(bad(hline, "expected header \"coords\" or \"crossings\"")),
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    fn orient(&self, a: usize, b: usize, c: usize) -> i8 {
        match &self.geometry {
            Geometry::Points(Points::Exact(p)) => {
                let cross = (&p[b].0 - &p[a].0) * (&p[c].1 - &p[a].1) - (&p[b].1 - &p[a].1) * (&p[c].0 - &p[a].0);
                if cross.is_zero() {
                    0
                } else if cross.is_positive() {
                    1
                } else {
                    -1
                }
            }
            Geometry::Points(Points::Float(p)) => {
                let cross = (p[b].0 - p[a].0) * (p[c].1 - p[a].1) - (p[b].1 - p[a].1) * (p[c].0 - p[a].0);
                if cross.abs() <= FLOAT_EPS {
                    0
                } else if cross > 0.0 {
                    1
                } else {
                    -1
                }
            }
            Geometry::Crossings(_) => unreachable!("orientation needs coordinates"),
        }
    }

    /// Strictly between `a` and `b` on the line through them (assumes collinear).
    fn strictly_between(&self, a: usize, b: usize, c: usize) -> bool {
        match &self.geometry {
            Geometry::Points(Points::Exact(p)) => {
                let dot = (&p[c].0 - &p[a].0) * (&p[b].0 - &p[a].0) + (&p[c].1 - &p[a].1) * (&p[b].1 - &p[a].1);
                let len = (&p[b].0 - &p[a].0) * (&p[b].0 - &p[a].0) + (&p[b].1 - &p[a].1) * (&p[b].1 - &p[a].1);
                dot.is_positive() && dot < len
            }
            Geometry::Points(Points::Float(p)) => {
                let dot = (p[c].0 - p[a].0) * (p[b].0 - p[a].0) + (p[c].1 - p[a].1) * (p[b].1 - p[a].1);
                let len = (p[b].0 - p[a].0).powi(2) + (p[b].1 - p[a].1).powi(2);
                dot > FLOAT_EPS && dot < len - FLOAT_EPS
            }
            Geometry::Crossings(_) => false,
        }
    }

    fn coincide(&self, a: usize, b: usize) -> bool {
        match &self.geometry {
            Geometry::Points(Points::Exact(p)) => p[a] == p[b],
            Geometry::Points(Points::Float(p)) => {
                (p[a].0 - p[b].0).abs() <= FLOAT_EPS && (p[a].1 - p[b].1).abs() <= FLOAT_EPS
            }
            Geometry::Crossings(_) => false,
        }
    }

    fn check_nondegenerate(&self) -> Result<()> {
        let n = self.graph.n();
        for a in 0..n {
            for b in a + 1..n {
                if self.coincide(a, b) {
                    return Err(Error::DegenerateDrawing(format!("vertices {a} and {b} coincide")));
                }
            }
        }
        for (u, w) in self.graph.edges() {
            for v in (0..n).filter(|&v| v != u && v != w) {
                if self.orient(u, w, v) == 0 && self.strictly_between(u, w, v) {
                    return Err(Error::DegenerateDrawing(format!(
                        "vertex {v} lies inside edge {u}-{w}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// All unordered pairs of disjoint edges that cross, each as `(e, f)` with `e < f`.
    pub fn crossing_pairs(&self) -> Vec<(Edge, Edge)> {
        match &self.geometry {
            Geometry::Crossings(set) => set.iter().copied().collect(),
            Geometry::Points(_) => {
                let edges: Vec<Edge> = self.graph.edges().collect();
                let mut out = Vec::new();
                for (i, &(a, b)) in edges.iter().enumerate() {
                    for &(c, d) in &edges[i + 1..] {
                        if a == c || a == d || b == c || b == d {
                            continue;
                        }
                        let proper = self.orient(a, b, c) * self.orient(a, b, d) < 0
                            && self.orient(c, d, a) * self.orient(c, d, b) < 0;
                        if proper {
                            out.push(((a, b), (c, d)));
                        }
                    }
                }
                out
            }
        }
    }

    /// Number of crossings on each edge, in `graph.edges()` order.
    pub fn crossings_per_edge(&self) -> Vec<(Edge, usize)> {
        let mut counts: std::collections::BTreeMap<Edge, usize> = self.graph.edges().map(|e| (e, 0)).collect();
        for (e, f) in self.crossing_pairs() {
            *counts.get_mut(&e).unwrap() += 1;
            *counts.get_mut(&f).unwrap() += 1;
        }
        counts.into_iter().collect()
    }
}

/// Crossings in this particular drawing (not the crossing number).
pub fn count_crossings(d: &Drawing) -> usize {
    d.crossing_pairs().len()
}

#[derive(Clone, Debug, Serialize)]
pub struct CrossingLemmaReport {
    pub applicable: bool,
    pub crossings: usize,
    pub check: Check,
}

/// When `‖G‖ ≥ 4|G|`, every drawing must have at least `‖G‖³ / (64 |G|²)` crossings.
pub fn audit_crossing_lemma(d: &Drawing) -> CrossingLemmaReport {
    let (n, m) = (d.graph.n() as i64, d.graph.m() as i64);
    let crossings = count_crossings(d);
    let lhs = Quantity::int(crossings as i64);
    let applicable = n > 0 && m >= 4 * n;
    let rhs = if n > 0 {
        Quantity::ratio(BigInt::from(m).pow(3), BigInt::from(64 * n * n))
    } else {
        Quantity::int(0)
    };
    let check = if applicable {
        Check::ge("crossings >= m^3/(64 n^2)", lhs, rhs)
    } else {
        Check::vacuous("crossings >= m^3/(64 n^2)", lhs, rhs, "fewer than 4n edges")
    };
    CrossingLemmaReport { applicable, crossings, check }
}

#[derive(Clone, Debug, Serialize)]
pub struct PerEdgeReport {
    pub k: usize,
    pub max_crossings_on_an_edge: usize,
    pub per_edge: Check,
    pub density: Check,
    /// Which check failed, if any.
    pub failed: Option<&'static str>,
}

/// Checks that every edge has at most `k` crossings and, if so, that
/// `‖G‖ ≤ 4.108 √k |G|`.
pub fn audit_crossings_per_edge(d: &Drawing, k: usize) -> PerEdgeReport {
    let max = d.crossings_per_edge().iter().map(|&(_, c)| c).max().unwrap_or(0);
    let per_edge = Check::le("max crossings per edge <= k", Quantity::int(max as i64), Quantity::int(k as i64));
    let bound = PER_EDGE_CROSSING_CONSTANT * (k as f64).sqrt() * d.graph.n() as f64;
    let density = if per_edge.pass {
        Check::le("m <= 4.108 sqrt(k) n", Quantity::int(d.graph.m() as i64), Quantity::Approx(bound))
    } else {
        Check::vacuous(
            "m <= 4.108 sqrt(k) n",
            Quantity::int(d.graph.m() as i64),
            Quantity::Approx(bound),
            "some edge has more than k crossings",
        )
    };
    let failed = if !per_edge.pass {
        Some("per-edge")
    } else if !density.pass {
        Some("density")
    } else {
        None
    };
    PerEdgeReport { k, max_crossings_on_an_edge: max, per_edge, density, failed }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn convex(n: usize) -> Drawing {
        let pts: Vec<(i64, i64)> = (0..n as i64).map(|i| (i, i * i)).collect();
        Drawing::with_integer_points(Graph::complete(n), &pts).unwrap()
    }

    #[test]
    fn planar_k4_has_no_crossings() {
        let d = Drawing::with_integer_points(Graph::complete(4), &[(0, 0), (10, 0), (5, 10), (5, 3)]).unwrap();
        assert_eq!(count_crossings(&d), 0);
    }

    #[test]
    fn convex_k5_has_five() {
        assert_eq!(count_crossings(&convex(5)), 5);
        let r = audit_crossings_per_edge(&convex(5), 1);
        assert_eq!(r.max_crossings_on_an_edge, 2);
        assert_eq!(r.failed, Some("per-edge"));
    }

    #[test]
    fn explicit_mode() {
        let g = Graph::cycle(4);
        let d = Drawing::with_crossings(g.clone(), [((0, 1), (2, 3))]).unwrap();
        assert_eq!(count_crossings(&d), 1);
        assert!(Drawing::with_crossings(g, [((0, 1), (1, 2))]).is_err());
    }

    #[test]
    fn degenerate_rejected() {
        let g = Graph::from_edges(3, [(0, 2)]).unwrap();
        let err = Drawing::with_integer_points(g, &[(0, 0), (1, 1), (2, 2)]).unwrap_err();
        assert!(matches!(err, Error::DegenerateDrawing(_)));
        let err = Drawing::with_integer_points(Graph::path(2), &[(1, 1), (1, 1)]).unwrap_err();
        assert!(matches!(err, Error::DegenerateDrawing(_)));
    }

    #[test]
    fn touching_at_endpoint_is_not_a_crossing() {
        // Vertex 2 sits on the line through 0-1 but outside the segment.
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let d = Drawing::with_integer_points(g, &[(0, 0), (2, 0), (3, 0), (3, 5)]).unwrap();
        assert_eq!(count_crossings(&d), 0);
    }

    #[test]
    fn float_and_fraction_coordinates() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let frac: Vec<(String, String)> =
            [("0", "0"), ("1/1", "1"), ("0", "1"), ("1", "0.0")].iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
        assert_eq!(count_crossings(&Drawing::with_coordinates(g.clone(), &frac).unwrap()), 1);
        let float: Vec<(String, String)> =
            [("0", "0"), ("1e0", "1"), ("0", "1"), ("1", "0")].iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
        assert_eq!(count_crossings(&Drawing::with_coordinates(g, &float).unwrap()), 1);
    }

    #[test]
    fn crossing_lemma_examples() {
        let r = audit_crossing_lemma(&convex(12));
        assert!(r.applicable && r.check.pass);
        assert_eq!(r.crossings, 495);
        let p3 = Drawing::with_integer_points(Graph::path(3), &[(0, 0), (1, 0), (1, 1)]).unwrap();
        assert!(!audit_crossing_lemma(&p3).applicable);
    }

    #[test]
    fn parse_file_formats() {
        let d = Drawing::parse(Graph::complete(4), "coords\n0 0 0\n1 10 0\n2 5 10\n3 5 3\n").unwrap();
        assert_eq!(count_crossings(&d), 0);
        let d = Drawing::parse(Graph::cycle(4), "crossings\n0 1 2 3\n").unwrap();
        assert_eq!(count_crossings(&d), 1);
        assert!(Drawing::parse(Graph::cycle(4), "points\n").is_err());
    }
}
