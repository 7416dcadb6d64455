use num::rational::Ratio;
use num::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{gnp_edges, sample_gnp, trial_seed, AuditReport, TrialRow};
use crate::error::{Error, Result};
use crate::grads::{top_grad, GRAD_CAP};
use crate::graph::Graph;
use crate::report::{Check, Quantity};

/// Largest `n` for which density audits scan every small connected subgraph.
pub const EXACT_DENSITY_MAX_N: usize = 60;
/// Connected sets a single exact scan may visit.
const SCAN_BUDGET: u64 = 50_000_000;

fn required(trials: usize, fraction: f64) -> usize {
    (fraction * trials as f64).ceil() as usize
}

fn p_for(d: f64, n: usize) -> f64 {
    if n == 0 {
        0.0
    } else {
        (d / n as f64).min(1.0)
    }
}

/// `⌊(4d)^(-(1 + 1/ε)) n⌋`, the largest subgraph size the density audits cover.
pub fn size_threshold(d: f64, eps: f64, n: usize) -> usize {
    (libm::pow(4.0 * d, -(1.0 + 1.0 / eps)) * n as f64).floor().min(n as f64) as usize
}

/// Fraction of vertices of degree above `8αd` in `G(n, d/n)`, over seeded
/// trials, against `c_α = 4e α^(-4αd)`. Passes when at least 99% of the
/// trials stay within `c_α`.
pub fn audit_degree_tail(d: f64, alpha: f64, n: usize, trials: usize, seed: u64) -> Result<AuditReport> {
    if alpha <= 1.0 || d <= 0.0 {
        return Err(Error::invalid("degree tail audit needs alpha > 1 and d > 0"));
    }
    let c_alpha = 4.0 * std::f64::consts::E * libm::pow(alpha, -4.0 * alpha * d);
    let threshold = 8.0 * alpha * d;
    let mut rows = Vec::with_capacity(trials);
    for trial in 0..trials {
        let s = trial_seed(seed, trial);
        let mut degree = vec![0u32; n];
        for (u, v) in gnp_edges(n, p_for(d, n), s)? {
            degree[u] += 1;
            degree[v] += 1;
        }
        let high = degree.iter().filter(|&&x| f64::from(x) > threshold).count();
        let fraction = if n == 0 { 0.0 } else { high as f64 / n as f64 };
        rows.push(TrialRow { trial, seed: s, statistic: fraction, pass: fraction <= c_alpha });
    }
    let passing = rows.iter().filter(|r| r.pass).count();
    let observed = rows.iter().map(|r| r.statistic).fold(0.0, f64::max);
    let need = required(trials, 0.99);
    let checks = vec![Check::ge("passing trials >= 99%", Quantity::int(passing as i64), Quantity::int(need as i64))
        .with_note("a trial passes when its high-degree fraction is at most c_alpha")];
    Ok(AuditReport {
        audit: "degree-tail".into(),
        parameters: vec![("d".into(), d), ("alpha".into(), alpha), ("n".into(), n as f64)],
        seed,
        trials,
        passing_trials: passing,
        observed,
        bound: Quantity::Approx(c_alpha),
        pass: passing >= need,
        checks,
        rows,
        witness: None,
        note: (n == 0).then(|| "no vertices: vacuous".to_string()),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DensestSubgraph {
    pub vertices: Vec<usize>,
    pub edges: usize,
}

impl DensestSubgraph {
    pub fn density(&self) -> Ratio<i64> {
        if self.vertices.is_empty() {
            Ratio::from_integer(0)
        } else {
            Ratio::new(self.edges as i64, self.vertices.len() as i64)
        }
    }
}

struct Scan<'a> {
    g: &'a Graph,
    t: usize,
    set: Vec<usize>,
    in_set: Vec<bool>,
    edges: usize,
    best: DensestSubgraph,
    visited: u64,
}

impl Scan<'_> {
    fn record(&mut self) -> Result<()> {
        self.visited += 1;
        if self.visited > SCAN_BUDGET {
            return Err(Error::BudgetExceeded(SCAN_BUDGET));
        }
        let (e, k) = (self.edges, self.set.len());
        if e * self.best.vertices.len() > self.best.edges * k || self.best.vertices.is_empty() {
            let mut vertices = self.set.clone();
            vertices.sort_unstable();
            self.best = DensestSubgraph { vertices, edges: e };
        }
        Ok(())
    }

    /// Connected-set enumeration in which every set is produced once, from
    /// its least vertex `root`.
    fn extend(&mut self, mut frontier: Vec<usize>, root: usize) -> Result<()> {
        self.record()?;
        if self.set.len() == self.t {
            return Ok(());
        }
        while let Some(w) = frontier.pop() {
            let exclusive: Vec<usize> = self
                .g
                .neighbours(w)
                .filter(|&u| {
                    u > root
                        && !self.in_set[u]
                        && !frontier.contains(&u)
                        && !self.g.neighbours(u).any(|x| self.in_set[x])
                })
                .collect();
            let mut next = frontier.clone();
            next.extend(exclusive);
            let gained = self.g.neighbours(w).filter(|&x| self.in_set[x]).count();
            self.set.push(w);
            self.in_set[w] = true;
            self.edges += gained;
            self.extend(next, root)?;
            self.edges -= gained;
            self.in_set[w] = false;
            self.set.pop();
        }
        Ok(())
    }
}

/// The densest connected subgraph on at most `t` vertices (first found on ties).
pub fn densest_small_subgraph(g: &Graph, t: usize) -> Result<DensestSubgraph> {
    let mut scan = Scan {
        g,
        t,
        set: Vec::new(),
        in_set: vec![false; g.n()],
        edges: 0,
        best: DensestSubgraph { vertices: vec![], edges: 0 },
        visited: 0,
    };
    if t == 0 {
        return Ok(scan.best);
    }
    for v in 0..g.n() {
        scan.set.push(v);
        scan.in_set[v] = true;
        let frontier: Vec<usize> = g.neighbours(v).filter(|&u| u > v).collect();
        scan.extend(frontier, v)?;
        scan.in_set[v] = false;
        scan.set.pop();
    }
    Ok(scan.best)
}

/// Greedy growth from `starts` random vertices, adding the outside
/// neighbour with most edges into the set.
fn densest_sampled(g: &Graph, t: usize, starts: usize, rng: &mut ChaCha8Rng) -> DensestSubgraph {
    let mut best = DensestSubgraph { vertices: vec![], edges: 0 };
    if g.n() == 0 || t == 0 {
        return best;
    }
    for _ in 0..starts {
        let s = rng.gen_range(0..g.n());
        let mut set = vec![s];
        let mut in_set = vec![false; g.n()];
        in_set[s] = true;
        let mut edges = 0;
        loop {
            if edges * best.vertices.len() > best.edges * set.len() || best.vertices.is_empty() {
                let mut vertices = set.clone();
                vertices.sort_unstable();
                best = DensestSubgraph { vertices, edges };
            }
            if set.len() == t {
                break;
            }
            let candidate = set
                .iter()
                .flat_map(|&v| g.neighbours(v))
                .filter(|&u| !in_set[u])
                .map(|u| (g.neighbours(u).filter(|&x| in_set[x]).count(), std::cmp::Reverse(u)))
                .max();
            let Some((gain, std::cmp::Reverse(u))) = candidate else { break };
            set.push(u);
            in_set[u] = true;
            edges += gain;
        }
    }
    best
}

fn density_check(best: &DensestSubgraph, eps: f64) -> bool {
    best.density().to_f64().unwrap_or(0.0) <= 1.0 + eps
}

/// Densest subgraph of `g` on at most `t` vertices against `1 + ε`.
pub fn audit_small_subgraph_density_on(g: &Graph, t: usize, eps: f64) -> Result<AuditReport> {
    let best = densest_small_subgraph(g, t)?;
    Ok(density_report("density-on-graph", vec![("t".into(), t as f64), ("eps".into(), eps)], 0, eps, vec![(0, best)], 1.0))
}

fn density_report(
    audit: &str,
    parameters: Vec<(String, f64)>,
    seed: u64,
    eps: f64,
    found: Vec<(u64, DensestSubgraph)>,
    fraction: f64,
) -> AuditReport {
    let rows: Vec<TrialRow> = found
        .iter()
        .enumerate()
        .map(|(trial, (s, best))| TrialRow {
            trial,
            seed: *s,
            statistic: best.density().to_f64().unwrap_or(0.0),
            pass: density_check(best, eps),
        })
        .collect();
    let worst = found
        .iter()
        .map(|(_, b)| b)
        .max_by(|a, b| a.density().cmp(&b.density()))
        .cloned()
        .unwrap_or(DensestSubgraph { vertices: vec![], edges: 0 });
    let trials = rows.len();
    let passing = rows.iter().filter(|r| r.pass).count();
    let need = required(trials, fraction);
    let bound = Quantity::Approx(1.0 + eps);
    let checks = if trials == 1 {
        vec![Check::le("largest small-subgraph density <= 1 + eps", Quantity::from(worst.density()), bound.clone())]
    } else {
        vec![Check::ge(format!("passing trials >= {}%", (fraction * 100.0).round()), Quantity::int(passing as i64), Quantity::int(need as i64))
            .with_note("a trial passes when its densest small subgraph has density at most 1 + eps")]
    };
    AuditReport {
        audit: audit.into(),
        parameters,
        seed,
        trials,
        passing_trials: passing,
        observed: worst.density().to_f64().unwrap_or(0.0),
        bound,
        pass: passing >= need,
        checks,
        rows,
        witness: Some(worst.vertices),
        note: None,
    }
}

/// Every subgraph of `G(n, d/n)` on at most `(4d)^(-(1+1/ε)) n` vertices
/// should have density at most `1 + ε`. Scans exactly up to
/// [`EXACT_DENSITY_MAX_N`] vertices and samples beyond; passes when at
/// least 95% of the trials do.
pub fn audit_small_subgraph_density(d: f64, eps: f64, n: usize, trials: usize, seed: u64) -> Result<AuditReport> {
    if n > EXACT_DENSITY_MAX_N {
        return audit_small_subgraph_density_sampled(d, eps, n, trials, seed, 64);
    }
    if eps <= 0.0 || d <= 0.0 {
        return Err(Error::invalid("density audit needs eps > 0 and d > 0"));
    }
    let t = size_threshold(d, eps, n);
    let mut found = Vec::with_capacity(trials);
    for trial in 0..trials {
        let s = trial_seed(seed, trial);
        let g = sample_gnp(n, p_for(d, n), s)?.graph;
        found.push((s, densest_small_subgraph(&g, t)?));
    }
    let params = vec![("d".into(), d), ("eps".into(), eps), ("n".into(), n as f64), ("t".into(), t as f64)];
    let mut r = density_report("density", params, seed, eps, found, 0.95);
    r.note = Some("exact scan of connected subgraphs".into());
    Ok(r)
}

/// As [`audit_small_subgraph_density`], with greedy growth from `starts`
/// random vertices per trial instead of a full scan.
pub fn audit_small_subgraph_density_sampled(
    d: f64,
    eps: f64,
    n: usize,
    trials: usize,
    seed: u64,
    starts: usize,
) -> Result<AuditReport> {
    if eps <= 0.0 || d <= 0.0 {
        return Err(Error::invalid("density audit needs eps > 0 and d > 0"));
    }
    let t = size_threshold(d, eps, n);
    let mut found = Vec::with_capacity(trials);
    for trial in 0..trials {
        let s = trial_seed(seed, trial);
        let g = sample_gnp(n, p_for(d, n), s)?.graph;
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        rng.set_stream(u64::MAX);
        found.push((s, densest_sampled(&g, t, starts, &mut rng)));
    }
    let params = vec![("d".into(), d), ("eps".into(), eps), ("n".into(), n as f64), ("t".into(), t as f64)];
    let mut r = density_report("density", params, seed, eps, found, 0.95);
    r.note = Some(format!("sampled: greedy growth from {starts} random vertices per trial"));
    Ok(r)
}

/// Largest `top_grad(G[S], r)` over vertex sets of size `min(t, |G|)`;
/// enough because top-grads only grow when vertices are added.
fn exact_top_density(g: &Graph, r: usize, t: usize) -> Result<(Ratio<i64>, Vec<usize>)> {
    let n = g.n();
    let size = t.min(n);
    let mut best = (Ratio::from_integer(0), Vec::new());
    for mask in 0u64..1 << n {
        if mask.count_ones() as usize != size {
            continue;
        }
        let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let value = top_grad(&g.induced(&set), r)?.value;
        if value > best.0 || best.1.is_empty() {
            best = (value, set);
        }
    }
    Ok(best)
}

fn top_density_on(g: &Graph, r: usize, t: usize) -> Result<(f64, bool, Vec<usize>, &'static str)> {
    if g.n() <= GRAD_CAP {
        let (value, set) = exact_top_density(g, r, t)?;
        Ok((value.to_f64().unwrap_or(0.0), value <= Ratio::from_integer(2), set, "exact top-grads"))
    } else {
        let eps = 1.0 / (2 * r + 1) as f64;
        let best = densest_small_subgraph(g, t)?;
        let pass = density_check(&best, eps);
        Ok((best.density().to_f64().unwrap_or(0.0), pass, best.vertices, "density at most 1 + 1/(2r+1)"))
    }
}

/// Shallow top-grads of small subgraphs of `g` (at most `t` vertices)
/// against 2. Exact for graphs within the grads cap; larger graphs are
/// checked through the density bound `1 + 1/(2r+1)`, which excludes a
/// top-grad above 2.
pub fn audit_shallow_top_density_on(g: &Graph, r: usize, t: usize) -> Result<AuditReport> {
    let (observed, pass, witness, method) = top_density_on(g, r, t)?;
    let bound = if g.n() <= GRAD_CAP { Quantity::int(2) } else { Quantity::ratio(2 * r as i64 + 2, 2 * r as i64 + 1) };
    Ok(AuditReport {
        audit: "top-density-on-graph".into(),
        parameters: vec![("r".into(), r as f64), ("t".into(), t as f64)],
        seed: 0,
        trials: 1,
        passing_trials: pass as usize,
        observed,
        bound: bound.clone(),
        pass,
        checks: vec![Check::le(format!("worst small subgraph ({method})"), Quantity::Approx(observed), bound).with_note(method)],
        rows: vec![TrialRow { trial: 0, seed: 0, statistic: observed, pass }],
        witness: Some(witness),
        note: Some(method.into()),
    })
}

/// Subgraphs of `G(n, d/n)` on at most `(4d)^(-(1+1/(2r+1))) n` vertices
/// should have `r`-shallow top-grad at most 2. Passes when at least 95% of
/// the trials do.
pub fn audit_shallow_top_density(d: f64, r: usize, n: usize, trials: usize, seed: u64) -> Result<AuditReport> {
    if d <= 0.0 {
        return Err(Error::invalid("top density audit needs d > 0"));
    }
    let eps = 1.0 / (2 * r + 1) as f64;
    let t = size_threshold(d, eps, n);
    let mut rows = Vec::with_capacity(trials);
    let mut worst: (f64, Vec<usize>) = (0.0, Vec::new());
    let mut method = "";
    for trial in 0..trials {
        let s = trial_seed(seed, trial);
        let g = sample_gnp(n, p_for(d, n), s)?.graph;
        let (observed, pass, witness, m) = if n <= GRAD_CAP || n <= EXACT_DENSITY_MAX_N {
            top_density_on(&g, r, t)?
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(s);
            rng.set_stream(u64::MAX);
            let best = densest_sampled(&g, t, 64, &mut rng);
            let pass = density_check(&best, eps);
            (best.density().to_f64().unwrap_or(0.0), pass, best.vertices, "sampled density at most 1 + 1/(2r+1)")
        };
        method = m;
        if observed > worst.0 || worst.1.is_empty() {
            worst = (observed, witness);
        }
        rows.push(TrialRow { trial, seed: s, statistic: observed, pass });
    }
    let passing = rows.iter().filter(|r| r.pass).count();
    let need = required(trials, 0.95);
    let bound = if n <= GRAD_CAP { Quantity::int(2) } else { Quantity::Approx(1.0 + eps) };
    Ok(AuditReport {
        audit: "top-density".into(),
        parameters: vec![("d".into(), d), ("r".into(), r as f64), ("n".into(), n as f64), ("t".into(), t as f64)],
        seed,
        trials,
        passing_trials: passing,
        observed: worst.0,
        bound: bound.clone(),
        pass: passing >= need,
        checks: vec![Check::ge("passing trials >= 95%", Quantity::int(passing as i64), Quantity::int(need as i64))
            .with_note("a trial passes when its worst small subgraph is within the bound")],
        rows,
        witness: Some(worst.1),
        note: Some(method.into()),
    })
}
