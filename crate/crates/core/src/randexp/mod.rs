//! Seeded `G(n, p)` sampling and Monte-Carlo audits of sparse random graphs.
//!
//! Sampling uses ChaCha8 with the seed as key and the row index `u` as the
//! stream number. Row `u` draws its neighbours `v > u` by geometric skips,
//! so each row is independent of every other and the edge set depends only
//! on `(n, p, seed)`. Logarithms come from `libm` to keep the skips
//! identical across platforms.
//!
//! The audits are statistical evidence, not proofs: each trial uses seed
//! `seed + trial`, and every report records the seeds it used.

mod audits;
mod cycles;

pub use audits::{
    audit_degree_tail, audit_shallow_top_density, audit_shallow_top_density_on, audit_small_subgraph_density,
    audit_small_subgraph_density_on, audit_small_subgraph_density_sampled, densest_small_subgraph, size_threshold,
    DensestSubgraph, EXACT_DENSITY_MAX_N,
};
pub use cycles::{audit_short_cycles, count_short_cycles, CYCLE_LENGTH_CAP};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::report::{Check, Quantity};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GnpSample {
    pub n: usize,
    pub p: f64,
    pub seed: u64,
    pub graph: Graph,
}

/// Edges `(u, v)`, `u < v`, of `G(n, p)` in lexicographic order.
pub fn gnp_edges(n: usize, p: f64, seed: u64) -> Result<Vec<(usize, usize)>> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::invalid(format!("edge probability {p} is not in [0, 1]")));
    }
    let mut edges = Vec::new();
    if p == 0.0 {
        return Ok(edges);
    }
    if p == 1.0 {
        return Ok((0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect());
    }
    let log_q = libm::log1p(-p);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for u in 0..n {
        rng.set_stream(u as u64);
        rng.set_word_pos(0);
        let mut v = u;
        loop {
            let r: f64 = 1.0 - rng.gen::<f64>();
            let skip = (libm::log(r) / log_q).floor();
            if skip >= (n - v) as f64 {
                break;
            }
            v += 1 + skip as usize;
            if v >= n {
                break;
            }
            edges.push((u, v));
        }
    }
    Ok(edges)
}

pub fn sample_gnp(n: usize, p: f64, seed: u64) -> Result<GnpSample> {
    let graph = Graph::from_edges(n, gnp_edges(n, p, seed)?)?;
    Ok(GnpSample { n, p, seed, graph })
}

/// One trial of an audit.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TrialRow {
    pub trial: usize,
    pub seed: u64,
    pub statistic: f64,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AuditReport {
    pub audit: String,
    pub parameters: Vec<(String, f64)>,
    pub seed: u64,
    pub trials: usize,
    pub passing_trials: usize,
    /// Worst (or mean, where stated) observed statistic.
    pub observed: f64,
    pub bound: Quantity,
    pub pass: bool,
    pub checks: Vec<Check>,
    pub rows: Vec<TrialRow>,
    /// Vertices of the worst subgraph found, for density audits.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl AuditReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("trial,seed,statistic,pass\n");
        for r in &self.rows {
            out.push_str(&format!("{},{},{},{}\n", r.trial, r.seed, r.statistic, r.pass));
        }
        out
    }
}

pub(crate) fn trial_seed(seed: u64, trial: usize) -> u64 {
    seed.wrapping_add(trial as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extremes() {
        assert_eq!(sample_gnp(6, 0.0, 3).unwrap().graph.m(), 0);
        assert_eq!(sample_gnp(6, 1.0, 3).unwrap().graph, Graph::complete(6));
        assert!(sample_gnp(3, 1.5, 0).is_err());
        assert_eq!(sample_gnp(0, 0.5, 0).unwrap().graph.n(), 0);
    }

    #[test]
    fn reproducible() {
        let a = sample_gnp(200, 0.05, 42).unwrap();
        let b = sample_gnp(200, 0.05, 42).unwrap();
        assert_eq!(a, b);
        assert_ne!(a.graph, sample_gnp(200, 0.05, 43).unwrap().graph);
    }

    #[test]
    fn mean_degree_near_one() {
        let n = 10_000;
        let p = 1.0 / n as f64;
        let total: usize = (0..100).map(|s| gnp_edges(n, p, s).unwrap().len()).sum();
        let mean = 2.0 * total as f64 / (100.0 * n as f64);
        assert!((mean - 1.0).abs() < 0.05, "{mean}");
    }

    #[test]
    fn pair_frequency_matches_p() {
        let hits: usize = (0..2000).map(|s| gnp_edges(5, 0.3, s).unwrap().iter().filter(|&&e| e == (1, 3)).count()).sum();
        let freq = hits as f64 / 2000.0;
        assert!((freq - 0.3).abs() < 0.05, "{freq}");
    }
}
