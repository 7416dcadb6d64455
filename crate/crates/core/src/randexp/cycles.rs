use std::collections::BTreeMap;

use super::{gnp_edges, trial_seed, AuditReport, TrialRow};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::report::{Check, Quantity};

/// Longest cycle length [`count_short_cycles`] enumerates.
pub const CYCLE_LENGTH_CAP: usize = 8;

/// Number of cycles of each length `3..=t_max`.
pub fn count_short_cycles(g: &Graph, t_max: usize) -> Result<BTreeMap<usize, u64>> {
    if t_max > CYCLE_LENGTH_CAP {
        return Err(Error::CapExceeded { what: "count_short_cycles", size: t_max, cap: CYCLE_LENGTH_CAP });
    }
    let mut counts: BTreeMap<usize, u64> = (3..=t_max).map(|t| (t, 0)).collect();
    let mut on_path = vec![false; g.n()];
    // Each cycle is found from its least vertex, in the direction whose
    // second vertex is smaller than its last.
    fn walk(g: &Graph, start: usize, path: &mut Vec<usize>, on_path: &mut [bool], t_max: usize, counts: &mut BTreeMap<usize, u64>) {
        let last = *path.last().unwrap();
        for w in g.neighbours(last) {
            if w == start && path.len() >= 3 && path[1] < last {
                *counts.get_mut(&path.len()).unwrap() += 1;
            }
            if w > start && !on_path[w] && path.len() < t_max {
                on_path[w] = true;
                path.push(w);
                walk(g, start, path, on_path, t_max, counts);
                path.pop();
                on_path[w] = false;
            }
        }
    }
    for s in 0..g.n() {
        let mut path = vec![s];
        on_path[s] = true;
        walk(g, s, &mut path, &mut on_path, t_max, &mut counts);
        on_path[s] = false;
    }
    Ok(counts)
}

/// Mean number of `t`-cycles in `G(n, c/n)` for `t = 3..=t_max`, against
/// `(e^2 c / 2)^t`.
pub fn audit_short_cycles(c: f64, n: usize, trials: usize, t_max: usize, seed: u64) -> Result<AuditReport> {
    if c <= 0.0 || t_max < 3 {
        return Err(Error::invalid("cycle audit needs c > 0 and t_max >= 3"));
    }
    let p = if n == 0 { 0.0 } else { (c / n as f64).min(1.0) };
    let mut totals: BTreeMap<usize, u64> = (3..=t_max).map(|t| (t, 0)).collect();
    let mut rows = Vec::with_capacity(trials);
    for trial in 0..trials {
        let s = trial_seed(seed, trial);
        let g = Graph::from_edges(n, gnp_edges(n, p, s)?)?;
        let counts = count_short_cycles(&g, t_max)?;
        for (t, k) in &counts {
            *totals.get_mut(t).unwrap() += k;
        }
        rows.push(TrialRow { trial, seed: s, statistic: counts.values().sum::<u64>() as f64, pass: true });
    }
    let base = libm::exp(2.0) * c / 2.0;
    let mut checks = Vec::new();
    let mut worst_ratio: f64 = 0.0;
    for (&t, &total) in &totals {
        let mean = if trials == 0 { 0.0 } else { total as f64 / trials as f64 };
        let bound = libm::pow(base, t as f64);
        worst_ratio = worst_ratio.max(mean / bound);
        checks.push(Check::le(format!("mean {t}-cycles <= (e^2 c/2)^{t}"), Quantity::Approx(mean), Quantity::Approx(bound)));
    }
    let pass = checks.iter().all(|ch| ch.pass);
    Ok(AuditReport {
        audit: "cycles".into(),
        parameters: vec![("c".into(), c), ("n".into(), n as f64), ("t_max".into(), t_max as f64)],
        seed,
        trials,
        passing_trials: if pass { trials } else { 0 },
        observed: worst_ratio,
        bound: Quantity::int(1),
        pass,
        checks,
        rows,
        witness: None,
        note: Some("observed is the largest ratio of mean count to bound; rows hold total short cycles per trial".into()),
    })
}
