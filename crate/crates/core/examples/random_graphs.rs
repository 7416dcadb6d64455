//! Seeded G(n, p) samples and Monte-Carlo audits of sparse random graphs.

use bounded_expansion::randexp::{
    audit_degree_tail, audit_shallow_top_density, audit_short_cycles, audit_small_subgraph_density, sample_gnp,
};

fn main() -> bounded_expansion::Result<()> {
    let s = sample_gnp(1000, 2.0 / 1000.0, 42)?;
    println!("G(1000, 2/n) seed 42: {} edges, max degree {}", s.graph.m(), s.graph.max_degree());

    let reports = [
        audit_degree_tail(1.0, 2.0, 20_000, 20, 1)?,
        audit_short_cycles(1.0, 5_000, 20, 6, 1)?,
        audit_small_subgraph_density(0.5, 0.5, 60, 20, 1)?,
        audit_shallow_top_density(0.5, 1, 12, 20, 1)?,
    ];
    for r in &reports {
        println!("{:<12} {}/{} trials, observed {:.4}, pass {}", r.audit, r.passing_trials, r.trials, r.observed, r.pass);
    }
    print!("{}", reports[0].to_csv().lines().take(4).collect::<Vec<_>>().join("\n"));
    println!();
    Ok(())
}
