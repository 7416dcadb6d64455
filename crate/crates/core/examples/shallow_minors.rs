//! Grads and top-grads of the Petersen graph, with the minors that attain them.

use bounded_expansion::grads::{audit_grad_inequalities, grad, top_grad, verify_witness};
use bounded_expansion::Graph;

fn main() -> bounded_expansion::Result<()> {
    let g = Graph::petersen();
    for d in 0..=2 {
        let r = grad(&g, d)?;
        let t = top_grad(&g, d)?;
        println!("depth {d}: grad = {}, top-grad = {}", r.value, t.value);
        verify_witness(&g, &r.witness).expect("witness checks out");
        let minor = r.witness.minor();
        println!("  densest minor: {} vertices, {} edges", minor.n(), minor.m());
    }

    let audit = audit_grad_inequalities(&g, 1)?;
    for c in &audit.checks {
        println!("{:<55} {}", c.name, if c.pass { "ok" } else { "FAILED" });
    }
    Ok(())
}
