//! Layout-based expansion bounds: queue and stack graphs and their subdivisions.

use bounded_expansion::graph::subdivide_uniform;
use bounded_expansion::layouts::{
    audit_queue_expansion, audit_stack_expansion, audit_subdivision_layout_bounds, min_pages_for_order, PageKind,
};
use bounded_expansion::Graph;

fn main() -> bounded_expansion::Result<()> {
    let k5 = Graph::complete(5);
    for audit in [audit_queue_expansion(&k5, 1)?, audit_stack_expansion(&k5, 1)?] {
        println!("{} pages = {}, top-grad = {:.3}", audit.kind, audit.pages, audit.top_grad.approx());
        for c in &audit.checks {
            println!("  {}: {} vs {:.3e} -> {}", c.name, c.lhs.approx(), c.rhs.approx(), c.pass);
        }
    }

    let sg = subdivide_uniform(&Graph::complete(4), 2);
    let order: Vec<usize> = (0..sg.result().n()).collect();
    for kind in [PageKind::Queue, PageKind::Stack] {
        let layout = min_pages_for_order(sg.result(), &order, kind, 8)?.expect("fits in 8 pages");
        let a = audit_subdivision_layout_bounds(&sg, &layout, 2)?;
        println!("K4 2-subdivision, {} layout with {} pages:", a.kind, a.pages);
        for c in &a.checks {
            println!("  {}: {}", c.name, c.pass);
        }
    }
    Ok(())
}
