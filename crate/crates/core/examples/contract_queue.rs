//! Contract a 1-subdivided K4 back to K4 while keeping a queue layout.

use bounded_expansion::graph::subdivide_uniform;
use bounded_expansion::layouts::{contract_queue_layout, queue_number_with_cap};
use bounded_expansion::Graph;

fn main() -> bounded_expansion::Result<()> {
    let sg = subdivide_uniform(&Graph::complete(4), 1);
    let g = sg.result();
    let (k, layout) = queue_number_with_cap(g, 10)?;
    println!("K4' has {} vertices and queue-number {k}", g.n());

    // Attach each division vertex to one end of its edge.
    let mut parts: Vec<Vec<usize>> = (0..4).map(|v| vec![v]).collect();
    for (i, (&(u, v), path)) in sg.divisions().iter().enumerate() {
        parts[if i % 2 == 0 { u } else { v }].push(path[0]);
    }
    let out = contract_queue_layout(g, &layout, &parts, 1)?;
    println!("contracted: {} vertices, {} edges, {} queues (bound {:?})", out.graph.n(), out.graph.m(), out.layout.page_count(), out.bound.approx());
    print!("{}", out.layout.to_text());
    for c in &out.checks {
        println!("{}: {}", c.name, c.pass);
    }
    Ok(())
}
