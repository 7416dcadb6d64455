//! From a non-repetitive colouring of G' to an acyclic colouring of G, then
//! to a non-repetitive colouring of G.

use bounded_expansion::graph::subdivide_uniform;
use bounded_expansion::nonrep::{acyclic_from_subdivision, nonrep_colouring, nonrep_graph, pi_from_subdivision};
use bounded_expansion::Graph;

fn main() -> bounded_expansion::Result<()> {
    let g = Graph::complete(4);
    let sg = subdivide_uniform(&g, 1);
    let c = (1..).find_map(|k| nonrep_colouring(sg.result(), k, 10_000_000).transpose()).unwrap()?;
    println!("K4' coloured with {} colours", c.colours_used());

    let acyclic = acyclic_from_subdivision(&g, &c)?;
    println!("acyclic colouring of K4: {:?} (bound {:?})", acyclic.colouring.colours(), acyclic.bound);
    let q = nonrep_graph(&g, &acyclic.colouring, &c)?;
    println!("non-repetitive colouring of K4: {:?}", q.colouring.colours());

    let whole = pi_from_subdivision(&sg, &c)?;
    for check in &whole.checks {
        println!("{}: {}", check.name, check.pass);
    }
    Ok(())
}
