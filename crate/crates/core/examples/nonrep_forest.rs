use bounded_expansion::graph::subdivide_uniform;
use bounded_expansion::nonrep::{nonrep_colouring, nonrep_forest, RootedForest};
use bounded_expansion::Graph;

fn main() -> bounded_expansion::Result<()> {
    let tree = Graph::from_edges(8, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (5, 6), (5, 7)])?;
    let f = RootedForest::new(tree.clone(), &[5])?;
    let sub = subdivide_uniform(&tree, 1);
    let c = (1..).find_map(|k| nonrep_colouring(sub.result(), k, 10_000_000).transpose()).unwrap()?;

    let r = nonrep_forest(&f, &c)?;
    println!("k = {}, colours used = {} (bound {:?})", r.k, r.colouring.colours_used(), r.bound.approx());
    for v in 0..tree.n() {
        println!("  vertex {v}: parent {:?}, colour {}", f.parent(v), r.colouring.colour(v));
    }
    for check in &r.checks {
        println!("{}: {}", check.name, check.pass);
    }
    Ok(())
}
