//! Thue chromatic numbers of small graphs, and a repetition caught in the act.

use bounded_expansion::nonrep::{find_repetition, pi_exact, Colouring};
use bounded_expansion::Graph;

fn main() -> bounded_expansion::Result<()> {
    for n in 3..=8 {
        let (pi, c) = pi_exact(&Graph::cycle(n))?;
        println!("pi(C{n}) = {pi}  {:?}", c.colours());
    }
    let (pi, _) = pi_exact(&Graph::petersen().induced(&[0, 1, 2, 3, 4, 5, 6]))?;
    println!("pi(7-vertex piece of Petersen) = {pi}");

    let bad = Colouring::new(Graph::path(6), vec![0, 1, 2, 0, 1, 2])?;
    if let Some(path) = find_repetition(&bad, 3)? {
        println!("0 1 2 0 1 2 on P6 repeats along {path:?}");
    }
    Ok(())
}
