use bounded_expansion::nonrep::{check_star_acyclic, chromatic_number, star_chromatic_number, Colouring, ColouringMode};
use bounded_expansion::Graph;

fn main() -> bounded_expansion::Result<()> {
    let c4 = Colouring::new(Graph::cycle(4), vec![0, 1, 0, 1])?;
    for mode in [ColouringMode::Proper, ColouringMode::Star, ColouringMode::Acyclic, ColouringMode::StrongStar] {
        let r = check_star_acyclic(&c4, mode);
        println!("C4 alternating, {mode:?}: {} {:?}", r.valid, r.witness);
    }
    let g = Graph::petersen();
    println!("Petersen: chi = {}, star chromatic = {}", chromatic_number(&g).0, star_chromatic_number(&g).0);
    Ok(())
}
