use bounded_expansion::grads::{hadwiger, hadwiger_model};
use bounded_expansion::Graph;

fn main() -> bounded_expansion::Result<()> {
    for (name, g) in [("K5", Graph::complete(5)), ("C7", Graph::cycle(7)), ("Petersen", Graph::petersen())] {
        let h = hadwiger(&g)?;
        let model = hadwiger_model(&g)?;
        println!("{name}: h = {h}, branch sets {model:?}");
    }
    Ok(())
}
