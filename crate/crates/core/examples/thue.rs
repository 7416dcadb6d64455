use bounded_expansion::graph::Graph;
use bounded_expansion::nonrep::{is_nonrepetitive, is_square_free, thue_word, Colouring};

fn main() -> bounded_expansion::Result<()> {
    let w = thue_word(60);
    println!("{w}");
    println!("square-free: {}", is_square_free(w.symbols()));

    let path = Graph::path(60);
    let c = Colouring::new(path, w.as_colours())?;
    println!("P60 with {} colours non-repetitive: {}", c.colours_used(), is_nonrepetitive(&c)?);
    Ok(())
}
