//! Exact queue- and stack-numbers, and checking a hand-written layout.

use bounded_expansion::layouts::{queue_number, stack_number, validate_layout, Layout};
use bounded_expansion::Graph;

fn main() -> bounded_expansion::Result<()> {
    for n in 3..=7 {
        let k = Graph::complete(n);
        let (qn, _) = queue_number(&k)?;
        let (sn, sl) = stack_number(&k)?;
        println!("K{n}: qn = {qn}, sn = {sn}");
        if n == 5 {
            print!("{}", sl.to_text());
        }
    }

    let k4 = Graph::complete(4);
    let one_queue = Layout::parse("order: 0 1 2 3\npage 0 queue: 0 1, 0 2, 0 3, 1 2, 1 3, 2 3\n")?;
    let check = validate_layout(&k4, &one_queue)?;
    println!("K4 on one queue valid: {}", check.valid);
    for v in &check.violations {
        println!("  page {}: {:?} nests {:?}", v.page, v.edges[0], v.edges[1]);
    }
    Ok(())
}
