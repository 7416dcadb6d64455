use bounded_expansion::layouts::{audit_jump_queue, Poset, JUMP_NUMBER_CAP};

fn main() -> bounded_expansion::Result<()> {
    for k in 1..=3 {
        let p = Poset::boolean_lattice(k);
        let a = audit_jump_queue(&p, JUMP_NUMBER_CAP)?;
        println!(
            "2^{k}: jn = {}, extension {:?}, Hasse qn = {:?}, pages along extension = {:?}",
            a.jump_number,
            a.extension,
            a.queue_number,
            a.layout.as_ref().map(|l| l.page_count())
        );
    }
    Ok(())
}
