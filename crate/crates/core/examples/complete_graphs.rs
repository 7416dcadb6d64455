//! Explicit colourings of subdivided complete graphs.

use bounded_expansion::nonrep::{
    audit_knd_lower_bound, colour_kn_prime, colour_knd, is_nonrepetitive, kn_prime_colour_count, knd_parameters,
};

fn main() -> bounded_expansion::Result<()> {
    let k = colour_kn_prime(8)?;
    println!("K8': {} colours, bound {}, non-repetitive {}", k.colours_used, k.bound, is_nonrepetitive(&k.colouring)?);
    for n in [27, 64, 125, 1000] {
        let (used, bound) = kn_prime_colour_count(n);
        println!("K{n}': {used} colours (bound {bound})");
    }

    let (a, b) = knd_parameters(9, 2);
    let knd = colour_knd(9, 2, a, b)?;
    println!("K(9,2) with A = {a}, B = {b}: {} colours, limit {}", knd.colours_used, a + 8 * b);

    let audit = audit_knd_lower_bound(3, 2)?;
    println!("pi of the 2-subdivided triangle = {}", audit.pi);
    Ok(())
}
