//! Explicit non-repetitive colourings of subdivided complete graphs.

use serde::Serialize;

use super::{find_repetition, pi_exact_with_cap, thue_word, Colouring, PI_CAP};
use crate::error::{Error, Result};
use crate::graph::{subdivide_uniform, Graph};
use crate::report::{Check, Quantity};

/// Least `r` with `r^e >= n`.
fn ceil_root(n: usize, e: u32) -> usize {
    let mut r = 0usize;
    while r.checked_pow(e).map_or(false, |p| p < n) {
        r += 1;
    }
    r
}

#[derive(Clone, Debug, Serialize)]
pub struct KnPrimeColouring {
    pub n: usize,
    /// `⌈n^(1/3)⌉`.
    pub big_n: usize,
    pub colouring: Colouring,
    pub colours_used: usize,
    pub bound: usize,
    pub checks: Vec<Check>,
}

fn kn_prime_bound(big_n: usize) -> usize {
    big_n * big_n + big_n + big_n * big_n.saturating_sub(1) / 2
}

/// Colours the 1-subdivision of `K_n`. Vertex `x` is read as the pair
/// `(i, k) = (x / N, x mod N)` and coloured `A_i`; the division vertex
/// between `(i, k)` and `(j, l)` is coloured `B_k` when `i < j` and
/// `C_{k,l}` when `i = j`, `k < l`.
pub fn colour_kn_prime(n: usize) -> Result<KnPrimeColouring> {
    if n < 2 {
        return Err(Error::invalid("K_n' needs n >= 2"));
    }
    let big_n = ceil_root(n, 3);
    let sub = subdivide_uniform(&Graph::complete(n), 1);
    let pair = |x: usize| (x / big_n, x % big_n);
    let mut labels: Vec<(u8, usize, usize)> = (0..n).map(|x| (0, pair(x).0, 0)).collect();
    labels.resize(sub.result().n(), (0, 0, 0));
    for (&(x, y), path) in sub.divisions() {
        let ((i, k), (j, l)) = (pair(x), pair(y));
        labels[path[0]] = if i < j { (1, k, 0) } else { (2, k, l) };
    }
    let colouring = Colouring::from_labels(sub.result().clone(), &labels)?;
    let colours_used = colouring.colours_used();
    let bound = kn_prime_bound(big_n);
    let checks = vec![Check::le("colours <= N^2 + N + C(N,2)", Quantity::int(colours_used as i64), Quantity::int(bound as i64))];
    Ok(KnPrimeColouring { n, big_n, colouring, colours_used, bound, checks })
}

/// Colours [`colour_kn_prime`] would use, and the bound, without building the graph.
pub fn kn_prime_colour_count(n: usize) -> (usize, usize) {
    let big_n = ceil_root(n, 3);
    let groups = n.div_ceil(big_n.max(1));
    let b = if groups >= 2 { big_n } else { 0 };
    let first = n.min(big_n);
    (groups + b + first * first.saturating_sub(1) / 2, kn_prime_bound(big_n))
}

#[derive(Clone, Debug, Serialize)]
pub struct KndColouring {
    pub n: usize,
    pub d: usize,
    pub a: usize,
    pub b: usize,
    pub colouring: Colouring,
    pub colours_used: usize,
    pub checks: Vec<Check>,
}

/// Colours the `d`-subdivision of `K_n` with at most `a + 8b` colours,
/// given `n <= a b^d`. Vertex `x` is labelled by its digits
/// `(v_0, v_1, …, v_d)` with `v_0 < a` and `v_i < b`, so the lexicographic
/// order on labels is the order on ids. Division vertex `i` on the path from
/// `v` to `w > v` is coloured `(v_i == w_i, c_i, v_i)`, where
/// `c = 0, t_1, …, t_{d-1}` with `t` a square-free word over `{1, 2, 3}`.
pub fn colour_knd(n: usize, d: usize, a: usize, b: usize) -> Result<KndColouring> {
    if a < 1 || b < 2 || d < 2 {
        return Err(Error::invalid("colour_knd needs a >= 1, b >= 2 and d >= 2"));
    }
    let capacity = (b as u128).checked_pow(d as u32).and_then(|p| p.checked_mul(a as u128));
    if capacity.is_some_and(|c| (n as u128) > c) {
        return Err(Error::invalid(format!("n = {n} exceeds a * b^d")));
    }
    let digits = |x: usize| {
        let mut out = vec![0; d + 1];
        let mut rest = x;
        for i in (1..=d).rev() {
            out[i] = rest % b;
            rest /= b;
        }
        out[0] = rest;
        out
    };
    let mut c = vec![0];
    c.extend(thue_word(d - 1).as_colours().iter().map(|&t| t + 1));
    let sub = subdivide_uniform(&Graph::complete(n), d);
    let mut labels: Vec<(u8, usize, usize, usize)> = (0..n).map(|x| (0, digits(x)[0], 0, 0)).collect();
    labels.resize(sub.result().n(), (0, 0, 0, 0));
    for (&(v, w), path) in sub.divisions() {
        let (dv, dw) = (digits(v), digits(w));
        for (i, &r) in path.iter().enumerate() {
            labels[r] = (1, (dv[i + 1] == dw[i + 1]) as usize, c[i], dv[i + 1]);
        }
    }
    let colouring = Colouring::from_labels(sub.result().clone(), &labels)?;
    let colours_used = colouring.colours_used();
    let checks = vec![Check::le("colours <= A + 8B", Quantity::int(colours_used as i64), Quantity::int((a + 8 * b) as i64))];
    Ok(KndColouring { n, d, a, b, colouring, colours_used, checks })
}

/// `A = B = max(2, ⌈n^(1/(d+1))⌉)`, for which `A + 8B = 9⌈n^(1/(d+1))⌉`
/// whenever `n >= 2`.
pub fn knd_parameters(n: usize, d: usize) -> (usize, usize) {
    let b = ceil_root(n, d as u32 + 1).max(2);
    (b, b)
}

#[derive(Clone, Debug, Serialize)]
pub struct KndAudit {
    pub n: usize,
    pub d: usize,
    pub vertices: usize,
    pub pi: usize,
    /// Colours used by [`colour_knd`] with [`knd_parameters`], when `d >= 2`.
    pub explicit_colours: Option<usize>,
    pub checks: Vec<Check>,
}

/// Computes `π` of the `d`-subdivision of `K_n` exactly and checks
/// `(n/2)^(1/(d+1)) <= π <= ` the explicit colouring's count.
pub fn audit_knd_lower_bound(n: usize, d: usize) -> Result<KndAudit> {
    audit_knd_lower_bound_with_cap(n, d, PI_CAP)
}

pub fn audit_knd_lower_bound_with_cap(n: usize, d: usize, cap: usize) -> Result<KndAudit> {
    let vertices = n + n * n.saturating_sub(1) / 2 * d;
    if vertices > cap {
        return Err(Error::CapExceeded { what: "audit_knd_lower_bound", size: vertices, cap });
    }
    let g = subdivide_uniform(&Graph::complete(n), d).result().clone();
    let (pi, _) = pi_exact_with_cap(&g, cap)?;
    let mut checks = vec![Check::ge(
        "pi >= (n/2)^(1/(d+1))",
        Quantity::int(num::pow(num::BigInt::from(pi), d + 1)),
        Quantity::ratio(n as i64, 2),
    )
    .with_note("both sides raised to the power d+1")];
    let mut explicit_colours = None;
    if d >= 2 && n >= 1 {
        let (a, b) = knd_parameters(n, d);
        let explicit = colour_knd(n, d, a, b)?;
        let clean = find_repetition(&explicit.colouring, explicit.colouring.graph().n() / 2)?.is_none();
        checks.push(Check::holds("explicit colouring is non-repetitive", clean));
        checks.push(Check::le("pi <= explicit colours", Quantity::int(pi as i64), Quantity::int(explicit.colours_used as i64)));
        checks.extend(explicit.checks);
        explicit_colours = Some(explicit.colours_used);
    } else {
        checks.push(Check::vacuous(
            "pi <= explicit colours",
            Quantity::int(pi as i64),
            Quantity::int(0),
            "the explicit colouring needs d >= 2",
        ));
    }
    Ok(KndAudit { n, d, vertices, pi, explicit_colours, checks })
}
