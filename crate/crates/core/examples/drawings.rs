use bounded_expansion::graph::{audit_crossing_lemma, audit_crossings_per_edge, count_crossings, Drawing};
use bounded_expansion::Graph;

fn main() -> bounded_expansion::Result<()> {
    // Points on a parabola are in convex position.
    let points: Vec<(i64, i64)> = (0..12).map(|i| (i, i * i)).collect();
    let d = Drawing::with_integer_points(Graph::complete(12), &points)?;
    println!("convex K12: {} crossings", count_crossings(&d));
    let lemma = audit_crossing_lemma(&d);
    println!("crossing lemma: {} >= {:.1} -> {}", lemma.crossings, lemma.check.rhs.approx(), lemma.check.pass);

    let square = Drawing::parse(Graph::complete(4), "coords\n0 0 0\n1 2 0\n2 2 2\n3 0 2\n")?;
    let r = audit_crossings_per_edge(&square, 1);
    println!("K4 on a square: at most {} crossings per edge, failed = {:?}", r.max_crossings_on_an_edge, r.failed);
    Ok(())
}
