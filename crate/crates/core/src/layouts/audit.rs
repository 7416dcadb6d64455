use num::bigint::BigInt;
use num::rational::BigRational;
use serde::Serialize;

use super::{contraction_page_bound, queue_number_with_cap, stack_number_with_cap, validate_layout, Layout, PageKind, LAYOUT_CAP};
use crate::error::{Error, Result};
use crate::grads::{grad, top_grad};
use crate::graph::{Graph, SubdividedGraph};
use crate::report::{Check, Quantity};

fn int(v: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(v.into())
}

/// A `k`-queue graph has average degree below `4k`.
pub fn audit_queue_density(g: &Graph, layout: &Layout) -> Check {
    let k = layout.page_count();
    let name = "average degree < 4k";
    let rhs = Quantity::int(4 * k as i64);
    if g.m() == 0 {
        return Check::vacuous(name, Quantity::int(0), rhs, "no edges");
    }
    Check::lt(name, Quantity::ratio(2 * g.m() as i64, g.n() as i64), rhs)
}

#[derive(Clone, Debug, Serialize)]
pub struct SubdivisionLayoutAudit {
    pub kind: PageKind,
    pub pages: usize,
    pub t: usize,
    /// Exact queue-number of the base graph, for queue layouts.
    pub base_queue_number: Option<usize>,
    pub checks: Vec<Check>,
}

/// Bounds on the base graph implied by a `k`-page layout of a
/// `(≤t)`-subdivision of it.
pub fn audit_subdivision_layout_bounds(sg: &SubdividedGraph, layout: &Layout, t: usize) -> Result<SubdivisionLayoutAudit> {
    if sg.max_divisions() > t {
        return Err(Error::invalid(format!("an edge has {} division vertices, more than t = {t}", sg.max_divisions())));
    }
    let check = validate_layout(sg.result(), layout)?;
    if !check.valid {
        return Err(Error::invalid("layout of the subdivision is not valid"));
    }
    let kind = layout.kind().unwrap_or(PageKind::Queue);
    if layout.pages.iter().any(|p| p.kind != kind) {
        return Err(Error::invalid("layout mixes queues and stacks"));
    }
    let k = layout.page_count();
    let base = sg.base();
    let mut checks = Vec::new();
    let mut base_queue_number = None;
    match kind {
        PageKind::Queue => {
            let (qn, _) = queue_number_with_cap(base, LAYOUT_CAP)?;
            base_queue_number = Some(qn);
            let lhs = Quantity::int(qn as i64);
            let general = BigRational::new(num::pow(BigInt::from(2 * k + 2), 2 * t), BigInt::from(2)) - int(1);
            let name = "qn(G) <= (2k+2)^(2t)/2 - 1";
            if t == 0 {
                checks.push(Check::vacuous(name, lhs.clone(), Quantity::Exact(general), "no division vertices"));
                checks.push(Check::le("qn(G) <= k", lhs, Quantity::int(k as i64)));
            } else {
                checks.push(Check::le(name, lhs.clone(), Quantity::Exact(general)));
                if t == 1 {
                    checks.push(Check::le("qn(G) <= 2k(k+1)", lhs, Quantity::int((2 * k * (k + 1)) as i64)));
                }
            }
        }
        PageKind::Stack => {
            let name = "m(G) <= 4k(5k-5)^(t+1)/(5k-6) n(G)";
            let lhs = Quantity::int(base.m() as i64);
            let k_big = k as i64;
            if k >= 3 {
                let bound = BigRational::new(
                    BigInt::from(4 * k_big) * num::pow(BigInt::from(5 * k_big - 5), t + 1) * BigInt::from(base.n()),
                    BigInt::from(5 * k_big - 6),
                );
                checks.push(Check::le(name, lhs, Quantity::Exact(bound)));
            } else {
                checks.push(Check::vacuous(name, lhs, Quantity::int(0), "fewer than three stacks"));
            }
        }
    }
    Ok(SubdivisionLayoutAudit { kind, pages: k, t, base_queue_number, checks })
}

#[derive(Clone, Debug, Serialize)]
pub struct ExpansionAudit {
    pub kind: PageKind,
    /// Exact queue- or stack-number.
    pub pages: usize,
    pub depth: usize,
    pub top_grad: Quantity,
    pub checks: Vec<Check>,
}

/// For a graph with queue-number `k`:
/// `top_grad_d < 4(8(2k+2)^(4d))^((d+1)^2)` and
/// `grad_d <= 8k[((2k)^(d+1) - 1)/(2k - 1)]^2`.
pub fn audit_queue_expansion(g: &Graph, d: usize) -> Result<ExpansionAudit> {
    let (k, _) = queue_number_with_cap(g, LAYOUT_CAP)?;
    let top = top_grad(g, d)?.value;
    let gr = grad(g, d)?.value;
    let inner = int(8) * int(num::pow(BigInt::from(2 * k + 2), 4 * d));
    let bound = int(4) * num::pow::Pow::pow(inner, ((d + 1) * (d + 1)) as u32);
    let contraction = int(4) * int(contraction_page_bound(k, d));
    let checks = vec![
        Check::lt("top_grad_d < 4(8(2k+2)^(4d))^((d+1)^2)", top.into(), Quantity::Exact(bound)),
        Check::le("grad_d <= 8k[((2k)^(d+1)-1)/(2k-1)]^2", gr.into(), Quantity::Exact(contraction)),
    ];
    Ok(ExpansionAudit { kind: PageKind::Queue, pages: k, depth: d, top_grad: top.into(), checks })
}

/// For a graph with stack-number `k >= 3`: `top_grad_r <= 4k(5k-5)^(2r+1)/(5k-6)`.
pub fn audit_stack_expansion(g: &Graph, r: usize) -> Result<ExpansionAudit> {
    let (k, _) = stack_number_with_cap(g, LAYOUT_CAP)?;
    let top = top_grad(g, r)?.value;
    let name = "top_grad_r <= 4k(5k-5)^(2r+1)/(5k-6)";
    let check = if k >= 3 {
        let k = k as i64;
        let bound = BigRational::new(BigInt::from(4 * k) * num::pow(BigInt::from(5 * k - 5), 2 * r + 1), BigInt::from(5 * k - 6));
        Check::le(name, top.into(), Quantity::Exact(bound))
    } else {
        Check::vacuous(name, top.into(), Quantity::int(0), "stack-number below three")
    };
    Ok(ExpansionAudit { kind: PageKind::Stack, pages: k, depth: r, top_grad: top.into(), checks: vec![check] })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::subdivide_uniform;
    use crate::layouts::{min_pages_for_order, queue_number};
    use crate::report::all_pass;

    #[test]
    fn density_examples() {
        let (_, l) = queue_number(&Graph::complete(3)).unwrap();
        assert!(audit_queue_density(&Graph::complete(3), &l).pass);
        let (k, l) = queue_number(&Graph::complete(4)).unwrap();
        assert_eq!(k, 2);
        assert!(audit_queue_density(&Graph::complete(4), &l).pass);
    }

    #[test]
    fn subdivided_k4_queue_bound() {
        let sg = subdivide_uniform(&Graph::complete(4), 1);
        let order: Vec<usize> = (0..sg.result().n()).collect();
        let l = min_pages_for_order(sg.result(), &order, PageKind::Queue, 6).unwrap().unwrap();
        let a = audit_subdivision_layout_bounds(&sg, &l, 1).unwrap();
        assert_eq!(a.base_queue_number, Some(2));
        assert!(all_pass(&a.checks));
    }

    #[test]
    fn subdivided_k5_stack_bound() {
        let sg = subdivide_uniform(&Graph::complete(5), 1);
        let l = (3..6)
            .find_map(|k| {
                let order: Vec<usize> = (0..sg.result().n()).collect();
                min_pages_for_order(sg.result(), &order, PageKind::Stack, k).unwrap()
            })
            .unwrap();
        let a = audit_subdivision_layout_bounds(&sg, &l, 1).unwrap();
        assert!(all_pass(&a.checks));
    }

    #[test]
    fn zero_subdivision_is_direct() {
        let sg = subdivide_uniform(&Graph::complete(4), 0);
        let (_, l) = queue_number(sg.result()).unwrap();
        let a = audit_subdivision_layout_bounds(&sg, &l, 0).unwrap();
        assert!(a.checks[0].note.is_some());
        assert!(all_pass(&a.checks));
    }

    #[test]
    fn expansion_audits() {
        for g in [Graph::complete(5), Graph::petersen().induced(&[0, 1, 2, 3, 4, 5, 6, 7]), Graph::cycle(6)] {
            for d in 0..3 {
                assert!(all_pass(&audit_queue_expansion(&g, d).unwrap().checks));
                assert!(all_pass(&audit_stack_expansion(&g, d).unwrap().checks));
            }
        }
    }
}
