use num::bigint::BigInt;
use num::rational::{BigRational, Ratio};
use num::{One, Zero};
use serde::Serialize;

use super::{grad_with_cap, hadwiger_with_cap, top_grad_with, TopMinorMode, GRAD_CAP, HADWIGER_CAP};
use crate::error::Result;
use crate::graph::Graph;
use crate::report::{serialize_ratio, Check, Quantity};

/// Exact grads of one graph together with every density inequality they obey.
#[derive(Clone, Debug, Serialize)]
pub struct GradAudit {
    pub depth: usize,
    #[serde(serialize_with = "serialize_ratio")]
    pub grad: Ratio<i64>,
    #[serde(serialize_with = "serialize_ratio")]
    pub top_grad: Ratio<i64>,
    #[serde(serialize_with = "serialize_ratio")]
    pub top_grad_0: Ratio<i64>,
    /// Values at depth `|G|`, which no part radius can exceed.
    #[serde(serialize_with = "serialize_ratio")]
    pub grad_inf: Ratio<i64>,
    #[serde(serialize_with = "serialize_ratio")]
    pub top_grad_inf: Ratio<i64>,
    pub max_degree: usize,
    pub hadwiger: Option<usize>,
    pub checks: Vec<Check>,
}

fn big(r: Ratio<i64>) -> BigRational {
    BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom()))
}

pub fn audit_grad_inequalities(g: &Graph, d: usize) -> Result<GradAudit> {
    audit_grad_inequalities_with_cap(g, d, GRAD_CAP)
}

pub fn audit_grad_inequalities_with_cap(g: &Graph, d: usize, cap: usize) -> Result<GradAudit> {
    let top = |depth| top_grad_with(g, depth, TopMinorMode::Strict, cap).map(|r| r.value);
    let grad_d = grad_with_cap(g, d, cap)?.value;
    let top_d = top(d)?;
    let top_0 = top(0)?;
    let inf = g.n();
    let grad_inf = grad_with_cap(g, inf, cap)?.value;
    let top_inf = top(inf)?;
    let delta = g.max_degree();
    let hadwiger = if g.n() <= cap.max(HADWIGER_CAP) { Some(hadwiger_with_cap(g, cap.max(HADWIGER_CAP))?) } else { None };

    let mut checks = vec![
        Check::le("top_grad_0 <= top_grad_d", top_0.into(), top_d.into()),
        Check::le("top_grad_d <= grad_d", top_d.into(), grad_d.into()),
    ];
    let exponent = ((d + 1) * (d + 1)) as i32;
    let four = BigRational::from_integer(BigInt::from(4));
    let dvorak = &four * num::pow::Pow::pow(&four * big(top_d), exponent);
    checks.push(Check::le("grad_d <= 4(4 top_grad_d)^((d+1)^2)", grad_d.into(), Quantity::Exact(dvorak)));

    let threshold = Ratio::new(2 * d as i64 + 2, 2 * d as i64 + 1);
    let name = "top_grad_d > 2 implies 1 + 1/(2d+1) < top_grad_0";
    checks.push(if top_d > Ratio::from_integer(2) {
        Check::lt(name, threshold.into(), top_0.into())
    } else {
        Check::vacuous(name, threshold.into(), top_0.into(), "top_grad_d <= 2")
    });

    let power = BigRational::from_integer(num::pow(BigInt::from(delta), d + 1));
    let name = "grad_d < Delta^(d+1)";
    checks.push(if delta == 0 {
        Check::vacuous(name, grad_d.into(), Quantity::Exact(power), "edgeless graph")
    } else {
        Check::lt(name, grad_d.into(), Quantity::Exact(power))
    });
    checks.push(Check::le("top_grad_inf <= Delta/2", top_inf.into(), Quantity::ratio(delta as i64, 2)));

    match hadwiger {
        Some(h) => {
            let lhs = BigRational::new(BigInt::from(h as i64) - BigInt::one(), BigInt::from(2));
            let lhs = if lhs < BigRational::zero() { BigRational::zero() } else { lhs };
            checks.push(Check::le("(h-1)/2 <= grad_inf", Quantity::Exact(lhs), grad_inf.into()));
        }
        None => checks.push(Check::vacuous(
            "(h-1)/2 <= grad_inf",
            Quantity::int(0),
            grad_inf.into(),
            "graph above the Hadwiger search cap",
        )),
    }
    Ok(GradAudit { depth: d, grad: grad_d, top_grad: top_d, top_grad_0: top_0, grad_inf, top_grad_inf: top_inf, max_degree: delta, hadwiger, checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::all_pass;

    #[test]
    fn standard_examples_pass() {
        for (g, d) in [(Graph::complete(4), 1), (Graph::path(6), 2), (Graph::petersen(), 1)] {
            let a = audit_grad_inequalities(&g, d).unwrap();
            assert!(all_pass(&a.checks), "{:?}", a.checks);
        }
        let p6 = audit_grad_inequalities(&Graph::path(6), 2).unwrap();
        assert!(p6.checks[3].note.is_some());
    }

    #[test]
    fn petersen_values() {
        let a = audit_grad_inequalities(&Graph::petersen(), 1).unwrap();
        assert_eq!(a.hadwiger, Some(5));
        assert_eq!(a.top_grad_0, Ratio::new(3, 2));
        assert_eq!(a.top_grad_inf, Ratio::new(3, 2));
    }
}
