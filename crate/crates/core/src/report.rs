//! Exact quantities and inequality checks shared by every audit.

use num::bigint::BigInt;
use num::rational::{BigRational, Ratio};
use num::{One, ToPrimitive, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

/// A number reported by an audit: exact when possible.
#[derive(Clone, Debug, PartialEq)]
pub enum Quantity {
    Exact(BigRational),
    /// Values only known in floating point (irrational bounds such as `4.108 * sqrt(k)`).
    Approx(f64),
    /// Bounds too large to materialise, given by their base-2 logarithm.
    Log2(f64),
}

impl Quantity {
    pub fn int(v: impl Into<BigInt>) -> Self {
        Quantity::Exact(BigRational::from_integer(v.into()))
    }

    pub fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        Quantity::Exact(BigRational::new(num.into(), den.into()))
    }

    pub fn approx(&self) -> f64 {
        match self {
            Quantity::Exact(r) => r.to_f64().unwrap_or(f64::INFINITY),
            Quantity::Approx(x) => *x,
            Quantity::Log2(l) => l.exp2(),
        }
    }

    fn log2(&self) -> f64 {
        match self {
            Quantity::Exact(r) if r.is_zero() => f64::NEG_INFINITY,
            Quantity::Exact(r) => {
                // Bit lengths keep this finite for huge exact values.
                let shift = r.numer().bits() as i64 - r.denom().bits() as i64;
                let scaled = if shift > 512 {
                    r / BigRational::from_integer(BigInt::one() << (shift - 64) as usize)
                } else {
                    r.clone()
                };
                let base = if shift > 512 { (shift - 64) as f64 } else { 0.0 };
                base + scaled.to_f64().unwrap_or(f64::MAX).log2()
            }
            Quantity::Approx(x) => x.log2(),
            Quantity::Log2(l) => *l,
        }
    }

    /// Compares exactly when both sides are exact.
    pub fn cmp_approx(&self, other: &Quantity) -> std::cmp::Ordering {
        match (self, other) {
            (Quantity::Exact(a), Quantity::Exact(b)) => a.cmp(b),
            (Quantity::Log2(_), _) | (_, Quantity::Log2(_)) => self.log2().total_cmp(&other.log2()),
            _ => self.approx().total_cmp(&other.approx()),
        }
    }
}

impl From<Ratio<i64>> for Quantity {
    fn from(r: Ratio<i64>) -> Self {
        Quantity::ratio(*r.numer(), *r.denom())
    }
}

impl From<BigRational> for Quantity {
    fn from(r: BigRational) -> Self {
        Quantity::Exact(r)
    }
}

fn big_to_json(v: &BigInt) -> serde_json::Value {
    match v.to_i64() {
        Some(x) => serde_json::Value::from(x),
        None => serde_json::Value::from(v.to_string()),
    }
}

impl Serialize for Quantity {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(None)?;
        match self {
            Quantity::Exact(r) => {
                map.serialize_entry("num", &big_to_json(r.numer()))?;
                map.serialize_entry("den", &big_to_json(r.denom()))?;
                map.serialize_entry("value", &finite(self.approx()))?;
            }
            Quantity::Approx(x) => map.serialize_entry("value", &finite(*x))?,
            Quantity::Log2(l) => map.serialize_entry("log2", &finite(*l))?,
        }
        map.end()
    }
}

fn finite(x: f64) -> serde_json::Value {
    if x.is_finite() {
        serde_json::Value::from(x)
    } else {
        serde_json::Value::from(format!("{x}"))
    }
}

/// One inequality (or predicate) with both of its sides.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub lhs: Quantity,
    pub rhs: Quantity,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Check {
    pub fn le(name: impl Into<String>, lhs: Quantity, rhs: Quantity) -> Self {
        let pass = lhs.cmp_approx(&rhs).is_le();
        Check { name: name.into(), pass, lhs, rhs, note: None }
    }

    pub fn lt(name: impl Into<String>, lhs: Quantity, rhs: Quantity) -> Self {
        let pass = lhs.cmp_approx(&rhs).is_lt();
        Check { name: name.into(), pass, lhs, rhs, note: None }
    }

    pub fn ge(name: impl Into<String>, lhs: Quantity, rhs: Quantity) -> Self {
        let pass = lhs.cmp_approx(&rhs).is_ge();
        Check { name: name.into(), pass, lhs, rhs, note: None }
    }

    /// A yes/no predicate, encoded as `lhs = 1` meaning the property holds.
    pub fn holds(name: impl Into<String>, pass: bool) -> Self {
        Check {
            name: name.into(),
            pass,
            lhs: Quantity::int(pass as i64),
            rhs: Quantity::int(1),
            note: None,
        }
    }

    /// A check whose hypothesis does not apply; it passes vacuously.
    pub fn vacuous(name: impl Into<String>, lhs: Quantity, rhs: Quantity, why: impl Into<String>) -> Self {
        Check { name: name.into(), pass: true, lhs, rhs, note: Some(format!("not applicable: {}", why.into())) }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

pub(crate) fn serialize_ratio<S: Serializer>(r: &Ratio<i64>, s: S) -> Result<S::Ok, S::Error> {
    Quantity::from(*r).serialize(s)
}

pub fn all_pass(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.pass)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_comparison() {
        let a = Quantity::ratio(10, 3);
        let b = Quantity::ratio(7, 2);
        assert!(Check::lt("a<b", a.clone(), b.clone()).pass);
        assert!(!Check::ge("a>=b", a, b).pass);
    }

    #[test]
    fn log_bounds_compare_with_exact() {
        let huge = Quantity::Log2(4000.0);
        let big = Quantity::Exact(BigRational::from_integer(BigInt::one() << 3000));
        assert!(Check::le("exact<=log", big, huge).pass);
    }

    #[test]
    fn serialisation_shape() {
        let v = serde_json::to_value(Quantity::ratio(3, 2)).unwrap();
        assert_eq!(v, serde_json::json!({"num": 3, "den": 2, "value": 1.5}));
    }
}
