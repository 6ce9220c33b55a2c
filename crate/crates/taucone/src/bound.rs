//! Exact bound values: a rational, or the square root of a non-negative
//! rational. All comparisons go through cross-multiplication and squaring
//! with sign analysis, never floating point, so a bound like `√5` compares
//! exactly against a certificate like `16/7`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use std::cmp::Ordering;
use std::fmt;

/// The numeric part of a bound. `Sqrt(q)` is kept only when `q` is not a
/// perfect square of a rational; constructors normalize perfect squares
/// down to the `Rational` arm, so equal reals have equal representations
/// and derived equality is real-number equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BoundValue {
    Rational(BigRational),
    Sqrt(BigRational),
}

/// Floor square root of a non-negative rational, if the result is exact.
fn exact_sqrt(q: &BigRational) -> Option<BigRational> {
    debug_assert!(!q.is_negative());
    let num_root = q.numer().sqrt();
    let den_root = q.denom().sqrt();
    if &(&num_root * &num_root) == q.numer() && &(&den_root * &den_root) == q.denom() {
        Some(BigRational::new(num_root, den_root))
    } else {
        None
    }
}

impl BoundValue {
    pub fn rational(q: BigRational) -> Self {
        BoundValue::Rational(q)
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        BoundValue::Rational(BigRational::from_integer(n.into()))
    }

    /// `√q` for `q ≥ 0`, normalized to `Rational` when `q` is a perfect
    /// square of a rational.
    pub fn sqrt_of(q: BigRational) -> Self {
        assert!(!q.is_negative(), "square root of a negative rational");
        match exact_sqrt(&q) {
            Some(root) => BoundValue::Rational(root),
            None => BoundValue::Sqrt(q),
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            BoundValue::Rational(q) => Some(q),
            BoundValue::Sqrt(_) => None,
        }
    }

    /// The square of the value, always rational.
    pub fn squared(&self) -> BigRational {
        match self {
            BoundValue::Rational(q) => q * q,
            BoundValue::Sqrt(q) => q.clone(),
        }
    }

    /// Decimal expansion truncated to `places` digits, for display only.
    pub fn decimal(&self, places: u32) -> String {
        let scale = BigInt::from(10u32).pow(places);
        let (neg, scaled) = match self {
            BoundValue::Rational(q) => {
                let scaled = (q * BigRational::from_integer(scale.clone())).trunc();
                (q.is_negative(), scaled.numer().abs())
            }
            BoundValue::Sqrt(q) => {
                // floor(√q · 10^places) = floor(√(num·den·10^(2·places))) / den
                let inner = q.numer() * q.denom() * (&scale * &scale);
                (false, inner.sqrt() / q.denom())
            }
        };
        let digits = scaled.to_string();
        let digits = if digits.len() <= places as usize {
            format!("{:0>width$}", digits, width = places as usize + 1)
        } else {
            digits
        };
        let split = digits.len() - places as usize;
        format!(
            "{}{}.{}",
            if neg { "-" } else { "" },
            &digits[..split],
            &digits[split..]
        )
    }

    pub fn to_f64_lossy(&self) -> f64 {
        match self {
            BoundValue::Rational(q) => q.to_f64().unwrap_or(f64::NAN),
            BoundValue::Sqrt(q) => q.to_f64().map(f64::sqrt).unwrap_or(f64::NAN),
        }
    }
}

impl Ord for BoundValue {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (BoundValue::Rational(a), BoundValue::Rational(b)) => a.cmp(b),
            (BoundValue::Sqrt(a), BoundValue::Sqrt(b)) => a.cmp(b),
            (BoundValue::Rational(a), BoundValue::Sqrt(b)) => {
                if a.is_negative() {
                    Ordering::Less
                } else {
                    (a * a).cmp(b)
                }
            }
            (BoundValue::Sqrt(_), BoundValue::Rational(_)) => other.cmp(self).reverse(),
        }
    }
}

impl PartialOrd for BoundValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BoundValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundValue::Rational(q) => write!(f, "{}", q),
            BoundValue::Sqrt(q) => write!(f, "sqrt({})", q),
        }
    }
}

/// An exact bound together with a free-text citation for where it comes from.
/// Ordering and equality look only at the value.
#[derive(Debug, Clone)]
pub struct Bound {
    value: BoundValue,
    provenance: String,
}

impl Bound {
    pub fn new(value: BoundValue, provenance: impl Into<String>) -> Self {
        Self {
            value,
            provenance: provenance.into(),
        }
    }

    pub fn rational(q: BigRational, provenance: impl Into<String>) -> Self {
        Self::new(BoundValue::rational(q), provenance)
    }

    pub fn sqrt_of(q: BigRational, provenance: impl Into<String>) -> Self {
        Self::new(BoundValue::sqrt_of(q), provenance)
    }

    pub fn value(&self) -> &BoundValue {
        &self.value
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn value_cmp(&self, other: &Bound) -> Ordering {
        self.value.cmp(&other.value)
    }
}

impl PartialEq for Bound {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value
    }
}

impl Eq for Bound {}

impl PartialOrd for Bound {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Bound {
    fn cmp(&self, other: &Self) -> Ordering {
        self.value_cmp(other)
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}
