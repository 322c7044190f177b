use std::fmt;

use super::Rational;

/// Exact scalar field used by the elimination kernels.
///
/// Arithmetic is by reference so that big-integer backed values are not
/// cloned on every operation.
pub trait Field: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negate(&self) -> Self;
    /// Multiplicative inverse. Panics on zero.
    fn inverse(&self) -> Self;
    fn from_rational(q: &Rational) -> Self;

    fn divide(&self, other: &Self) -> Self {
        self.times(&other.inverse())
    }

    fn from_i64(v: i64) -> Self {
        Self::from_rational(&Rational::from(v))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}
