//! Prime-field arithmetic for the modular rank cross-check.
//!
//! Ranks over 𝔽_p can only drop relative to ℚ, and do so only when p
//! divides some minor. Exact rational ranks stay authoritative; this path is
//! a fast independent sanity check.

use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::sparse::SparseMatrix;
use super::{Field, Rational};

pub const MODULUS: u64 = 2_147_483_647;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Fp(u64);

impl Fp {
    pub fn new(v: i64) -> Self {
        Fp(v.rem_euclid(MODULUS as i64) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let (mut base, mut acc) = (self.0, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % MODULUS;
            }
            base = base * base % MODULUS;
            e >>= 1;
        }
        Fp(acc)
    }

    fn from_big(b: &BigInt) -> Self {
        let m = BigInt::from(MODULUS);
        let r = ((b % &m) + &m) % &m;
        Fp(r.to_u64().unwrap())
    }
}

impl Field for Fp {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn plus(&self, o: &Self) -> Self {
        Fp((self.0 + o.0) % MODULUS)
    }
    fn minus(&self, o: &Self) -> Self {
        Fp((self.0 + MODULUS - o.0) % MODULUS)
    }
    fn times(&self, o: &Self) -> Self {
        Fp(self.0 * o.0 % MODULUS)
    }
    fn negate(&self) -> Self {
        Fp((MODULUS - self.0) % MODULUS)
    }
    fn inverse(&self) -> Self {
        assert!(self.0 != 0, "inverse of zero");
        self.pow(MODULUS - 2)
    }
    fn from_rational(q: &Rational) -> Self {
        let den = Fp::from_big(&q.denom());
        assert!(!den.is_zero(), "denominator divisible by the modulus");
        Fp::from_big(&q.numer()).times(&den.inverse())
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.0, MODULUS)
    }
}

/// Rank of a rational matrix reduced modulo [`MODULUS`].
pub fn rank_mod_p(m: &SparseMatrix<Rational>) -> usize {
    super::rank(&m.map(Fp::from_rational))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_roundtrip() {
        for v in [1i64, 2, 3, 12345, -7] {
            let x = Fp::new(v);
            assert_eq!(x.times(&x.inverse()), Fp::one());
        }
        assert_eq!(Fp::from_rational(&Rational::new(1, 2)).times(&Fp::new(2)), Fp::one());
    }
}
