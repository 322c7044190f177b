//! Exact arithmetic in cyclotomic fields ℚ(ζ_n) = ℚ[z]/Φ_n(z).
//!
//! Elements carry their modulus lazily: a rational constant has no modulus
//! attached, so `zero()` and `one()` need no context. Once an element of
//! positive degree takes part in an operation the modulus propagates.

use std::fmt;
use std::sync::Arc;

use super::{Field, Rational};

#[derive(Debug, PartialEq, Eq)]
pub struct CyclotomicModulus {
    n: u32,
    /// Monic Φ_n, lowest coefficient first.
    phi: Vec<Rational>,
}

impl CyclotomicModulus {
    pub fn new(n: u32) -> Arc<Self> {
        assert!(n >= 1);
        let phi = cyclotomic_polynomial(n)
            .into_iter()
            .map(Rational::from)
            .collect();
        Arc::new(CyclotomicModulus { n, phi })
    }

    pub fn order(&self) -> u32 {
        self.n
    }

    /// Degree of Φ_n, i.e. Euler's totient of n.
    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    pub fn polynomial(&self) -> &[Rational] {
        &self.phi
    }
}

/// Integer coefficients of Φ_n, lowest degree first.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    // Φ_n = (z^n - 1) / Π_{d | n, d < n} Φ_d
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            num = exact_div_monic(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = rem.len() - 1 - dd;
    let mut quot = vec![0i64; qd + 1];
    for k in (0..=qd).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        for (j, &dj) in den.iter().enumerate() {
            rem[k + j] -= c * dj;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

/// Element of ℚ(ζ_n), stored as a reduced polynomial in ζ.
#[derive(Clone)]
pub struct Cyclotomic {
    coeffs: Vec<Rational>,
    modulus: Option<Arc<CyclotomicModulus>>,
}

impl Cyclotomic {
    pub fn constant(q: Rational) -> Self {
        let mut c = Cyclotomic {
            coeffs: vec![q],
            modulus: None,
        };
        c.trim();
        c
    }

    /// The primitive root ζ_n = exp(2πi/n), i.e. the class of z.
    pub fn zeta(modulus: &Arc<CyclotomicModulus>) -> Self {
        Self::from_coeffs(vec![Rational::zero(), Rational::one()], modulus)
    }

    /// ζ_n^k for any integer k.
    pub fn zeta_pow(modulus: &Arc<CyclotomicModulus>, k: i64) -> Self {
        let n = modulus.order() as i64;
        let e = k.rem_euclid(n) as usize;
        let mut coeffs = vec![Rational::zero(); e + 1];
        coeffs[e] = Rational::one();
        Self::from_coeffs(coeffs, modulus)
    }

    pub fn from_coeffs(coeffs: Vec<Rational>, modulus: &Arc<CyclotomicModulus>) -> Self {
        let mut c = Cyclotomic {
            coeffs,
            modulus: Some(modulus.clone()),
        };
        c.reduce();
        c
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// The element as a rational, if it has degree ≤ 0.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    fn reduce(&mut self) {
        self.trim();
        let Some(m) = self.modulus.clone() else {
            return;
        };
        let d = m.degree();
        while self.coeffs.len() > d {
            let top = self.coeffs.len() - 1;
            let c = self.coeffs[top].clone();
            for (j, pj) in m.phi.iter().enumerate() {
                let idx = top - d + j;
                self.coeffs[idx] = self.coeffs[idx].minus(&c.times(pj));
            }
            self.trim();
        }
    }

    fn shared_modulus(&self, other: &Self) -> Option<Arc<CyclotomicModulus>> {
        match (&self.modulus, &other.modulus) {
            (Some(a), Some(b)) => {
                assert_eq!(a.n, b.n, "mixing elements of different cyclotomic fields");
                Some(a.clone())
            }
            (Some(a), None) => Some(a.clone()),
            (None, Some(b)) => Some(b.clone()),
            (None, None) => None,
        }
    }

    fn combine(&self, other: &Self, sign: bool) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(len);
        for k in 0..len {
            let a = self.coeffs.get(k).cloned().unwrap_or_default();
            let b = other.coeffs.get(k).cloned().unwrap_or_default();
            coeffs.push(if sign { a.plus(&b) } else { a.minus(&b) });
        }
        let mut c = Cyclotomic {
            coeffs,
            modulus: self.shared_modulus(other),
        };
        c.trim();
        c
    }
}

// Polynomial helpers over ℚ for the extended Euclidean inverse.
fn poly_trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn poly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = a.to_vec();
    poly_trim(&mut rem);
    if rem.len() < b.len() {
        return (vec![], rem);
    }
    let lead = b.last().expect("nonzero divisor").inverse();
    let mut quot = vec![Rational::zero(); rem.len() - b.len() + 1];
    while rem.len() >= b.len() && !rem.is_empty() {
        let shift = rem.len() - b.len();
        let c = rem.last().unwrap().times(&lead);
        for (j, bj) in b.iter().enumerate() {
            rem[shift + j] = rem[shift + j].minus(&c.times(bj));
        }
        quot[shift] = c;
        poly_trim(&mut rem);
    }
    (quot, rem)
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].plus(&x.times(y));
        }
    }
    poly_trim(&mut out);
    out
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let len = a.len().max(b.len());
    let mut out: Vec<Rational> = (0..len)
        .map(|k| {
            a.get(k)
                .cloned()
                .unwrap_or_default()
                .minus(&b.get(k).cloned().unwrap_or_default())
        })
        .collect();
    poly_trim(&mut out);
    out
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl Field for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic {
            coeffs: vec![],
            modulus: None,
        }
    }

    fn one() -> Self {
        Self::constant(Rational::one())
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn plus(&self, other: &Self) -> Self {
        self.combine(other, true)
    }

    fn minus(&self, other: &Self) -> Self {
        self.combine(other, false)
    }

    fn times(&self, other: &Self) -> Self {
        let mut c = Cyclotomic {
            coeffs: poly_mul(&self.coeffs, &other.coeffs),
            modulus: self.shared_modulus(other),
        };
        c.reduce();
        c
    }

    fn negate(&self) -> Self {
        Cyclotomic {
            coeffs: self.coeffs.iter().map(Field::negate).collect(),
            modulus: self.modulus.clone(),
        }
    }

    fn inverse(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        if self.coeffs.len() == 1 {
            return Cyclotomic {
                coeffs: vec![self.coeffs[0].inverse()],
                modulus: self.modulus.clone(),
            };
        }
        let m = self.modulus.clone().expect("positive degree implies a modulus");
        // Extended Euclid on (Φ_n, a): track s with s·a ≡ r (mod Φ_n).
        let (mut r0, mut r1) = (m.phi.clone(), self.coeffs.clone());
        let (mut s0, mut s1): (Vec<Rational>, Vec<Rational>) = (vec![], vec![Rational::one()]);
        while r1.len() > 1 {
            let (q, r) = poly_divrem(&r0, &r1);
            let s = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        assert!(!r1.is_empty(), "element is not invertible modulo Φ_n");
        let c = r1[0].inverse();
        Self::from_coeffs(s1.iter().map(|x| x.times(&c)).collect(), &m)
    }

    fn from_rational(q: &Rational) -> Self {
        Self::constant(q.clone())
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*z")?,
                _ => write!(f, "({c})*z^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
