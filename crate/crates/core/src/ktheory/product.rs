//! The product on `K_0(Γ)` transported from tensor products of
//! `Λ_n`-modules, evaluated from its closed two-case formula.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::uniserial_length;

/// Integer combination of classes `[P_{i,u}]`, indices reduced mod `n`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct K0Class {
    pub n: usize,
    pub coeffs: BTreeMap<(usize, usize), i64>,
}

impl K0Class {
    pub fn zero(n: usize) -> Self {
        K0Class {
            n,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn basis(n: usize, i: usize, u: usize) -> Self {
        let mut c = Self::zero(n);
        c.add(i, u, 1);
        c
    }

    pub fn add(&mut self, i: usize, u: usize, c: i64) {
        let key = (i % self.n, u % self.n);
        let slot = self.coeffs.entry(key).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.coeffs.remove(&key);
        }
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(i, u), &c) in &other.coeffs {
            out.add(i, u, c);
        }
        out
    }

    /// `Σ c · dim N_{i,u}`.
    pub fn dimension(&self) -> i64 {
        self.coeffs
            .iter()
            .map(|(&(i, u), &c)| c * uniserial_length(self.n, i, u) as i64)
            .sum()
    }

    /// Bilinear extension of [`k0_taft_product`].
    pub fn times(&self, other: &Self) -> Result<Self> {
        let mut out = Self::zero(self.n);
        for (&(i, u), &a) in &self.coeffs {
            for (&(j, v), &b) in &other.coeffs {
                for (&(k, w), &c) in &k0_taft_product(self.n, (i, u), (j, v))?.class.coeffs {
                    out.add(k, w, a * b * c);
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Display for K0Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(&(i, u), &c)| match c {
                1 => format!("P{i}{u}"),
                _ => format!("{c}P{i}{u}"),
            })
            .collect();
        write!(f, "{}", parts.join("+"))
    }
}

impl Serialize for K0Class {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = s.serialize_map(Some(self.coeffs.len()))?;
        for (&(i, u), c) in &self.coeffs {
            map.serialize_entry(&format!("{i},{u}"), c)?;
        }
        map.end()
    }
}

/// Product of two basis classes with its dimension bookkeeping.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct K0Product {
    pub left: (usize, usize),
    pub right: (usize, usize),
    pub class: K0Class,
    /// `1` or `2`: which case of the formula applied.
    pub case: u8,
    /// `dim N_{i,u} · dim N_{j,v}`.
    pub expected_dim: i64,
    pub output_dim: i64,
}

impl K0Product {
    pub fn audit_ok(&self) -> bool {
        self.expected_dim == self.output_dim
    }
}

/// Lifts `u` to the representative `i + ((u − i) mod n)`.
fn lift(n: usize, i: usize, u: usize) -> usize {
    i + (u + n - i % n) % n
}

/// ```text
/// [P_{i,u}][P_{j,v}] = Σ_{l=0}^{v−j} [P_{i+j+l, u+v−l}]                       if u+v−(i+j) ≤ n−1
///                    = Σ_{l=0}^{e} [P_{i+j+l, u+v+l−1}] + Σ_{m=e+1}^{v−j} [P_{i+j+m, u+v−m}]
///                                                             if e := u+v−(i+j)−(n−1) ≥ 0
/// ```
/// with `u − i, v − j ∈ {0, …, n−1}`. When `u+v−(i+j) = n−1` both cases
/// apply; the first is used.
pub fn k0_taft_product(n: usize, (i, u): (usize, usize), (j, v): (usize, usize)) -> Result<K0Product> {
    if n < 2 {
        return Err(Error::NTooSmall);
    }
    let (i, j) = (i % n, j % n);
    let (u, v) = (lift(n, i, u), lift(n, j, v));
    let s = u + v - (i + j);
    let mut class = K0Class::zero(n);
    let case = if s < n {
        for l in 0..=v - j {
            class.add(i + j + l, u + v - l, 1);
        }
        1
    } else {
        let e = s - (n - 1);
        for l in 0..=e {
            class.add(i + j + l, u + v + l - 1, 1);
        }
        for m in e + 1..=v - j {
            class.add(i + j + m, u + v - m, 1);
        }
        2
    };
    let output_dim = class.dimension();
    Ok(K0Product {
        left: (i, u % n),
        right: (j, v % n),
        class,
        case,
        expected_dim: (uniserial_length(n, i, u) * uniserial_length(n, j, v)) as i64,
        output_dim,
    })
}

/// Every product for one `n`, row-major over `(i, u)` then `(j, v)`.
pub fn k0_product_table(n: usize) -> Result<Vec<K0Product>> {
    let labels: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |u| (i, u))).collect();
    let mut out = Vec::with_capacity(labels.len() * labels.len());
    for &a in &labels {
        for &b in &labels {
            out.push(k0_taft_product(n, a, b)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn class(n: usize, terms: &[(usize, usize)]) -> K0Class {
        terms.iter().fold(K0Class::zero(n), |c, &(i, u)| c.plus(&K0Class::basis(n, i, u)))
    }

    #[test]
    fn worked_values() {
        let p = k0_taft_product(2, (0, 1), (0, 1)).unwrap();
        assert_eq!(p.case, 2);
        assert_eq!(p.class, class(2, &[(0, 1), (1, 0)]));
        assert!(p.audit_ok());
        assert_eq!(k0_taft_product(3, (0, 0), (1, 1)).unwrap().class, class(3, &[(1, 1)]));
        assert_eq!(k0_taft_product(2, (0, 0), (0, 0)).unwrap().class, class(2, &[(0, 0)]));
    }

    #[test]
    fn boundary_case_uses_first_branch() {
        // u+v−(i+j) = n−1: one-dimensional factor on the left
        let p = k0_taft_product(2, (0, 0), (0, 1)).unwrap();
        assert_eq!(p.case, 1);
        assert_eq!(p.class, class(2, &[(0, 1), (1, 0)]));
        assert_eq!((p.expected_dim, p.output_dim), (2, 4));
        assert_eq!(k0_taft_product(2, (0, 1), (0, 0)).unwrap().class, class(2, &[(0, 1)]));
    }

    #[test]
    fn display_and_lift() {
        assert_eq!(class(3, &[(0, 2), (0, 2), (1, 0)]).to_string(), "2P02+P10");
        assert_eq!(lift(3, 2, 0), 3);
        assert_eq!(lift(3, 1, 1), 1);
        assert_eq!(K0Class::zero(2).to_string(), "0");
    }

    #[test]
    fn rejects_small_n() {
        assert_eq!(k0_taft_product(1, (0, 0), (0, 0)).unwrap_err(), Error::NTooSmall);
    }
}
