//! The quiver `Q_n` with mesh relations.
//!
//! Vertices `e{i}_{u}` for `(i, u) ∈ (ℤ/n)²`; arrows `a{i}_{u} : (i−1,u) → (i,u)`
//! and `b{i}_{u} : (i,u−1) → (i,u)`. The arrows `a{i}_{i−1}` and `b{i}_{i}`
//! do not exist, leaving `2n(n−1)` arrows. Relations: the triangles
//! `a{i}_{i−2}.b{i}_{i−1}` and the anticommuting squares
//! `a{i}_{u−1}.b{i}_{u} + b{i−1}_{u}.a{i}_{u}` for `u ∉ {i, i−1}`.

use crate::algebra::{parse_presentation, Presentation, Quiver};
use crate::error::{Error, Result};
use crate::linalg::{Field, Rational};

const SHIPPED: [(usize, &str); 2] = [
    (2, include_str!("../../data/auslander_taft_2.alg")),
    (3, include_str!("../../data/auslander_taft_3.alg")),
];

pub fn vertex_label(n: usize, i: usize, u: usize) -> String {
    format!("e{}_{}", i % n, u % n)
}

fn a_exists(n: usize, i: usize, u: usize) -> bool {
    u % n != (i + n - 1) % n
}

fn b_exists(n: usize, i: usize, u: usize) -> bool {
    u % n != i % n
}

/// Generates the presentation of `Q_n` for any `n ≥ 2`.
pub fn auslander_quiver_presentation(n: usize) -> Result<Presentation> {
    if n < 2 {
        return Err(Error::NTooSmall);
    }
    let m = |k: usize| k % n;
    let prev = |k: usize| (k + n - 1) % n;
    let mut q = Quiver::new();
    for i in 0..n {
        for u in 0..n {
            q.add_vertex(&vertex_label(n, i, u))?;
        }
    }
    for i in 0..n {
        for u in 0..n {
            if a_exists(n, i, u) {
                q.add_arrow(&format!("a{i}_{u}"), &vertex_label(n, prev(i), u), &vertex_label(n, i, u))?;
            }
        }
    }
    for i in 0..n {
        for u in 0..n {
            if b_exists(n, i, u) {
                q.add_arrow(&format!("b{i}_{u}"), &vertex_label(n, i, prev(u)), &vertex_label(n, i, u))?;
            }
        }
    }
    let mut p = Presentation::new(&format!("presented auslander-taft({n})"), q);
    let one = Rational::one();
    for i in 0..n {
        let word = format!("a{i}_{}.b{i}_{}", m(i + 2 * n - 2), prev(i));
        p.add_relation(&[(one.clone(), &word)])?;
    }
    for i in 0..n {
        for u in 0..n {
            if u == i || u == prev(i) {
                continue;
            }
            let w1 = format!("a{i}_{}.b{i}_{u}", prev(u));
            let w2 = format!("b{}_{u}.a{i}_{u}", prev(i));
            p.add_relation(&[(one.clone(), &w1), (one.clone(), &w2)])?;
        }
    }
    Ok(p)
}

/// The shipped, reconciled presentation files.
pub fn presented_auslander_taft(n: usize) -> Result<Presentation> {
    SHIPPED
        .iter()
        .find(|(k, _)| *k == n)
        .map(|(_, text)| parse_presentation(text))
        .unwrap_or_else(|| {
            Err(Error::Unsupported(format!(
                "no reconciled presentation for n = {n} (available: 2, 3)"
            )))
        })
}

/// `(i, u)` of a vertex label `e{i}_{u}`.
pub fn parse_vertex_label(label: &str) -> Option<(usize, usize)> {
    let (i, u) = label.strip_prefix('e')?.split_once('_')?;
    Some((i.parse().ok()?, u.parse().ok()?))
}
