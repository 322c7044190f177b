//! Decomposition of modules over `kZ_n / J^n` into uniserials.

use std::collections::BTreeMap;

use super::LeftModule;
use crate::algebra::FDAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix};

/// Multiplicity of `N_{i,u}` keyed by `(i, u)`; zero entries are omitted.
pub type Decomposition = BTreeMap<(usize, usize), usize>;

/// The algebra must have one arrow `i → i+1 mod n` at each vertex index and
/// graded dimensions `(n, …, n)` with `n` entries. Returns the arrow order:
/// `result[i]` is the position in `degree_one()` of the arrow leaving `i`.
pub fn check_nakayama_cyclic(alg: &FDAlgebra) -> Result<Vec<usize>> {
    let n = alg.num_vertices();
    let deg1 = alg.degree_one();
    let bad = |m: String| Err(Error::NotNakayama(format!("{}: {m}", alg.name())));
    if n < 2 {
        return bad("fewer than two vertices".into());
    }
    if deg1.len() != n {
        return bad(format!("{} degree-one elements, expected {n}", deg1.len()));
    }
    let mut out = vec![usize::MAX; n];
    for (k, &g) in deg1.iter().enumerate() {
        let e = alg.element(g);
        if e.target != (e.source + 1) % n || out[e.source] != usize::MAX {
            return bad(format!("arrow {} does not follow the cycle", e.label));
        }
        out[e.source] = k;
    }
    if alg.graded_dims() != vec![n; n] {
        return bad(format!("graded dimensions {:?}", alg.graded_dims()));
    }
    Ok(out)
}

/// Jordan type of the total arrow operator `X`, split by vertex.
///
/// With `r_k(i) = rank X^k|_{M_i}` and `c_k(i) = r_k(i) − r_{k+1}(i)`, the
/// number of uniserials with top at `i` and length `k+1` is
/// `c_k(i) − c_{k+1}(i−1)`.
pub fn nakayama_decompose<F: Field>(alg: &FDAlgebra, m: &LeftModule<F>) -> Result<Decomposition> {
    let order = check_nakayama_cyclic(alg)?;
    m.validate(alg)?;
    let n = alg.num_vertices();
    let dim = m.dim();
    let mut x = Matrix::zeros(dim, dim);
    for (i, &k) in order.iter().enumerate() {
        let t = (i + 1) % n;
        x.set_block(m.offset(t), m.offset(i), &m.arrow_blocks()[k]);
    }
    // ranks[k][i] for k = 0..=n+1
    let mut ranks = vec![vec![0usize; n]; n + 2];
    let mut power = Matrix::identity(dim);
    for row in ranks.iter_mut() {
        for (i, r) in row.iter_mut().enumerate() {
            *r = power.block(0, m.offset(i), dim, m.dims()[i]).rank();
        }
        power = x.mul(&power);
    }
    let c = |k: usize, i: usize| ranks[k][i] as i64 - ranks[k + 1][i] as i64;
    let mut out = Decomposition::new();
    let mut total = 0;
    for i in 0..n {
        for k in 0..n {
            let mult = c(k, i) - c(k + 1, (i + n - 1) % n);
            if mult < 0 {
                return Err(Error::InvalidModule(format!("{}: negative multiplicity", m.name)));
            }
            if mult > 0 {
                out.insert((i, (i + k) % n), mult as usize);
                total += mult as usize * (k + 1);
            }
        }
    }
    if total != dim {
        return Err(Error::InvalidModule(format!(
            "{}: decomposition covers {total} of {dim} dimensions",
            m.name
        )));
    }
    Ok(out)
}
