//! The Taft algebra `Λ_n`: the oriented `n`-cycle modulo paths of length `n`,
//! and its indecomposable modules.

use crate::algebra::{build_algebra, FDAlgebra, Presentation, Quiver};
use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix, Rational};
use crate::repmod::{check_nakayama_cyclic, LeftModule};

/// Oriented cycle with arrows `x{i} : i → i+1`; relations are the `n`
/// paths of length `n`.
pub fn taft(n: usize) -> Result<Presentation> {
    if n < 2 {
        return Err(Error::NTooSmall);
    }
    let mut q = Quiver::new();
    for i in 0..n {
        q.add_vertex(&i.to_string())?;
    }
    for i in 0..n {
        q.add_arrow(&format!("x{i}"), &i.to_string(), &((i + 1) % n).to_string())?;
    }
    let mut p = Presentation::new(&format!("taft({n})"), q);
    for i in 0..n {
        let word: Vec<String> = (0..n).map(|k| format!("x{}", (i + k) % n)).collect();
        p.add_relation(&[(Rational::one(), &word.join("."))])?;
    }
    Ok(p)
}

pub fn taft_algebra(n: usize) -> Result<FDAlgebra> {
    build_algebra(&taft(n)?)
}

/// Length of `N_{i,u}`: `((u − i) mod n) + 1`.
pub fn uniserial_length(n: usize, i: usize, u: usize) -> usize {
    (u + n - i % n) % n + 1
}

/// Uniserial `N_{i,u}` with basis `m_0 … m_{ℓ−1}`, `m_t` at vertex `i+t`,
/// and the arrow leaving `i+t` sending `m_t` to `m_{t+1}`.
pub fn indec_module<F: Field>(alg: &FDAlgebra, i: usize, u: usize) -> Result<LeftModule<F>> {
    let order = check_nakayama_cyclic(alg)?;
    let n = alg.num_vertices();
    let len = uniserial_length(n, i, u);
    let mut dims = vec![0; n];
    // local index of m_t inside its vertex component
    let mut local = Vec::with_capacity(len);
    for t in 0..len {
        let v = (i + t) % n;
        local.push(dims[v]);
        dims[v] += 1;
    }
    let mut arrows = vec![Matrix::zeros(0, 0); n];
    for (v, &k) in order.iter().enumerate() {
        let w = (v + 1) % n;
        let mut block = Matrix::zeros(dims[w], dims[v]);
        for t in 0..len.saturating_sub(1) {
            if (i + t) % n == v {
                block.set(local[t + 1], local[t], F::one());
            }
        }
        arrows[k] = block;
    }
    let m = LeftModule::new(alg, &format!("N_{{{},{}}}", i % n, u % n), dims, arrows)?;
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repmod::{nakayama_decompose, projective, Decomposition};

    #[test]
    fn dims_and_cartan() {
        for n in 2..=4 {
            let a = taft_algebra(n).unwrap();
            assert_eq!(a.dim(), n * n);
            assert_eq!(a.graded_dims(), vec![n; n]);
            assert_eq!(a.cartan_matrix(), vec![vec![1; n]; n]);
            a.check_invariants(40).unwrap();
        }
        assert_eq!(taft(1).unwrap_err(), Error::NTooSmall);
        assert_eq!(taft(1).unwrap_err().to_string(), "n must be ≥ 2");
    }

    #[test]
    fn uniserials() {
        let n = 3;
        let a = taft_algebra(n).unwrap();
        for i in 0..n {
            for u in 0..n {
                let m: LeftModule<Rational> = indec_module(&a, i, u).unwrap();
                m.validate(&a).unwrap();
                assert_eq!(m.dim(), uniserial_length(n, i, u));
                assert_eq!(nakayama_decompose(&a, &m).unwrap(), Decomposition::from([((i, u), 1)]));
            }
            let top: LeftModule<Rational> = indec_module(&a, i, (i + n - 1) % n).unwrap();
            let p: LeftModule<Rational> = projective(&a, i).unwrap();
            assert_eq!(top.dims(), p.dims());
        }
    }
}
