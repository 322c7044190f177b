//! Grothendieck groups and Chern characters.

mod chern;
mod product;

pub use chern::{chern_chain, chern_coeffs, chern_of_idempotent, ChernClass, ChernCoeffs, IdempotentMatrix};
pub use product::{k0_product_table, k0_taft_product, K0Class, K0Product};

use crate::error::{Error, Result};
use crate::families::{extend_scalars, indec_module, taft_algebra, tensor_module, uniserial_length, AuslanderLabeling, HopfData};
use crate::repmod::nakayama_decompose;
use crate::homology::CyclicBicomplex;
use crate::linalg::{Field, Rational};

/// `ch_{0,p}(L_1 ⊗ … ⊗ L_r) = (Π dim L_i / n²) · Σ_j σ_j^p` over `Λ_n`.
///
/// Each factor is a direct sum of uniserials `N_{i,u}`, all of which must
/// be projective (length `n`). The sum over `j` is how the tuple
/// `(σ_0^p, …, σ_{n−1}^p)` is read.
pub fn chern_tensor_formula(
    n: usize,
    factors: &[Vec<(usize, usize)>],
    p: usize,
    bicomplex: &CyclicBicomplex,
) -> Result<ChernClass> {
    if factors.len() < 2 {
        return Err(Error::Unsupported("the tensor formula needs at least two factors".into()));
    }
    let mut product = 1i64;
    for f in factors {
        for &(i, u) in f {
            if uniserial_length(n, i, u) != n {
                return Err(Error::NotProjective(format!("N_{{{i},{u}}}")));
            }
        }
        product *= (f.len() * n) as i64;
    }
    let scalar = Rational::new(product, (n * n) as i64);
    if !scalar.is_integer() {
        return Err(Error::NonIntegral(scalar.to_string()));
    }
    let alg = bicomplex.algebra();
    let mut total: Option<ChernClass> = None;
    for j in 0..n {
        let e = IdempotentMatrix::diagonal(alg, &[j])?;
        let c = chern_of_idempotent(&e, p, bicomplex)?;
        total = Some(match total {
            None => c,
            Some(t) => ChernClass {
                degree: t.degree,
                coords: t.coords.iter().zip(&c.coords).map(|(a, b)| a.plus(b)).collect(),
                chain: t.chain.add(&c.chain),
            },
        });
    }
    let total = total.expect("n ≥ 1");
    Ok(ChernClass {
        degree: total.degree,
        coords: total.coords.iter().map(|x| x.times(&scalar)).collect(),
        chain: total.chain.scale(&scalar),
    })
}

/// `N_{i,u} ↦ σ_{i,u}^p`: the Chern class of the idempotent of `Γ` at the
/// vertex of `N_{i,u}`.
pub fn kbar_map(
    labeling: &AuslanderLabeling,
    (i, u): (usize, usize),
    p: usize,
    bicomplex: &CyclicBicomplex,
) -> Result<ChernClass> {
    let e = IdempotentMatrix::diagonal(bicomplex.algebra(), &[labeling.vertex(i, u)])?;
    chern_of_idempotent(&e, p, bicomplex)
}

/// `[N_{i,u} ⊗ N_{j,v}]` computed by building the tensor module over
/// `ℚ(ζ_n)` and splitting it into uniserials.
pub fn k0_tensor_oracle(n: usize, (i, u): (usize, usize), (j, v): (usize, usize)) -> Result<K0Class> {
    let alg = taft_algebra(n)?;
    let hopf = HopfData::new(n)?;
    let m1 = extend_scalars(&indec_module(&alg, i, u)?, &alg, &hopf)?;
    let m2 = extend_scalars(&indec_module(&alg, j, v)?, &alg, &hopf)?;
    let t = tensor_module(&alg, &hopf, &m1, &m2)?;
    let mut out = K0Class::zero(n);
    for ((a, b), m) in nakayama_decompose(&alg, &t)? {
        out.add(a, b, m as i64);
    }
    Ok(out)
}

#[cfg(test)]
mod tests;
