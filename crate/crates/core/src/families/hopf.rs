//! Hopf structure of `Λ_n` over `ℚ(ζ_n)`, used only to tensor modules.
//!
//! A module in quiver form is turned into `(g, x)` form by letting `g` act
//! on the component at vertex `j` by `ζ^j` and `x` by the sum of the arrow
//! blocks. With `g·m_t = ζ^{i+t} m_t` and `x·m_t = m_{t+1}` on `N_{i,u}` one
//! gets `g^n = 1`, `x^n = 0` and `gx = ζ xg`. The coproduct is
//! `Δ(g) = g⊗g`, `Δ(x) = x⊗1 + g⊗x`.

use std::sync::Arc;

use crate::algebra::FDAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{Cyclotomic, CyclotomicModulus, Field, Matrix, Rational};
use crate::repmod::{check_nakayama_cyclic, LeftModule};

#[derive(Clone, Debug)]
pub struct HopfData {
    pub n: usize,
    pub modulus: Arc<CyclotomicModulus>,
}

impl HopfData {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::NTooSmall);
        }
        Ok(HopfData {
            n,
            modulus: CyclotomicModulus::new(n as u32),
        })
    }

    pub fn zeta_pow(&self, k: i64) -> Cyclotomic {
        Cyclotomic::zeta_pow(&self.modulus, k)
    }

    /// `g` on a module: `ζ^j` on the component at vertex `j`.
    pub fn g_action(&self, m: &LeftModule<Cyclotomic>) -> Matrix<Cyclotomic> {
        let mut out = Matrix::zeros(m.dim(), m.dim());
        for j in 0..self.n {
            for k in 0..m.dims()[j] {
                let p = m.offset(j) + k;
                out.set(p, p, self.zeta_pow(j as i64));
            }
        }
        out
    }

    /// `x` on a module: the sum of all arrow blocks.
    pub fn x_action(&self, alg: &FDAlgebra, m: &LeftModule<Cyclotomic>) -> Result<Matrix<Cyclotomic>> {
        let order = check_nakayama_cyclic(alg)?;
        let mut out = Matrix::zeros(m.dim(), m.dim());
        for (j, &k) in order.iter().enumerate() {
            out.set_block(m.offset((j + 1) % self.n), m.offset(j), &m.arrow_blocks()[k]);
        }
        Ok(out)
    }

    /// `e_j = (1/n) Σ_a ζ^{−ja} g^a` as a matrix on `m`.
    pub fn idempotent(&self, m: &LeftModule<Cyclotomic>, j: usize) -> Matrix<Cyclotomic> {
        let g = self.g_action(m);
        let mut power = Matrix::identity(m.dim());
        let mut acc = Matrix::zeros(m.dim(), m.dim());
        for a in 0..self.n {
            acc = acc.add(&power.scale(&self.zeta_pow(-((j * a) as i64))));
            power = g.mul(&power);
        }
        acc.scale(&Cyclotomic::constant(Rational::new(1, self.n as i64)))
    }

    /// Checks `g^n = 1`, `x^n = 0` and `gx = ζ xg` on `m`.
    pub fn check_relations(&self, alg: &FDAlgebra, m: &LeftModule<Cyclotomic>) -> Result<()> {
        let g = self.g_action(m);
        let x = self.x_action(alg, m)?;
        let pow = |a: &Matrix<Cyclotomic>| (1..self.n).fold(a.clone(), |acc, _| acc.mul(a));
        let id = Matrix::identity(m.dim());
        if pow(&g) != id || !pow(&x).is_zero() || g.mul(&x) != x.mul(&g).scale(&self.zeta_pow(1)) {
            return Err(Error::InvalidModule(format!("{}: Hopf relations fail", m.name)));
        }
        Ok(())
    }
}

/// Scalar extension of a rational module to `ℚ(ζ_n)`.
pub fn extend_scalars(m: &LeftModule<Rational>, alg: &FDAlgebra, hopf: &HopfData) -> Result<LeftModule<Cyclotomic>> {
    let arrows = m
        .arrow_blocks()
        .iter()
        .map(|b| b.map(|q| Cyclotomic::from_coeffs(vec![q.clone()], &hopf.modulus)))
        .collect();
    LeftModule::new(alg, &m.name, m.dims().to_vec(), arrows)
}

/// `M_1 ⊗ M_2` with `g ↦ g⊗g` and `x ↦ x⊗1 + g⊗x`, regrouped by vertex.
pub fn tensor_module(
    alg: &FDAlgebra,
    hopf: &HopfData,
    m1: &LeftModule<Cyclotomic>,
    m2: &LeftModule<Cyclotomic>,
) -> Result<LeftModule<Cyclotomic>> {
    let n = hopf.n;
    let order = check_nakayama_cyclic(alg)?;
    m1.validate(alg)?;
    m2.validate(alg)?;
    let g1 = hopf.g_action(m1);
    let x1 = hopf.x_action(alg, m1)?;
    let x2 = hopf.x_action(alg, m2)?;
    let x = x1.kron(&Matrix::identity(m2.dim())).add(&g1.kron(&x2));

    let vertex_of = |m: &LeftModule<Cyclotomic>| -> Vec<usize> {
        (0..n).flat_map(|j| std::iter::repeat(j).take(m.dims()[j])).collect()
    };
    let (v1, v2) = (vertex_of(m1), vertex_of(m2));
    let d2 = m2.dim();
    // global tensor index a*d2 + b lies at vertex v1[a] + v2[b]
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); n];
    for a in 0..m1.dim() {
        for b in 0..d2 {
            members[(v1[a] + v2[b]) % n].push(a * d2 + b);
        }
    }
    let dims: Vec<usize> = members.iter().map(Vec::len).collect();
    let mut arrows = vec![Matrix::zeros(0, 0); n];
    for (j, &k) in order.iter().enumerate() {
        let w = (j + 1) % n;
        let mut block = Matrix::zeros(dims[w], dims[j]);
        for (c, &col) in members[j].iter().enumerate() {
            for row in 0..x.rows() {
                let val = x.get(row, col);
                if val.is_zero() {
                    continue;
                }
                let r = members[w].iter().position(|&p| p == row).ok_or_else(|| {
                    Error::InvalidModule("tensor action leaves the vertex grading".into())
                })?;
                block.set(r, c, val.clone());
            }
        }
        arrows[k] = block;
    }
    let out = LeftModule::new(alg, &format!("{} ⊗ {}", m1.name, m2.name), dims, arrows)?;
    out.validate(alg)?;
    hopf.check_relations(alg, &out)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{indec_module, taft_algebra};
    use crate::repmod::{nakayama_decompose, Decomposition};

    fn module(alg: &FDAlgebra, hopf: &HopfData, i: usize, u: usize) -> LeftModule<Cyclotomic> {
        indec_module(alg, i, u).and_then(|m| extend_scalars(&m, alg, hopf)).unwrap()
    }

    #[test]
    fn idempotents_are_component_projections() {
        let a = taft_algebra(3).unwrap();
        let h = HopfData::new(3).unwrap();
        let m = module(&a, &h, 1, 0);
        h.check_relations(&a, &m).unwrap();
        let mut sum = Matrix::zeros(m.dim(), m.dim());
        for j in 0..3 {
            let e = h.idempotent(&m, j);
            assert_eq!(e.mul(&e), e);
            assert_eq!(e.rank(), m.dims()[j]);
            sum = sum.add(&e);
        }
        assert_eq!(sum, Matrix::identity(m.dim()));
    }

    #[test]
    fn projective_squared_at_two() {
        let a = taft_algebra(2).unwrap();
        let h = HopfData::new(2).unwrap();
        let p = module(&a, &h, 0, 1);
        let t = tensor_module(&a, &h, &p, &p).unwrap();
        assert_eq!(t.dim(), 4);
        assert_eq!(
            nakayama_decompose(&a, &t).unwrap(),
            Decomposition::from([((0, 1), 1), ((1, 0), 1)])
        );
    }

    #[test]
    fn unit_law() {
        let a = taft_algebra(3).unwrap();
        let h = HopfData::new(3).unwrap();
        let unit = module(&a, &h, 0, 0);
        for i in 0..3 {
            for u in 0..3 {
                let m = module(&a, &h, i, u);
                let t = tensor_module(&a, &h, &unit, &m).unwrap();
                assert_eq!(nakayama_decompose(&a, &t).unwrap(), Decomposition::from([((i, u), 1)]));
            }
        }
    }
}
