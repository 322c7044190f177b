//! Chern characters `K_0 → HC_{2p}` of idempotent matrices.

use serde::Serialize;

use crate::algebra::FDAlgebra;
use crate::error::{Error, Result};
use crate::homology::{ChainVector, CyclicBicomplex, Mode};
use crate::linalg::{Field, Matrix, Rational, SparseVec};

/// `(y_p, z_p, …, y_1, z_1, y_0)` with `y_m = (−1)^m (2m)!/m!` and
/// `z_m = (−1)^{m−1} (2m)!/(2·m!)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChernCoeffs {
    pub p: usize,
    pub values: Vec<Rational>,
}

impl ChernCoeffs {
    pub fn y(&self, m: usize) -> &Rational {
        &self.values[2 * (self.p - m)]
    }

    /// Defined for `m ≥ 1`.
    pub fn z(&self, m: usize) -> &Rational {
        &self.values[2 * (self.p - m) + 1]
    }
}

pub fn chern_coeffs(p: usize) -> ChernCoeffs {
    let sign = |k: usize| if k % 2 == 0 { Rational::one() } else { Rational::one().negate() };
    let ratio = |m: usize| Rational::factorial(2 * m as u32).divide(&Rational::factorial(m as u32));
    let mut values = Vec::with_capacity(2 * p + 1);
    for m in (0..=p).rev() {
        values.push(sign(m).times(&ratio(m)));
        if m > 0 {
            values.push(sign(m - 1).times(&ratio(m)).divide(&Rational::from(2)));
        }
    }
    ChernCoeffs { p, values }
}

/// Square matrix over an algebra with `E·E = E`.
#[derive(Clone, Debug, PartialEq)]
pub struct IdempotentMatrix {
    entries: Vec<Vec<SparseVec<Rational>>>,
}

impl IdempotentMatrix {
    pub fn new(alg: &FDAlgebra, entries: Vec<Vec<SparseVec<Rational>>>) -> Result<Self> {
        let m = entries.len();
        if entries.iter().any(|r| r.len() != m) {
            return Err(Error::DimensionMismatch("idempotent matrix must be square".into()));
        }
        let e = IdempotentMatrix { entries };
        if e.square(alg) != e.entries {
            return Err(Error::NotIdempotent);
        }
        Ok(e)
    }

    /// `diag(e_{v_1}, …, e_{v_k})`.
    pub fn diagonal(alg: &FDAlgebra, vertices: &[usize]) -> Result<Self> {
        let k = vertices.len();
        let mut entries = vec![vec![SparseVec::new(); k]; k];
        for (i, &v) in vertices.iter().enumerate() {
            entries[i][i] = SparseVec::unit(alg.idempotent(v));
        }
        Self::new(alg, entries)
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &SparseVec<Rational> {
        &self.entries[i][j]
    }

    fn square(&self, alg: &FDAlgebra) -> Vec<Vec<SparseVec<Rational>>> {
        let m = self.size();
        (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| {
                        (0..m).fold(SparseVec::new(), |acc, k| {
                            acc.add(&alg.mul(&self.entries[i][k], &self.entries[k][j]))
                        })
                    })
                    .collect()
            })
            .collect()
    }

    /// `S E S⁻¹` for an invertible scalar matrix `S`.
    pub fn conjugate(&self, alg: &FDAlgebra, s: &Matrix<Rational>) -> Result<Self> {
        let m = self.size();
        let inv = s
            .inverse()
            .ok_or_else(|| Error::DimensionMismatch("conjugating matrix is singular".into()))?;
        let mut entries = vec![vec![SparseVec::new(); m]; m];
        for (i, row) in entries.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate() {
                for k in 0..m {
                    for l in 0..m {
                        let c = s.get(i, k).times(inv.get(l, j));
                        if !c.is_zero() {
                            *slot = slot.axpy(&c, &self.entries[k][l]);
                        }
                    }
                }
            }
        }
        Self::new(alg, entries)
    }

    /// `tr(E^{⊗k}) = Σ E_{i_0 i_1} ⊗ E_{i_1 i_2} ⊗ … ⊗ E_{i_{k−1} i_0}`
    /// expanded into basis tuples.
    pub fn trace_power(&self, k: usize) -> Vec<(Vec<usize>, Rational)> {
        let m = self.size();
        let mut out = Vec::new();
        let mut idx = vec![0usize; k];
        if m == 0 {
            return out;
        }
        loop {
            let mut partial: Vec<(Vec<usize>, Rational)> = vec![(Vec::new(), Rational::one())];
            for s in 0..k {
                let entry = &self.entries[idx[s]][idx[(s + 1) % k]];
                partial = partial
                    .into_iter()
                    .flat_map(|(t, c)| {
                        entry.entries().iter().map(move |(b, x)| {
                            let mut t = t.clone();
                            t.push(*b);
                            (t, c.times(x))
                        })
                    })
                    .collect();
            }
            out.extend(partial);
            // next index tuple
            let mut s = 0;
            while s < k {
                idx[s] += 1;
                if idx[s] < m {
                    break;
                }
                idx[s] = 0;
                s += 1;
            }
            if s == k {
                return out;
            }
        }
    }
}

/// A class in `HC_{2p}` with the chain it came from.
#[derive(Clone, Debug, PartialEq)]
pub struct ChernClass {
    pub degree: usize,
    pub coords: Vec<Rational>,
    pub chain: ChainVector,
}

impl ChernClass {
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rational::is_zero)
    }
}

fn cyclically_composable(alg: &FDAlgebra, t: &[usize]) -> bool {
    let k = t.len();
    (0..k).all(|j| alg.element(t[j]).source == alg.element(t[(j + 1) % k]).target)
}

/// The chain `tr c(E)`: `y_m tr(E^{⊗2m+1})` at `(2(p−m), 2m)` and
/// `z_m tr(E^{⊗2m})` at `(2(p−m)+1, 2m−1)`.
pub fn chern_chain(alg: &FDAlgebra, e: &IdempotentMatrix, p: usize, mode: Mode) -> ChainVector {
    let coeffs = chern_coeffs(p);
    let mut chain = ChainVector::new();
    let mut put = |bd: (usize, usize), k: usize, c: &Rational| {
        for (t, x) in e.trace_power(k) {
            // over E, non-composable tensors vanish
            if mode == Mode::Absolute || cyclically_composable(alg, &t) {
                chain.add_term(bd, t, x.times(c));
            }
        }
    };
    for m in 0..=p {
        put((2 * (p - m), 2 * m), 2 * m + 1, coeffs.y(m));
        if m > 0 {
            put((2 * (p - m) + 1, 2 * m - 1), 2 * m, coeffs.z(m));
        }
    }
    chain
}

/// `ch_{0,p}[E]` in the fixed basis of `HC_{2p}` of `bicomplex`.
pub fn chern_of_idempotent(e: &IdempotentMatrix, p: usize, bicomplex: &CyclicBicomplex) -> Result<ChernClass> {
    if bicomplex.max_degree() < 2 * p {
        return Err(Error::DegreeOutOfRange(2 * p));
    }
    let chain = chern_chain(bicomplex.algebra(), e, p, bicomplex.mode());
    let coords = bicomplex.class_coords(&chain, 2 * p)?;
    Ok(ChernClass {
        degree: 2 * p,
        coords,
        chain,
    })
}
