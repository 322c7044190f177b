//! Terms of the minimal bimodule resolution predicted from Ext, and the
//! Euler characteristic of the contracted complex.

use serde::{Deserialize, Serialize};

use super::hh_dims_relative;
use crate::algebra::FDAlgebra;
use crate::error::{Error, Result};
use crate::repmod::ExtTable;

/// One summand `(A e_left ⊗ e_right A)^multiplicity`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HappelTerm {
    pub left: usize,
    pub right: usize,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HappelTermList {
    /// `terms[p]`, sorted by `(right, left)`.
    pub terms: Vec<Vec<HappelTerm>>,
    /// Whether the table's last degree vanishes, so nothing follows.
    pub terminated: bool,
}

/// `R_p = ⊕ (A e_j ⊗ e_i A)^{dim Ext^p(S_i, S_j)}`.
pub fn happel_terms(ext: &ExtTable) -> HappelTermList {
    let mut terms = Vec::with_capacity(ext.max_degree + 1);
    for table in &ext.entries {
        let mut row = Vec::new();
        for (i, line) in table.iter().enumerate() {
            for (j, &m) in line.iter().enumerate() {
                if m > 0 {
                    row.push(HappelTerm {
                        left: j,
                        right: i,
                        multiplicity: m,
                    });
                }
            }
        }
        terms.push(row);
    }
    let terminated = terms.last().is_some_and(Vec::is_empty);
    while terms.len() > 1 && terms.last().is_some_and(Vec::is_empty) {
        terms.pop();
    }
    HappelTermList { terms, terminated }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EulerReport {
    /// `dim A ⊗_{A^e} R_p = Σ mult · dim e_right A e_left`.
    pub contracted_dims: Vec<usize>,
    pub chi: i64,
    pub hh_dims: Vec<usize>,
    pub hh_chi: i64,
    pub agree: bool,
}

fn alternating(dims: &[usize]) -> i64 {
    dims.iter()
        .enumerate()
        .map(|(p, &d)| if p % 2 == 0 { d as i64 } else { -(d as i64) })
        .sum()
}

/// Applies `A ⊗_{A^e} −` to the predicted terms and compares Euler
/// characteristics with Hochschild homology computed independently.
pub fn contracted_euler_check(alg: &FDAlgebra, list: &HappelTermList) -> Result<EulerReport> {
    if !list.terminated {
        return Err(Error::InfiniteResolution(list.terms.len().saturating_sub(1)));
    }
    let cartan = alg.cartan_matrix();
    let contracted_dims: Vec<usize> = list
        .terms
        .iter()
        .map(|row| row.iter().map(|t| t.multiplicity * cartan[t.right][t.left]).sum())
        .collect();
    let chi = alternating(&contracted_dims);
    let hh_dims = hh_dims_relative(alg, list.terms.len().saturating_sub(1)).dims;
    let hh_chi = alternating(&hh_dims);
    Ok(EulerReport {
        contracted_dims,
        chi,
        hh_dims,
        hh_chi,
        agree: chi == hh_chi,
    })
}
