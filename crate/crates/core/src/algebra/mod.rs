//! Finite-dimensional basic algebras with a graded, vertex-homogeneous basis.

mod build;
mod presentation;

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix, Rational, SparseVec};
use crate::par;

pub use build::build_algebra;
pub use presentation::{parse_presentation, Arrow, Path, Presentation, Quiver, Relation};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BasisElement {
    pub label: String,
    pub source: usize,
    pub target: usize,
    pub degree: usize,
}

/// `b = Σ c · g · w` with `g` of degree one and `w` one degree lower.
pub type GeneratorExpansion = Vec<(Rational, usize, usize)>;

/// Algebra given by structure constants on a basis of vertex-bihomogeneous,
/// graded elements. Degree-0 basis elements are exactly the vertex
/// idempotents.
#[derive(Debug)]
pub struct FDAlgebra {
    name: String,
    vertices: Vec<String>,
    basis: Vec<BasisElement>,
    idempotents: Vec<usize>,
    /// `table[x * dim + y]` is `x · y` in basis coordinates.
    table: Vec<SparseVec<Rational>>,
    expansion: OnceLock<std::result::Result<Vec<GeneratorExpansion>, Error>>,
}

impl Clone for FDAlgebra {
    fn clone(&self) -> Self {
        FDAlgebra {
            name: self.name.clone(),
            vertices: self.vertices.clone(),
            basis: self.basis.clone(),
            idempotents: self.idempotents.clone(),
            table: self.table.clone(),
            expansion: OnceLock::new(),
        }
    }
}

impl PartialEq for FDAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.basis == other.basis && self.table == other.table
    }
}

impl FDAlgebra {
    /// Assembles an algebra from raw data. `product(x, y)` must return
    /// `x · y`; products of non-composable pairs are ignored and stored as
    /// zero.
    pub fn from_parts(
        name: &str,
        vertices: Vec<String>,
        basis: Vec<BasisElement>,
        product: impl Fn(usize, usize) -> SparseVec<Rational> + Sync + Send,
    ) -> Result<Self> {
        let dim = basis.len();
        let mut idempotents = vec![usize::MAX; vertices.len()];
        for (k, b) in basis.iter().enumerate() {
            if b.source >= vertices.len() || b.target >= vertices.len() {
                return Err(Error::UnknownVertex(format!("{} (basis element {})", b.source.max(b.target), b.label)));
            }
            if b.degree == 0 {
                if b.source != b.target || idempotents[b.source] != usize::MAX {
                    return Err(Error::Unsupported(format!(
                        "degree-0 part must be spanned by one idempotent per vertex (element {})",
                        b.label
                    )));
                }
                idempotents[b.source] = k;
            }
        }
        if let Some(v) = idempotents.iter().position(|&i| i == usize::MAX) {
            return Err(Error::Unsupported(format!("vertex {} has no idempotent", vertices[v])));
        }
        let table = par::map_range(dim * dim, |k| {
            let (x, y) = (k / dim, k % dim);
            if basis[x].source == basis[y].target {
                product(x, y)
            } else {
                SparseVec::new()
            }
        });
        Ok(FDAlgebra {
            name: name.to_string(),
            vertices,
            basis,
            idempotents,
            table,
            expansion: OnceLock::new(),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_index(&self, label: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|v| v == label)
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn element(&self, k: usize) -> &BasisElement {
        &self.basis[k]
    }

    /// Basis index of the idempotent at `vertex`.
    pub fn idempotent(&self, vertex: usize) -> usize {
        self.idempotents[vertex]
    }

    pub fn is_idempotent_basis(&self, k: usize) -> bool {
        self.basis[k].degree == 0
    }

    pub fn mul_basis(&self, x: usize, y: usize) -> &SparseVec<Rational> {
        &self.table[x * self.dim() + y]
    }

    pub fn mul<F: Field>(&self, a: &SparseVec<F>, b: &SparseVec<F>) -> SparseVec<F> {
        let mut raw = Vec::new();
        for (x, ca) in a.entries() {
            for (y, cb) in b.entries() {
                let c = ca.times(cb);
                for (z, s) in self.mul_basis(*x, *y).entries() {
                    raw.push((*z, c.times(&F::from_rational(s))));
                }
            }
        }
        SparseVec::from_entries(raw)
    }

    pub fn top_degree(&self) -> usize {
        self.basis.iter().map(|b| b.degree).max().unwrap_or(0)
    }

    /// Basis indices of each degree.
    pub fn degree_classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.top_degree() + 1];
        for (k, b) in self.basis.iter().enumerate() {
            out[b.degree].push(k);
        }
        out
    }

    pub fn graded_dims(&self) -> Vec<usize> {
        self.degree_classes().iter().map(Vec::len).collect()
    }

    pub fn degree_one(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&k| self.basis[k].degree == 1).collect()
    }

    /// Basis elements of positive degree; these span the radical.
    pub fn radical_basis(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&k| self.basis[k].degree > 0).collect()
    }

    /// Entry `(w, v)` is `dim e_w A e_v`.
    pub fn cartan_matrix(&self) -> Vec<Vec<usize>> {
        let n = self.num_vertices();
        let mut c = vec![vec![0; n]; n];
        for b in &self.basis {
            c[b.target][b.source] += 1;
        }
        c
    }

    /// Entry `(w, v)` is `dim e_w (rad A / rad² A) e_v`: the arrow counts
    /// of the Gabriel quiver.
    pub fn arrow_matrix(&self) -> Vec<Vec<usize>> {
        let n = self.num_vertices();
        let rad2 = self.radical_square();
        let mut c = vec![vec![0; n]; n];
        for w in 0..n {
            for v in 0..n {
                let rad: Vec<usize> = self
                    .radical_basis()
                    .into_iter()
                    .filter(|&k| self.basis[k].target == w && self.basis[k].source == v)
                    .collect();
                let inside = rad2
                    .iter()
                    .filter(|vec| {
                        vec.lead()
                            .map(|(k, _)| self.basis[k].target == w && self.basis[k].source == v)
                            .unwrap_or(false)
                    })
                    .count();
                c[w][v] = rad.len() - inside;
            }
        }
        c
    }

    /// Echelon basis of rad² (products of two radical basis elements).
    fn radical_square(&self) -> Vec<SparseVec<Rational>> {
        let rad = self.radical_basis();
        let products = rad
            .iter()
            .flat_map(|&x| rad.iter().map(move |&y| (x, y)))
            .map(|(x, y)| self.mul_basis(x, y).clone())
            .filter(|v| !v.is_zero());
        crate::linalg::Subspace::from_spanning(self.dim(), products)
            .basis()
            .to_vec()
    }

    pub fn num_arrows(&self) -> usize {
        self.arrow_matrix().iter().flatten().sum()
    }

    /// The opposite algebra: same basis, sources and targets swapped,
    /// `x ·op y = y · x`.
    pub fn opposite(&self) -> FDAlgebra {
        let basis: Vec<BasisElement> = self
            .basis
            .iter()
            .map(|b| BasisElement {
                label: b.label.clone(),
                source: b.target,
                target: b.source,
                degree: b.degree,
            })
            .collect();
        FDAlgebra::from_parts(
            &format!("{}^op", self.name),
            self.vertices.clone(),
            basis,
            |x, y| self.mul_basis(y, x).clone(),
        )
        .expect("opposite of a valid algebra is valid")
    }

    /// Same algebra with vertex labels replaced.
    pub fn relabel_vertices(&self, labels: Vec<String>) -> FDAlgebra {
        assert_eq!(labels.len(), self.num_vertices());
        let mut out = self.clone();
        out.vertices = labels;
        out
    }

    /// Same algebra with basis element `k` taken from old index `order[k]`.
    pub fn reorder_basis(&self, order: &[usize]) -> Result<FDAlgebra> {
        let dim = self.dim();
        let mut seen = vec![false; dim];
        if order.len() != dim || order.iter().any(|&k| k >= dim || std::mem::replace(&mut seen[k], true)) {
            return Err(Error::DimensionMismatch("not a permutation of the basis".into()));
        }
        let mut new_of = vec![0; dim];
        for (k, &old) in order.iter().enumerate() {
            new_of[old] = k;
        }
        let basis = order.iter().map(|&old| self.basis[old].clone()).collect();
        FDAlgebra::from_parts(&self.name, self.vertices.clone(), basis, |x, y| {
            self.mul_basis(order[x], order[y]).reindex(|z| new_of[z])
        })
    }

    /// Expansion of every basis element of degree ≥ 2 in products of a
    /// degree-one element with a basis element one degree lower. Fails if
    /// the algebra is not generated in degree one.
    pub fn generator_expansion(&self) -> Result<&[GeneratorExpansion]> {
        self.expansion
            .get_or_init(|| self.compute_expansion())
            .as_ref()
            .map(|v| v.as_slice())
            .map_err(Clone::clone)
    }

    fn compute_expansion(&self) -> std::result::Result<Vec<GeneratorExpansion>, Error> {
        let classes = self.degree_classes();
        let mut out = vec![Vec::new(); self.dim()];
        let gens = classes.get(1).cloned().unwrap_or_default();
        for d in 2..classes.len() {
            let target = &classes[d];
            let pos: std::collections::HashMap<usize, usize> =
                target.iter().enumerate().map(|(i, &k)| (k, i)).collect();
            let mut ech = crate::linalg::Echelon::new(target.len());
            let mut chosen: Vec<(usize, usize, SparseVec<Rational>)> = Vec::new();
            'outer: for &g in &gens {
                for &w in &classes[d - 1] {
                    if self.basis[g].source != self.basis[w].target {
                        continue;
                    }
                    let prod = self.mul_basis(g, w).reindex(|k| pos[&k]);
                    if ech.insert(prod.clone()) {
                        chosen.push((g, w, prod));
                        if chosen.len() == target.len() {
                            break 'outer;
                        }
                    }
                }
            }
            if chosen.len() != target.len() {
                return Err(Error::Unsupported(format!(
                    "algebra `{}` is not generated in degree one (degree {d})",
                    self.name
                )));
            }
            let cols: Vec<SparseVec<Rational>> = chosen.iter().map(|c| c.2.clone()).collect();
            let m = Matrix::from_columns(target.len(), &cols);
            let inv = m.inverse().expect("chosen products are independent");
            for (i, &b) in target.iter().enumerate() {
                // e_b = Σ_k inv[k][i] · product_k
                out[b] = (0..chosen.len())
                    .filter(|&k| !inv.get(k, i).is_zero())
                    .map(|k| (inv.get(k, i).clone(), chosen[k].0, chosen[k].1))
                    .collect();
            }
        }
        Ok(out)
    }

    /// Checks idempotent completeness and orthogonality, vertex
    /// homogeneity, grading, and associativity (exhaustive up to
    /// `exhaustive_limit` basis elements, deterministic sampling above).
    pub fn check_invariants(&self, exhaustive_limit: usize) -> Result<()> {
        let dim = self.dim();
        let fail = |m: String| Err(Error::Unsupported(format!("{}: {m}", self.name)));
        for x in 0..dim {
            let bx = &self.basis[x];
            for v in 0..self.num_vertices() {
                let e = self.idempotents[v];
                let left = self.mul_basis(e, x);
                let right = self.mul_basis(x, e);
                let unit = SparseVec::unit(x);
                let want_left = if v == bx.target { unit.clone() } else { SparseVec::new() };
                let want_right = if v == bx.source { unit } else { SparseVec::new() };
                if *left != want_left || *right != want_right {
                    return fail(format!("idempotent e_{v} acts wrongly on {}", bx.label));
                }
            }
            for y in 0..dim {
                let by = &self.basis[y];
                for (z, _) in self.mul_basis(x, y).entries() {
                    let bz = &self.basis[*z];
                    if bz.degree != bx.degree + by.degree {
                        return fail(format!("{}·{} not homogeneous of degree {}", bx.label, by.label, bx.degree + by.degree));
                    }
                    if bz.source != by.source || bz.target != bx.target {
                        return fail(format!("{}·{} has wrong endpoints", bx.label, by.label));
                    }
                }
            }
        }
        let triples: Vec<(usize, usize, usize)> = if dim <= exhaustive_limit {
            (0..dim * dim * dim).map(|k| (k / (dim * dim), (k / dim) % dim, k % dim)).collect()
        } else {
            // deterministic LCG sample
            let mut s: u64 = 0x9e37_79b9_7f4a_7c15;
            (0..20_000)
                .map(|_| {
                    let mut next = || {
                        s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                        ((s >> 33) as usize) % dim
                    };
                    (next(), next(), next())
                })
                .collect()
        };
        let ok = par::all_range(triples.len(), |k| {
            let (x, y, z) = triples[k];
            let xy = self.mul_basis(x, y);
            let yz = self.mul_basis(y, z);
            self.mul(xy, &SparseVec::unit(z)) == self.mul(&SparseVec::unit(x), yz)
        });
        if !ok {
            return fail("multiplication is not associative".into());
        }
        Ok(())
    }

    /// Canonical JSON description: basis list plus nonzero structure
    /// constants `[x, y, [[z, c], ...]]` in lexicographic order.
    pub fn to_json(&self) -> serde_json::Value {
        let mut products = Vec::new();
        for x in 0..self.dim() {
            for y in 0..self.dim() {
                let p = self.mul_basis(x, y);
                if !p.is_zero() {
                    let terms: Vec<serde_json::Value> = p
                        .entries()
                        .iter()
                        .map(|(z, c)| serde_json::json!([z, c]))
                        .collect();
                    products.push(serde_json::json!([x, y, terms]));
                }
            }
        }
        serde_json::json!({
            "name": self.name,
            "vertices": self.vertices,
            "basis": self.basis,
            "products": products,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn two_cycle() -> FDAlgebra {
        let p = parse_presentation(
            "vertices: 0 1\narrow x0 : 0 -> 1\narrow x1 : 1 -> 0\nrelation 1*x0.x1\nrelation 1*x1.x0\n",
        )
        .unwrap();
        build_algebra(&p).unwrap()
    }

    #[test]
    fn opposite_swaps_cartan() {
        let a = two_cycle();
        let op = a.opposite();
        let c = a.cartan_matrix();
        let co = op.cartan_matrix();
        for w in 0..2 {
            for v in 0..2 {
                assert_eq!(c[w][v], co[v][w]);
            }
        }
        op.check_invariants(40).unwrap();
    }

    #[test]
    fn arrow_matrix_of_cycle() {
        let a = two_cycle();
        assert_eq!(a.arrow_matrix(), vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(a.num_arrows(), 2);
    }
}
