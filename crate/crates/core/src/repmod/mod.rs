//! Left modules over an [`FDAlgebra`], stored by their vertex components and
//! the action of the degree-one basis elements.

mod nakayama;
mod resolution;

use crate::algebra::FDAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{kernel_basis, Field, Matrix, SparseMatrix, SparseVec, Subspace};

pub use nakayama::{check_nakayama_cyclic, nakayama_decompose, Decomposition};
pub use resolution::{ext_table, minimal_resolution, projective_cover, Cover, ExtTable, MinResolution};

/// Vector `M = ⊕_v M_v`; global coordinates list the components in vertex
/// order. `arrows[k]` is the block `M_src → M_tgt` of the `k`-th degree-one
/// basis element of the algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct LeftModule<F> {
    pub name: String,
    dims: Vec<usize>,
    arrows: Vec<Matrix<F>>,
}

impl<F: Field> LeftModule<F> {
    /// Checks block shapes only; use [`LeftModule::validate`] for relations.
    pub fn new(alg: &FDAlgebra, name: &str, dims: Vec<usize>, arrows: Vec<Matrix<F>>) -> Result<Self> {
        let deg1 = alg.degree_one();
        if dims.len() != alg.num_vertices() || arrows.len() != deg1.len() {
            return Err(Error::InvalidModule(format!(
                "{name}: expected {} components and {} arrow blocks",
                alg.num_vertices(),
                deg1.len()
            )));
        }
        for (k, &g) in deg1.iter().enumerate() {
            let b = alg.element(g);
            if arrows[k].rows() != dims[b.target] || arrows[k].cols() != dims[b.source] {
                return Err(Error::InvalidModule(format!(
                    "{name}: block of {} has shape {}x{}, expected {}x{}",
                    b.label,
                    arrows[k].rows(),
                    arrows[k].cols(),
                    dims[b.target],
                    dims[b.source]
                )));
            }
        }
        Ok(LeftModule {
            name: name.to_string(),
            dims,
            arrows,
        })
    }

    pub fn zero(alg: &FDAlgebra) -> Self {
        let dims = vec![0; alg.num_vertices()];
        let arrows = alg.degree_one().iter().map(|_| Matrix::zeros(0, 0)).collect();
        LeftModule {
            name: "0".into(),
            dims,
            arrows,
        }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn offset(&self, v: usize) -> usize {
        self.dims[..v].iter().sum()
    }

    pub fn arrow_blocks(&self) -> &[Matrix<F>] {
        &self.arrows
    }

    /// Action block of every basis element of the algebra, derived from the
    /// degree-one blocks through the generator expansion.
    pub fn actions(&self, alg: &FDAlgebra) -> Result<Vec<Matrix<F>>> {
        let expansion = alg.generator_expansion()?;
        let mut pos = vec![usize::MAX; alg.dim()];
        for (k, &g) in alg.degree_one().iter().enumerate() {
            pos[g] = k;
        }
        let mut out: Vec<Option<Matrix<F>>> = vec![None; alg.dim()];
        for class in alg.degree_classes() {
            for b in class {
                let el = alg.element(b);
                let block = match el.degree {
                    0 => Matrix::identity(self.dims[el.source]),
                    1 => self.arrows[pos[b]].clone(),
                    _ => {
                        let mut acc = Matrix::zeros(self.dims[el.target], self.dims[el.source]);
                        for (c, g, w) in &expansion[b] {
                            let prod = out[*g].as_ref().unwrap().mul(out[*w].as_ref().unwrap());
                            acc = acc.add(&prod.scale(&F::from_rational(c)));
                        }
                        acc
                    }
                };
                out[b] = Some(block);
            }
        }
        Ok(out.into_iter().map(Option::unwrap).collect())
    }

    /// Every product `g·b` with `g` of degree one must act as
    /// `act(g)·act(b)`; this forces all relations of the algebra.
    pub fn validate(&self, alg: &FDAlgebra) -> Result<()> {
        let acts = self.actions(alg)?;
        for g in alg.degree_one() {
            for b in 0..alg.dim() {
                if alg.element(g).source != alg.element(b).target {
                    continue;
                }
                let lhs = acts[g].mul(&acts[b]);
                let (t, s) = (alg.element(g).target, alg.element(b).source);
                let mut rhs = Matrix::zeros(self.dims[t], self.dims[s]);
                for (c, coef) in alg.mul_basis(g, b).entries() {
                    rhs = rhs.add(&acts[*c].scale(&F::from_rational(coef)));
                }
                if lhs != rhs {
                    return Err(Error::InvalidModule(format!(
                        "{}: action of {}·{} is not multiplicative",
                        self.name,
                        alg.element(g).label,
                        alg.element(b).label
                    )));
                }
            }
        }
        Ok(())
    }

    /// The action of basis element `b` as a global `dim × dim` matrix.
    pub fn global_action(&self, alg: &FDAlgebra, block: &Matrix<F>, b: usize) -> Matrix<F> {
        let el = alg.element(b);
        let mut m = Matrix::zeros(self.dim(), self.dim());
        m.set_block(self.offset(el.target), self.offset(el.source), block);
        m
    }

    /// Radical `rad(A)·M` at each vertex, as subspaces of the components.
    pub fn radical(&self, alg: &FDAlgebra) -> Vec<Subspace<F>> {
        let deg1 = alg.degree_one();
        (0..alg.num_vertices())
            .map(|w| {
                let spanning = deg1
                    .iter()
                    .enumerate()
                    .filter(|(_, &g)| alg.element(g).target == w)
                    .flat_map(|(k, _)| (0..self.arrows[k].cols()).map(move |j| (k, j)))
                    .map(|(k, j)| self.arrows[k].column(j));
                Subspace::from_spanning(self.dims[w], spanning)
            })
            .collect()
    }

    /// Dimension vector of `top(M) = M / rad M`.
    pub fn top_dims(&self, alg: &FDAlgebra) -> Vec<usize> {
        self.radical(alg)
            .iter()
            .zip(&self.dims)
            .map(|(r, d)| d - r.dim())
            .collect()
    }

    /// Submodule spanned at each vertex by the given subspace; the caller
    /// guarantees closure under the action. Also returns the inclusion as a
    /// global matrix.
    pub fn submodule(&self, alg: &FDAlgebra, parts: &[Subspace<F>], name: &str) -> Result<(Self, Matrix<F>)> {
        let deg1 = alg.degree_one();
        let mut arrows = Vec::with_capacity(deg1.len());
        for (k, &g) in deg1.iter().enumerate() {
            let el = alg.element(g);
            let (src, tgt) = (&parts[el.source], &parts[el.target]);
            let mut block = Matrix::zeros(tgt.dim(), src.dim());
            for (j, v) in src.basis().iter().enumerate() {
                let image = self.arrows[k].mul_vec(v);
                let coords = tgt.coords(&image).ok_or_else(|| {
                    Error::InvalidModule(format!("{name}: subspace not closed under {}", el.label))
                })?;
                for (i, c) in coords.into_iter().enumerate() {
                    block.set(i, j, c);
                }
            }
            arrows.push(block);
        }
        let dims: Vec<usize> = parts.iter().map(Subspace::dim).collect();
        let total: usize = dims.iter().sum();
        let mut inclusion = Matrix::zeros(self.dim(), total);
        let mut col = 0;
        for (v, part) in parts.iter().enumerate() {
            let off = self.offset(v);
            for b in part.basis() {
                for (i, x) in b.entries() {
                    inclusion.set(off + i, col, x.clone());
                }
                col += 1;
            }
        }
        Ok((
            LeftModule {
                name: name.to_string(),
                dims,
                arrows,
            },
            inclusion,
        ))
    }

    /// Kernel of a homomorphism given as a global `dim N × dim M` matrix
    /// that is block diagonal by vertex.
    pub fn kernel(&self, alg: &FDAlgebra, map: &Matrix<F>, target: &LeftModule<F>, name: &str) -> Result<(Self, Matrix<F>)> {
        let parts: Vec<Subspace<F>> = (0..alg.num_vertices())
            .map(|v| {
                let block = map.block(target.offset(v), self.offset(v), target.dims[v], self.dims[v]);
                kernel_basis(&block.to_sparse())
            })
            .collect();
        self.submodule(alg, &parts, name)
    }
}

/// `S_v`: one-dimensional at `v`, every arrow acting by zero.
pub fn simple<F: Field>(alg: &FDAlgebra, v: usize) -> Result<LeftModule<F>> {
    check_vertex(alg, v)?;
    let mut dims = vec![0; alg.num_vertices()];
    dims[v] = 1;
    let arrows = alg
        .degree_one()
        .iter()
        .map(|&g| Matrix::zeros(dims[alg.element(g).target], dims[alg.element(g).source]))
        .collect();
    LeftModule::new(alg, &format!("S_{}", alg.vertices()[v]), dims, arrows)
}

/// Basis of `P_v = A e_v` at vertex `w`: algebra basis elements from `v`
/// to `w`, in algebra order.
pub fn projective_basis(alg: &FDAlgebra, v: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new(); alg.num_vertices()];
    for (k, b) in alg.basis().iter().enumerate() {
        if b.source == v {
            out[b.target].push(k);
        }
    }
    out
}

/// `P_v = A e_v` with the action by left multiplication.
pub fn projective<F: Field>(alg: &FDAlgebra, v: usize) -> Result<LeftModule<F>> {
    check_vertex(alg, v)?;
    let pb = projective_basis(alg, v);
    let mut local = vec![usize::MAX; alg.dim()];
    for comp in &pb {
        for (i, &b) in comp.iter().enumerate() {
            local[b] = i;
        }
    }
    let dims: Vec<usize> = pb.iter().map(Vec::len).collect();
    let arrows = alg
        .degree_one()
        .iter()
        .map(|&g| {
            let el = alg.element(g);
            let mut block = Matrix::zeros(dims[el.target], dims[el.source]);
            for (j, &b) in pb[el.source].iter().enumerate() {
                for (z, c) in alg.mul_basis(g, b).entries() {
                    block.set(local[*z], j, F::from_rational(c));
                }
            }
            block
        })
        .collect();
    LeftModule::new(alg, &format!("P_{}", alg.vertices()[v]), dims, arrows)
}

/// `M_1 ⊕ … ⊕ M_r`; at each vertex the summands' components follow each
/// other in order.
pub fn direct_sum<F: Field>(alg: &FDAlgebra, parts: &[LeftModule<F>]) -> LeftModule<F> {
    if parts.is_empty() {
        return LeftModule::zero(alg);
    }
    let nv = alg.num_vertices();
    let dims: Vec<usize> = (0..nv).map(|v| parts.iter().map(|p| p.dims[v]).sum()).collect();
    let arrows = alg
        .degree_one()
        .iter()
        .enumerate()
        .map(|(k, &g)| {
            let el = alg.element(g);
            let mut block = Matrix::zeros(dims[el.target], dims[el.source]);
            let (mut r, mut c) = (0, 0);
            for p in parts {
                block.set_block(r, c, &p.arrows[k]);
                r += p.dims[el.target];
                c += p.dims[el.source];
            }
            block
        })
        .collect();
    let name = parts.iter().map(|p| p.name.as_str()).collect::<Vec<_>>().join(" ⊕ ");
    LeftModule {
        name,
        dims,
        arrows,
    }
}

/// Basis of `Hom_A(M, N)`, each map a global `dim N × dim M` matrix, block
/// diagonal by vertex.
pub fn hom_space<F: Field>(alg: &FDAlgebra, m: &LeftModule<F>, n: &LeftModule<F>) -> Vec<Matrix<F>> {
    let nv = alg.num_vertices();
    // unknown (v, r, c): entry (r, c) of f_v : M_v → N_v
    let mut var_off = vec![0; nv + 1];
    for v in 0..nv {
        var_off[v + 1] = var_off[v] + n.dims[v] * m.dims[v];
    }
    let var = |v: usize, r: usize, c: usize| var_off[v] + r * m.dims[v] + c;
    let nvars = var_off[nv];
    let mut rows = Vec::new();
    for (k, &g) in alg.degree_one().iter().enumerate() {
        let el = alg.element(g);
        let (s, t) = (el.source, el.target);
        let (am, an) = (&m.arrows[k], &n.arrows[k]);
        // (f_t · A_M(g) − A_N(g) · f_s)[r][c] = 0
        for r in 0..n.dims[t] {
            for c in 0..m.dims[s] {
                let mut entries = Vec::new();
                for j in 0..m.dims[t] {
                    let x = am.get(j, c);
                    if !x.is_zero() {
                        entries.push((var(t, r, j), x.clone()));
                    }
                }
                for j in 0..n.dims[s] {
                    let x = an.get(r, j);
                    if !x.is_zero() {
                        entries.push((var(s, j, c), x.negate()));
                    }
                }
                let row = SparseVec::from_entries(entries);
                if !row.is_zero() {
                    rows.push(row);
                }
            }
        }
    }
    let system = SparseMatrix::from_rows(nvars, rows);
    let kernel = kernel_basis(&system);
    kernel
        .basis()
        .iter()
        .map(|sol| {
            let mut f = Matrix::zeros(n.dim(), m.dim());
            for v in 0..nv {
                for r in 0..n.dims[v] {
                    for c in 0..m.dims[v] {
                        let x = sol.get(var(v, r, c));
                        if !x.is_zero() {
                            f.set(n.offset(v) + r, m.offset(v) + c, x);
                        }
                    }
                }
            }
            f
        })
        .collect()
}

fn check_vertex(alg: &FDAlgebra, v: usize) -> Result<()> {
    if v >= alg.num_vertices() {
        return Err(Error::UnknownVertex(v.to_string()));
    }
    Ok(())
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::algebra::{build_algebra, parse_presentation};
    use crate::linalg::Rational;

    pub(crate) fn cycle(n: usize) -> FDAlgebra {
        let mut text = String::from("vertices:");
        for i in 0..n {
            text += &format!(" {i}");
        }
        text += "\n";
        for i in 0..n {
            text += &format!("arrow x{i} : {i} -> {}\n", (i + 1) % n);
        }
        for i in 0..n {
            let word: Vec<String> = (0..n).map(|k| format!("x{}", (i + k) % n)).collect();
            text += &format!("relation 1*{}\n", word.join("."));
        }
        build_algebra(&parse_presentation(&text).unwrap()).unwrap()
    }

    #[test]
    fn projective_dims() {
        let a = cycle(2);
        let p: LeftModule<Rational> = projective(&a, 0).unwrap();
        assert_eq!(p.dims(), &[1, 1]);
        p.validate(&a).unwrap();
        let s: LeftModule<Rational> = simple(&a, 1).unwrap();
        assert_eq!(s.dim(), 1);
        assert_eq!(p.top_dims(&a), vec![1, 0]);
    }

    #[test]
    fn projective_total_dim_is_cartan_column_sum() {
        let a = cycle(3);
        let c = a.cartan_matrix();
        for v in 0..3 {
            let p: LeftModule<Rational> = projective(&a, v).unwrap();
            assert_eq!(p.dim(), (0..3).map(|w| c[w][v]).sum::<usize>());
        }
    }

    #[test]
    fn broken_module_is_rejected() {
        let a = cycle(2);
        let one = Matrix::identity(1);
        // both arrows act by 1 on a 1+1 module: x1·x0 ≠ 0
        let m: LeftModule<Rational> = LeftModule::new(&a, "bad", vec![1, 1], vec![one.clone(), one]).unwrap();
        assert!(matches!(m.validate(&a), Err(Error::InvalidModule(_))));
    }

    #[test]
    fn hom_between_projectives_matches_cartan() {
        let a = cycle(3);
        let c = a.cartan_matrix();
        for v in 0..3 {
            for w in 0..3 {
                let pv: LeftModule<Rational> = projective(&a, v).unwrap();
                let pw = projective(&a, w).unwrap();
                // Hom(P_v, P_w) ≅ e_v A e_w
                assert_eq!(hom_space(&a, &pv, &pw).len(), c[v][w]);
            }
        }
    }

    #[test]
    fn unknown_vertex() {
        let a = cycle(2);
        assert!(simple::<Rational>(&a, 5).is_err());
    }
}
