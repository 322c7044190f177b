//! Projective covers, minimal projective resolutions and Ext dimensions.

use serde::{Deserialize, Serialize};

use super::{direct_sum, projective, projective_basis, LeftModule};
use crate::algebra::FDAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix, SparseVec};

/// Projective cover `P = ⊕_k P_{v_k} → M`, with `P_{v_k}` generated by its
/// idempotent mapping to `generators[k]`.
#[derive(Clone, Debug)]
pub struct Cover<F> {
    pub vertices: Vec<usize>,
    pub generators: Vec<SparseVec<F>>,
    pub module: LeftModule<F>,
    /// `dim M × dim P`, block diagonal by vertex.
    pub map: Matrix<F>,
    /// For each global coordinate of `P`: (summand, algebra basis index).
    pub coordinates: Vec<(usize, usize)>,
}

/// Generators are the standard basis vectors of each component, taken in
/// order, that are independent modulo the radical and earlier choices.
pub fn projective_cover<F: Field>(alg: &FDAlgebra, m: &LeftModule<F>) -> Result<Cover<F>> {
    let nv = alg.num_vertices();
    let acts = m.actions(alg)?;
    let rad = m.radical(alg);
    let mut vertices = Vec::new();
    let mut local_gens = Vec::new();
    for w in 0..nv {
        let mut ech = crate::linalg::Echelon::new(m.dims()[w]);
        for b in rad[w].basis() {
            ech.insert(b.clone());
        }
        for j in 0..m.dims()[w] {
            if ech.rank() == m.dims()[w] {
                break;
            }
            if ech.insert(SparseVec::unit(j)) {
                vertices.push(w);
                local_gens.push(SparseVec::unit(j));
            }
        }
    }
    let summands: Vec<LeftModule<F>> = vertices
        .iter()
        .map(|&v| projective(alg, v))
        .collect::<Result<_>>()?;
    let module = direct_sum(alg, &summands);
    let bases: Vec<Vec<Vec<usize>>> = vertices.iter().map(|&v| projective_basis(alg, v)).collect();

    let mut coordinates = Vec::with_capacity(module.dim());
    for w in 0..nv {
        for (k, pb) in bases.iter().enumerate() {
            for &b in &pb[w] {
                coordinates.push((k, b));
            }
        }
    }
    let mut map = Matrix::zeros(m.dim(), module.dim());
    for (col, &(k, b)) in coordinates.iter().enumerate() {
        let w = alg.element(b).target;
        let image = acts[b].mul_vec(&local_gens[k]);
        for (i, x) in image.entries() {
            map.set(m.offset(w) + i, col, x.clone());
        }
    }
    let generators = vertices
        .iter()
        .zip(&local_gens)
        .map(|(&v, g)| g.reindex(|i| m.offset(v) + i))
        .collect();
    Ok(Cover {
        vertices,
        generators,
        module,
        map,
        coordinates,
    })
}

/// Minimal projective resolution `… → P_1 → P_0 → S_v → 0`.
#[derive(Clone, Debug)]
pub struct MinResolution<F> {
    pub simple: usize,
    /// Vertex of each indecomposable summand of each term.
    pub terms: Vec<Vec<usize>>,
    /// `maps[p-1]` is `d_p : P_p → P_{p-1}` in global coordinates.
    pub maps: Vec<Matrix<F>>,
    pub augmentation: Matrix<F>,
    pub coordinates: Vec<Vec<(usize, usize)>>,
    pub term_dims: Vec<usize>,
    pub simple_dim: usize,
    /// Algebra basis indices of the vertex idempotents.
    pub idempotents: Vec<usize>,
    /// Index of the last nonzero term if the resolution stopped; `None` if
    /// it was cut off at the degree limit.
    pub length: Option<usize>,
}

pub fn minimal_resolution<F: Field>(alg: &FDAlgebra, v: usize, pmax: usize) -> Result<MinResolution<F>> {
    let s = super::simple::<F>(alg, v)?;
    let mut terms = Vec::new();
    let mut maps = Vec::new();
    let mut coordinates = Vec::new();
    let mut term_dims = Vec::new();
    let mut augmentation = None;
    let mut current = s.clone();
    let mut inclusion: Option<Matrix<F>> = None;
    let mut length = None;
    for p in 0..=pmax {
        let cover = projective_cover(alg, &current)?;
        match &inclusion {
            None => augmentation = Some(cover.map.clone()),
            Some(inc) => maps.push(inc.mul(&cover.map)),
        }
        terms.push(cover.vertices.clone());
        term_dims.push(cover.module.dim());
        coordinates.push(cover.coordinates.clone());
        let (syzygy, inc) = cover
            .module
            .kernel(alg, &cover.map, &current, &format!("Ω^{}", p + 1))?;
        if syzygy.is_zero() {
            length = Some(p);
            break;
        }
        current = syzygy;
        inclusion = Some(inc);
    }
    let res = MinResolution {
        simple: v,
        terms,
        maps,
        augmentation: augmentation.unwrap(),
        coordinates,
        term_dims,
        simple_dim: s.dim(),
        idempotents: (0..alg.num_vertices()).map(|w| alg.idempotent(w)).collect(),
        length,
    };
    res.verify()?;
    Ok(res)
}

impl<F: Field> MinResolution<F> {
    pub fn multiplicities(&self, p: usize, num_vertices: usize) -> Vec<usize> {
        let mut out = vec![0; num_vertices];
        if let Some(t) = self.terms.get(p) {
            for &w in t {
                out[w] += 1;
            }
        }
        out
    }

    /// `d_p` as a matrix over the algebra: entry `(j, k)` is the component
    /// in summand `j` of `P_{p-1}` of the image of the `k`-th generator.
    pub fn algebra_entries(&self, p: usize) -> Vec<Vec<SparseVec<F>>> {
        let d = &self.maps[p - 1];
        let src = &self.coordinates[p];
        let tgt = &self.coordinates[p - 1];
        let mut out = vec![vec![SparseVec::new(); self.terms[p].len()]; self.terms[p - 1].len()];
        for (col, &(k, b)) in src.iter().enumerate() {
            if !self.idempotents.contains(&b) {
                continue;
            }
            let mut parts: Vec<Vec<(usize, F)>> = vec![Vec::new(); self.terms[p - 1].len()];
            for (row, &(j, a)) in tgt.iter().enumerate() {
                let x = d.get(row, col);
                if !x.is_zero() {
                    parts[j].push((a, x.clone()));
                }
            }
            for (j, entries) in parts.into_iter().enumerate() {
                out[j][k] = SparseVec::from_entries(entries);
            }
        }
        out
    }

    /// `d∘d = 0`, exactness by rank at every computed stage, and
    /// generators mapping into the radical.
    pub fn verify(&self) -> Result<()> {
        let fail = |m: String| Err(Error::InvalidModule(format!("resolution of S_{}: {m}", self.simple)));
        if self.augmentation.rank() != self.simple_dim {
            return fail("augmentation is not onto".into());
        }
        let mut prev = &self.augmentation;
        for (i, d) in self.maps.iter().enumerate() {
            if !prev.mul(d).is_zero() {
                return fail(format!("d∘d ≠ 0 at degree {}", i + 1));
            }
            prev = d;
        }
        let ranks: Vec<usize> = self.maps.iter().map(Matrix::rank).collect();
        let into = |p: usize| if p == 0 { self.simple_dim } else { ranks[p - 1] };
        for p in 0..self.terms.len() {
            let kernel = self.term_dims[p] - into(p);
            let incoming = ranks.get(p).copied();
            match incoming {
                Some(r) if r != kernel => return fail(format!("not exact at P_{p}")),
                None if self.length == Some(p) && kernel != 0 => {
                    return fail(format!("last map not injective at P_{p}"))
                }
                _ => {}
            }
        }
        for p in 1..self.terms.len() {
            for row in self.algebra_entries(p) {
                for entry in row {
                    if entry.entries().iter().any(|(a, _)| self.idempotents.contains(a)) {
                        return fail(format!("d_{p} has an invertible entry"));
                    }
                }
            }
        }
        Ok(())
    }
}

/// `entries[p][v][w] = dim Ext^p(S_v, S_w)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtTable {
    pub max_degree: usize,
    pub entries: Vec<Vec<Vec<usize>>>,
}

impl ExtTable {
    pub fn get(&self, p: usize, v: usize, w: usize) -> usize {
        self.entries.get(p).map_or(0, |t| t[v][w])
    }

    /// Largest `p` with a nonzero entry.
    pub fn global_dimension(&self) -> usize {
        (0..=self.max_degree)
            .rev()
            .find(|&p| self.entries[p].iter().flatten().any(|&x| x > 0))
            .unwrap_or(0)
    }
}

pub fn ext_table(alg: &FDAlgebra, pmax: usize) -> Result<ExtTable> {
    let nv = alg.num_vertices();
    let resolutions = crate::par::map_range(nv, |v| minimal_resolution::<crate::linalg::Rational>(alg, v, pmax));
    let mut entries = vec![vec![vec![0; nv]; nv]; pmax + 1];
    for (v, res) in resolutions.into_iter().enumerate() {
        let res = res?;
        for (p, table) in entries.iter_mut().enumerate() {
            table[v] = res.multiplicities(p, nv);
        }
    }
    Ok(ExtTable {
        max_degree: pmax,
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build_algebra, parse_presentation};
    use crate::linalg::Rational;
    use crate::repmod::tests::cycle;

    #[test]
    fn cycle_resolution_is_periodic() {
        let a = cycle(2);
        let r = minimal_resolution::<Rational>(&a, 0, 4).unwrap();
        assert_eq!(r.terms, vec![vec![0], vec![1], vec![0], vec![1], vec![0]]);
        assert_eq!(r.length, None);
        let ext = ext_table(&a, 3).unwrap();
        // arrow 0 → 1 gives Ext¹(S_0, S_1)
        assert_eq!(ext.get(1, 0, 1), 1);
        assert_eq!(ext.get(1, 0, 0), 0);
        assert_eq!(ext.get(0, 1, 1), 1);
    }

    #[test]
    fn hereditary_line() {
        let a = build_algebra(&parse_presentation("vertices: 0 1 2\narrow a : 0 -> 1\narrow b : 1 -> 2\n").unwrap()).unwrap();
        let r = minimal_resolution::<Rational>(&a, 0, 5).unwrap();
        assert_eq!(r.terms, vec![vec![0], vec![1]]);
        assert_eq!(r.length, Some(1));
        let e = r.algebra_entries(1);
        assert_eq!(e.len(), 1);
        assert_eq!(a.element(e[0][0].lead().unwrap().0).label, "a");
        assert_eq!(ext_table(&a, 3).unwrap().global_dimension(), 1);
    }

    #[test]
    fn ext_zero_is_identity() {
        let a = cycle(3);
        let ext = ext_table(&a, 1).unwrap();
        for v in 0..3 {
            for w in 0..3 {
                assert_eq!(ext.get(0, v, w), usize::from(v == w));
            }
        }
    }
}
