//! The Auslander algebra of `Λ_n` as `End(⊕ N_{i,u})`.
//!
//! Product is composition, `f·g = f∘g`; a map `N_v → N_w` has source `v`
//! and target `w`. The grading is the radical filtration: degree one is a
//! complement of `rad²` in `rad`, and degree `d` is spanned by products of
//! degree one with degree `d−1`. That this gives a direct sum decomposition
//! is checked, not assumed.

use std::collections::HashMap;

use serde::Serialize;

use crate::algebra::{BasisElement, FDAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{Echelon, Field, Matrix, Rational, SparseVec, Subspace};
use crate::par;
use crate::repmod::{check_nakayama_cyclic, hom_space, LeftModule};

use super::taft::indec_module;

/// Vertex `(i, u)` of the End algebra is the identity of `N_{i,u}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuslanderLabeling {
    pub n: usize,
    pub labels: Vec<(usize, usize)>,
}

impl AuslanderLabeling {
    pub fn vertex(&self, i: usize, u: usize) -> usize {
        let n = self.n;
        self.labels
            .iter()
            .position(|&l| l == (i % n, u % n))
            .expect("labels cover (Z/n)^2")
    }
}

fn flatten(m: &Matrix<Rational>) -> SparseVec<Rational> {
    let mut entries = Vec::new();
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            let x = m.get(r, c);
            if !x.is_zero() {
                entries.push((r * m.cols() + c, x.clone()));
            }
        }
    }
    SparseVec::from_entries(entries)
}

fn unflatten(v: &SparseVec<Rational>, rows: usize, cols: usize) -> Matrix<Rational> {
    let mut m = Matrix::zeros(rows, cols);
    for (k, x) in v.entries() {
        m.set(k / cols, k % cols, x.clone());
    }
    m
}

/// One homogeneous basis element before numbering: a map `N_src → N_tgt`.
struct Element {
    source: usize,
    target: usize,
    degree: usize,
    map: Matrix<Rational>,
}

pub fn auslander_of(alg: &FDAlgebra) -> Result<(FDAlgebra, AuslanderLabeling)> {
    check_nakayama_cyclic(alg)?;
    let n = alg.num_vertices();
    let labels: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |u| (i, u))).collect();
    let modules: Vec<LeftModule<Rational>> = labels
        .iter()
        .map(|&(i, u)| indec_module(alg, i, u))
        .collect::<Result<_>>()?;
    let nv = modules.len();

    // Hom spaces, stored as RREF subspaces of flattened matrices.
    let homs: Vec<Subspace<Rational>> = par::map_range(nv * nv, |k| {
        let (v, w) = (k / nv, k % nv);
        let maps = hom_space(alg, &modules[v], &modules[w]);
        Subspace::from_spanning(modules[w].dim() * modules[v].dim(), maps.iter().map(flatten))
    });
    let hom = |v: usize, w: usize| &homs[v * nv + w];
    for v in 0..nv {
        if hom(v, v).dim() != 1 {
            return Err(Error::Unsupported(format!(
                "End({}) has dimension {}",
                modules[v].name,
                hom(v, v).dim()
            )));
        }
    }
    let compose = |f: &Matrix<Rational>, g: &Matrix<Rational>| f.mul(g);

    // rad = all maps between distinct indecomposables
    let mut layers: Vec<HashMap<(usize, usize), Vec<Matrix<Rational>>>> = Vec::new();
    let rad2: HashMap<(usize, usize), Subspace<Rational>> = (0..nv)
        .flat_map(|v| (0..nv).map(move |w| (v, w)))
        .filter(|(v, w)| v != w)
        .map(|(v, w)| {
            let (dv, dw) = (modules[v].dim(), modules[w].dim());
            let mut products = Vec::new();
            for x in (0..nv).filter(|&x| x != v && x != w) {
                for g in hom(v, x).basis() {
                    let g = unflatten(g, modules[x].dim(), dv);
                    for f in hom(x, w).basis() {
                        let f = unflatten(f, dw, modules[x].dim());
                        products.push(flatten(&compose(&f, &g)));
                    }
                }
            }
            ((v, w), Subspace::from_spanning(dv * dw, products))
        })
        .collect();
    let mut first = HashMap::new();
    for v in 0..nv {
        for w in (0..nv).filter(|&w| w != v) {
            let r2 = &rad2[&(v, w)];
            let mut ech = Echelon::new(hom(v, w).ambient());
            for b in r2.basis() {
                ech.insert(b.clone());
            }
            let chosen: Vec<Matrix<Rational>> = hom(v, w)
                .basis()
                .iter()
                .filter(|b| ech.insert((*b).clone()))
                .map(|b| unflatten(b, modules[w].dim(), modules[v].dim()))
                .collect();
            if !chosen.is_empty() {
                first.insert((v, w), chosen);
            }
        }
    }
    layers.push(first);
    loop {
        let last = layers.last().unwrap();
        let mut next: HashMap<(usize, usize), Vec<Matrix<Rational>>> = HashMap::new();
        for (&(v, x), gs) in last {
            for (&(x2, w), fs) in &layers[0] {
                if x2 != x {
                    continue;
                }
                for g in gs {
                    for f in fs {
                        next.entry((v, w)).or_default().push(compose(f, g));
                    }
                }
            }
        }
        let mut reduced = HashMap::new();
        for ((v, w), maps) in next {
            let (dv, dw) = (modules[v].dim(), modules[w].dim());
            let span = Subspace::from_spanning(dv * dw, maps.iter().map(flatten));
            if span.dim() > 0 {
                reduced.insert((v, w), span.basis().iter().map(|b| unflatten(b, dw, dv)).collect::<Vec<_>>());
            }
        }
        if reduced.is_empty() {
            break;
        }
        if layers.len() > 4 * nv {
            return Err(Error::NotFiniteDimensional(4 * nv));
        }
        layers.push(reduced);
    }

    let mut elements: Vec<Element> = (0..nv)
        .map(|v| Element {
            source: v,
            target: v,
            degree: 0,
            map: Matrix::identity(modules[v].dim()),
        })
        .collect();
    for (d, layer) in layers.iter().enumerate() {
        let mut keys: Vec<&(usize, usize)> = layer.keys().collect();
        keys.sort();
        for &(v, w) in keys {
            for m in &layer[&(v, w)] {
                elements.push(Element {
                    source: v,
                    target: w,
                    degree: d + 1,
                    map: m.clone(),
                });
            }
        }
    }

    // The homogeneous pieces must form a basis of each Hom space.
    let mut by_pair: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for (k, e) in elements.iter().enumerate() {
        by_pair.entry((e.source, e.target)).or_default().push(k);
    }
    let mut inverse: HashMap<(usize, usize), (Subspace<Rational>, Matrix<Rational>)> = HashMap::new();
    for v in 0..nv {
        for w in 0..nv {
            let h = hom(v, w);
            let members = by_pair.get(&(v, w)).cloned().unwrap_or_default();
            if members.len() != h.dim() {
                return Err(Error::Unsupported(format!(
                    "radical layers of Hom({}, {}) have total dimension {} ≠ {}",
                    modules[v].name,
                    modules[w].name,
                    members.len(),
                    h.dim()
                )));
            }
            if members.is_empty() {
                continue;
            }
            // columns: coordinates of each member in the RREF basis of h
            let cols: Vec<SparseVec<Rational>> = members
                .iter()
                .map(|&k| SparseVec::from_dense(&h.coords(&flatten(&elements[k].map)).unwrap()))
                .collect();
            let t = Matrix::from_columns(h.dim(), &cols);
            let inv = t.inverse().ok_or_else(|| {
                Error::Unsupported(format!(
                    "radical layers of Hom({}, {}) are dependent",
                    modules[v].name, modules[w].name
                ))
            })?;
            inverse.insert((v, w), (h.clone(), inv));
        }
    }

    let basis: Vec<BasisElement> = {
        let mut counter: HashMap<(usize, usize, usize), usize> = HashMap::new();
        elements
            .iter()
            .map(|e| {
                let (i, u) = labels[e.source];
                let (j, v) = labels[e.target];
                let label = if e.degree == 0 {
                    format!("1[{i},{u}]")
                } else {
                    let c = counter.entry((e.source, e.target, e.degree)).or_default();
                    *c += 1;
                    format!("f{}[{i},{u}->{j},{v}]#{}", e.degree, c)
                };
                BasisElement {
                    label,
                    source: e.source,
                    target: e.target,
                    degree: e.degree,
                }
            })
            .collect()
    };
    let vertices: Vec<String> = labels.iter().map(|(i, u)| format!("N{i},{u}")).collect();
    let gamma = FDAlgebra::from_parts(&format!("auslander-taft({n})"), vertices, basis, |x, y| {
        let product = compose(&elements[x].map, &elements[y].map);
        let key = (elements[y].source, elements[x].target);
        let Some((h, inv)) = inverse.get(&key) else {
            return SparseVec::new();
        };
        let coords = h.coords(&flatten(&product)).expect("composition stays in Hom");
        let new = inv.mul_vec(&SparseVec::from_dense(&coords));
        let members = &by_pair[&key];
        SparseVec::from_entries(new.entries().iter().map(|(k, c)| (members[*k], c.clone())).collect())
    })?;
    gamma.check_invariants(if n <= 2 { usize::MAX } else { 40 })?;
    Ok((gamma, AuslanderLabeling { n, labels }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::taft_algebra;

    #[test]
    fn gamma_two() {
        let (g, lab) = auslander_of(&taft_algebra(2).unwrap()).unwrap();
        assert_eq!(g.dim(), 10);
        assert_eq!(g.num_vertices(), 4);
        assert_eq!(g.num_arrows(), 4);
        let c = g.cartan_matrix();
        for v in 0..4 {
            assert_eq!(c[v][v], 1);
        }
        assert_eq!(lab.vertex(1, 0), 2);
    }

    #[test]
    fn gamma_three_generated_in_degree_one() {
        let (g, _) = auslander_of(&taft_algebra(3).unwrap()).unwrap();
        assert_eq!(g.num_vertices(), 9);
        assert_eq!(g.num_arrows(), 12);
        assert!(g.generator_expansion().is_ok());
    }
}
