//! Degree-by-degree quotient of a path algebra by a length-homogeneous ideal.

use std::collections::HashMap;

use super::presentation::{Path, Presentation};
use super::{BasisElement, FDAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{Echelon, Field, Rational, SparseVec};

/// Paths of one length with the ideal's degree part in RREF.
struct Layer {
    paths: Vec<Path>,
    index: HashMap<Vec<usize>, usize>,
    /// Ideal basis in path coordinates (column `k` is path `k`).
    ideal: Vec<SparseVec<Rational>>,
}

impl Layer {
    /// Column order is reversed so that pivots land on the latest paths and
    /// the surviving basis consists of the earliest ones.
    fn col(&self, k: usize) -> usize {
        self.paths.len() - 1 - k
    }

    fn vector(&self, terms: impl IntoIterator<Item = (Rational, Vec<usize>)>) -> SparseVec<Rational> {
        SparseVec::from_entries(
            terms
                .into_iter()
                .map(|(c, arrows)| (self.index[&arrows], c))
                .collect(),
        )
    }
}

/// Extensions of `prev` by one arrow, in lexicographic order.
fn extend_paths(p: &Presentation, prev: &[Path]) -> Vec<Path> {
    let q = &p.quiver;
    let mut out = Vec::new();
    for path in prev {
        for (a, arrow) in q.arrows().iter().enumerate() {
            if arrow.source == path.target {
                let mut arrows = path.arrows.clone();
                arrows.push(a);
                out.push(Path {
                    source: path.source,
                    target: arrow.target,
                    arrows,
                });
            }
        }
    }
    out
}

/// Compiles a presentation into an [`FDAlgebra`].
///
/// The ideal in degree `d` is spanned by the degree-`d-1` part extended by
/// one arrow on either side, together with the relations of length `d`.
/// Construction stops at the first degree whose quotient vanishes.
pub fn build_algebra(p: &Presentation) -> Result<FDAlgebra> {
    let q = &p.quiver;
    let bound = p.nilpotency_bound();
    let nv = q.vertices().len();

    let trivial: Vec<Path> = (0..nv).map(Path::trivial).collect();
    let mut layers: Vec<Layer> = vec![Layer {
        index: HashMap::new(),
        paths: trivial,
        ideal: Vec::new(),
    }];
    let mut prev_ideal_paths: Vec<Vec<(Rational, Vec<usize>)>> = Vec::new();

    loop {
        let d = layers.len();
        if d > bound + 1 {
            return Err(Error::NotFiniteDimensional(bound));
        }
        let paths = extend_paths(p, &layers[d - 1].paths);
        let index: HashMap<Vec<usize>, usize> = paths
            .iter()
            .enumerate()
            .map(|(k, path)| (path.arrows.clone(), k))
            .collect();
        let mut layer = Layer {
            paths,
            index,
            ideal: Vec::new(),
        };
        let n = layer.paths.len();

        let mut generators: Vec<Vec<(Rational, Vec<usize>)>> = Vec::new();
        for element in &prev_ideal_paths {
            let (src, tgt) = {
                let first = &element[0].1;
                let path = Path::from_arrows(q, first.clone()).unwrap();
                (path.source, path.target)
            };
            for (a, arrow) in q.arrows().iter().enumerate() {
                if arrow.source == tgt {
                    generators.push(
                        element
                            .iter()
                            .map(|(c, w)| {
                                let mut w = w.clone();
                                w.push(a);
                                (c.clone(), w)
                            })
                            .collect(),
                    );
                }
                if arrow.target == src {
                    generators.push(
                        element
                            .iter()
                            .map(|(c, w)| {
                                let mut v = vec![a];
                                v.extend_from_slice(w);
                                (c.clone(), v)
                            })
                            .collect(),
                    );
                }
            }
        }
        for r in p.relations.iter().filter(|r| r.len() == d) {
            generators.push(r.terms.iter().map(|(c, path)| (c.clone(), path.arrows.clone())).collect());
        }

        let mut ech = Echelon::new(n);
        for g in generators {
            let v = layer.vector(g).reindex(|k| layer.col(k));
            if ech.rank() < n {
                ech.insert(v);
            }
        }
        layer.ideal = ech
            .into_rref()
            .into_iter()
            .map(|row| row.reindex(|c| n - 1 - c))
            .collect();

        let quotient_dim = n - layer.ideal.len();
        prev_ideal_paths = layer
            .ideal
            .iter()
            .map(|row| {
                row.entries()
                    .iter()
                    .map(|(k, c)| (c.clone(), layer.paths[*k].arrows.clone()))
                    .collect()
            })
            .collect();
        layers.push(layer);
        if quotient_dim == 0 {
            break;
        }
    }

    // Global basis: surviving paths degree by degree; normal forms for all.
    let mut basis = Vec::new();
    let mut words: Vec<(usize, Vec<usize>)> = Vec::new();
    let mut normal: Vec<Vec<SparseVec<Rational>>> = Vec::new();
    for (d, layer) in layers.iter().enumerate() {
        let mut pivot_row: HashMap<usize, &SparseVec<Rational>> = HashMap::new();
        for row in &layer.ideal {
            // RREF in reversed order: the pivot is the largest path index.
            let pivot = row.max_index().unwrap();
            pivot_row.insert(pivot, row);
        }
        let mut global = vec![usize::MAX; layer.paths.len()];
        for (k, path) in layer.paths.iter().enumerate() {
            if !pivot_row.contains_key(&k) {
                global[k] = basis.len();
                words.push((d, path.arrows.clone()));
                basis.push(BasisElement {
                    label: path.word(q),
                    source: path.source,
                    target: path.target,
                    degree: d,
                });
            }
        }
        let forms = (0..layer.paths.len())
            .map(|k| match pivot_row.get(&k) {
                None => SparseVec::unit(global[k]),
                Some(row) => {
                    let lead = row.get(k);
                    SparseVec::from_entries(
                        row.entries()
                            .iter()
                            .filter(|(c, _)| *c != k)
                            .map(|(c, x)| (global[*c], x.divide(&lead).negate()))
                            .collect(),
                    )
                }
            })
            .collect();
        normal.push(forms);
    }

    FDAlgebra::from_parts(&p.name, q.vertices().to_vec(), basis, |x, y| {
        let (dx, wx) = &words[x];
        let (dy, wy) = &words[y];
        let d = dx + dy;
        if d >= layers.len() {
            return SparseVec::new();
        }
        if *dx == 0 {
            return SparseVec::unit(y);
        }
        if *dy == 0 {
            return SparseVec::unit(x);
        }
        let mut w = wy.clone();
        w.extend_from_slice(wx);
        normal[d][layers[d].index[&w]].clone()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_presentation;

    fn build(text: &str) -> FDAlgebra {
        build_algebra(&parse_presentation(text).unwrap()).unwrap()
    }

    #[test]
    fn point() {
        let a = build("vertices: x\n");
        assert_eq!(a.dim(), 1);
        assert_eq!(a.cartan_matrix(), vec![vec![1]]);
    }

    #[test]
    fn cycle_truncated() {
        let a = build(
            "vertices: 0 1\narrow x0 : 0 -> 1\narrow x1 : 1 -> 0\nrelation 1*x0.x1\nrelation 1*x1.x0\n",
        );
        assert_eq!(a.graded_dims(), vec![2, 2]);
        a.check_invariants(40).unwrap();
    }

    #[test]
    fn commutative_square_keeps_earliest_path() {
        let a = build(
            "vertices: 1 2 3 4\narrow a : 1 -> 2\narrow b : 2 -> 4\narrow c : 1 -> 3\narrow d : 3 -> 4\nrelation 1*a.b + -1*c.d\n",
        );
        assert_eq!(a.graded_dims(), vec![4, 4, 1]);
        let top = a.basis().iter().find(|b| b.degree == 2).unwrap();
        assert_eq!(top.label, "a.b");
        let d = a.basis().iter().position(|b| b.label == "d").unwrap();
        let c = a.basis().iter().position(|b| b.label == "c").unwrap();
        let ab = a.basis().iter().position(|b| b.label == "a.b").unwrap();
        // c.d = d · c = a.b
        assert_eq!(a.mul_basis(d, c), &SparseVec::unit(ab));
        a.check_invariants(40).unwrap();
    }

    #[test]
    fn anticommutative_square() {
        let a = build(
            "vertices: 1 2 3 4\narrow a : 1 -> 2\narrow b : 2 -> 4\narrow c : 1 -> 3\narrow d : 3 -> 4\nrelation 1*a.b + 1*c.d\n",
        );
        let d = a.basis().iter().position(|b| b.label == "d").unwrap();
        let c = a.basis().iter().position(|b| b.label == "c").unwrap();
        let ab = a.basis().iter().position(|b| b.label == "a.b").unwrap();
        assert_eq!(a.mul_basis(d, c), &SparseVec::from_entries(vec![(ab, Rational::from(-1))]));
    }

    #[test]
    fn loop_without_relations_is_infinite() {
        let p = parse_presentation("vertices: 0\narrow x : 0 -> 0\nnilpotency: 5\n").unwrap();
        assert_eq!(build_algebra(&p).unwrap_err(), Error::NotFiniteDimensional(5));
    }

    #[test]
    fn relation_in_degree_three() {
        let a = build("vertices: 0\narrow x : 0 -> 0\nrelation 1*x.x.x\n");
        assert_eq!(a.graded_dims(), vec![1, 1, 1]);
        a.check_invariants(40).unwrap();
    }

    #[test]
    fn round_trip_rebuilds_identically() {
        let text = "# sq\nvertices: 1 2 3 4\narrow a : 1 -> 2\narrow b : 2 -> 4\narrow c : 1 -> 3\narrow d : 3 -> 4\nrelation 1*a.b + 2/3*c.d\n";
        let p = parse_presentation(text).unwrap();
        let again = parse_presentation(&p.to_alg_string()).unwrap();
        assert_eq!(build_algebra(&p).unwrap(), build_algebra(&again).unwrap());
    }
}
