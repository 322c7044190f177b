//! Invariant-by-invariant comparison of two algebras, with a search for a
//! vertex bijection matching quivers and Cartan matrices.

use serde::{Deserialize, Serialize};

use crate::algebra::{build_algebra, FDAlgebra, Presentation};
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReconcileItem {
    pub name: String,
    pub left: String,
    pub right: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReconcileReport {
    pub items: Vec<ReconcileItem>,
    /// `labeling[v]` is the presented vertex matched with vertex `v`.
    pub labeling: Option<Vec<usize>>,
}

impl ReconcileReport {
    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.pass)
    }
}

/// First bijection `π` (in lexicographic search order) with
/// `arrows_a[w][v] = arrows_b[π w][π v]` and the same for Cartan matrices.
pub fn find_vertex_isomorphism(a: &FDAlgebra, b: &FDAlgebra) -> Option<Vec<usize>> {
    let n = a.num_vertices();
    if n != b.num_vertices() {
        return None;
    }
    let (qa, qb) = (a.arrow_matrix(), b.arrow_matrix());
    let (ca, cb) = (a.cartan_matrix(), b.cartan_matrix());
    let signature = |q: &[Vec<usize>], c: &[Vec<usize>], v: usize| {
        let col = |m: &[Vec<usize>]| (0..n).map(|w| m[w][v]).sum::<usize>();
        let row = |m: &[Vec<usize>]| m[v].iter().sum::<usize>();
        (col(q), row(q), col(c), row(c), q[v][v], c[v][v])
    };
    let sig_a: Vec<_> = (0..n).map(|v| signature(&qa, &ca, v)).collect();
    let sig_b: Vec<_> = (0..n).map(|v| signature(&qb, &cb, v)).collect();

    fn extend(
        k: usize,
        pi: &mut Vec<usize>,
        used: &mut [bool],
        ok: &dyn Fn(usize, usize, &[usize]) -> bool,
    ) -> bool {
        if k == used.len() {
            return true;
        }
        for cand in 0..used.len() {
            if used[cand] || !ok(k, cand, pi) {
                continue;
            }
            used[cand] = true;
            pi.push(cand);
            if extend(k + 1, pi, used, ok) {
                return true;
            }
            pi.pop();
            used[cand] = false;
        }
        false
    }
    let ok = |v: usize, cand: usize, pi: &[usize]| {
        if sig_a[v] != sig_b[cand] {
            return false;
        }
        (0..v).all(|w| {
            let pw = pi[w];
            qa[w][v] == qb[pw][cand]
                && qa[v][w] == qb[cand][pw]
                && ca[w][v] == cb[pw][cand]
                && ca[v][w] == cb[cand][pw]
        })
    };
    let mut pi = Vec::with_capacity(n);
    let mut used = vec![false; n];
    extend(0, &mut pi, &mut used, &ok).then_some(pi)
}

fn item(name: &str, left: impl ToString, right: impl ToString, pass: bool) -> ReconcileItem {
    ReconcileItem {
        name: name.into(),
        left: left.to_string(),
        right: right.to_string(),
        pass,
    }
}

pub fn reconcile(a_end: &FDAlgebra, p: &Presentation) -> Result<ReconcileReport> {
    let b = build_algebra(p)?;
    let mut items = vec![
        item("dim", a_end.dim(), b.dim(), a_end.dim() == b.dim()),
        item(
            "vertices",
            a_end.num_vertices(),
            b.num_vertices(),
            a_end.num_vertices() == b.num_vertices(),
        ),
        item("arrows", a_end.num_arrows(), b.num_arrows(), a_end.num_arrows() == b.num_arrows()),
        item(
            "graded dims",
            format!("{:?}", a_end.graded_dims()),
            format!("{:?}", b.graded_dims()),
            a_end.graded_dims() == b.graded_dims(),
        ),
    ];
    let labeling = find_vertex_isomorphism(a_end, &b);
    let described = labeling.as_ref().map_or("none".to_string(), |pi| {
        pi.iter()
            .enumerate()
            .map(|(v, &w)| format!("{}->{}", a_end.vertices()[v], b.vertices()[w]))
            .collect::<Vec<_>>()
            .join(" ")
    });
    items.push(item(
        "quiver and cartan up to labeling",
        described,
        if labeling.is_some() { "matched" } else { "no bijection" },
        labeling.is_some(),
    ));
    Ok(ReconcileReport { items, labeling })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_presentation;
    use crate::families::{auslander_of, auslander_quiver_presentation, taft, taft_algebra};

    #[test]
    fn taft_against_itself() {
        let r = reconcile(&taft_algebra(3).unwrap(), &taft(3).unwrap()).unwrap();
        assert!(r.passed());
        assert_eq!(r.labeling, Some(vec![0, 1, 2]));
    }

    #[test]
    fn auslander_two() {
        let (g, _) = auslander_of(&taft_algebra(2).unwrap()).unwrap();
        let r = reconcile(&g, &auslander_quiver_presentation(2).unwrap()).unwrap();
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn perturbed_fails_on_dim() {
        let (g, _) = auslander_of(&taft_algebra(2).unwrap()).unwrap();
        let mut text = auslander_quiver_presentation(2).unwrap().to_alg_string();
        // drop one triangle relation
        let line = text.lines().find(|l| l.starts_with("relation")).unwrap().to_string();
        text = text.replace(&(line + "\n"), "");
        let r = reconcile(&g, &parse_presentation(&text).unwrap()).unwrap();
        assert!(!r.passed());
        assert!(!r.items[0].pass);
    }
}
