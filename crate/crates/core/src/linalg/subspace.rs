use super::sparse::{Echelon, SparseMatrix, SparseVec};
use super::Field;
use crate::error::{Error, Result};

/// Subspace of F^ambient held by its reduced row echelon basis.
///
/// The RREF basis is unique for a given subspace, so two `Subspace` values
/// compare equal exactly when they span the same space.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace<F> {
    ambient: usize,
    basis: Vec<SparseVec<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: (0..ambient).map(SparseVec::unit).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn from_spanning<I>(ambient: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = SparseVec<F>>,
    {
        let mut ech = Echelon::new(ambient);
        for v in vectors {
            ech.insert(v);
            if ech.rank() == ambient {
                break;
            }
        }
        Self::from_echelon(ech)
    }

    pub fn from_echelon(ech: Echelon<F>) -> Self {
        let ambient = ech.ncols();
        let basis = ech.into_rref();
        let pivots = basis.iter().map(|r| r.lead().unwrap().0).collect();
        Subspace {
            ambient,
            basis,
            pivots,
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SparseVec<F>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `v` minus its component along the pivot columns; zero iff `v` lies
    /// in the subspace. Entries at pivot columns of the result are zero.
    pub fn reduce(&self, v: &SparseVec<F>) -> SparseVec<F> {
        let hits: Vec<(usize, F)> = v
            .entries()
            .iter()
            .filter_map(|(c, x)| {
                self.pivots
                    .binary_search(c)
                    .ok()
                    .map(|k| (k, x.clone()))
            })
            .collect();
        let mut out = v.clone();
        for (k, x) in hits {
            out = out.axpy(&x.negate(), &self.basis[k]);
        }
        out
    }

    pub fn contains(&self, v: &SparseVec<F>) -> bool {
        self.reduce(v).is_zero()
    }

    /// Coordinates of `v` in the RREF basis, or `None` if `v` is not in the
    /// subspace.
    pub fn coords(&self, v: &SparseVec<F>) -> Option<Vec<F>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v.get(p)).collect())
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.basis.iter().all(|b| other.contains(b))
    }
}

/// Basis of {v : Mv = 0}, echelon-normalized.
pub fn kernel_basis<F: Field>(m: &SparseMatrix<F>) -> Subspace<F> {
    let n = m.ncols();
    let mut ech = Echelon::new(n);
    for r in m.rows() {
        ech.insert(r.clone());
    }
    let rref = ech.into_rref();
    let mut is_pivot = vec![false; n];
    for r in &rref {
        is_pivot[r.lead().unwrap().0] = true;
    }
    let mut raw: Vec<Vec<(usize, F)>> = vec![Vec::new(); n];
    for r in &rref {
        let p = r.lead().unwrap().0;
        for (c, x) in r.entries() {
            if !is_pivot[*c] {
                raw[*c].push((p, x.negate()));
            }
        }
    }
    let vectors = (0..n).filter(|&f| !is_pivot[f]).map(|f| {
        let mut entries = std::mem::take(&mut raw[f]);
        entries.push((f, F::one()));
        SparseVec::from_entries(entries)
    });
    let vectors: Vec<_> = vectors.collect();
    Subspace::from_spanning(n, vectors)
}

/// Image (column space) of `m`.
pub fn image<F: Field>(m: &SparseMatrix<F>) -> Subspace<F> {
    Subspace::from_spanning(m.nrows(), m.transpose().rows().iter().cloned())
}

/// Fixed basis of a quotient `cycles / boundaries`.
///
/// Representatives are the cycle basis reduced modulo the boundaries and
/// brought to RREF; they vanish on every boundary pivot column. Coordinates
/// of a class are read off at the representatives' pivot columns.
#[derive(Clone, Debug)]
pub struct QuotientBasis<F> {
    boundaries: Subspace<F>,
    cycles: Subspace<F>,
    representatives: Subspace<F>,
}

impl<F: Field> QuotientBasis<F> {
    pub fn new(boundaries: Subspace<F>, cycles: Subspace<F>) -> Result<Self> {
        if boundaries.ambient() != cycles.ambient() || !boundaries.is_subspace_of(&cycles) {
            return Err(Error::InconsistentFiltration);
        }
        let reps = Subspace::from_spanning(
            cycles.ambient(),
            cycles.basis().iter().map(|z| boundaries.reduce(z)),
        );
        Ok(QuotientBasis {
            boundaries,
            cycles,
            representatives: reps,
        })
    }

    pub fn dim(&self) -> usize {
        self.representatives.dim()
    }

    pub fn representatives(&self) -> &[SparseVec<F>] {
        self.representatives.basis()
    }

    pub fn cycles(&self) -> &Subspace<F> {
        &self.cycles
    }

    pub fn boundaries(&self) -> &Subspace<F> {
        &self.boundaries
    }

    pub fn coords(&self, v: &SparseVec<F>) -> Result<Vec<F>> {
        if !self.cycles.contains(v) {
            return Err(Error::NotACycle);
        }
        let r = self.boundaries.reduce(v);
        self.representatives
            .coords(&r)
            .ok_or(Error::NotACycle)
    }
}

/// Coordinates of `v` in the fixed basis of `cycles / boundaries`.
pub fn quotient_coords<F: Field>(
    ambient_dim: usize,
    boundaries: &Subspace<F>,
    cycles: &Subspace<F>,
    v: &SparseVec<F>,
) -> Result<Vec<F>> {
    if boundaries.ambient() != ambient_dim || cycles.ambient() != ambient_dim {
        return Err(Error::DimensionMismatch(format!(
            "ambient {ambient_dim} vs boundaries {} / cycles {}",
            boundaries.ambient(),
            cycles.ambient()
        )));
    }
    QuotientBasis::new(boundaries.clone(), cycles.clone())?.coords(v)
}
