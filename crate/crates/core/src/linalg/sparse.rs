use super::Field;

/// Sparse vector: strictly increasing indices, no stored zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseVec<F> {
    entries: Vec<(usize, F)>,
}

impl<F> Default for SparseVec<F> {
    fn default() -> Self {
        SparseVec { entries: Vec::new() }
    }
}

impl<F: Field> SparseVec<F> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn unit(index: usize) -> Self {
        SparseVec {
            entries: vec![(index, F::one())],
        }
    }

    /// Builds a vector from arbitrary `(index, value)` pairs, summing repeats.
    pub fn from_entries(mut raw: Vec<(usize, F)>) -> Self {
        raw.sort_by_key(|(i, _)| *i);
        let mut entries: Vec<(usize, F)> = Vec::with_capacity(raw.len());
        for (i, v) in raw {
            match entries.last_mut() {
                Some((j, acc)) if *j == i => *acc = acc.plus(&v),
                _ => entries.push((i, v)),
            }
        }
        entries.retain(|(_, v)| !v.is_zero());
        SparseVec { entries }
    }

    pub fn from_dense(values: &[F]) -> Self {
        SparseVec {
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| (i, v.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, len: usize) -> Vec<F> {
        let mut out = vec![F::zero(); len];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }

    pub fn entries(&self) -> &[(usize, F)] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<(usize, F)> {
        self.entries
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn lead(&self) -> Option<(usize, &F)> {
        self.entries.first().map(|(i, v)| (*i, v))
    }

    pub fn get(&self, index: usize) -> F {
        match self.entries.binary_search_by_key(&index, |(i, _)| *i) {
            Ok(k) => self.entries[k].1.clone(),
            Err(_) => F::zero(),
        }
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|(i, _)| *i)
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::new();
        }
        SparseVec {
            entries: self.entries.iter().map(|(i, v)| (*i, v.times(c))).collect(),
        }
    }

    pub fn negate(&self) -> Self {
        SparseVec {
            entries: self.entries.iter().map(|(i, v)| (*i, v.negate())).collect(),
        }
    }

    /// `self + c * other`.
    pub fn axpy(&self, c: &F, other: &Self) -> Self {
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, c.times(y)));
                        b.next();
                    } else {
                        let s = x.plus(&c.times(y));
                        if !s.is_zero() {
                            out.push((*i, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    out.push((*j, c.times(y)));
                    b.next();
                }
                (None, None) => break,
            }
        }
        SparseVec { entries: out }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.axpy(&F::one(), other)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.axpy(&F::one().negate(), other)
    }

    /// Re-indexes entries through `map`; collisions are summed.
    pub fn reindex(&self, map: impl Fn(usize) -> usize) -> Self {
        Self::from_entries(self.entries.iter().map(|(i, v)| (map(*i), v.clone())).collect())
    }
}

/// Row-major sparse matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix<F> {
    nrows: usize,
    ncols: usize,
    rows: Vec<SparseVec<F>>,
}

impl<F: Field> SparseMatrix<F> {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        SparseMatrix {
            nrows,
            ncols,
            rows: vec![SparseVec::new(); nrows],
        }
    }

    pub fn from_rows(ncols: usize, rows: Vec<SparseVec<F>>) -> Self {
        debug_assert!(rows.iter().all(|r| r.max_index().map_or(true, |m| m < ncols)));
        SparseMatrix {
            nrows: rows.len(),
            ncols,
            rows,
        }
    }

    /// Builds the matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(nrows: usize, columns: &[SparseVec<F>]) -> Self {
        let mut raw: Vec<Vec<(usize, F)>> = vec![Vec::new(); nrows];
        for (j, col) in columns.iter().enumerate() {
            for (i, v) in col.entries() {
                raw[*i].push((j, v.clone()));
            }
        }
        SparseMatrix {
            nrows,
            ncols: columns.len(),
            rows: raw.into_iter().map(|entries| SparseVec { entries }).collect(),
        }
    }

    pub fn from_dense(rows: &[Vec<F>]) -> Self {
        let ncols = rows.first().map_or(0, Vec::len);
        Self::from_rows(ncols, rows.iter().map(|r| SparseVec::from_dense(r)).collect())
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[SparseVec<F>] {
        &self.rows
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(SparseVec::nnz).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(SparseVec::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_columns(self.ncols, &self.rows)
    }

    pub fn mul_vec(&self, v: &SparseVec<F>) -> SparseVec<F> {
        let dense = v.to_dense(self.ncols);
        let mut out = Vec::new();
        for (i, row) in self.rows.iter().enumerate() {
            let mut acc = F::zero();
            for (j, x) in row.entries() {
                if !dense[*j].is_zero() {
                    acc = acc.plus(&x.times(&dense[*j]));
                }
            }
            if !acc.is_zero() {
                out.push((i, acc));
            }
        }
        SparseVec { entries: out }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.ncols, other.nrows, "dimension mismatch in product");
        let rows = self
            .rows
            .iter()
            .map(|row| {
                row.entries()
                    .iter()
                    .fold(SparseVec::new(), |acc, (k, x)| acc.axpy(x, &other.rows[*k]))
            })
            .collect();
        SparseMatrix {
            nrows: self.nrows,
            ncols: other.ncols,
            rows,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.nrows, self.ncols), (other.nrows, other.ncols));
        SparseMatrix {
            nrows: self.nrows,
            ncols: self.ncols,
            rows: self.rows.iter().zip(&other.rows).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.nrows, self.ncols), (other.nrows, other.ncols));
        SparseMatrix {
            nrows: self.nrows,
            ncols: self.ncols,
            rows: self.rows.iter().zip(&other.rows).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        SparseMatrix {
            nrows: self.nrows,
            ncols: self.ncols,
            rows: self.rows.iter().map(|r| r.scale(c)).collect(),
        }
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> SparseMatrix<G> {
        SparseMatrix {
            nrows: self.nrows,
            ncols: self.ncols,
            rows: self
                .rows
                .iter()
                .map(|r| SparseVec::from_entries(r.entries().iter().map(|(i, v)| (*i, f(v))).collect()))
                .collect(),
        }
    }
}

/// Incremental row echelon form with leftmost-nonzero pivoting.
///
/// Rows are reduced on their leading entry only until the leading column is
/// free; the surviving row is scaled to a leading 1 and becomes the pivot of
/// that column. Insertion order fixes the result, so it is deterministic.
#[derive(Clone, Debug)]
pub struct Echelon<F> {
    ncols: usize,
    rows: Vec<SparseVec<F>>,
    pivot_row: Vec<usize>,
}

const NO_PIVOT: usize = usize::MAX;

impl<F: Field> Echelon<F> {
    pub fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            rows: Vec::new(),
            pivot_row: vec![NO_PIVOT; ncols],
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Reduces `v` until its leading column carries no pivot.
    pub fn reduce_leading(&self, mut v: SparseVec<F>) -> SparseVec<F> {
        while let Some((c, x)) = v.lead() {
            let r = self.pivot_row[c];
            if r == NO_PIVOT {
                break;
            }
            let c = x.negate();
            v = v.axpy(&c, &self.rows[r]);
        }
        v
    }

    /// Inserts `v`; returns `true` if it was independent of the rows so far.
    pub fn insert(&mut self, v: SparseVec<F>) -> bool {
        let v = self.reduce_leading(v);
        match v.lead() {
            None => false,
            Some((c, x)) => {
                let v = if x.is_one() { v.clone() } else { v.scale(&x.inverse()) };
                self.pivot_row[c] = self.rows.len();
                self.rows.push(v);
                true
            }
        }
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        let mut p: Vec<usize> = self.rows.iter().map(|r| r.lead().unwrap().0).collect();
        p.sort_unstable();
        p
    }

    /// Reduced row echelon form: rows sorted by pivot, each pivot column
    /// zero outside its own row.
    pub fn into_rref(self) -> Vec<SparseVec<F>> {
        let mut rows = self.rows;
        rows.sort_by_key(|r| r.lead().unwrap().0);
        let mut pivot_row = vec![NO_PIVOT; self.ncols];
        for (k, r) in rows.iter().enumerate() {
            pivot_row[r.lead().unwrap().0] = k;
        }
        for k in (0..rows.len()).rev() {
            let lead = rows[k].lead().unwrap().0;
            let coeffs: Vec<(usize, F)> = rows[k]
                .entries()
                .iter()
                .filter(|(c, _)| *c != lead && pivot_row[*c] != NO_PIVOT)
                .map(|(c, x)| (pivot_row[*c], x.clone()))
                .collect();
            let mut row = rows[k].clone();
            for (r, x) in coeffs {
                row = row.axpy(&x.negate(), &rows[r]);
            }
            rows[k] = row;
        }
        rows
    }
}

/// Exact rank. Deterministic; independent of thread scheduling.
pub fn rank<F: Field>(m: &SparseMatrix<F>) -> usize {
    // rank(M) = rank(Mᵀ); eliminate along the shorter side
    if m.nrows() > m.ncols() {
        return rank_of_rows(m.ncols(), m.nrows(), m.transpose().rows.into_iter());
    }
    rank_of_rows(m.nrows(), m.ncols(), m.rows.iter().cloned())
}

fn rank_of_rows<F: Field>(
    bound: usize,
    ncols: usize,
    rows: impl Iterator<Item = SparseVec<F>>,
) -> usize {
    let mut ech = Echelon::new(ncols);
    for r in rows {
        ech.insert(r);
        if ech.rank() == bound {
            break;
        }
    }
    ech.rank()
}

/// Rank of the matrix whose columns are `columns`, each of length `nrows`.
pub fn rank_of_columns<F: Field>(nrows: usize, columns: &[SparseVec<F>]) -> usize {
    let mut ech = Echelon::new(nrows);
    for c in columns {
        ech.insert(c.clone());
        if ech.rank() == nrows {
            break;
        }
    }
    ech.rank()
}
