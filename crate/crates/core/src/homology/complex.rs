//! Total complexes of tensor-power chains: the Hochschild column alone or
//! the truncated Connes bicomplex.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;

use super::tuples::{Row, Shape};
use crate::algebra::FDAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{image, kernel_basis, rank_of_columns, Field, QuotientBasis, Rational, SparseMatrix, SparseVec};

/// Default cap on the total number of basis tuples in absolute mode.
pub const DEFAULT_BUDGET: usize = 1_000_000;

/// Tuple bases: cyclically composable (relative to the vertex subalgebra) or
/// unconstrained (over the ground field).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Relative,
    Absolute,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Hochschild,
    Cyclic,
}

/// Sparse chain in a bicomplex: bidegree `(column, row)` to a combination of
/// tuples of length `row + 1`. Hochschild chains live in column 0.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ChainVector {
    terms: BTreeMap<(usize, usize), BTreeMap<Vec<usize>, Rational>>,
}

impl ChainVector {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, bidegree: (usize, usize), tuple: Vec<usize>, c: Rational) {
        assert_eq!(tuple.len(), bidegree.1 + 1, "tuple length must be row + 1");
        if c.is_zero() {
            return;
        }
        let block = self.terms.entry(bidegree).or_default();
        let sum = block.get(&tuple).map_or(c.clone(), |x| x.plus(&c));
        if sum.is_zero() {
            block.remove(&tuple);
        } else {
            block.insert(tuple, sum);
        }
        if block.is_empty() {
            self.terms.remove(&bidegree);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (bd, block) in &other.terms {
            for (t, c) in block {
                out.add_term(*bd, t.clone(), c.clone());
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::new();
        for (bd, block) in &self.terms {
            for (t, x) in block {
                out.add_term(*bd, t.clone(), x.times(c));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<(usize, usize), BTreeMap<Vec<usize>, Rational>> {
        &self.terms
    }

    /// Common total degree of all terms, if there is one.
    pub fn total_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|(p, q)| p + q);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }
}

/// Homology dimensions by total degree, with the split by internal weight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyDims {
    pub dims: Vec<usize>,
    pub chain_dims: Vec<usize>,
    pub by_weight: Vec<BTreeMap<usize, usize>>,
}

/// `b` on one tuple: all faces, the last one wrapping `a_q · a_0` to the front.
pub(crate) fn hochschild_b(alg: &FDAlgebra, x: &[usize], wrap: bool, out: &mut Vec<(Vec<usize>, Rational)>) {
    let q = x.len() - 1;
    for i in 0..q {
        let sign = if i % 2 == 0 { Rational::one() } else { Rational::one().negate() };
        for (z, c) in alg.mul_basis(x[i], x[i + 1]).entries() {
            let mut t = Vec::with_capacity(q);
            t.extend_from_slice(&x[..i]);
            t.push(*z);
            t.extend_from_slice(&x[i + 2..]);
            out.push((t, c.times(&sign)));
        }
    }
    if wrap && q >= 1 {
        let sign = if q % 2 == 0 { Rational::one() } else { Rational::one().negate() };
        for (z, c) in alg.mul_basis(x[q], x[0]).entries() {
            let mut t = Vec::with_capacity(q);
            t.push(*z);
            t.extend_from_slice(&x[1..q]);
            out.push((t, c.times(&sign)));
        }
    }
}

/// `t(a_0, …, a_q) = (−1)^q (a_q, a_0, …, a_{q−1})`.
pub(crate) fn cyclic_t(x: &[usize]) -> (Vec<usize>, Rational) {
    let q = x.len() - 1;
    let mut t = Vec::with_capacity(q + 1);
    t.push(x[q]);
    t.extend_from_slice(&x[..q]);
    let sign = if q % 2 == 0 { Rational::one() } else { Rational::one().negate() };
    (t, sign)
}

/// Image of one basis tuple at `(p, q)` under the total differential.
fn differential(
    alg: &FDAlgebra,
    kind: Kind,
    (p, q): (usize, usize),
    x: &[usize],
    out: &mut Vec<((usize, usize), Vec<usize>, Rational)>,
) {
    let mut buf = Vec::new();
    if q >= 1 {
        let odd = p % 2 == 1;
        hochschild_b(alg, x, !odd, &mut buf);
        for (t, c) in buf.drain(..) {
            out.push(((p, q - 1), t, if odd { c.negate() } else { c }));
        }
    }
    if kind == Kind::Cyclic && p >= 1 {
        if p % 2 == 1 {
            out.push(((p - 1, q), x.to_vec(), Rational::one()));
            let (t, s) = cyclic_t(x);
            out.push(((p - 1, q), t, s.negate()));
        } else {
            let mut cur = x.to_vec();
            let mut sign = Rational::one();
            for _ in 0..=q {
                out.push(((p - 1, q), cur.clone(), sign.clone()));
                let (t, s) = cyclic_t(&cur);
                cur = t;
                sign = sign.times(&s);
            }
        }
    }
}

/// Chain complex `Tot_d = ⊕_{p+q=d} C_{p,q}` for `d ≤ top`, split by weight.
pub struct TotalComplex<'a> {
    alg: &'a FDAlgebra,
    kind: Kind,
    mode: Mode,
    top: usize,
    rows: Vec<Row>,
    weights: Vec<usize>,
    ranks: OnceLock<Vec<BTreeMap<usize, usize>>>,
    quotients: Mutex<HashMap<(usize, usize), Arc<QuotientBasis<Rational>>>>,
}

/// Hochschild chains `A ⊗ Ā^{⊗q}` with the boundary `b`.
pub type HochschildComplex<'a> = TotalComplex<'a>;
/// Truncated Connes bicomplex: columns alternate `b` / `−b′`, horizontal
/// maps alternate `1 − t` / `N`.
pub type CyclicBicomplex<'a> = TotalComplex<'a>;

impl<'a> TotalComplex<'a> {
    /// Normalized Hochschild complex through degree `pmax + 1`. Relative
    /// chains use `Ā` = positive-degree part; absolute ones are unnormalized.
    pub fn hochschild(alg: &'a FDAlgebra, pmax: usize, mode: Mode, budget: usize) -> Result<Self> {
        let shape = Shape {
            composable: mode == Mode::Relative,
            normalized: mode == Mode::Relative,
        };
        Self::build(alg, Kind::Hochschild, mode, pmax + 1, shape, budget)
    }

    /// Connes bicomplex on all bidegrees of total degree `≤ nmax + 1`.
    pub fn cyclic(alg: &'a FDAlgebra, nmax: usize, mode: Mode, budget: usize) -> Result<Self> {
        let shape = Shape {
            composable: mode == Mode::Relative,
            normalized: false,
        };
        Self::build(alg, Kind::Cyclic, mode, nmax + 1, shape, budget)
    }

    fn build(alg: &'a FDAlgebra, kind: Kind, mode: Mode, top: usize, shape: Shape, budget: usize) -> Result<Self> {
        if mode == Mode::Absolute {
            let mut needed = 0usize;
            for q in 0..=top {
                let size = alg.dim().checked_pow(q as u32 + 1).unwrap_or(usize::MAX);
                needed = needed.saturating_add(size);
            }
            if needed > budget {
                return Err(Error::BudgetExceeded { needed, budget });
            }
        }
        let rows: Vec<Row> = crate::par::map_range(top + 1, |q| Row::build(alg, q + 1, shape));
        let mut weights: Vec<usize> = rows.iter().flat_map(Row::weights).collect();
        weights.sort_unstable();
        weights.dedup();
        Ok(TotalComplex {
            alg,
            kind,
            mode,
            top,
            rows,
            weights,
            ranks: OnceLock::new(),
            quotients: Mutex::new(HashMap::new()),
        })
    }

    pub fn algebra(&self) -> &FDAlgebra {
        self.alg
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// Highest degree whose homology is available.
    pub fn max_degree(&self) -> usize {
        self.top - 1
    }

    fn blocks(&self, d: usize) -> Vec<(usize, usize)> {
        match self.kind {
            Kind::Hochschild => vec![(0, d)],
            Kind::Cyclic => (0..=d).map(|p| (p, d - p)).collect(),
        }
    }

    /// Offsets of each block inside `Tot_{d,w}`, plus the total size.
    fn layout(&self, d: usize, w: usize) -> (Vec<usize>, usize) {
        let mut offsets = Vec::new();
        let mut n = 0;
        for (_, q) in self.blocks(d) {
            offsets.push(n);
            n += self.rows[q].class(w).len();
        }
        (offsets, n)
    }

    pub fn chain_dim(&self, d: usize) -> usize {
        self.blocks(d).iter().map(|&(_, q)| self.rows[q].len()).sum()
    }

    fn global_index(&self, d: usize, offsets: &[usize], (p, q): (usize, usize), t: &[usize]) -> Option<(usize, usize)> {
        let key: Vec<u32> = t.iter().map(|&a| a as u32).collect();
        let id = self.rows[q].find(&key)?;
        let block = match self.kind {
            Kind::Hochschild => 0,
            Kind::Cyclic => p,
        };
        debug_assert!(block < self.blocks(d).len());
        Some((self.rows[q].weight(id), offsets[block] + self.rows[q].local(id)))
    }

    /// `D_d : Tot_{d,w} → Tot_{d−1,w}` as columns.
    fn differential_columns(&self, d: usize, w: usize) -> (usize, Vec<SparseVec<Rational>>) {
        let (out_offsets, nrows) = self.layout(d - 1, w);
        let mut cols = Vec::new();
        let mut img = Vec::new();
        for (p, q) in self.blocks(d) {
            let row = &self.rows[q];
            for &id in row.class(w) {
                let x: Vec<usize> = row.tuple(id).iter().map(|&a| a as usize).collect();
                img.clear();
                differential(self.alg, self.kind, (p, q), &x, &mut img);
                let entries = img
                    .drain(..)
                    .map(|(bd, t, c)| {
                        let (_, i) = self
                            .global_index(d - 1, &out_offsets, bd, &t)
                            .expect("differential leaves the tuple basis");
                        (i, c)
                    })
                    .collect();
                cols.push(SparseVec::from_entries(entries));
            }
        }
        (nrows, cols)
    }

    /// `ranks[d][w] = rank D_{d,w}` for `1 ≤ d ≤ top`.
    fn ranks(&self) -> &Vec<BTreeMap<usize, usize>> {
        self.ranks.get_or_init(|| {
            let jobs: Vec<(usize, usize)> = (1..=self.top)
                .flat_map(|d| self.weights.iter().map(move |&w| (d, w)))
                .filter(|&(d, w)| self.layout(d, w).1 > 0 && self.layout(d - 1, w).1 > 0)
                .collect();
            let results = crate::par::map(&jobs, |&(d, w)| {
                let (nrows, cols) = self.differential_columns(d, w);
                rank_of_columns(nrows, &cols)
            });
            let mut ranks = vec![BTreeMap::new(); self.top + 1];
            for ((d, w), r) in jobs.into_iter().zip(results) {
                if r > 0 {
                    ranks[d].insert(w, r);
                }
            }
            ranks
        })
    }

    /// `H_d = dim Tot_d − rank D_d − rank D_{d+1}` for `d ≤ top − 1`.
    pub fn homology(&self) -> HomologyDims {
        let ranks = self.ranks();
        let rank = |d: usize, w: usize| ranks.get(d).and_then(|m| m.get(&w)).copied().unwrap_or(0);
        let mut dims = Vec::new();
        let mut chain_dims = Vec::new();
        let mut by_weight = Vec::new();
        for d in 0..self.top {
            let mut split = BTreeMap::new();
            for &w in &self.weights {
                let h = self.layout(d, w).1 - rank(d, w) - rank(d + 1, w);
                if h > 0 {
                    split.insert(w, h);
                }
            }
            dims.push(split.values().sum());
            chain_dims.push(self.chain_dim(d));
            by_weight.push(split);
        }
        HomologyDims {
            dims,
            chain_dims,
            by_weight,
        }
    }

    /// Total differential applied to a chain.
    pub fn apply(&self, c: &ChainVector) -> ChainVector {
        let mut out = ChainVector::new();
        let mut img = Vec::new();
        for (&bd, block) in c.terms() {
            for (t, x) in block {
                img.clear();
                differential(self.alg, self.kind, bd, t, &mut img);
                for (bd2, t2, y) in img.drain(..) {
                    out.add_term(bd2, t2, y.times(x));
                }
            }
        }
        out
    }

    fn quotient(&self, d: usize, w: usize) -> Arc<QuotientBasis<Rational>> {
        if let Some(q) = self.quotients.lock().unwrap().get(&(d, w)) {
            return q.clone();
        }
        let (_, n) = self.layout(d, w);
        let cycles = if d == 0 {
            crate::linalg::Subspace::full(n)
        } else {
            let (nrows, cols) = self.differential_columns(d, w);
            kernel_basis(&SparseMatrix::from_columns(nrows, &cols))
        };
        let boundaries = {
            let (_, ncols) = self.layout(d + 1, w);
            let (nrows, cols) = self.differential_columns(d + 1, w);
            debug_assert_eq!(cols.len(), ncols);
            image(&SparseMatrix::from_columns(nrows, &cols))
        };
        let q = Arc::new(QuotientBasis::new(boundaries, cycles).expect("D∘D = 0"));
        self.quotients.lock().unwrap().insert((d, w), q.clone());
        q
    }

    /// Coordinates of the class of a cycle in the fixed basis of `H_d`,
    /// concatenated over weights in increasing order.
    pub fn class_coords(&self, c: &ChainVector, d: usize) -> Result<Vec<Rational>> {
        if d >= self.top {
            return Err(Error::DegreeOutOfRange(d));
        }
        if !c.is_zero() && c.total_degree() != Some(d) {
            return Err(Error::DegreeOutOfRange(d));
        }
        if self.kind == Kind::Hochschild && c.terms().keys().any(|&(p, _)| p != 0) {
            return Err(Error::DegreeOutOfRange(d));
        }
        if !self.apply(c).is_zero() {
            return Err(Error::NotACycle);
        }
        let dims = self.homology();
        let blocks = self.blocks(d);
        let mut parts: BTreeMap<usize, Vec<(usize, Rational)>> = BTreeMap::new();
        for (&bd, block) in c.terms() {
            for (t, x) in block {
                let key: Vec<u32> = t.iter().map(|&a| a as u32).collect();
                let row = &self.rows[bd.1];
                let id = row
                    .find(&key)
                    .ok_or_else(|| Error::DimensionMismatch(format!("tuple {t:?} outside the chain basis")))?;
                let w = row.weight(id);
                let (offsets, _) = self.layout(d, w);
                let block = blocks.iter().position(|b| *b == bd).unwrap();
                parts.entry(w).or_default().push((offsets[block] + row.local(id), x.clone()));
            }
        }
        let mut out = Vec::new();
        for (&w, &h) in &dims.by_weight[d] {
            match parts.remove(&w) {
                None => out.extend(std::iter::repeat_with(Rational::zero).take(h)),
                Some(entries) => {
                    let v = SparseVec::from_entries(entries);
                    out.extend(self.quotient(d, w).coords(&v)?);
                }
            }
        }
        // components in weights with vanishing homology must be boundaries
        for (w, entries) in parts {
            let v = SparseVec::from_entries(entries);
            if !self.quotient(d, w).boundaries().contains(&v) {
                return Err(Error::InconsistentFiltration);
            }
        }
        Ok(out)
    }

    /// Checks `b² = 0`, `b′² = 0`, `b(1−t) = (1−t)b′` and `b′N = Nb` on every
    /// built tuple of length ≥ 2 (unnormalized rows only).
    pub fn check_operator_identities(&self) -> Result<()> {
        let alg = self.alg;
        let ok = crate::par::all_range(self.rows.len(), |q| {
            let row = &self.rows[q];
            (0..row.len()).all(|id| {
                let x: Vec<usize> = row.tuple(id).iter().map(|&a| a as usize).collect();
                identities_hold(alg, &x, self.kind == Kind::Cyclic)
            })
        });
        if ok {
            Ok(())
        } else {
            Err(Error::Unsupported("operator identity violated".into()))
        }
    }
}

type Lin = BTreeMap<Vec<usize>, Rational>;

fn lin_apply(x: &Lin, f: impl Fn(&[usize], &mut Vec<(Vec<usize>, Rational)>)) -> Lin {
    let mut out = Lin::new();
    let mut buf = Vec::new();
    for (t, c) in x {
        buf.clear();
        f(t, &mut buf);
        for (u, y) in buf.drain(..) {
            let s = out.entry(u).or_insert_with(Rational::zero);
            *s = s.plus(&y.times(c));
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn identities_hold(alg: &FDAlgebra, x: &[usize], cyclic: bool) -> bool {
    let one: Lin = [(x.to_vec(), Rational::one())].into();
    let b = |t: &[usize], o: &mut Vec<(Vec<usize>, Rational)>| {
        if t.len() > 1 {
            hochschild_b(alg, t, true, o)
        }
    };
    let bp = |t: &[usize], o: &mut Vec<(Vec<usize>, Rational)>| {
        if t.len() > 1 {
            hochschild_b(alg, t, false, o)
        }
    };
    let one_minus_t = |t: &[usize], o: &mut Vec<(Vec<usize>, Rational)>| {
        o.push((t.to_vec(), Rational::one()));
        let (u, s) = cyclic_t(t);
        o.push((u, s.negate()));
    };
    let norm = |t: &[usize], o: &mut Vec<(Vec<usize>, Rational)>| {
        let mut cur = t.to_vec();
        let mut sign = Rational::one();
        for _ in 0..t.len() {
            o.push((cur.clone(), sign.clone()));
            let (u, s) = cyclic_t(&cur);
            cur = u;
            sign = sign.times(&s);
        }
    };
    let bb = lin_apply(&lin_apply(&one, b), b);
    if !bb.is_empty() {
        return false;
    }
    if !cyclic {
        return true;
    }
    let bpbp = lin_apply(&lin_apply(&one, bp), bp);
    let left = lin_apply(&lin_apply(&one, one_minus_t), b);
    let right = lin_apply(&lin_apply(&one, bp), one_minus_t);
    let left2 = lin_apply(&lin_apply(&one, norm), bp);
    let right2 = lin_apply(&lin_apply(&one, b), norm);
    bpbp.is_empty() && left == right && left2 == right2
}
