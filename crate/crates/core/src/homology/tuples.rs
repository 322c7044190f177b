//! Basis tuples of tensor powers, grouped by internal weight.

use std::collections::{BTreeMap, HashMap};

use crate::algebra::FDAlgebra;

/// All tuples `(a_0, …, a_q)` of one length that span a chain space.
///
/// The weight of a tuple is the sum of the degrees of its entries; every
/// operator used here preserves it, so complexes split into weight blocks.
#[derive(Clone, Debug)]
pub(crate) struct Row {
    len: usize,
    data: Vec<u32>,
    weight: Vec<usize>,
    local: Vec<usize>,
    by_weight: BTreeMap<usize, Vec<usize>>,
    index: HashMap<Box<[u32]>, usize>,
}

/// Which tuples a row admits.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Shape {
    /// `src(a_j) = tgt(a_{j+1})` and `src(a_q) = tgt(a_0)`.
    pub composable: bool,
    /// Entries after the first must have positive degree.
    pub normalized: bool,
}

impl Row {
    #[cfg(test)]
    /// Number of tuples the row would hold, without building it.
    pub fn count(alg: &FDAlgebra, len: usize, shape: Shape) -> usize {
        let mut n = 0usize;
        enumerate(alg, len, shape, |_| n += 1);
        n
    }

    pub fn build(alg: &FDAlgebra, len: usize, shape: Shape) -> Row {
        let mut row = Row {
            len,
            data: Vec::new(),
            weight: Vec::new(),
            local: Vec::new(),
            by_weight: BTreeMap::new(),
            index: HashMap::new(),
        };
        enumerate(alg, len, shape, |t| {
            let id = row.weight.len();
            let w: usize = t.iter().map(|&a| alg.element(a as usize).degree).sum();
            let class = row.by_weight.entry(w).or_default();
            row.local.push(class.len());
            class.push(id);
            row.weight.push(w);
            row.data.extend_from_slice(t);
            row.index.insert(t.into(), id);
        });
        row
    }

    pub fn len(&self) -> usize {
        self.weight.len()
    }

    pub fn tuple(&self, id: usize) -> &[u32] {
        &self.data[id * self.len..(id + 1) * self.len]
    }

    pub fn find(&self, t: &[u32]) -> Option<usize> {
        self.index.get(t).copied()
    }

    pub fn weight(&self, id: usize) -> usize {
        self.weight[id]
    }

    /// Position of `id` inside its weight class.
    pub fn local(&self, id: usize) -> usize {
        self.local[id]
    }

    pub fn class(&self, w: usize) -> &[usize] {
        self.by_weight.get(&w).map_or(&[], Vec::as_slice)
    }

    pub fn weights(&self) -> impl Iterator<Item = usize> + '_ {
        self.by_weight.keys().copied()
    }
}

/// Calls `f` on every admissible tuple in lexicographic order.
fn enumerate(alg: &FDAlgebra, len: usize, shape: Shape, mut f: impl FnMut(&[u32])) {
    let dim = alg.dim();
    let allowed = |pos: usize, a: usize| !shape.normalized || pos == 0 || alg.element(a).degree > 0;
    // admissible entries after the first, by target vertex
    let mut by_target = vec![Vec::new(); alg.num_vertices()];
    for a in (0..dim).filter(|&a| allowed(1, a)) {
        by_target[alg.element(a).target].push(a);
    }
    let rest: Vec<usize> = (0..dim).filter(|&a| allowed(1, a)).collect();
    let mut stack: Vec<u32> = Vec::with_capacity(len);

    fn go(
        alg: &FDAlgebra,
        len: usize,
        composable: bool,
        by_target: &[Vec<usize>],
        rest: &[usize],
        stack: &mut Vec<u32>,
        f: &mut dyn FnMut(&[u32]),
    ) {
        if stack.len() == len {
            if !composable || alg.element(stack[len - 1] as usize).source == alg.element(stack[0] as usize).target {
                f(stack);
            }
            return;
        }
        let choices = if composable {
            let prev = alg.element(*stack.last().unwrap() as usize).source;
            &by_target[prev][..]
        } else {
            rest
        };
        for &a in choices {
            stack.push(a as u32);
            go(alg, len, composable, by_target, rest, stack, f);
            stack.pop();
        }
    }

    for a in 0..dim {
        stack.push(a as u32);
        go(alg, len, shape.composable, &by_target, &rest, &mut stack, &mut f);
        stack.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repmod::tests::cycle;

    #[test]
    fn composable_pairs_of_two_cycle() {
        let a = cycle(2);
        let s = Shape { composable: true, normalized: false };
        // pairs (x, y) with src x = tgt y and src y = tgt x: Σ_v,w c(v,w) c(w,v)
        let c = a.cartan_matrix();
        let expect: usize = (0..2).flat_map(|v| (0..2).map(move |w| (v, w))).map(|(v, w)| c[v][w] * c[w][v]).sum();
        assert_eq!(Row::count(&a, 2, s), expect);
        let row = Row::build(&a, 2, s);
        assert_eq!(row.len(), expect);
        for id in 0..row.len() {
            assert_eq!(row.find(row.tuple(id)), Some(id));
            assert_eq!(row.class(row.weight(id))[row.local(id)], id);
        }
    }

    #[test]
    fn normalized_rows_use_radical_after_first() {
        let a = cycle(2);
        let s = Shape { composable: true, normalized: true };
        let row = Row::build(&a, 3, s);
        for id in 0..row.len() {
            assert!(row.tuple(id)[1..].iter().all(|&x| a.element(x as usize).degree > 0));
        }
        let free = Row::build(&a, 2, Shape { composable: false, normalized: false });
        assert_eq!(free.len(), a.dim() * a.dim());
    }
}
