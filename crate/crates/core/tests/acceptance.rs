//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Expected values are written out here independently of the library's own
//! report tables. A criterion listed in `KNOWN_FAILURES` is still evaluated
//! and printed; it only does not abort the run.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use hochcyc::algebra::{build_algebra, parse_presentation, FDAlgebra};
use hochcyc::families::{auslander_of, auslander_quiver_presentation, reconcile, taft_algebra};
use hochcyc::homology::{
    contracted_euler_check, happel_terms, hc_dims, hh_dims_absolute, hh_dims_relative, CyclicBicomplex,
    HochschildComplex, Mode, DEFAULT_BUDGET,
};
use hochcyc::ktheory::{
    chern_of_idempotent, chern_tensor_formula, k0_taft_product, k0_tensor_oracle, IdempotentMatrix, K0Class,
};
use hochcyc::linalg::{Field, Matrix, Rational};
use hochcyc::repmod::{ext_table, minimal_resolution};
use hochcyc::report::{paper_gamma, presented_gamma, PaperGamma};

/// The closed K0 product formula is not symmetric in its two factors, so
/// the commutativity and associativity parts of this criterion fail.
const KNOWN_FAILURES: &[u8] = &[12];

type Label = (usize, usize);
type Outcome = Result<(), String>;

fn build(text: &str) -> FDAlgebra {
    build_algebra(&parse_presentation(text).unwrap()).unwrap()
}

/// `a − k` in `Z/n`.
fn minus(n: usize, a: usize, k: usize) -> usize {
    (a + n * (k + 1) - k) % n
}

fn labels(n: usize) -> Vec<Label> {
    (0..n).flat_map(|i| (0..n).map(move |u| (i, u))).collect()
}

fn expect<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Outcome {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, want {want:?}"))
    }
}

fn within(what: &str, start: Instant, limit: Duration) -> Outcome {
    let t = start.elapsed();
    if t <= limit {
        Ok(())
    } else {
        Err(format!("{what} took {t:?} > {limit:?}"))
    }
}

/// The three displayed resolution shapes, with `u = i − j`.
fn displayed_resolution(n: usize, (i, u): Label) -> Vec<Vec<Label>> {
    let m = |a, k| minus(n, a, k);
    let j = (i + n - u) % n;
    let mut t = if j == 0 {
        vec![vec![(i, i)], vec![(m(i, 1), i)]]
    } else if j == 1 {
        vec![vec![(i, m(i, 1))], vec![(i, m(i, 2))], vec![(m(i, 1), m(i, 2))]]
    } else {
        vec![
            vec![(i, m(i, j))],
            vec![(m(i, 1), m(i, j)), (i, m(i, j + 1))],
            vec![(m(i, 1), m(i, j + 1))],
        ]
    };
    t.iter_mut().for_each(|x| x.sort_unstable());
    t
}

/// The displayed bimodule resolution, one summand per existing arrow in
/// degree one: `(left, right)` for `Γe_left ⊗ e_right Γ`.
fn displayed_bimodule_terms(n: usize) -> Vec<Vec<(Label, Label)>> {
    let m = |a, k| minus(n, a, k);
    let mut r = vec![Vec::new(), Vec::new(), Vec::new()];
    for (i, u) in labels(n) {
        r[0].push(((i, u), (i, u)));
        if u != m(i, 1) {
            r[1].push(((m(i, 1), u), (i, u)));
        }
        if u != i {
            r[1].push(((i, m(u, 1)), (i, u)));
            r[2].push(((m(i, 1), m(u, 1)), (i, u)));
        }
    }
    r.iter_mut().for_each(|x| x.sort_unstable());
    r
}

fn gammas(n: usize) -> Vec<PaperGamma> {
    vec![paper_gamma(n).unwrap(), presented_gamma(n).unwrap()]
}

fn c1() -> Outcome {
    for (n, want) in [(2, vec![2, 1, 1, 1, 1]), (3, vec![3, 2, 2, 2, 2])] {
        let start = Instant::now();
        expect(&format!("HH(taft({n}))"), hh_dims_relative(&taft_algebra(n).unwrap(), 4).dims, want)?;
        within("HH", start, Duration::from_secs(30))?;
    }
    Ok(())
}

fn c2() -> Outcome {
    for (n, want) in [(2, vec![2, 1, 2, 1, 2]), (3, vec![3, 2, 3, 2, 3])] {
        let start = Instant::now();
        let got = hc_dims(&taft_algebra(n).unwrap(), 4, Mode::Relative, DEFAULT_BUDGET).unwrap().dims;
        expect(&format!("HC(taft({n}))"), got, want)?;
        within("HC", start, Duration::from_secs(300))?;
    }
    Ok(())
}

fn c3() -> Outcome {
    for (n, want, limit) in [(2, vec![4, 0, 0, 0], 60), (3, vec![9, 0, 0, 0], 900)] {
        let start = Instant::now();
        let g = auslander_of(&taft_algebra(n).unwrap()).unwrap().0;
        expect(&format!("HH(Γ({n}))"), hh_dims_relative(&g, 3).dims, want)?;
        within("HH", start, Duration::from_secs(limit))?;
    }
    Ok(())
}

fn c4() -> Outcome {
    let g = auslander_of(&taft_algebra(2).unwrap()).unwrap().0;
    expect("HC(Γ(2))", hc_dims(&g, 3, Mode::Relative, DEFAULT_BUDGET).unwrap().dims, vec![4, 0, 4, 0])
}

fn c5() -> Outcome {
    for n in [2, 3] {
        for g in gammas(n) {
            let ext = ext_table(&g.alg, 4).unwrap();
            for x in labels(n) {
                let res = displayed_resolution(n, x);
                for p in 0..=4 {
                    // Ext^p(S_x, S_y) counts P_y in the p-th term of a minimal resolution
                    let mut want: BTreeMap<Label, usize> = BTreeMap::new();
                    for &y in res.get(p).map_or(&[][..], Vec::as_slice) {
                        *want.entry(y).or_default() += 1;
                    }
                    let got: BTreeMap<Label, usize> = labels(n)
                        .into_iter()
                        .map(|y| (y, ext.get(p, g.vertex(x), g.vertex(y))))
                        .filter(|&(_, d)| d > 0)
                        .collect();
                    expect(&format!("{} Ext^{p}(S{x:?}, -)", g.alg.name()), got, want)?;
                }
            }
            expect("global dimension", ext.global_dimension(), 2)?;
        }
    }
    Ok(())
}

fn c6() -> Outcome {
    for n in [2, 3] {
        for g in gammas(n) {
            for x in labels(n) {
                let r = minimal_resolution::<Rational>(&g.alg, g.vertex(x), 4).unwrap();
                let got: Vec<Vec<Label>> = r
                    .terms
                    .iter()
                    .map(|t| {
                        let mut t: Vec<Label> = t.iter().map(|&w| g.labels[w]).collect();
                        t.sort_unstable();
                        t
                    })
                    .collect();
                let want = displayed_resolution(n, x);
                expect(&format!("length of resolution of S{x:?}"), r.length, Some(want.len() - 1))?;
                expect(&format!("{} resolution of S{x:?}", g.alg.name()), got, want)?;
            }
        }
    }
    Ok(())
}

fn c7() -> Outcome {
    for n in [2, 3] {
        let g = paper_gamma(n).unwrap();
        let list = happel_terms(&ext_table(&g.alg, 4).unwrap());
        expect("terminated", list.terminated, true)?;
        let got: Vec<Vec<(Label, Label)>> = list
            .terms
            .iter()
            .map(|row| {
                let mut r = Vec::new();
                for t in row {
                    r.extend(std::iter::repeat((g.labels[t.left], g.labels[t.right])).take(t.multiplicity));
                }
                r.sort_unstable();
                r
            })
            .collect();
        expect(&format!("R_p for n={n}"), got, displayed_bimodule_terms(n))?;
    }
    Ok(())
}

fn c8() -> Outcome {
    for n in [2, 3] {
        let g = paper_gamma(n).unwrap();
        let r = contracted_euler_check(&g.alg, &happel_terms(&ext_table(&g.alg, 4).unwrap())).unwrap();
        let n2 = (n * n) as i64;
        expect(&format!("Euler characteristics for n={n}"), (r.chi, r.hh_chi), (n2, n2))?;
    }
    Ok(())
}

fn chern_ranks(alg: &FDAlgebra, pmax: usize) -> Result<Vec<usize>, String> {
    let cc = CyclicBicomplex::cyclic(alg, 2 * pmax, Mode::Relative, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
    let mut ranks = Vec::new();
    for p in 0..=pmax {
        let mut rows = Vec::new();
        for v in 0..alg.num_vertices() {
            let c = chern_of_idempotent(&IdempotentMatrix::diagonal(alg, &[v]).unwrap(), p, &cc).unwrap();
            if !cc.apply(&c.chain).is_zero() {
                return Err(format!("σ^{p} at vertex {v} of {} is not a cycle", alg.name()));
            }
            rows.push(c.coords);
        }
        let rank = Matrix::from_rows(&rows).rank();
        expect(&format!("rank vs dim HC_{}", 2 * p), rank, cc.homology().dims[2 * p])?;
        ranks.push(rank);
    }
    Ok(ranks)
}

fn c9() -> Outcome {
    for n in [2, 3] {
        let l = taft_algebra(n).unwrap();
        expect(&format!("Chern ranks over taft({n})"), chern_ranks(&l, 2)?, vec![n; 3])?;
        let g = auslander_of(&l).unwrap().0;
        expect(&format!("Chern ranks over Γ({n})"), chern_ranks(&g, 1)?, vec![n * n; 2])?;
    }
    Ok(())
}

fn c10() -> Outcome {
    let algebras = [
        build("vertices: x\n"),
        build("vertices: a b\n"),
        taft_algebra(2).unwrap(),
        build("vertices: 0\narrow x : 0 -> 0\nrelation 1*x.x\n"),
    ];
    for a in &algebras {
        let abs = hh_dims_absolute(a, 4, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
        expect(&format!("HH of {}", a.name()), hh_dims_relative(a, 4).dims, abs.dims)?;
        let rel = hc_dims(a, 4, Mode::Relative, DEFAULT_BUDGET).unwrap();
        let abs = hc_dims(a, 4, Mode::Absolute, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
        expect(&format!("HC of {}", a.name()), rel.dims, abs.dims)?;
    }
    Ok(())
}

fn c11() -> Outcome {
    for n in [2, 3] {
        let g = auslander_of(&taft_algebra(n).unwrap()).unwrap().0;
        let r = reconcile(&g, &auslander_quiver_presentation(n).unwrap()).unwrap();
        for item in &r.items {
            if !item.pass {
                return Err(format!("n={n} {}: {} vs {}", item.name, item.left, item.right));
            }
        }
        if n == 2 {
            let dim = r.items.iter().find(|i| i.name == "dim").ok_or("no dim item")?;
            expect("dims for n=2", (dim.left.as_str(), dim.right.as_str()), ("10", "10"))?;
        }
    }
    Ok(())
}

fn basis(n: usize, (i, u): Label) -> K0Class {
    K0Class::basis(n, i, u)
}

fn c12() -> Outcome {
    let mut problems = Vec::new();
    let pair = k0_taft_product(2, (0, 1), (0, 1)).unwrap().class;
    let want = basis(2, (0, 1)).plus(&basis(2, (1, 0)));
    if pair != want || k0_tensor_oracle(2, (0, 1), (0, 1)).unwrap() != want {
        problems.push(format!("(0,1)·(0,1) = {pair}"));
    }
    let mut seed: u64 = 0x2545_f491_4f6c_dd1d;
    for n in [2, 3] {
        let all = labels(n);
        let mut noncommuting = 0;
        for &a in &all {
            for &b in &all {
                if k0_taft_product(n, a, b).unwrap().class != k0_taft_product(n, b, a).unwrap().class {
                    noncommuting += 1;
                }
            }
        }
        let triples: Vec<[Label; 3]> = if n == 2 {
            let mut t = Vec::new();
            for &a in &all {
                for &b in &all {
                    t.extend(all.iter().map(|&c| [a, b, c]));
                }
            }
            t
        } else {
            let mut pick = || {
                seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1);
                all[(seed >> 33) as usize % all.len()]
            };
            (0..200).map(|_| [pick(), pick(), pick()]).collect()
        };
        let mut nonassociative = 0;
        for [a, b, c] in &triples {
            let (a, b, c) = (basis(n, *a), basis(n, *b), basis(n, *c));
            if a.times(&b).unwrap().times(&c).unwrap() != a.times(&b.times(&c).unwrap()).unwrap() {
                nonassociative += 1;
            }
        }
        if noncommuting > 0 {
            problems.push(format!("n={n}: {noncommuting}/{} ordered pairs do not commute", all.len().pow(2)));
        }
        if nonassociative > 0 {
            problems.push(format!("n={n}: {nonassociative}/{} triples not associative", triples.len()));
        }
    }
    if problems.is_empty() {
        Ok(())
    } else {
        Err(problems.join("; "))
    }
}

fn c13() -> Outcome {
    let n = 2;
    let l = taft_algebra(n).unwrap();
    let cc = CyclicBicomplex::cyclic(&l, 4, Mode::Relative, DEFAULT_BUDGET).unwrap();
    // P_j = N_{j, j−1}
    let proj = |j: usize| (j, (j + n - 1) % n);
    for p in 0..=2 {
        let sigma: Vec<Vec<Rational>> = (0..n)
            .map(|j| chern_of_idempotent(&IdempotentMatrix::diagonal(&l, &[j]).unwrap(), p, &cc).unwrap().coords)
            .collect();
        for j in 0..n {
            for k in 0..n {
                let formula = chern_tensor_formula(n, &[vec![proj(j)], vec![proj(k)]], p, &cc).unwrap().coords;
                let mut oracle = vec![Rational::zero(); formula.len()];
                for (&(a, b), &m) in &k0_tensor_oracle(n, proj(j), proj(k)).unwrap().coeffs {
                    expect("summand is projective", (a, b), proj(a))?;
                    for (o, s) in oracle.iter_mut().zip(&sigma[a]) {
                        *o = o.plus(&s.times(&Rational::from(m)));
                    }
                }
                expect(&format!("ch_{p}(P{j} ⊗ P{k})"), formula, oracle)?;
            }
        }
    }
    Ok(())
}

fn c14() -> Outcome {
    let mut algebras = vec![
        build("vertices: x\n"),
        build("vertices: a b\n"),
        build("vertices: 0\narrow x : 0 -> 0\nrelation 1*x.x\n"),
    ];
    for n in [2, 3] {
        let l = taft_algebra(n).unwrap();
        algebras.push(auslander_of(&l).unwrap().0);
        algebras.push(l);
        algebras.push(presented_gamma(n).unwrap().alg);
    }
    for a in &algebras {
        a.check_invariants(64).map_err(|e| format!("{}: {e}", a.name()))?;
        let budget = if a.dim() > 20 { 2 } else { 3 };
        HochschildComplex::hochschild(a, budget, Mode::Relative, DEFAULT_BUDGET)
            .and_then(|c| c.check_operator_identities())
            .map_err(|e| format!("Hochschild complex of {}: {e}", a.name()))?;
        CyclicBicomplex::cyclic(a, budget, Mode::Relative, DEFAULT_BUDGET)
            .and_then(|c| c.check_operator_identities())
            .map_err(|e| format!("cyclic bicomplex of {}: {e}", a.name()))?;
        for v in 0..a.num_vertices() {
            minimal_resolution::<Rational>(a, v, 4)
                .and_then(|r| r.verify())
                .map_err(|e| format!("resolution of S_{v} over {}: {e}", a.name()))?;
        }
    }
    for n in [2, 3] {
        for m in labels(n) {
            let one = (0, 0);
            expect("N00 ⊗ M", k0_tensor_oracle(n, one, m).unwrap(), basis(n, m))?;
            expect("M ⊗ N00", k0_tensor_oracle(n, m, one).unwrap(), basis(n, m))?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(u8, &str, fn() -> Outcome); 14] = [
        (1, "Taft Hochschild homology", c1),
        (2, "Taft cyclic homology", c2),
        (3, "Auslander Hochschild homology", c3),
        (4, "Auslander cyclic homology", c4),
        (5, "Ext table of Γ", c5),
        (6, "minimal resolutions of simples over Γ", c6),
        (7, "bimodule resolution terms", c7),
        (8, "contracted Euler characteristic", c8),
        (9, "Chern cycles and ranks", c9),
        (10, "relative vs absolute complexes", c10),
        (11, "reconciliation", c11),
        (12, "Grothendieck product", c12),
        (13, "tensor/Chern consistency", c13),
        (14, "property suites", c14),
    ];
    let mut unexpected = 0;
    for (k, name, f) in criteria {
        let start = Instant::now();
        let outcome = f();
        let t = start.elapsed();
        match outcome {
            Ok(()) => println!("PASS {k:>2} {name} ({t:.2?})"),
            Err(why) => {
                let known = KNOWN_FAILURES.contains(&k);
                println!("FAIL {k:>2} {name} ({t:.2?}){}: {why}", if known { " [known]" } else { "" });
                if !known {
                    unexpected += 1;
                }
            }
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{unexpected} unexpected failure(s)");
        ExitCode::FAILURE
    }
}
