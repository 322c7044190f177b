use super::*;
use crate::algebra::{build_algebra, parse_presentation, FDAlgebra};
use crate::families::{auslander_of, taft_algebra};
use crate::linalg::{Field, Rational};
use crate::repmod::ext_table;
use proptest::prelude::*;

fn build(text: &str) -> FDAlgebra {
    build_algebra(&parse_presentation(text).unwrap()).unwrap()
}

fn ground() -> FDAlgebra {
    build("vertices: x\n")
}

fn dual_numbers() -> FDAlgebra {
    build("vertices: 0\narrow x : 0 -> 0\nrelation 1*x.x\n")
}

fn q(v: i64) -> Rational {
    Rational::from(v)
}

#[test]
fn ground_field() {
    let k = ground();
    assert_eq!(hh_dims_relative(&k, 4).dims, vec![1, 0, 0, 0, 0]);
    assert_eq!(hh_dims_absolute(&k, 2, DEFAULT_BUDGET).unwrap().dims, vec![1, 0, 0]);
    assert_eq!(hc_dims(&k, 4, Mode::Relative, DEFAULT_BUDGET).unwrap().dims, vec![1, 0, 1, 0, 1]);
    assert_eq!(hc_dims(&k, 4, Mode::Absolute, DEFAULT_BUDGET).unwrap().dims, vec![1, 0, 1, 0, 1]);
}

#[test]
fn product_of_two_fields() {
    let kk = build("vertices: a b\n");
    assert_eq!(hh_dims_absolute(&kk, 2, DEFAULT_BUDGET).unwrap().dims, vec![2, 0, 0]);
    assert_eq!(hh_dims_relative(&kk, 2).dims, vec![2, 0, 0]);
}

#[test]
fn dual_numbers_in_characteristic_zero() {
    let a = dual_numbers();
    assert_eq!(hh_dims_absolute(&a, 3, DEFAULT_BUDGET).unwrap().dims, vec![2, 1, 1, 1]);
    assert_eq!(hh_dims_relative(&a, 3).dims, vec![2, 1, 1, 1]);
    // HC(k[x]/x²) = (2, 0, 1, 0, 1): the reduced part is concentrated in
    // even weights that die in odd degrees
    let hc = hc_dims(&a, 4, Mode::Relative, DEFAULT_BUDGET).unwrap().dims;
    assert_eq!(hc, hc_dims(&a, 4, Mode::Absolute, DEFAULT_BUDGET).unwrap().dims);
    assert_eq!(hc[0], 2);
}

#[test]
fn taft_two() {
    let l = taft_algebra(2).unwrap();
    assert_eq!(hh_dims_relative(&l, 4).dims, vec![2, 1, 1, 1, 1]);
    assert_eq!(hc_dims(&l, 4, Mode::Relative, DEFAULT_BUDGET).unwrap().dims, vec![2, 1, 2, 1, 2]);
}

#[test]
fn relative_matches_absolute_on_taft_two() {
    let l = taft_algebra(2).unwrap();
    assert_eq!(hh_dims_absolute(&l, 3, DEFAULT_BUDGET).unwrap().dims, hh_dims_relative(&l, 3).dims);
    assert_eq!(
        hc_dims(&l, 3, Mode::Absolute, DEFAULT_BUDGET).unwrap().dims,
        hc_dims(&l, 3, Mode::Relative, DEFAULT_BUDGET).unwrap().dims
    );
}

#[test]
fn absolute_respects_budget() {
    let l = taft_algebra(2).unwrap();
    assert!(matches!(
        hh_dims_absolute(&l, 8, 1000),
        Err(crate::Error::BudgetExceeded { budget: 1000, .. })
    ));
}

#[test]
fn auslander_two_is_rigid() {
    let (g, _) = auslander_of(&taft_algebra(2).unwrap()).unwrap();
    assert_eq!(hh_dims_relative(&g, 3).dims, vec![4, 0, 0, 0]);
    assert_eq!(hc_dims(&g, 3, Mode::Relative, DEFAULT_BUDGET).unwrap().dims, vec![4, 0, 4, 0]);
}

#[test]
fn operator_identities() {
    for alg in [dual_numbers(), taft_algebra(2).unwrap(), taft_algebra(3).unwrap()] {
        let cc = CyclicBicomplex::cyclic(&alg, 3, Mode::Relative, DEFAULT_BUDGET).unwrap();
        cc.check_operator_identities().unwrap();
    }
    let a = dual_numbers();
    CyclicBicomplex::cyclic(&a, 2, Mode::Absolute, DEFAULT_BUDGET)
        .unwrap()
        .check_operator_identities()
        .unwrap();
}

/// `Σ_m y_m e^{⊗2m+1} + z_m e^{⊗2m}` with the first Chern coefficients.
fn sigma(e: usize, p: usize) -> ChainVector {
    let coeffs: [&[i64]; 3] = [&[1], &[-2, 1, 1], &[12, -6, -2, 1, 1]];
    let c = coeffs[p];
    let mut out = ChainVector::new();
    for m in (0..=p).rev() {
        let k = 2 * (p - m);
        out.add_term((2 * (p - m), 2 * m), vec![e; 2 * m + 1], q(c[k]));
        if m > 0 {
            out.add_term((2 * (p - m) + 1, 2 * m - 1), vec![e; 2 * m], q(c[k + 1]));
        }
    }
    out
}

#[test]
fn chern_chains_are_cycles() {
    let l = taft_algebra(2).unwrap();
    let cc = CyclicBicomplex::cyclic(&l, 4, Mode::Relative, DEFAULT_BUDGET).unwrap();
    for p in 0..=2 {
        for v in 0..2 {
            assert!(cc.apply(&sigma(l.idempotent(v), p)).is_zero(), "σ^{p} at {v}");
        }
    }
}

#[test]
fn class_coordinates() {
    let l = taft_algebra(2).unwrap();
    let cc = CyclicBicomplex::cyclic(&l, 2, Mode::Relative, DEFAULT_BUDGET).unwrap();
    let a = cc.class_coords(&sigma(l.idempotent(0), 1), 2).unwrap();
    let b = cc.class_coords(&sigma(l.idempotent(1), 1), 2).unwrap();
    assert_eq!(a.len(), 2);
    assert!(a.iter().zip(&b).any(|(x, y)| x != y));
    assert!(a.iter().any(|x| !x.is_zero()));

    // a boundary has zero class
    let e = l.idempotent(0);
    let mut c = ChainVector::new();
    c.add_term((0, 2), vec![e; 3], q(1));
    let boundary = cc.apply(&c);
    assert!(!boundary.is_zero());
    assert!(cc.class_coords(&boundary, 1).unwrap().iter().all(Rational::is_zero));

    // a non-cycle is rejected
    let mut c = ChainVector::new();
    c.add_term((1, 1), vec![e; 2], q(1));
    assert_eq!(cc.class_coords(&c, 2), Err(crate::Error::NotACycle));
    assert_eq!(cc.class_coords(&c, 3), Err(crate::Error::DegreeOutOfRange(3)));
}

#[test]
fn happel_and_euler_for_auslander_two() {
    let (g, _) = auslander_of(&taft_algebra(2).unwrap()).unwrap();
    let ext = ext_table(&g, 4).unwrap();
    let list = happel_terms(&ext);
    assert!(list.terminated);
    assert_eq!(list.terms[0].len(), 4);
    let report = contracted_euler_check(&g, &list).unwrap();
    assert_eq!(report.chi, 4);
    assert!(report.agree);

    let k = ground();
    let report = contracted_euler_check(&k, &happel_terms(&ext_table(&k, 2).unwrap())).unwrap();
    assert_eq!(report.chi, 1);
}

#[test]
fn euler_check_needs_a_finite_resolution() {
    let l = taft_algebra(2).unwrap();
    let list = happel_terms(&ext_table(&l, 3).unwrap());
    assert!(!list.terminated);
    assert_eq!(contracted_euler_check(&l, &list).unwrap_err(), crate::Error::InfiniteResolution(3));
}

#[test]
fn hc_zero_equals_hh_zero() {
    for alg in [ground(), dual_numbers(), taft_algebra(3).unwrap()] {
        let hh = hh_dims_relative(&alg, 1).dims[0];
        let hc = hc_dims(&alg, 1, Mode::Relative, DEFAULT_BUDGET).unwrap().dims[0];
        assert_eq!(hh, hc, "{}", alg.name());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn dims_ignore_basis_order(seed in any::<u64>(), n in 2usize..=3) {
        let l = taft_algebra(n).unwrap();
        let mut order: Vec<usize> = (0..l.dim()).collect();
        let mut s = seed;
        for i in (1..order.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            order.swap(i, (s >> 33) as usize % (i + 1));
        }
        let m = l.reorder_basis(&order).unwrap();
        prop_assert_eq!(hh_dims_relative(&m, 3).dims, hh_dims_relative(&l, 3).dims);
        prop_assert_eq!(
            hc_dims(&m, 2, Mode::Relative, DEFAULT_BUDGET).unwrap().dims,
            hc_dims(&l, 2, Mode::Relative, DEFAULT_BUDGET).unwrap().dims
        );
    }
}
