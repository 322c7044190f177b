use super::*;
use crate::families::{auslander_of, taft_algebra};
use crate::homology::{CyclicBicomplex, Mode, DEFAULT_BUDGET};
use crate::linalg::{Matrix, SparseVec};

fn q(v: i64) -> Rational {
    Rational::from(v)
}

fn rank_of(classes: &[ChernClass]) -> usize {
    Matrix::from_rows(&classes.iter().map(|c| c.coords.clone()).collect::<Vec<_>>()).rank()
}

#[test]
fn coefficients() {
    assert_eq!(chern_coeffs(0).values, vec![q(1)]);
    assert_eq!(chern_coeffs(1).values, vec![q(-2), q(1), q(1)]);
    assert_eq!(chern_coeffs(2).values, vec![q(12), q(-6), q(-2), q(1), q(1)]);
    let c = chern_coeffs(3);
    assert_eq!((c.y(3), c.z(3)), (&q(-120), &q(60)));
}

#[test]
fn idempotent_check() {
    let l = taft_algebra(2).unwrap();
    let x = l.degree_one()[0];
    assert_eq!(
        IdempotentMatrix::new(&l, vec![vec![SparseVec::unit(x)]]).unwrap_err(),
        crate::Error::NotIdempotent
    );
    assert!(IdempotentMatrix::new(&l, vec![vec![SparseVec::new()]]).is_ok());
}

#[test]
fn taft_classes_generate() {
    for n in [2, 3] {
        let l = taft_algebra(n).unwrap();
        let cc = CyclicBicomplex::cyclic(&l, 4, Mode::Relative, DEFAULT_BUDGET).unwrap();
        for p in 0..=2 {
            let classes: Vec<ChernClass> = (0..n)
                .map(|j| chern_of_idempotent(&IdempotentMatrix::diagonal(&l, &[j]).unwrap(), p, &cc).unwrap())
                .collect();
            assert_eq!(rank_of(&classes), n, "n={n} p={p}");
            assert_eq!(classes[0].coords.len(), n);
        }
    }
}

#[test]
fn additivity_and_conjugation() {
    let l = taft_algebra(2).unwrap();
    let cc = CyclicBicomplex::cyclic(&l, 2, Mode::Relative, DEFAULT_BUDGET).unwrap();
    for p in 0..=1 {
        let one = |v| chern_of_idempotent(&IdempotentMatrix::diagonal(&l, &[v]).unwrap(), p, &cc).unwrap();
        let both = IdempotentMatrix::diagonal(&l, &[0, 1]).unwrap();
        let sum: Vec<Rational> = one(0).coords.iter().zip(&one(1).coords).map(|(a, b)| a.plus(b)).collect();
        assert_eq!(chern_of_idempotent(&both, p, &cc).unwrap().coords, sum);
        let s = Matrix::from_rows(&[vec![q(1), q(2)], vec![q(0), q(1)]]);
        let conj = both.conjugate(&l, &s).unwrap();
        assert_eq!(chern_of_idempotent(&conj, p, &cc).unwrap().coords, sum);
        let zero = IdempotentMatrix::new(&l, vec![vec![SparseVec::new()]]).unwrap();
        assert!(chern_of_idempotent(&zero, p, &cc).unwrap().is_zero());
    }
}

#[test]
fn chern_needs_the_degree() {
    let l = taft_algebra(2).unwrap();
    let cc = CyclicBicomplex::cyclic(&l, 1, Mode::Relative, DEFAULT_BUDGET).unwrap();
    let e = IdempotentMatrix::diagonal(&l, &[0]).unwrap();
    assert_eq!(chern_of_idempotent(&e, 1, &cc).unwrap_err(), crate::Error::DegreeOutOfRange(2));
}

#[test]
fn tensor_formula() {
    let l = taft_algebra(2).unwrap();
    let cc = CyclicBicomplex::cyclic(&l, 2, Mode::Relative, DEFAULT_BUDGET).unwrap();
    let p0 = vec![(0, 1)];
    let sigma = |j| chern_of_idempotent(&IdempotentMatrix::diagonal(&l, &[j]).unwrap(), 1, &cc).unwrap().coords;
    let base: Vec<Rational> = sigma(0).iter().zip(&sigma(1)).map(|(a, b)| a.plus(b)).collect();
    let c = chern_tensor_formula(2, &[p0.clone(), p0.clone()], 1, &cc).unwrap();
    assert_eq!(c.coords, base);
    let c = chern_tensor_formula(2, &[vec![(0, 1), (1, 0)], p0.clone()], 1, &cc).unwrap();
    assert_eq!(c.coords, base.iter().map(|x| x.times(&q(2))).collect::<Vec<_>>());
    assert!(matches!(
        chern_tensor_formula(2, &[vec![(0, 0)], vec![(1, 1)]], 1, &cc),
        Err(crate::Error::NotProjective(_))
    ));
    assert!(chern_tensor_formula(2, &[p0], 1, &cc).is_err());
}

#[test]
fn kbar_on_auslander_two() {
    let (g, lab) = auslander_of(&taft_algebra(2).unwrap()).unwrap();
    let cc = CyclicBicomplex::cyclic(&g, 2, Mode::Relative, DEFAULT_BUDGET).unwrap();
    for p in 0..=1 {
        let classes: Vec<ChernClass> = lab.labels.iter().map(|&l| kbar_map(&lab, l, p, &cc).unwrap()).collect();
        assert!(classes.iter().all(|c| !c.is_zero()));
        assert_eq!(rank_of(&classes), 4);
    }
    let unit: SparseVec<Rational> = (0..4).fold(SparseVec::new(), |acc, v| acc.add(&SparseVec::unit(g.idempotent(v))));
    let id = IdempotentMatrix::new(&g, vec![vec![unit]]).unwrap();
    let total = lab.labels.iter().map(|&l| kbar_map(&lab, l, 0, &cc).unwrap().coords).fold(vec![q(0); 4], |a, c| {
        a.iter().zip(&c).map(|(x, y)| x.plus(y)).collect()
    });
    assert_eq!(chern_of_idempotent(&id, 0, &cc).unwrap().coords, total);
}

#[test]
fn tensor_oracle_examples() {
    let p = |n, terms: &[(usize, usize)]| {
        terms.iter().fold(K0Class::zero(n), |c, &(i, u)| c.plus(&K0Class::basis(n, i, u)))
    };
    assert_eq!(k0_tensor_oracle(2, (0, 1), (0, 1)).unwrap(), p(2, &[(0, 1), (1, 0)]));
    assert_eq!(k0_tensor_oracle(3, (0, 0), (1, 1)).unwrap(), p(3, &[(1, 1)]));
    assert_eq!(k0_tensor_oracle(2, (0, 0), (0, 0)).unwrap(), p(2, &[(0, 0)]));
}
