mod common;

use common::{int_matrix, random_sl_pair, random_unimodular, rng_from_env, tribonacci};
use mnk_core::linalg::bareiss_det;
use mnk_core::mv::euler_characteristic;
use mnk_core::{
    cross_check, novikov_invariants, pajitnov_consistency, twisted_cohomology, vanishing_check,
    MappingTorus, Rational, TwistSpec,
};
use num_bigint::BigInt;
use rand::Rng;

const WEIGHTS: [(i64, i64); 5] = [(1, 1), (2, 1), (1, 3), (7, 1), (-1, 1)];

fn weight(rng: &mut impl Rng) -> Rational {
    let (p, q) = WEIGHTS[rng.gen_range(0..WEIGHTS.len())];
    Rational::new(p, q)
}

#[test]
fn euler_characteristic_vanishes() {
    let mut rng = rng_from_env(21);
    for _ in 0..20 {
        let n = rng.gen_range(1..=4);
        let mt = MappingTorus::build(random_unimodular(&mut rng, n, 1)).unwrap();
        for tw in [
            TwistSpec::Untwisted,
            TwistSpec::RationalWeight(weight(&mut rng)),
            TwistSpec::Transcendental,
        ] {
            let r = twisted_cohomology(&mt, &tw).unwrap();
            assert_eq!(r.euler, 0);
            assert_eq!(euler_characteristic(&r.dims), 0);
            assert!(vanishing_check(&r).passed);
        }
    }
}

#[test]
fn poincare_duality_on_sl() {
    let mut rng = rng_from_env(22);
    for _ in 0..20 {
        let n = rng.gen_range(1..=4);
        let mt = MappingTorus::build(random_unimodular(&mut rng, n, 1)).unwrap();
        let l = weight(&mut rng);
        let a = twisted_cohomology(&mt, &TwistSpec::RationalWeight(l.clone())).unwrap();
        let b = twisted_cohomology(&mt, &TwistSpec::RationalWeight(l.recip().unwrap())).unwrap();
        let flipped: Vec<usize> = b.dims.iter().rev().copied().collect();
        assert_eq!(a.dims, flipped, "lambda = {l}");
    }
}

#[test]
fn transcendental_twist_kills_everything() {
    let mut rng = rng_from_env(23);
    for _ in 0..20 {
        let n = rng.gen_range(1..=4);
        let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
        let mt = MappingTorus::build(random_unimodular(&mut rng, n, sign)).unwrap();
        let r = twisted_cohomology(&mt, &TwistSpec::Transcendental).unwrap();
        assert!(r.dims.iter().all(|&d| d == 0));
        assert!(pajitnov_consistency(&mt).unwrap().passed);
    }
}

#[test]
fn weight_one_matches_untwisted() {
    let mut rng = rng_from_env(24);
    for _ in 0..10 {
        let mt = MappingTorus::build(random_unimodular(&mut rng, 3, 1)).unwrap();
        let a = twisted_cohomology(&mt, &TwistSpec::Untwisted).unwrap();
        let b = twisted_cohomology(&mt, &TwistSpec::RationalWeight(Rational::from(1))).unwrap();
        assert_eq!(a.dims, b.dims);
        assert_eq!(a.dims[0], 1);
    }
}

#[test]
fn conjugation_invariance() {
    let mut rng = rng_from_env(25);
    for _ in 0..15 {
        let n = rng.gen_range(2..=3);
        let a = random_unimodular(&mut rng, n, 1);
        let (p, q) = random_sl_pair(&mut rng, n);
        let b = p.checked_mul(&a).unwrap().checked_mul(&q).unwrap();
        let (ma, mb) = (
            MappingTorus::build(a).unwrap(),
            MappingTorus::build(b).unwrap(),
        );
        assert_eq!(ma.charpoly(), mb.charpoly());
        let tws = [
            TwistSpec::Untwisted,
            TwistSpec::RationalWeight(weight(&mut rng)),
            TwistSpec::Transcendental,
        ];
        for tw in tws {
            assert_eq!(
                twisted_cohomology(&ma, &tw).unwrap().dims,
                twisted_cohomology(&mb, &tw).unwrap().dims
            );
        }
        if ma.modulus().is_some() {
            assert_eq!(
                twisted_cohomology(&ma, &TwistSpec::LeeEigenvalue)
                    .unwrap()
                    .dims,
                twisted_cohomology(&mb, &TwistSpec::LeeEigenvalue)
                    .unwrap()
                    .dims
            );
        }
        let (na, nb) = (
            novikov_invariants(&ma).unwrap(),
            novikov_invariants(&mb).unwrap(),
        );
        assert_eq!(na.betti, nb.betti);
        assert_eq!(na.torsion, nb.torsion);
    }
}

#[test]
fn induced_maps_are_unimodular() {
    let mut rng = rng_from_env(26);
    for _ in 0..20 {
        let n = rng.gen_range(1..=4);
        let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
        let mt = MappingTorus::build(random_unimodular(&mut rng, n, sign)).unwrap();
        assert_eq!(mt.det(), &BigInt::from(sign));
        for m in &mt.induced_maps().maps {
            let d = bareiss_det(m).unwrap();
            assert!(d == BigInt::from(1) || d == BigInt::from(-1));
        }
    }
}

#[test]
fn lee_modulus_divides_charpoly() {
    let mut rng = rng_from_env(27);
    let mut seen = 0;
    for _ in 0..40 {
        let mt = MappingTorus::build(random_unimodular(&mut rng, 3, 1)).unwrap();
        let (Some(f), Some(alpha)) = (mt.modulus(), mt.alpha()) else {
            continue;
        };
        seen += 1;
        assert!(mt.charpoly().rem(f).is_zero());
        let (a, b) = (f.eval(&alpha.lo), f.eval(&alpha.hi));
        assert!(a.signum() * b.signum() < 0);
        assert_eq!(
            alpha.cmp_rational(&Rational::from(1)),
            std::cmp::Ordering::Greater
        );
    }
    assert!(seen > 0);
}

#[test]
fn cross_check_on_random_pairs() {
    let mut rng = rng_from_env(28);
    for _ in 0..25 {
        let n = rng.gen_range(1..=3);
        let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
        let mt = MappingTorus::build(random_unimodular(&mut rng, n, sign)).unwrap();
        let tw = TwistSpec::RationalWeight(weight(&mut rng));
        let out = cross_check(&mt, &tw).unwrap();
        assert!(out.passed, "{:?}", out.violations);
    }
    let out = cross_check(&tribonacci(), &TwistSpec::LeeEigenvalue).unwrap();
    assert!(out.passed);
}

#[test]
fn golden_ratio_square() {
    let mt = MappingTorus::build(int_matrix(&[&[2, 1], &[1, 1]])).unwrap();
    let alpha = mt.alpha().unwrap();
    assert_eq!(alpha.to_decimal(4), "2.6180");
    assert_eq!(
        mt.modulus().unwrap(),
        &mnk_core::Poly::from_ints(&[1, -3, 1])
    );
    let r = twisted_cohomology(&mt, &TwistSpec::LeeEigenvalue).unwrap();
    assert_eq!(r.dims, vec![0, 1, 1, 0]);
}

#[test]
fn non_unimodular_rejected() {
    assert!(MappingTorus::build(int_matrix(&[&[2, 0], &[0, 1]])).is_err());
    let mt = MappingTorus::build(int_matrix(&[&[1, 0], &[0, 1]])).unwrap();
    assert!(twisted_cohomology(&mt, &TwistSpec::LeeEigenvalue).is_err());
    assert!(twisted_cohomology(&mt, &TwistSpec::RationalWeight(Rational::from(0))).is_err());
}

#[test]
fn orientation_reversing_top_class() {
    let mt = MappingTorus::build(int_matrix(&[&[-1]])).unwrap();
    let r = twisted_cohomology(&mt, &TwistSpec::RationalWeight(Rational::from(-1))).unwrap();
    assert_eq!(r.dims, vec![0, 1, 1]);
    assert!(!r.orientable);
    assert!(vanishing_check(&r).passed);
    assert!(!mt.warnings().is_empty());
}
