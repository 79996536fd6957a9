mod common;

use mnk_core::arith::{sturm_sequence, Ring};
use mnk_core::{
    factor, isolate_real_roots, laurent_normalize, LaurentPoly, NumberField, Poly, Rational,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(p, q)| Rational::new(p, q))
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(rational(), 0..5).prop_map(Poly::new)
}

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    (-3i64..=3, prop::collection::vec(rational(), 0..4)).prop_map(|(o, c)| LaurentPoly::new(o, c))
}

fn tribonacci_field() -> NumberField {
    NumberField::new(Poly::from_ints(&[-1, -1, -1, 1]))
}

fn ring_axioms<T: Ring>(a: T, b: T, c: T) {
    assert_eq!(
        a.clone() + (b.clone() + c.clone()),
        (a.clone() + b.clone()) + c.clone()
    );
    assert_eq!(
        a.clone() * (b.clone() * c.clone()),
        (a.clone() * b.clone()) * c.clone()
    );
    assert_eq!(
        a.clone() * (b.clone() + c.clone()),
        a.clone() * b.clone() + a.clone() * c.clone()
    );
    assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
    assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
    assert_eq!(a.clone() + a.zero_like(), a.clone());
    assert_eq!(a.clone() * a.one_like(), a.clone());
    assert!((a.clone() - a.clone()).is_zero());
}

proptest! {
    #[test]
    fn rational_ring(a in rational(), b in rational(), c in rational()) {
        ring_axioms(a, b, c);
    }

    #[test]
    fn poly_ring(a in poly(), b in poly(), c in poly()) {
        ring_axioms(a, b, c);
    }

    #[test]
    fn laurent_ring(a in laurent(), b in laurent(), c in laurent()) {
        ring_axioms(a, b, c);
    }

    #[test]
    fn number_field_ring(a in poly(), b in poly(), c in poly()) {
        let k = tribonacci_field();
        ring_axioms(k.element(&a), k.element(&b), k.element(&c));
    }

    #[test]
    fn factorization_remultiplies(a in prop::collection::vec(-4i64..=4, 2..4),
                                  b in prop::collection::vec(-4i64..=4, 2..4)) {
        let p = Poly::from_ints(&a) * Poly::from_ints(&b);
        prop_assume!(!p.is_zero());
        let fz = factor(&p);
        prop_assert_eq!(fz.product(), p);
        for (f, _) in &fz.factors {
            prop_assert!(f.leading().is_one());
            prop_assert!(factor(f).factors.len() == 1);
        }
    }

    #[test]
    fn laurent_normalize_idempotent(f in laurent()) {
        prop_assume!(!f.is_zero());
        let n = laurent_normalize(&f).unwrap();
        let again = laurent_normalize(&LaurentPoly::from_poly(&n.primitive)).unwrap();
        prop_assert_eq!(again.exponent, 0);
        prop_assert!(again.constant.is_one());
        prop_assert_eq!(&again.primitive, &n.primitive);
        prop_assert!(!n.primitive.coeff(0).is_zero());
    }

    #[test]
    fn root_count_matches_sturm(coeffs in prop::collection::vec(-6i64..=6, 2..6)) {
        let p = Poly::from_ints(&coeffs);
        prop_assume!(p.degree().unwrap_or(0) >= 1);
        let sf = p.div_rem(&p.gcd(&p.derivative())).0;
        let roots = isolate_real_roots(&sf).unwrap();
        prop_assert_eq!(roots.len(), sturm_sequence(&sf).count_real());
        for w in roots.windows(2) {
            prop_assert!(w[0].hi <= w[1].lo);
        }
        for r in &roots {
            let (a, b) = (sf.eval(&r.lo), sf.eval(&r.hi));
            prop_assert!(a.signum() * b.signum() < 0);
        }
    }
}

#[test]
fn nf_inverse_on_random_elements() {
    let k = tribonacci_field();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut tested = 0;
    while tested < 100 {
        let coeffs: Vec<Rational> = (0..3)
            .map(|_| Rational::new(rng.gen_range(-9i64..=9), rng.gen_range(1i64..=5)))
            .collect();
        let a = k.element(&Poly::new(coeffs));
        if a.is_zero() {
            continue;
        }
        assert!((a.clone() * a.inverse().unwrap()).is_one());
        tested += 1;
    }
}

#[test]
fn tribonacci_root_decimal() {
    let roots = isolate_real_roots(&Poly::from_ints(&[-1, -1, -1, 1])).unwrap();
    assert_eq!(roots.len(), 1);
    // bisection to 1e-10 with plain f64 as an independent decimal oracle
    let f = |x: f64| x * x * x - x * x - x - 1.0;
    let (mut lo, mut hi) = (1.0f64, 2.0f64);
    for _ in 0..60 {
        let m = 0.5 * (lo + hi);
        if f(m) < 0.0 {
            lo = m;
        } else {
            hi = m;
        }
    }
    assert_eq!(roots[0].to_decimal(6), format!("{:.6}", lo));
    assert_eq!(roots[0].to_decimal(4), "1.8393");
}
