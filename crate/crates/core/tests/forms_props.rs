use mnk_core::forms::{d_theta, exterior_d, hodge_star, wedge, DW1, DW2, DX, DY};
use mnk_core::{verify_lcs, DifferentialForm, LaurentPoly, LcsData, Rational};
use proptest::prelude::*;

fn coeff() -> impl Strategy<Value = LaurentPoly> {
    (-4i64..=4, prop::collection::vec(-3i64..=3, 0..3))
        .prop_map(|(o, c)| LaurentPoly::from_ints(o, &c))
}

fn form(degree: usize) -> impl Strategy<Value = DifferentialForm> {
    let masks: Vec<u8> = (0u8..16)
        .filter(|m| m.count_ones() as usize == degree)
        .collect();
    prop::collection::vec(coeff(), masks.len()).prop_map(move |cs| {
        masks
            .iter()
            .zip(cs)
            .fold(DifferentialForm::zero(degree), |acc, (&m, c)| {
                acc.add(&DifferentialForm::monomial(m, c))
            })
    })
}

fn any_form() -> impl Strategy<Value = DifferentialForm> {
    (0usize..=4).prop_flat_map(form)
}

/// Closed one-forms: constant in `dx, dy, dw₁`, arbitrary in `dw₂`.
fn closed_one_form() -> impl Strategy<Value = DifferentialForm> {
    (-3i64..=3, -3i64..=3, -3i64..=3, coeff()).prop_map(|(a, b, c, f)| {
        let k = |v: i64| LaurentPoly::constant(Rational::from(v));
        DifferentialForm::monomial(DX, k(a))
            .add(&DifferentialForm::monomial(DY, k(b)))
            .add(&DifferentialForm::monomial(DW1, k(c)))
            .add(&DifferentialForm::monomial(DW2, f))
    })
}

proptest! {
    #[test]
    fn d_squared_is_zero(a in any_form()) {
        prop_assert!(exterior_d(&exterior_d(&a)).is_zero());
    }

    #[test]
    fn twisted_d_squared_is_zero(a in any_form(), theta in closed_one_form()) {
        prop_assume!(a.degree() <= 2);
        let once = d_theta(&a, &theta).unwrap();
        prop_assert!(d_theta(&once, &theta).unwrap().is_zero());
    }

    #[test]
    fn leibniz(a in form(1), b in form(2)) {
        let lhs = exterior_d(&wedge(&a, &b).unwrap());
        let rhs = wedge(&exterior_d(&a), &b)
            .unwrap()
            .sub(&wedge(&a, &exterior_d(&b)).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn star_squared_sign(a in any_form()) {
        let k = a.degree() as i64;
        let sign = if (k * (4 - k)) % 2 == 0 { 1 } else { -1 };
        prop_assert_eq!(hodge_star(&hodge_star(&a)), a.scale_rational(Rational::from(sign)));
    }

    #[test]
    fn inner_product_symmetric((a, b) in (0usize..=4).prop_flat_map(|k| (form(k), form(k)))) {
        prop_assert_eq!(
            wedge(&a, &hodge_star(&b)).unwrap(),
            wedge(&b, &hodge_star(&a)).unwrap()
        );
    }

    #[test]
    fn rescaling_keeps_homogeneous_identities(p in 1i64..=9, q in 1i64..=9) {
        let c = Rational::new(p, q);
        let r = verify_lcs(&LcsData::normalized().rescaled(c.clone()));
        for name in ["d omega = theta ^ omega", "d theta = 0", "omega ^ omega != 0",
                     "omega1 = d_theta eta", "d omega1 = 0", "*omega2 = omega1"] {
            prop_assert!(r.check(name).unwrap().passed, "{name} failed at c = {c}");
        }
        prop_assert_eq!(r.check("dvol = omega^2 / 2").unwrap().passed, c.clone() * c.clone() == Rational::from(1));
    }
}
