use proptest::prelude::*;
use umemura::exactpoly::{self, rat, BiPoly};
use umemura::ratfun::{op_lz, RationalFunction};
use umemura::recurrences::{MuMode, PolySequence};

fn bipoly() -> impl Strategy<Value = BiPoly> {
    prop::collection::vec((0u32..5, 0u32..4, -9i64..=9, 1i64..=4), 0..6).prop_map(|terms| {
        BiPoly::from_terms(terms.into_iter().map(|(dz, dm, n, d)| ((dz, dm), rat(n, d))))
    })
}

fn nonzero_bipoly() -> impl Strategy<Value = BiPoly> {
    bipoly().prop_filter("nonzero", |p| !p.is_zero())
}

fn small_rational() -> impl Strategy<Value = num_rational::BigRational> {
    (-12i64..=12, 1i64..=5).prop_map(|(n, d)| rat(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in bipoly(), b in bipoly(), c in bipoly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &BiPoly::one(), a.clone());
    }

    #[test]
    fn leibniz_rule(a in bipoly(), b in bipoly()) {
        let lhs = (&a * &b).derivative_z();
        let rhs = &(&a.derivative_z() * &b) + &(&a * &b.derivative_z());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn valuation_is_additive(a in nonzero_bipoly(), b in nonzero_bipoly()) {
        let va = a.valuation_z().unwrap().order;
        let vb = b.valuation_z().unwrap().order;
        prop_assert_eq!((&a * &b).valuation_z().unwrap().order, va + vb);
    }

    #[test]
    fn exact_division_inverts_multiplication(a in bipoly(), b in nonzero_bipoly()) {
        prop_assert_eq!(exactpoly::exact_div(&(&a * &b), &b).unwrap(), a);
    }

    #[test]
    fn gcd_divides_both(a in nonzero_bipoly(), b in nonzero_bipoly(), g in nonzero_bipoly()) {
        let (x, y) = (&a * &g, &b * &g);
        let d = exactpoly::gcd(&x, &y).unwrap();
        prop_assert!(exactpoly::exact_div(&x, &d).is_ok());
        prop_assert!(exactpoly::exact_div(&y, &d).is_ok());
        if g.deg_z().unwrap_or(0) > 0 {
            prop_assert!(d.deg_z().unwrap_or(0) >= g.deg_z().unwrap());
        }
    }

    #[test]
    fn json_round_trip(a in bipoly()) {
        let text = a.to_json();
        let back = BiPoly::from_json(&text).unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(back.to_json(), text);
    }

    #[test]
    fn mu_shifts_compose(a in bipoly(), s in small_rational(), t in small_rational()) {
        prop_assert_eq!(a.shift_mu(&s).shift_mu(&t), a.shift_mu(&(&s + &t)));
    }

    #[test]
    fn specialization_is_a_homomorphism(a in bipoly(), b in bipoly(), m in small_rational()) {
        prop_assert_eq!((&a * &b).eval_mu(&m), &a.eval_mu(&m) * &b.eval_mu(&m));
        prop_assert_eq!((&a + &b).eval_mu(&m), &a.eval_mu(&m) + &b.eval_mu(&m));
    }

    #[test]
    fn hirota_operator_product_rule(a in nonzero_bipoly(), b in nonzero_bipoly()) {
        let (fa, fb) = (RationalFunction::from_poly(a.clone()), RationalFunction::from_poly(b.clone()));
        let lhs = op_lz(&RationalFunction::from_poly(&a * &b));
        let rhs = op_lz(&fb).mul_poly(&a.pow(2)).add(&op_lz(&fa).mul_poly(&b.pow(2)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn hirota_operator_scales_quadratically(a in nonzero_bipoly(), k in small_rational()) {
        let f = RationalFunction::from_poly(a);
        prop_assert_eq!(op_lz(&f.scale(&k)), op_lz(&f).scale(&(&k * &k)));
    }

    #[test]
    fn rational_functions_form_a_field(a in nonzero_bipoly(), b in nonzero_bipoly(), c in bipoly()) {
        let x = RationalFunction::new(a.clone(), b.clone()).unwrap();
        let y = RationalFunction::new(c.clone(), a.clone()).unwrap();
        prop_assert!(x.mul(&RationalFunction::new(b, a).unwrap()).is_one_value());
        prop_assert_eq!(x.add(&y).sub(&y), x.clone());
        prop_assert_eq!(x.mul(&y).derivative(), x.derivative().mul(&y).add(&x.mul(&y.derivative())));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    /// Generating at a rational mu directly agrees with specializing the
    /// symbolic sequence, and the degree law holds.
    #[test]
    fn rational_mu_generation(m in small_rational()) {
        let sym = PolySequence::umemura(MuMode::Symbolic, 4).unwrap();
        let direct = PolySequence::umemura(MuMode::Value(m.clone()), 4).unwrap();
        for n in 0..=4i64 {
            let p = direct.get(n).unwrap();
            prop_assert_eq!(p, &sym.get(n).unwrap().eval_mu(&m));
            prop_assert_eq!(p.deg_z().unwrap_or(0), (n * (n + 1) / 2) as u32);
            prop_assert!(p.coeff(p.deg_z().unwrap_or(0), 0) == rat(1, 1));
        }
    }
}
