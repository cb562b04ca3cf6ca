use num_traits::{One, Zero};
use proptest::prelude::*;
use rootode_core::algebra::{discriminant_in_x, rat, resultant, BiPoly, Rat, RatFunc, UPoly, Var};

fn poly(var: Var, max_len: usize) -> impl Strategy<Value = UPoly> {
    prop::collection::vec(-9i64..=9, 0..=max_len).prop_map(move |c| UPoly::from_ints(var, &c))
}

fn nonzero(var: Var, max_len: usize) -> impl Strategy<Value = UPoly> {
    poly(var, max_len).prop_filter("nonzero", |p| !p.is_zero())
}

fn is_canonical(p: &UPoly) -> bool {
    p.coeffs().last().is_none_or(|c| !c.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ring_laws(a in poly(Var::X, 7), b in poly(Var::X, 7), c in poly(Var::X, 7)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        prop_assert!(is_canonical(&(&a * &b)) && is_canonical(&(&a - &b)));
    }

    #[test]
    fn derivative_is_a_derivation(a in poly(Var::Q, 6), b in poly(Var::Q, 6)) {
        let lhs = (&a * &b).derivative();
        let rhs = &(&a.derivative() * &b) + &(&a * &b.derivative());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn gcd_divides_both(a in nonzero(Var::X, 5), b in nonzero(Var::X, 5), c in nonzero(Var::X, 3)) {
        let (ac, bc) = (&a * &c, &b * &c);
        let g = UPoly::gcd(&ac, &bc).unwrap();
        prop_assert!(ac.divrem(&g).unwrap().1.is_zero());
        prop_assert!(bc.divrem(&g).unwrap().1.is_zero());
        prop_assert!(g.degree() >= c.degree());
        prop_assert_eq!(g.lc().cloned(), Some(Rat::one()));
    }

    #[test]
    fn rational_functions_are_canonical(a in poly(Var::Q, 4), b in nonzero(Var::Q, 4), c in nonzero(Var::Q, 3)) {
        let f = RatFunc::new(&a * &c, &b * &c).unwrap();
        let g = RatFunc::new(a.clone(), b.clone()).unwrap();
        prop_assert_eq!(&f, &g);
        prop_assert_eq!(f.den().lc().cloned(), Some(Rat::one()));
        let gcd = UPoly::gcd(f.num(), f.den()).unwrap();
        prop_assert!(f.num().is_zero() || gcd.degree() == Some(0));
        let (n, d) = f.integer_form();
        prop_assert_eq!(RatFunc::new(n, d).unwrap(), f);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn divrem_reconstructs(a in poly(Var::X, 9), b in nonzero(Var::X, 6)) {
        let (q, r) = a.divrem(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn resultant_is_multiplicative(a in nonzero(Var::X, 4), b in nonzero(Var::X, 4), c in nonzero(Var::X, 4)) {
        let ab = &a * &b;
        let lhs = resultant(&ab, &c).unwrap();
        let rhs = resultant(&a, &c).unwrap() * resultant(&b, &c).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn resultant_vanishes_on_common_factor(a in nonzero(Var::X, 4), b in nonzero(Var::X, 4), c in nonzero(Var::X, 3)) {
        prop_assume!(c.degree().unwrap() >= 1);
        prop_assert!(resultant(&(&a * &c), &(&b * &c)).unwrap().is_zero());
    }

    #[test]
    fn discriminant_degree(mut c in prop::collection::vec(-9i64..=9, 2..=7)) {
        c.insert(0, 0);
        c.push(1);
        let r = UPoly::from_ints(Var::X, &c);
        let n = r.degree().unwrap();
        let d = discriminant_in_x(&BiPoly::minus_q(&r)).unwrap();
        prop_assert_eq!(d.degree(), Some(n - 1));
        // Monic R: the leading coefficient in q is n^n up to sign.
        let lc = d.lc().unwrap().clone();
        let nn = num_traits::pow(rat::int(n as i64), n);
        prop_assert!(lc == nn || lc == -nn);
    }

    #[test]
    fn parse_round_trips(n in -10_000i64..10_000, d in 1i64..1000) {
        let r = rat::rat(n, d);
        prop_assert_eq!(rat::parse(&r.to_string()), Some(r));
    }
}
