use proptest::prelude::*;
use rootode_core::algebra::{rat, Rat};
use rootode_core::derivation::{abel_ode, linear_ode, ProblemSpec};
use rootode_core::numeric::{
    babylonian, cardano, first_branch_point, lagrange_series, quartic_w, series_ode_residual, track_root, vieta_trig,
    ClosedFormMethod, TrackOptions, TrackStatus,
};

/// `p = +-k/4`, `k = 2..=16`.
fn parameter() -> impl Strategy<Value = Rat> {
    (2i64..=16, prop::bool::ANY).prop_map(|(k, neg)| rat::rat(if neg { -k } else { k }, 4))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn tracked_residual_is_small(n in 2usize..=6, p in parameter()) {
        let abel = abel_ode(&ProblemSpec::trinomial(n, p).unwrap()).unwrap();
        let q = first_branch_point(&abel.denominator, 1e6).map_or(2.0, |qs| 0.8 * qs);
        let t = track_root(&abel, q, &TrackOptions::default());
        prop_assert_eq!(t.status, TrackStatus::Ok);
        prop_assert!(t.residual <= 1e-10, "{:?}", t);
    }

    #[test]
    fn tracked_root_matches_closed_forms(n in 2usize..=4, p in parameter(), frac in -0.8f64..0.8) {
        let pf = rat::to_f64(&p);
        let abel = abel_ode(&ProblemSpec::trinomial(n, p).unwrap()).unwrap();
        let forward = first_branch_point(&abel.denominator, 1e6).unwrap_or(f64::INFINITY);
        let backward = first_branch_point(&abel.denominator, -1e6).map_or(f64::INFINITY, f64::abs);
        let radius = forward.min(backward).min(2.0 / 0.8);
        let q = frac * radius;
        let t = track_root(&abel, q, &TrackOptions::default());
        prop_assert_eq!(t.status, TrackStatus::Ok);
        let oracles: Vec<f64> = match n {
            2 => vec![babylonian(pf, q).unwrap().value],
            3 if pf > 0.0 => vec![cardano(pf, q).unwrap().value],
            3 => vec![vieta_trig(pf, q).unwrap().value],
            _ => vec![
                quartic_w(pf, q).unwrap().value,
                rootode_core::numeric::closed_form_root(4, pf, q, ClosedFormMethod::Ferrari).unwrap().value,
            ],
        };
        for o in oracles {
            prop_assert!((t.x - o).abs() <= 1e-9, "n={} p={} q={} tracked={} oracle={}", n, pf, q, t.x, o);
        }
    }
}

#[test]
fn series_annihilation_for_trinomials() {
    for n in 3..=6 {
        for p in [rat::int(1), rat::int(2), rat::int(-1), rat::rat(1, 2)] {
            let spec = ProblemSpec::trinomial(n, p.clone()).unwrap();
            let ode = linear_ode(&spec).unwrap();
            let s = lagrange_series(&spec, 2 * n + 6).unwrap();
            let r = series_ode_residual(&ode, &s).unwrap();
            assert!(r.is_zero(), "n = {n}, p = {p}: {:?}", r.coeffs);
        }
    }
}

#[test]
fn cubic_branch_point_location() {
    let abel = abel_ode(&ProblemSpec::trinomial(3, rat::int(-1)).unwrap()).unwrap();
    let qs = first_branch_point(&abel.denominator, 1.0).unwrap();
    assert!((qs - (4.0f64 / 27.0).sqrt()).abs() <= 1e-10);
}
