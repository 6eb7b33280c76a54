use num_complex::Complex64;
use proptest::prelude::*;

use selfsim::algebra::{integrate_box, levi_civita, BoxRegion, GaussianRational, MultiPoly, Scalar, MAX_VARS};
use selfsim::kinematics::{four_velocity, gen_length, proper_time, KinematicsConfig, Mode, Worldline};
use selfsim::polytopes::{n_platonic, n_star_inclusive};

fn gaussian() -> impl Strategy<Value = GaussianRational> {
    (-20i64..=20, 1i64..=9, -20i64..=20, 1i64..=9).prop_map(|(a, b, c, d)| GaussianRational::from_parts(a, b, c, d))
}

fn poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((prop::array::uniform4(0u32..=3), gaussian()), 0..5)
        .prop_map(|terms| MultiPoly::from_terms(terms.into_iter().map(|(e, c)| {
            let mut exps = [0u32; MAX_VARS];
            exps[..4].copy_from_slice(&e);
            (exps, c)
        })))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn division_inverts_multiplication(a in gaussian(), b in gaussian()) {
        prop_assume!(!b.is_zero());
        let prod = &a * &b;
        prop_assert_eq!(prod.checked_div(&b).unwrap(), a);
    }

    #[test]
    fn leibniz_rule(p in poly(), r in poly(), axis in 1usize..=4) {
        let lhs = (&p * &r).partial_derivative(axis).unwrap();
        let rhs = &(&p.partial_derivative(axis).unwrap() * &r) + &(&p * &r.partial_derivative(axis).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn antiderivative_is_right_inverse(p in poly(), axis in 1usize..=4) {
        prop_assert_eq!(p.antiderivative(axis).unwrap().partial_derivative(axis).unwrap(), p);
    }

    #[test]
    fn partial_derivatives_commute(p in poly(), a in 1usize..=4, b in 1usize..=4) {
        let ab = p.partial_derivative(a).unwrap().partial_derivative(b).unwrap();
        let ba = p.partial_derivative(b).unwrap().partial_derivative(a).unwrap();
        prop_assert_eq!(ab, ba);
    }

    #[test]
    fn box_integral_is_linear(p in poly(), r in poly(), c in gaussian()) {
        let region = BoxRegion::from_ints(&[(-1, 2), (0, 1), (1, 3), (-2, 0)]).unwrap();
        let lhs = integrate_box(&(&p + &r.scale(&c)), &region).unwrap();
        let rhs = &integrate_box(&p, &region).unwrap() + &(&c * &integrate_box(&r, &region).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn levi_civita_flips_under_transposition(perm in Just(vec![1usize, 2, 3, 4]).prop_shuffle(), i in 0usize..4, j in 0usize..4) {
        prop_assume!(i != j);
        let eps = levi_civita(4).unwrap();
        let mut swapped = perm.clone();
        swapped.swap(i, j);
        prop_assert_eq!(eps.value(&swapped), -eps.value(&perm));
        prop_assert_eq!(eps.value(&perm).abs(), 1);
    }

    #[test]
    fn gen_length_squares_back(parts in prop::collection::vec((-5.0f64..5.0, -5.0f64..5.0), 1..=4)) {
        let x: Vec<Complex64> = parts.iter().map(|&(a, b)| Complex64::new(a, b)).collect();
        let l = gen_length(&x);
        let s: Complex64 = x.iter().map(|z| z * z).sum();
        prop_assert!((l * l - s).norm() <= 1e-12 * (1.0 + s.norm()));
        prop_assert!(l.re > 0.0 || (l.re == 0.0 && l.im >= 0.0));
    }

    #[test]
    fn uniform_motion_proper_time(vx in -0.6f64..0.6, vy in -0.5f64..0.5, vz in -0.5f64..0.5, c in 1.0f64..3.0) {
        let cfg = KinematicsConfig::new(c, 1.0, 1.0).unwrap();
        let w = Worldline::uniform([vx, vy, vz], 0.0, 4.0, 50, Mode::D4).unwrap();
        let t = proper_time(&w, &cfg).unwrap();
        let factor = (1.0 - (vx * vx + vy * vy + vz * vz) / (c * c)).sqrt();
        prop_assert!((t.last().unwrap() - 4.0 * factor).abs() < 1e-12);
        for v in four_velocity(&w, &cfg).unwrap() {
            prop_assert!((v.length() - Complex64::new(0.0, c)).norm() < 1e-12);
        }
    }

    #[test]
    fn star_count_never_below_platonic(d in 0i64..200) {
        let (p, s) = (n_platonic(d).unwrap(), n_star_inclusive(d).unwrap());
        match (p.finite(), s.finite()) {
            (Some(p), Some(s)) => prop_assert!(s >= p),
            (p, s) => prop_assert!(p.is_none() && s.is_none()),
        }
    }
}
