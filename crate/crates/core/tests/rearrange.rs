use std::f64::consts::PI;

use proptest::prelude::*;
use surfineq::axisym::{generating_curve, Family};
use surfineq::curve::AngleFunction;
use surfineq::rearrange::{
    comparison_report, encloses, first_rearrangement, fold_curve, restricted_rearrangement, second_rearrangement,
};

fn corpus() -> Vec<surfineq::axisym::GeneratingCurve> {
    (0..100).map(|seed| Family::RandomLipschitz { seed, k: 8.0 }.build(4096, None).unwrap().curve).collect()
}

#[test]
fn fold_is_identity_on_range_zero_pi() {
    let a = AngleFunction::from_fn(2.0, 128, |s| PI * s / 2.0).unwrap();
    assert_eq!(first_rearrangement(&a).unwrap(), a);
    let b = AngleFunction::from_fn(1.0, 4, |s| -PI / 2.0 * s).unwrap();
    assert!((first_rearrangement(&b).unwrap().theta()[4] - PI / 2.0).abs() < 1e-15);
}

#[test]
fn sphere_chain_is_trivial() {
    let g = Family::Sphere { r: 1.0 }.build(4096, None).unwrap().curve;
    let r = comparison_report(&g).unwrap();
    assert!((r.original.total_abs_h - r.star.total_abs_h).abs() < 1e-8);
    assert!((r.original.diameter - r.star.diameter).abs() < 1e-8);
    assert!(r.enclosure && r.encloses_original);
    assert_eq!(r.theta_star, r.theta);
}

#[test]
fn dumbbell_chain_is_strict() {
    let g = Family::Dumbbell { neck: 0.3, bulge: 1.0 }.build(4096, None).unwrap().curve;
    let r = comparison_report(&g).unwrap();
    assert!((r.original.total_abs_h - r.sharp.total_abs_h).abs() <= 1e-6 * r.original.total_abs_h);
    assert!(r.sharp.diameter >= r.original.diameter - 1e-9);
    assert!(r.star.total_abs_h < r.sharp.total_abs_h - 1e-3);
    assert!(r.star.diameter > r.sharp.diameter + 1e-3);
    assert!(r.enclosure);
}

#[test]
fn sorted_dumbbell_preserves_endpoint() {
    let g = Family::Dumbbell { neck: 0.3, bulge: 1.0 }.build(4096, None).unwrap().curve;
    let sharp = fold_curve(&g).unwrap();
    let star = second_rearrangement(sharp.angle()).unwrap();
    let h = g.h();
    let integral = |th: &[f64], f: fn(f64) -> f64| {
        let n = th.len() - 1;
        h * (th[1..n].iter().map(|t| f(*t)).sum::<f64>() + 0.5 * (f(th[0]) + f(th[n])))
    };
    for f in [f64::cos as fn(f64) -> f64, f64::sin] {
        assert!((integral(star.theta(), f) - integral(sharp.theta(), f)).abs() < 1e-12);
    }
}

#[test]
fn restricted_rearrangement_examples() {
    let g = Family::Dumbbell { neck: 0.3, bulge: 1.0 }.build(2048, None).unwrap().curve;
    let sharp = first_rearrangement(g.angle()).unwrap();
    let star = second_rearrangement(&sharp).unwrap();
    assert_eq!(restricted_rearrangement(&sharp, sharp.length()).unwrap(), star);
    let half = restricted_rearrangement(&sharp, 0.5 * sharp.length()).unwrap();
    for (a, b) in half.theta().iter().zip(star.theta()) {
        assert!(a >= b);
    }
    let mono = AngleFunction::from_fn(2.0, 100, |s| PI * s / 2.0).unwrap();
    let r = restricted_rearrangement(&mono, 1.0).unwrap();
    assert_eq!(r.theta(), &mono.theta()[..=50]);
}

#[test]
fn sphere_enclosure_cases() {
    let s1 = Family::Sphere { r: 1.0 }.build(2048, None).unwrap().curve;
    let s11 = Family::Sphere { r: 1.1 }.build(2048, None).unwrap().curve;
    assert!(encloses(&s1, &s1).unwrap());
    assert!(!encloses(&s1, &s11).unwrap());
    let db = Family::Dumbbell { neck: 0.3, bulge: 1.0 }.build(256, None).unwrap().curve;
    assert!(encloses(&db, &s1).is_err());
}

#[test]
fn random_corpus_chain() {
    let mut worst_fold: f64 = 0.0;
    for g in corpus() {
        let r = comparison_report(&g).unwrap_or_else(|e| panic!("{e}"));
        worst_fold = worst_fold.max((r.original.total_abs_h - r.sharp.total_abs_h).abs() / r.original.total_abs_h);
        assert!(r.star.total_abs_h <= r.sharp.total_abs_h + 1e-8);
        assert!(r.original.diameter <= r.sharp.diameter + 1e-9 && r.sharp.diameter <= r.star.diameter + 1e-9);
        assert!(r.enclosure);
        assert!(r.measure_residual <= 1e-12);
        let mut a = r.theta_sharp.theta().to_vec();
        a.sort_by(f64::total_cmp);
        assert_eq!(a.as_slice(), r.theta_star.theta());
    }
    assert!(worst_fold <= 1e-6);
}

#[test]
fn corpus_in_range_encloses_original() {
    for g in corpus().into_iter().filter(|g| g.theta().iter().all(|t| (0.0..=PI).contains(t))) {
        let r = comparison_report(&g).unwrap();
        assert!(r.encloses_original);
    }
    let g = generating_curve(AngleFunction::from_fn(PI, 1024, |s| s + 0.4 * (2.0 * s).sin()).unwrap()).unwrap();
    assert!(comparison_report(&g).unwrap().encloses_original);
}

fn angle_strategy() -> impl Strategy<Value = Vec<f64>> {
    proptest::collection::vec(-7.0f64..7.0, 5..60)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn idempotence(v in angle_strategy()) {
        let a = AngleFunction::new(1.0, v).unwrap();
        let s = first_rearrangement(&a).unwrap();
        prop_assert_eq!(first_rearrangement(&s).unwrap(), s.clone());
        let t = second_rearrangement(&s).unwrap();
        prop_assert_eq!(second_rearrangement(&t).unwrap(), t.clone());
        prop_assert!(s.theta().iter().all(|x| (0.0..=PI).contains(x)));
        prop_assert!(t.theta().windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn equimeasurable(v in angle_strategy()) {
        let s = first_rearrangement(&AngleFunction::new(1.0, v).unwrap()).unwrap();
        let t = second_rearrangement(&s).unwrap();
        let mut a = s.theta().to_vec();
        a.sort_by(f64::total_cmp);
        prop_assert_eq!(a.as_slice(), t.theta());
    }

    #[test]
    fn order_preserving(v in proptest::collection::vec((0.0f64..PI, 0.0f64..1.0), 5..60)) {
        let lo: Vec<f64> = v.iter().map(|p| p.0).collect();
        let hi: Vec<f64> = v.iter().map(|p| (p.0 + p.1).min(PI)).collect();
        let a = second_rearrangement(&AngleFunction::new(1.0, lo).unwrap()).unwrap();
        let b = second_rearrangement(&AngleFunction::new(1.0, hi).unwrap()).unwrap();
        prop_assert!(a.theta().iter().zip(b.theta()).all(|(x, y)| x <= y));
    }
}
