use std::f64::consts::{FRAC_PI_2, PI};

use proptest::prelude::*;
use surfineq::axisym::families::extrapolate_mollified;
use surfineq::axisym::geometry::diameter_brute_force;
use surfineq::axisym::{
    axial_stats, diameter, generating_curve, segment_deviation, simon_report, surface_quantities, topping_deficit, width, Family,
    SingularRevolvedBody,
};
use surfineq::curve::AngleFunction;
use surfineq::Error;

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

fn sphere(n: usize) -> surfineq::axisym::GeneratingCurve {
    Family::Sphere { r: 1.0 }.build(n, None).unwrap().curve
}

#[test]
fn validation_outcomes() {
    assert!(generating_curve(AngleFunction::from_fn(3.0 * PI, 256, |s| s / 3.0).unwrap()).is_ok());
    let flat = generating_curve(AngleFunction::from_fn(1.0, 64, |_| 0.0).unwrap());
    assert!(matches!(flat, Err(Error::BadPoleTangents { .. })));
    // clockwise semicircle: z(L) < 0
    let down = generating_curve(AngleFunction::from_fn(PI, 256, |s| -s).unwrap());
    assert!(matches!(down, Err(Error::Orientation(_))));
    // the profile swings back across the axis before the top pole
    let pinched = generating_curve(AngleFunction::from_fn(PI, 256, |s| s + 2.5 * (2.0 * s).sin()).unwrap());
    assert!(matches!(pinched, Err(Error::PinchedProfile { .. })), "{pinched:?}");
}

#[test]
fn dumbbell_with_overhang_is_valid() {
    let s = Family::Dumbbell { neck: 0.3, bulge: 1.0 }.build(4096, None).unwrap();
    let th = s.curve.theta();
    assert!(th.iter().any(|t| t.sin() < -0.2));
    assert!(s.curve.x()[1..4096].iter().all(|x| *x > 0.0));
    let neck = s.curve.x()[2048];
    assert!((neck - 0.3).abs() < 1e-3, "{neck}");
    assert!(matches!(
        Family::Dumbbell { neck: 0.0, bulge: 1.0 }.build(256, None),
        Err(Error::Construction(_))
    ));
}

#[test]
fn unit_sphere_identities() {
    let q = surface_quantities(&sphere(4096));
    let four_pi = 4.0 * PI;
    for (v, e) in [
        (q.area, four_pi),
        (q.volume, four_pi / 3.0),
        (q.total_h, four_pi),
        (q.total_abs_h, four_pi),
        (q.willmore, four_pi),
        (q.diameter, 2.0),
        (q.iso_ratio, 6.0 * PI.sqrt()),
        (q.e, 3.0),
        (q.e_prime, 1.5 / PI.sqrt()),
    ] {
        assert!(rel(v, e) < 1e-5, "{v} vs {e}");
    }
}

/// Cylinder of radius ε and length 1 plus two hemispherical caps.
fn cigar_closed_forms(eps: f64) -> (f64, f64, f64, f64) {
    let willmore = PI / (2.0 * eps) + 4.0 * PI;
    let total_h = PI + 4.0 * PI * eps;
    let area = 2.0 * PI * eps + 4.0 * PI * eps * eps;
    let volume = PI * eps * eps + 4.0 / 3.0 * PI * eps.powi(3);
    (willmore, total_h, area, volume)
}

#[test]
fn cigar_closed_forms_match() {
    let eps = 0.01;
    let q = surface_quantities(&Family::Cigar { eps }.build(4096, None).unwrap().curve);
    let (w, th, a, v) = cigar_closed_forms(eps);
    assert!((w - 169.646).abs() < 1e-3 && (th - 3.26726).abs() < 1e-5);
    for (got, want) in [(q.willmore, w), (q.total_h, th), (q.area, a), (q.volume, v)] {
        assert!(rel(got, want) < 1e-3, "{got} vs {want}");
    }
}

#[test]
fn thin_cigar_e_near_four() {
    let q = surface_quantities(&Family::Cigar { eps: 1e-3 }.build(8192, None).unwrap().curve);
    assert!((q.e - 4.0).abs() < 0.2, "{}", q.e);
}

#[test]
fn diameters() {
    assert!((diameter(&sphere(4096)).0 - 2.0).abs() < 1e-5);
    let cigar = Family::Cigar { eps: 0.01 }.build(4096, None).unwrap().curve;
    assert!((diameter(&cigar).0 - 1.02).abs() < 1e-4);
}

/// Farthest pair over points `(x cos φ, x sin φ, z)` on a coarse surface sampling.
fn surface_brute_force(g: &surfineq::axisym::GeneratingCurve, phis: usize) -> f64 {
    let mut pts = Vec::new();
    for (x, z) in g.x().iter().zip(g.z()) {
        for k in 0..phis {
            let phi = 2.0 * PI * k as f64 / phis as f64;
            pts.push([x * phi.cos(), x * phi.sin(), *z]);
        }
    }
    let mut best: f64 = 0.0;
    for (i, p) in pts.iter().enumerate() {
        for q in &pts[i + 1..] {
            best = best.max((p[0] - q[0]).powi(2) + (p[1] - q[1]).powi(2) + (p[2] - q[2]).powi(2));
        }
    }
    best.sqrt()
}

#[test]
fn dumbbell_diameter_against_surface_sampling() {
    let g = Family::Dumbbell { neck: 0.4, bulge: 0.8 }.build(96, None).unwrap().curve;
    let brute = surface_brute_force(&g, 48);
    assert!((diameter(&g).0 - brute).abs() < 1e-3, "{} vs {brute}", diameter(&g).0);
    assert!((diameter(&g).0 - diameter_brute_force(g.x(), g.z())).abs() < 1e-12);
}

#[test]
fn widths() {
    let s = sphere(4096);
    for k in 0..=12 {
        assert!((width(&s, k as f64 * PI / 12.0) - 2.0).abs() < 1e-6);
    }
    let table_max = (0..=720).map(|k| width(&s, k as f64 * PI / 720.0)).fold(0.0, f64::max);
    assert!((table_max - diameter(&s).0).abs() < 1e-5);
    let eps = 0.01;
    let c = Family::Cigar { eps }.build(4096, None).unwrap().curve;
    assert!((width(&c, 0.0) - (1.0 + 2.0 * eps)).abs() < 1e-5, "{}", width(&c, 0.0));
    assert!((width(&c, FRAC_PI_2) - 2.0 * eps).abs() < 1e-5, "{}", width(&c, FRAC_PI_2));
}

#[test]
fn sphere_u_value() {
    let st = axial_stats(&sphere(4096));
    let expected = (4.0 * (2f64.sqrt() - 1.0) / PI).powi(2);
    assert!((expected - 0.27811).abs() < 1e-4);
    assert!((st.u - expected).abs() < 1e-4);
}

#[test]
fn double_cone_u_value() {
    let eps = 0.01;
    let fam = Family::Gamma { h: 1.0, a: 0.0, a_mid: eps };
    let u = extrapolate_mollified(&fam, 8192, 4e-3, |s| vec![axial_stats(&s.curve).u]).unwrap()[0];
    let theta_eps = (2.0 * eps).atan();
    let expected = 1.0 - theta_eps.cos();
    assert!(rel(u, expected) < 0.05, "{u} vs {expected}");
}

#[test]
fn convex_axial_equalities() {
    for fam in [Family::Sphere { r: 1.0 }, Family::Cigar { eps: 0.05 }, Family::Spheroid { a: 2.0, c: 1.0 }] {
        let st = axial_stats(&fam.build(2048, None).unwrap().curve);
        assert!((st.a - st.a_star).abs() < 1e-8 && (st.a - st.a_bar).abs() < 1e-8);
        assert!((2.0 * st.a_bar - st.a_star - st.a).abs() < 1e-8);
    }
}

#[test]
fn topping_on_sphere_and_cigars() {
    let t = topping_deficit(&sphere(4096));
    assert!((t.report.lhs - 2.0 * PI).abs() < 1e-4 && (t.report.deficit - PI).abs() < 1e-4);
    let ratios: Vec<f64> = [0.04, 0.02, 0.01]
        .iter()
        .map(|&eps| topping_deficit(&Family::Cigar { eps }.build(8192, None).unwrap().curve).ratio_u)
        .collect();
    for w in ratios.windows(2) {
        let growth = w[1] / w[0];
        assert!((1.7..=2.3).contains(&growth), "{ratios:?}");
    }
}

#[test]
fn double_cone_topping_ratio() {
    let eps = 0.01;
    let fam = Family::Gamma { h: 1.0, a: 0.0, a_mid: eps };
    let v = extrapolate_mollified(&fam, 8192, 4e-3, |s| {
        let t = topping_deficit(&s.curve);
        vec![t.report.deficit, t.u]
    })
    .unwrap();
    assert!(rel(v[0] / v[1], 2.0 * PI) < 0.08, "{}", v[0] / v[1]);
}

#[test]
fn simon_examples() {
    let r = simon_report(&sphere(4096));
    assert!((r[1].lhs - 4.0 * PI).abs() < 1e-4 && r.iter().all(|x| x.pass));
    let c = simon_report(&Family::Cigar { eps: 0.01 }.build(4096, None).unwrap().curve);
    assert!((c[1].lhs - 3.30).abs() < 0.01 && (c[1].rhs - PI * 1.02).abs() < 1e-3);
    assert!(c.iter().all(|x| x.pass));
}

#[test]
fn gamma_cylinder_matches_singular_formula() {
    let s = Family::Gamma { h: 1.0, a: 0.1, a_mid: 0.1 }.build(4096, Some(1e-3)).unwrap();
    let q = surface_quantities(&s.curve);
    let exact = PI * (1.0 + 0.1 * PI);
    assert!((exact - 4.12844).abs() < 2e-4);
    assert!((q.total_abs_h - exact).abs() < 1e-3, "{}", q.total_abs_h);
    assert!((s.singular.unwrap().total_abs_h - exact).abs() < 1e-12);
}

#[test]
fn singular_formula_examples() {
    let seg = SingularRevolvedBody::new(1.5, 0.0, 0.0).unwrap();
    assert!((seg.exact_singular_m().0 - 1.5 * PI).abs() < 1e-14);
    let eps = 0.02;
    let cone = SingularRevolvedBody::new(1.0, 0.0, eps).unwrap();
    let tc = (2.0 * eps).atan();
    assert!((cone.exact_singular_m().0 - (PI + 2.0 * PI * tc * eps)).abs() < 1e-14);
}

#[test]
fn mollification_converges_linearly() {
    for fam in [Family::Gamma { h: 1.0, a: 0.2, a_mid: 0.5 }, Family::BrokenLine { eps: 0.2 }] {
        let errs: Vec<f64> = [1e-2, 5e-3, 2.5e-3]
            .iter()
            .map(|&d| {
                let s = fam.build(8192, Some(d)).unwrap();
                (surface_quantities(&s.curve).total_abs_h - s.singular.unwrap().total_abs_h).abs()
            })
            .collect();
        for w in errs.windows(2) {
            let r = w[0] / w[1];
            assert!((1.6..=2.5).contains(&r), "{fam:?}: {errs:?}");
        }
    }
}

#[test]
fn total_h_forms_agree() {
    for fam in [
        Family::Dumbbell { neck: 0.3, bulge: 1.0 },
        Family::Spheroid { a: 1.0, c: 3.0 },
        Family::RandomLipschitz { seed: 3, k: 8.0 },
    ] {
        let q = surface_quantities(&fam.build(4096, None).unwrap().curve);
        assert!((q.total_h - q.total_h_g_form).abs() < 1e-8, "{fam:?}");
        assert!(q.total_abs_h >= q.total_h.abs());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn scale_invariance(lambda in 0.3f64..4.0, seed in 0u64..40) {
        let g = Family::RandomLipschitz { seed, k: 6.0 }.build(1024, None).unwrap().curve;
        let gs = g.scaled(lambda).unwrap();
        let (q, qs) = (surface_quantities(&g), surface_quantities(&gs));
        let close = |a: f64, b: f64| (a - b).abs() <= 1e-8 * b.abs().max(1e-12);
        prop_assert!(close(qs.area, lambda * lambda * q.area));
        prop_assert!(close(qs.volume, lambda.powi(3) * q.volume));
        prop_assert!(close(qs.total_abs_h, lambda * q.total_abs_h));
        prop_assert!(close(qs.willmore, q.willmore));
        prop_assert!(close(qs.diameter, lambda * q.diameter));
        prop_assert!(close(qs.iso_ratio, q.iso_ratio) && close(qs.e, q.e) && close(qs.e_prime, q.e_prime));
        let (st, sts) = (axial_stats(&g), axial_stats(&gs));
        prop_assert!(close(sts.u, st.u) && close(sts.v_remainder, st.v_remainder));
    }

    #[test]
    fn axial_width_bounds(seed in 0u64..200) {
        let g = Family::RandomLipschitz { seed, k: 8.0 }.build(1024, None).unwrap().curve;
        let st = axial_stats(&g);
        prop_assert!(2.0 * st.a_bar <= st.a_star + st.a + 1e-12);
        prop_assert!(st.a_bar <= st.a_star + 1e-12 && st.a <= st.a_star + 1e-12);
        prop_assert!((0.0..=4.0).contains(&st.u) && (0.0..=2.0).contains(&st.v_remainder));
        prop_assert!(diameter(&g).0 >= st.a_bar - 1e-10);
        let one_sign = g.theta().iter().all(|t| t.sin() >= 0.0);
        prop_assert_eq!(one_sign, (2.0 * st.a_bar - st.a_star - st.a).abs() < 1e-12);
    }
}

#[test]
fn segment_deviation_values() {
    let dev = segment_deviation(&sphere(4096));
    assert!(rel(dev, 2.0 * PI * (PI - 2.0)) < 1e-6, "{dev}");
    // both cone flanks make angle θ_ε with the axis
    let eps: f64 = 0.02;
    let fam = Family::Gamma { h: 1.0, a: 0.0, a_mid: eps };
    let v = extrapolate_mollified(&fam, 8192, 4e-3, |s| vec![segment_deviation(&s.curve)]).unwrap()[0];
    let l = 2.0 * (eps * eps + 0.25).sqrt();
    let expected = 2.0 * l * l * (1.0 - (2.0 * eps).atan().cos());
    assert!(rel(v, expected) < 0.02, "{v} vs {expected}");
}
