use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::axisym::generating::GeneratingCurve;
use crate::axisym::quantities::{area, mean_curvature_integrals, willmore_energy};
use crate::axisym::geometry::diameter;
use crate::quad::trapezoid;
use crate::report::InequalityReport;

/// Axial extents and the deviation measures of the meridian from the axis.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AxialStats {
    /// `z(L)`.
    pub a: f64,
    /// `∫|sin θ|`.
    pub a_star: f64,
    /// Axial width `max z − min z`.
    pub a_bar: f64,
    /// `½∫|cos θ|`.
    pub b_star: f64,
    /// `(∫₀¹ √(1 − sin θ(Lt)) dt)²`.
    pub u: f64,
    /// `(∫₀¹ |cos θ(Lt)| dt)² + ∫₀¹ (sin θ(Lt))₋ dt`.
    pub v_remainder: f64,
}

fn mean_of<F: Fn(f64) -> f64>(g: &GeneratingCurve, f: F) -> f64 {
    let v: Vec<f64> = g.theta().iter().map(|&t| f(t)).collect();
    trapezoid(&v, g.h()) / g.length()
}

pub fn axial_stats(g: &GeneratingCurve) -> AxialStats {
    let l = g.length();
    let z = g.z();
    let (lo, hi) = z.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(*v), hi.max(*v)));
    let cos_mean = mean_of(g, |t| t.cos().abs());
    AxialStats {
        a: z[z.len() - 1],
        a_star: l * mean_of(g, |t| t.sin().abs()),
        a_bar: hi - lo,
        b_star: 0.5 * l * cos_mean,
        u: mean_of(g, |t| (1.0 - t.sin()).max(0.0).sqrt()).powi(2),
        v_remainder: cos_mean * cos_mean + mean_of(g, |t| (-t.sin()).max(0.0)),
    }
}

/// `∫₀¹ |γ̇ − L e_z|² dt` for the constant-speed meridian `t ↦ γ(Lt)`, which
/// is `2L² ∫₀¹ (1 − sin θ(Lt)) dt`. Zero exactly for a segment along the axis.
pub fn segment_deviation(g: &GeneratingCurve) -> f64 {
    let l = g.length();
    2.0 * l * l * mean_of(g, |t| 1.0 - t.sin())
}

/// `M/d − π > 0` together with the normalized deficits.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ToppingReport {
    pub report: InequalityReport,
    pub total_abs_h: f64,
    pub diameter: f64,
    pub u: f64,
    pub v_remainder: f64,
    /// `(M/d − π)/U`.
    pub ratio_u: f64,
    /// `(M/d − π)/V`.
    pub ratio_v: f64,
}

pub fn topping_deficit(g: &GeneratingCurve) -> ToppingReport {
    let (m, _) = mean_curvature_integrals(g);
    let (d, _) = diameter(g);
    let st = axial_stats(g);
    let report = InequalityReport::check_strict("topping", m / d, PI, 0.0).on("surface", g.n(), None);
    let deficit = report.deficit;
    ToppingReport {
        report,
        total_abs_h: m,
        diameter: d,
        u: st.u,
        v_remainder: st.v_remainder,
        ratio_u: deficit / st.u,
        ratio_v: deficit / st.v_remainder,
    }
}

/// `√A √(∫H²)` against `(π/2) d` and `π d`.
pub fn simon_report(g: &GeneratingCurve) -> Vec<InequalityReport> {
    let lhs = (area(g) * willmore_energy(g)).sqrt();
    let (d, _) = diameter(g);
    vec![
        InequalityReport::check_strict("simon-half-pi", lhs, 0.5 * PI * d, 0.0).on("surface", g.n(), None),
        InequalityReport::check_strict("simon-pi", lhs, PI * d, 0.0).on("surface", g.n(), None),
    ]
}
