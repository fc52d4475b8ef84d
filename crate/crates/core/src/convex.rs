//! Widths, degeneracy, mean width and radii of convex bodies of revolution,
//! and the inequality suite relating them to `∫H`, `∫H²`, area and volume.
//!
//! For a body of revolution the width in a direction at angle `α` from the
//! axis is `b(α) = max(x sin α + z cos α) − min(−x sin α + z cos α)`, and
//! `b(α) = b(π − α)`. Directions orthogonal to a direction at angle `α₀` make
//! an angle `β` with the axis where `cos β = cos ψ sin α₀`, `ψ ∈ [0, π/2]`.

use serde::{Deserialize, Serialize};
use std::f64::consts::{FRAC_PI_2, PI};

use crate::axisym::generating::GeneratingCurve;
use crate::axisym::geometry::width;
use crate::axisym::quantities::{surface_quantities, two_h_cells};
use crate::curve::constants::constants;
use crate::error::{Error, Result};
use crate::quad::{golden_max, golden_min, simpson};
use crate::report::InequalityReport;

/// Number of intervals in the width table over `[0, π]`.
pub const WIDTH_GRID: usize = 720;
/// Samples of the orthogonal family in the degeneracy.
pub const ORTHOGONAL_SAMPLES: usize = 360;
/// Relative tolerance for identities.
pub const IDENTITY_TOL: f64 = 1e-6;
/// Relative tolerance for quadrature-limited inequalities.
pub const QUADRATURE_TOL: f64 = 1e-4;
/// Relative tolerance of the mean-width representation of `∫H`.
pub const MEAN_WIDTH_TOL: f64 = 1e-3;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Degeneracy {
    pub value: f64,
    /// Axis angle of a diameter direction.
    pub alpha0: f64,
    /// Axis angle of the narrowest orthogonal direction.
    pub alpha_min: f64,
    pub diameter_width: f64,
    pub min_orthogonal_width: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConvexMetrics {
    pub degeneracy: Degeneracy,
    pub mean_width: f64,
    pub total_h_via_width: f64,
    pub r_in: f64,
    pub r_out: f64,
    pub r_ratio: f64,
    pub alpha: Vec<f64>,
    pub widths: Vec<f64>,
}

fn require_convex(g: &GeneratingCurve) -> Result<()> {
    if g.is_convex() {
        Ok(())
    } else {
        Err(Error::Precondition("generating curve is not convex".into()))
    }
}

pub fn width_table(g: &GeneratingCurve) -> (Vec<f64>, Vec<f64>) {
    let step = PI / WIDTH_GRID as f64;
    let alpha: Vec<f64> = (0..=WIDTH_GRID).map(|k| k as f64 * step).collect();
    let widths = alpha.iter().map(|&a| width(g, a)).collect();
    (alpha, widths)
}

pub fn degeneracy(g: &GeneratingCurve) -> Result<Degeneracy> {
    require_convex(g)?;
    let (alpha, widths) = width_table(g);
    let step = alpha[1];
    let k = (0..alpha.len()).fold(0, |best, k| if widths[k] > widths[best] { k } else { best });
    let (lo, hi) = ((alpha[k] - step).max(0.0), (alpha[k] + step).min(PI));
    let (mut a0, mut b0) = golden_max(|a| width(g, a), lo, hi, 1e-12);
    if widths[k] >= b0 {
        a0 = alpha[k];
        b0 = widths[k];
    }
    let a0 = if a0 > FRAC_PI_2 { PI - a0 } else { a0 };
    let (alpha_min, bmin) = if a0 == 0.0 {
        (FRAC_PI_2, width(g, FRAC_PI_2))
    } else {
        let orth = |psi: f64| width(g, (psi.cos() * a0.sin()).clamp(-1.0, 1.0).acos());
        let dpsi = FRAC_PI_2 / ORTHOGONAL_SAMPLES as f64;
        let j = (0..=ORTHOGONAL_SAMPLES).fold(0, |best, j| {
            if orth(j as f64 * dpsi) < orth(best as f64 * dpsi) {
                j
            } else {
                best
            }
        });
        let psi_lo = (j as f64 - 1.0).max(0.0) * dpsi;
        let psi_hi = (j as f64 + 1.0).min(ORTHOGONAL_SAMPLES as f64) * dpsi;
        let (psi, v) = golden_min(orth, psi_lo, psi_hi, 1e-12);
        let (psi, v) = if orth(j as f64 * dpsi) <= v { (j as f64 * dpsi, orth(j as f64 * dpsi)) } else { (psi, v) };
        ((psi.cos() * a0.sin()).acos(), v)
    };
    Ok(Degeneracy { value: b0 / bmin, alpha0: a0, alpha_min, diameter_width: b0, min_orthogonal_width: bmin })
}

/// `B = ½∫₀^π b(α) sin α dα` by Simpson's rule on the width table.
pub fn mean_width(g: &GeneratingCurve) -> f64 {
    let (alpha, widths) = width_table(g);
    let v: Vec<f64> = alpha.iter().zip(&widths).map(|(a, b)| b * a.sin()).collect();
    0.5 * simpson(&v, alpha[1])
}

/// `(B, 2πB)`, failing if `2πB` and `∫H` disagree beyond `1e−3` relative.
pub fn mean_width_total_h(g: &GeneratingCurve) -> Result<(f64, f64)> {
    require_convex(g)?;
    let b = mean_width(g);
    let total = surface_quantities(g).total_h;
    let gap = (2.0 * PI * b - total).abs() / total;
    if gap > MEAN_WIDTH_TOL {
        return Err(Error::Verification { stage: "2πB = ∫H".into(), residual: gap });
    }
    Ok((b, 2.0 * PI * b))
}

fn segment_distance(px: f64, pz: f64, a: (f64, f64), b: (f64, f64)) -> f64 {
    let (dx, dz) = (b.0 - a.0, b.1 - a.1);
    let len2 = dx * dx + dz * dz;
    let t = if len2 > 0.0 { (((px - a.0) * dx + (pz - a.1) * dz) / len2).clamp(0.0, 1.0) } else { 0.0 };
    (px - a.0 - t * dx).hypot(pz - a.1 - t * dz)
}

/// Circumradius and inradius with centres on the axis.
pub fn radii(g: &GeneratingCurve) -> Result<(f64, f64)> {
    require_convex(g)?;
    let (x, z) = (g.x(), g.z());
    let (zlo, zhi) = (z[0], z[z.len() - 1]);
    let far = |c: f64| x.iter().zip(z).map(|(x, z)| x.hypot(z - c)).fold(0.0, f64::max);
    let near = |c: f64| {
        (0..x.len() - 1)
            .map(|i| segment_distance(0.0, c, (x[i], z[i]), (x[i + 1], z[i + 1])))
            .fold(f64::INFINITY, f64::min)
    };
    let tol = 1e-13 * (zhi - zlo).max(1e-300);
    let (_, r_out) = golden_min(far, zlo, zhi, tol);
    let (_, r_in) = golden_max(near, zlo, zhi, tol);
    Ok((r_in, r_out))
}

pub fn convex_metrics(g: &GeneratingCurve) -> Result<ConvexMetrics> {
    let degeneracy = degeneracy(g)?;
    let (mean_width, total_h_via_width) = mean_width_total_h(g)?;
    let (r_in, r_out) = radii(g)?;
    let (alpha, widths) = width_table(g);
    Ok(ConvexMetrics {
        degeneracy,
        mean_width,
        total_h_via_width,
        r_in,
        r_out,
        r_ratio: r_out / r_in,
        alpha,
        widths,
    })
}

/// One interior sample of the slicing identity `2H = k sin θ_ω + κ_ω`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SliceSample {
    pub s: f64,
    pub height: f64,
    /// `2H` from the sampled positions alone.
    pub two_h: f64,
    pub k_slice: f64,
    pub sin_theta_omega: f64,
    pub kappa_omega: f64,
    pub residual: f64,
}

/// Compares `2H`, computed from positions (circumcircle curvature of three
/// consecutive profile points and the chord direction), with
/// `sin θ / x + θ_s` from the angle function, at every interior sample.
pub fn slicing_residuals(g: &GeneratingCurve) -> Vec<SliceSample> {
    let (x, z, th) = (g.x(), g.z(), g.theta());
    let h = g.h();
    let ts = g.angle().derivative();
    (1..g.n())
        .map(|i| {
            let (a, b, c) = ((x[i - 1], z[i - 1]), (x[i], z[i]), (x[i + 1], z[i + 1]));
            let ab = (b.0 - a.0).hypot(b.1 - a.1);
            let bc = (c.0 - b.0).hypot(c.1 - b.1);
            let ac = (c.0 - a.0).hypot(c.1 - a.1);
            let cross = (b.0 - a.0) * (c.1 - b.1) - (b.1 - a.1) * (c.0 - b.0);
            let kappa = 2.0 * cross / (ab * bc * ac);
            let two_h = kappa + (c.1 - a.1) / ac / x[i];
            let k_slice = 1.0 / x[i];
            let sin_theta_omega = th[i].sin();
            let kappa_omega = ts[i];
            SliceSample {
                s: i as f64 * h,
                height: z[i],
                two_h,
                k_slice,
                sin_theta_omega,
                kappa_omega,
                residual: (two_h - (k_slice * sin_theta_omega + kappa_omega)).abs(),
            }
        })
        .collect()
}

/// `∫H^p` by the midpoint rule on cells.
pub fn h_power_integral(g: &GeneratingCurve, p: f64) -> f64 {
    let x = g.x();
    two_h_cells(g)
        .iter()
        .enumerate()
        .map(|(i, t)| (0.5 * t).abs().powf(p) * 0.5 * (x[i] + x[i + 1]))
        .sum::<f64>()
        * 2.0
        * PI
        * g.h()
}

/// The convex inequality suite; tolerances are doubled for mollified profiles.
pub fn convex_inequality_suite(g: &GeneratingCurve, p_list: &[f64], mollified: bool) -> Result<Vec<InequalityReport>> {
    require_convex(g)?;
    let q = surface_quantities(g);
    let m = convex_metrics(g)?;
    let dg = m.degeneracy.value;
    let scale = if mollified { 2.0 } else { 1.0 };
    let (qt, it) = (QUADRATURE_TOL * scale, IDENTITY_TOL * scale);
    let av = q.area / q.volume;
    let mut out = vec![
        InequalityReport::check_relative("willmore-vs-mean-curvature", 108.0 * PI * q.willmore, av * q.total_h, qt),
        InequalityReport::record("E-le-4", q.e, 4.0),
        InequalityReport::check_relative("diameter-degeneracy", 36.0 * dg, q.diameter * av, qt),
        InequalityReport::check_relative("minkowski", q.total_h, (4.0 * PI * q.area).sqrt(), qt),
        InequalityReport::check_relative("mean-curvature-diameter", 2.0 * PI * q.diameter, q.total_h, qt),
        InequalityReport::check_relative("area-volume-mean-curvature", q.area * q.area, 3.0 * q.volume * q.total_h, qt),
        InequalityReport::check_relative("isoperimetric-willmore", 54.0 * PI.sqrt() * q.willmore, q.iso_ratio, qt),
        InequalityReport::identity("mean-width", m.total_h_via_width, q.total_h, MEAN_WIDTH_TOL),
        InequalityReport::identity("total-h-forms", q.total_h, q.total_h_g_form, it),
        InequalityReport::record("E-prime", q.e_prime, 1.5 / PI.sqrt()),
        InequalityReport::record("D-over-dAV", dg, q.diameter * av),
        InequalityReport::record("D-over-HAV", dg, q.total_h * av),
        InequalityReport::record("I-over-D", q.iso_ratio, dg),
        InequalityReport::record("D-over-I2", dg, q.iso_ratio * q.iso_ratio),
        InequalityReport::record("R-over-D", m.r_ratio, dg),
    ];
    for &p in p_list {
        let c = constants(p)?;
        let lhs = q.diameter.powf(p - 2.0) * h_power_integral(g, p);
        let rhs = c.c_p * dg.powf(p - 1.0);
        out.push(InequalityReport::check_strict(&format!("diameter-degeneracy-p{p}"), lhs, rhs, qt * rhs));
    }
    Ok(out)
}
