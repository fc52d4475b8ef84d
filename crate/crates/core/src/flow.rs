//! Single explicit steps of mean curvature flow and first-variation checks.
//!
//! Each profile point moves along the inward meridian normal
//! `N = (−sin θ, cos θ)` with speed `H` (average convention) or `2H`. With
//! normal speed `v`, `dA/dt = −∫ 2H v` and `dV/dt = −∫ v`, so for `v = H`
//! `dA/dt = −2∫H²`, `dV/dt = −∫H`, and
//! `d/dt (A^{3/2}/V) = −(A^{1/2}/V)(3∫H² − (A/V)∫H)`;
//! under `v = 2H` both rates double. After the step the polygon is
//! resampled to uniform arclength and closed on the axis.

use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::axisym::generating::{validate_generating_curve, GeneratingCurve};
use crate::axisym::quantities::{area, surface_quantities, volume};
use crate::curve::angle::{gradient, AngleFunction};
use crate::curve::parametric::unwrap;
use crate::error::{Error, Result};
use crate::quad::trapezoid;

/// Relative agreement required between the analytic and difference rates.
pub const RATE_REL_TOL: f64 = 0.05;
/// Absolute floor of the agreement band (for rates near zero).
pub const RATE_ABS_TOL: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    /// Normal speed equal to the average of the principal curvatures.
    Average,
    /// Normal speed equal to their sum.
    Sum,
}

/// `2H` at the grid nodes; within the pole radius `sin θ / x` is replaced by `θ_s`.
fn nodal_two_h(g: &GeneratingCurve) -> Vec<f64> {
    let ts = g.angle().derivative();
    let (x, th) = (g.x(), g.theta());
    let (h, l, dp) = (g.h(), g.length(), g.delta_pole());
    (0..=g.n())
        .map(|i| {
            let s = i as f64 * h;
            if s <= dp || s >= l - dp || x[i] <= 0.0 {
                2.0 * ts[i]
            } else {
                ts[i] + th[i].sin() / x[i]
            }
        })
        .collect()
}

fn close_on_axis(theta: &mut [f64], h: f64) -> Result<()> {
    let n = theta.len() - 1;
    let bump: Vec<f64> = (0..=n).map(|i| (PI * i as f64 / n as f64).sin().powi(2)).collect();
    let mut c = 0.0;
    let base = theta.to_vec();
    let tol = 1e-13 * n as f64 * h;
    for _ in 0..60 {
        let th: Vec<f64> = base.iter().zip(&bump).map(|(b, w)| b + c * w).collect();
        let f = trapezoid(&th.iter().map(|t| t.cos()).collect::<Vec<_>>(), h);
        let df = -trapezoid(&th.iter().zip(&bump).map(|(t, w)| t.sin() * w).collect::<Vec<_>>(), h);
        let step = f / df;
        if f.abs() < tol {
            theta.copy_from_slice(&th);
            return Ok(());
        }
        c -= step;
        if !c.is_finite() {
            break;
        }
    }
    Err(Error::StepSize("resampled profile does not close on the axis".into()))
}

/// Moves the profile by `τ·v·N` and resamples it on a grid of the same size.
pub fn mcf_step_with(g: &GeneratingCurve, tau: f64, convention: Convention) -> Result<GeneratingCurve> {
    let factor = match convention {
        Convention::Average => 0.5,
        Convention::Sum => 1.0,
    };
    let speed = nodal_two_h(g);
    let (x, z, th) = (g.x(), g.z(), g.theta());
    let n = g.n();
    let nx: Vec<f64> = (0..=n).map(|i| x[i] - tau * factor * speed[i] * th[i].sin()).collect();
    let nz: Vec<f64> = (0..=n).map(|i| z[i] + tau * factor * speed[i] * th[i].cos()).collect();
    if let Some(i) = (1..n).find(|&i| !(nx[i] > 0.0)) {
        return Err(Error::StepSize(format!("profile pinches at sample {i} for τ = {tau}")));
    }
    let dx = gradient(&nx, 1.0);
    let dz = gradient(&nz, 1.0);
    let mut ang: Vec<f64> = dz.iter().zip(&dx).map(|(a, b)| a.atan2(*b)).collect();
    unwrap(&mut ang);
    ang[0] = 0.0;
    ang[n] = th[n];
    // a trapezoid step of arclength h spans a chord h·cos(Δθ/2)
    let mut chord = Vec::with_capacity(n + 1);
    chord.push(0.0);
    for i in 0..n {
        let c = (nx[i + 1] - nx[i]).hypot(nz[i + 1] - nz[i]);
        chord.push(chord[i] + c / (0.5 * (ang[i + 1] - ang[i])).cos());
    }
    let length = chord[n];
    let h = length / n as f64;
    let mut theta = Vec::with_capacity(n + 1);
    let mut k = 0;
    for i in 0..=n {
        let s = i as f64 * h;
        while k + 1 < n && chord[k + 1] < s {
            k += 1;
        }
        let t = ((s - chord[k]) / (chord[k + 1] - chord[k])).clamp(0.0, 1.0);
        theta.push(ang[k] + t * (ang[k + 1] - ang[k]));
    }
    theta[n] = th[n];
    close_on_axis(&mut theta, h)?;
    let angle = AngleFunction::new(length, theta)?;
    let dp = g.delta_pole() * length / g.length();
    validate_generating_curve(angle, dp).map_err(|e| Error::StepSize(format!("step τ = {tau}: {e}")))
}

/// One step under the average-curvature convention.
pub fn mcf_step(g: &GeneratingCurve, tau: f64) -> Result<GeneratingCurve> {
    mcf_step_with(g, tau, Convention::Average)
}

fn iso_ratio(g: &GeneratingCurve) -> f64 {
    area(g).powf(1.5) / volume(g)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FlowProbe {
    pub tau: f64,
    pub analytic_rate: f64,
    pub fd_rate: f64,
    /// Analytic rate of `A^{3/2} − 6√π V`.
    pub iso_difference_rate: f64,
    pub analytic_area_rate: f64,
    pub fd_area_rate: f64,
    pub analytic_increases: bool,
    pub fd_increases: bool,
    pub agrees: bool,
}

/// `−(A^{1/2}/V)(3∫H² − (A/V)∫H)`.
pub fn analytic_rate(g: &GeneratingCurve) -> f64 {
    let q = surface_quantities(g);
    -(q.area.sqrt() / q.volume) * (3.0 * q.willmore - q.area / q.volume * q.total_h)
}

/// `−3A^{1/2}∫H² + 6√π∫H`.
pub fn iso_difference_rate(g: &GeneratingCurve) -> f64 {
    let q = surface_quantities(g);
    -3.0 * q.area.sqrt() * q.willmore + 6.0 * PI.sqrt() * q.total_h
}

/// Central differences of `I` and `A` over steps `±τ`.
pub fn rate_check(g: &GeneratingCurve, tau: f64) -> Result<FlowProbe> {
    let plus = mcf_step(g, tau)?;
    let minus = mcf_step(g, -tau)?;
    let analytic = analytic_rate(g);
    let fd = (iso_ratio(&plus) - iso_ratio(&minus)) / (2.0 * tau);
    let q = surface_quantities(g);
    Ok(FlowProbe {
        tau,
        analytic_rate: analytic,
        fd_rate: fd,
        iso_difference_rate: iso_difference_rate(g),
        analytic_area_rate: -2.0 * q.willmore,
        fd_area_rate: (area(&plus) - area(&minus)) / (2.0 * tau),
        analytic_increases: analytic > 0.0,
        fd_increases: fd > 0.0,
        agrees: (analytic - fd).abs() <= RATE_REL_TOL * analytic.abs() + RATE_ABS_TOL,
    })
}

/// `dA/dt` by central differences under a given convention.
pub fn area_rate(g: &GeneratingCurve, tau: f64, convention: Convention) -> Result<f64> {
    let plus = mcf_step_with(g, tau, convention)?;
    let minus = mcf_step_with(g, -tau, convention)?;
    Ok((area(&plus) - area(&minus)) / (2.0 * tau))
}

/// Exponent `p` in `|analytic − fd| ∝ τ^p`, from the two largest steps given.
pub fn convergence_order(g: &GeneratingCurve, tau_coarse: f64, tau_fine: f64) -> Result<f64> {
    let a = rate_check(g, tau_coarse)?;
    let b = rate_check(g, tau_fine)?;
    let ea = (a.analytic_rate - a.fd_rate).abs();
    let eb = (b.analytic_rate - b.fd_rate).abs();
    Ok((ea / eb).ln() / (tau_coarse / tau_fine).ln())
}

/// Largest `τ` in the increasing list such that a forward step of every
/// listed size up to it raises the isoperimetric ratio. The baseline is the
/// zero step, which carries the same resampling error as the moved profiles.
pub fn increase_horizon(g: &GeneratingCurve, taus: &[f64]) -> Option<f64> {
    let i0 = iso_ratio(&mcf_step(g, 0.0).ok()?);
    let mut best = None;
    for &tau in taus {
        match mcf_step(g, tau) {
            Ok(next) if iso_ratio(&next) > i0 => best = Some(tau),
            _ => break,
        }
    }
    best
}
