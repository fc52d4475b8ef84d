//! Folding and monotone rearrangement of generating curves.
//!
//! The fold `θ♯ = dist(θ, 2πℤ)` keeps `cos θ` and hence `x`, and makes the
//! meridian non-descending. Sorting the grid samples of `θ♯` gives the
//! monotone angle function `θ*` of a convex body with the same pole-to-pole
//! displacement. Fold points of `θ♯` (where it touches 0 or π) are inherited
//! from the crossings of `θ` so the cell scheme for `∫|H|` splits the same cells.

use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::axisym::generating::{with_breakpoints, Breakpoint, GeneratingCurve};
use crate::axisym::quantities::mean_curvature_integrals;
use crate::axisym::geometry::diameter;
use crate::curve::angle::AngleFunction;
use crate::error::{Error, Result};
use crate::quad::trapezoid;

/// Relative tolerance for `M(Σ) = M(Σ♯)`.
pub const FOLD_ENERGY_TOL: f64 = 1e-6;
/// Absolute slack for `M(Σ*) ≤ M(Σ♯)`.
pub const SORT_ENERGY_TOL: f64 = 1e-8;
/// Absolute slack for the diameter chain.
pub const DIAMETER_TOL: f64 = 1e-9;
/// Enclosure tolerance relative to `L`.
pub const ENCLOSURE_TOL: f64 = 1e-8;
const RANGE_TOL: f64 = 1e-12;

pub fn fold(v: f64) -> f64 {
    (v - 2.0 * PI * (v / (2.0 * PI)).round()).abs()
}

/// `θ♯(s) = dist(θ(s), 2πℤ)`.
pub fn first_rearrangement(angle: &AngleFunction) -> Result<AngleFunction> {
    angle.map_theta(fold)
}

fn check_range(angle: &AngleFunction) -> Result<()> {
    if let Some(t) = angle.theta().iter().find(|t| !(**t >= -RANGE_TOL && **t <= PI + RANGE_TOL)) {
        return Err(Error::Precondition(format!("angle {t} outside [0, π]")));
    }
    Ok(())
}

/// Nondecreasing rearrangement of the grid samples.
pub fn second_rearrangement(angle: &AngleFunction) -> Result<AngleFunction> {
    check_range(angle)?;
    let mut th = angle.theta().to_vec();
    th.sort_by(f64::total_cmp);
    AngleFunction::new(angle.length(), th)
}

/// Nondecreasing rearrangement of the restriction to `[0, s_dagger]`, with
/// `s_dagger` rounded to the nearest grid point.
pub fn restricted_rearrangement(angle: &AngleFunction, s_dagger: f64) -> Result<AngleFunction> {
    check_range(angle)?;
    if !(s_dagger > 0.0 && s_dagger <= angle.length() * (1.0 + 1e-12)) {
        return Err(Error::Precondition(format!("s† = {s_dagger} outside (0, L]")));
    }
    let m = ((s_dagger / angle.h()).round() as usize).clamp(2, angle.n());
    let mut th = angle.theta()[..=m].to_vec();
    th.sort_by(f64::total_cmp);
    AngleFunction::new(m as f64 * angle.h(), th)
}

/// The folded generating curve, with fold points carried over.
pub fn fold_curve(g: &GeneratingCurve) -> Result<GeneratingCurve> {
    let bps = g.breakpoints().iter().map(|b| Breakpoint { cell: b.cell, value: fold(b.value) }).collect();
    with_breakpoints(first_rearrangement(g.angle())?, g.delta_pole(), bps)
}

pub fn sort_curve(g: &GeneratingCurve) -> Result<GeneratingCurve> {
    with_breakpoints(second_rearrangement(g.angle())?, g.delta_pole(), Vec::new())
}

/// Whether every profile point of `inner` lies in the region bounded by the
/// convex profile and its mirror image, up to `1e−8·L`.
pub fn encloses(convex: &GeneratingCurve, inner: &GeneratingCurve) -> Result<bool> {
    if !convex.is_convex() {
        return Err(Error::Precondition("enclosing profile is not convex".into()));
    }
    let tol = ENCLOSURE_TOL * convex.length().max(inner.length());
    let (cx, cz) = (convex.x(), convex.z());
    let n = cx.len() - 1;
    let (zmin, zmax) = (cz[0], cz[n]);
    for (&x, &z) in inner.x().iter().zip(inner.z()) {
        if z < zmin - tol || z > zmax + tol {
            return Ok(false);
        }
        let zc = z.clamp(zmin, zmax);
        // segments j with cz[j] ≤ zc ≤ cz[j+1]; z is nondecreasing on a convex profile
        let first = cz[1..].partition_point(|v| *v < zc).min(n - 1);
        let last = cz.partition_point(|v| *v <= zc).clamp(1, n) - 1;
        let mut reach = f64::NEG_INFINITY;
        for j in first..=last.max(first) {
            let (z0, z1) = (cz[j], cz[j + 1]);
            let xr = if z1 > z0 {
                cx[j] + (cx[j + 1] - cx[j]) * ((zc - z0) / (z1 - z0)).clamp(0.0, 1.0)
            } else {
                cx[j].max(cx[j + 1])
            };
            reach = reach.max(xr);
        }
        if x > reach + tol {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StageQuantities {
    pub total_abs_h: f64,
    pub diameter: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RearrangementResult {
    pub theta: AngleFunction,
    pub theta_sharp: AngleFunction,
    pub theta_star: AngleFunction,
    pub original: StageQuantities,
    pub sharp: StageQuantities,
    pub star: StageQuantities,
    /// `Σ*` encloses `Σ♯` (which is `Σ` when θ stays in `[0, π]`).
    pub enclosure: bool,
    /// `Σ*` encloses `Σ` itself.
    pub encloses_original: bool,
    /// `|γ*(L) − γ♯(L)|` from the trapezoid sums of `cos` and `sin`.
    pub measure_residual: f64,
}

fn stage(g: &GeneratingCurve) -> StageQuantities {
    StageQuantities { total_abs_h: mean_curvature_integrals(g).0, diameter: diameter(g).0 }
}

/// Runs both rearrangements and checks the comparison chain
/// `M(Σ) = M(Σ♯) ≥ M(Σ*)`, `d(Σ) ≤ d(Σ♯) ≤ d(Σ*)`, and enclosure.
pub fn comparison_report(g: &GeneratingCurve) -> Result<RearrangementResult> {
    let sharp = fold_curve(g)?;
    let star = sort_curve(&sharp)?;
    let (q0, q1, q2) = (stage(g), stage(&sharp), stage(&star));
    let h = g.h();
    let sum = |th: &[f64], f: fn(f64) -> f64| trapezoid(&th.iter().map(|t| f(*t)).collect::<Vec<_>>(), h);
    let residual = (sum(star.theta(), f64::cos) - sum(sharp.theta(), f64::cos))
        .hypot(sum(star.theta(), f64::sin) - sum(sharp.theta(), f64::sin));
    let enclosure = encloses(&star, &sharp)?;
    let encloses_original = encloses(&star, g)?;

    let fold_gap = (q0.total_abs_h - q1.total_abs_h).abs() / q0.total_abs_h;
    if fold_gap > FOLD_ENERGY_TOL {
        return Err(Error::Verification { stage: "M(Σ) = M(Σ♯)".into(), residual: fold_gap });
    }
    if q2.total_abs_h > q1.total_abs_h + SORT_ENERGY_TOL {
        return Err(Error::Verification { stage: "M(Σ*) ≤ M(Σ♯)".into(), residual: q2.total_abs_h - q1.total_abs_h });
    }
    if q0.diameter > q1.diameter + DIAMETER_TOL {
        return Err(Error::Verification { stage: "d(Σ) ≤ d(Σ♯)".into(), residual: q0.diameter - q1.diameter });
    }
    if q1.diameter > q2.diameter + DIAMETER_TOL {
        return Err(Error::Verification { stage: "d(Σ♯) ≤ d(Σ*)".into(), residual: q1.diameter - q2.diameter });
    }
    if !enclosure {
        return Err(Error::Verification { stage: "Σ* encloses Σ♯".into(), residual: f64::NAN });
    }
    Ok(RearrangementResult {
        theta: g.angle().clone(),
        theta_sharp: sharp.angle().clone(),
        theta_star: star.angle().clone(),
        original: q0,
        sharp: q1,
        star: q2,
        enclosure,
        encloses_original,
        measure_residual: residual,
    })
}
