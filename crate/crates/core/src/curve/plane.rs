use std::f64::consts::PI;

use crate::curve::angle::{gradient, AngleFunction};
use crate::curve::constants::constants;
use crate::error::{Error, Result};
use crate::quad::{cumulative_trapezoid, golden_min, trapezoid};
use crate::report::InequalityReport;

/// Closure tolerance relative to the curve length.
pub const CLOSURE_TOL: f64 = 1e-6;
/// Relative tolerance for quadrature-limited inequalities.
pub const QUAD_TOL: f64 = 1e-4;
/// Number of directions in the coarse minimal-width scan.
pub const WIDTH_DIRECTIONS: usize = 720;

/// Plane curve recovered from an angle function by cumulative quadrature.
#[derive(Debug, Clone, PartialEq)]
pub struct PlaneCurve {
    pub x: Vec<f64>,
    pub z: Vec<f64>,
    pub kappa: Vec<f64>,
    pub theta: Vec<f64>,
    pub length: f64,
    pub closed: bool,
}

impl PlaneCurve {
    pub fn n(&self) -> usize {
        self.x.len() - 1
    }

    pub fn h(&self) -> f64 {
        self.length / self.n() as f64
    }

    pub fn closure_error(&self) -> f64 {
        let n = self.n();
        (self.x[n] - self.x[0]).hypot(self.z[n] - self.z[0])
    }

    /// Dilation about the origin; curvature scales by `1/lambda`.
    pub fn scaled(&self, lambda: f64) -> PlaneCurve {
        PlaneCurve {
            x: self.x.iter().map(|v| v * lambda).collect(),
            z: self.z.iter().map(|v| v * lambda).collect(),
            kappa: self.kappa.iter().map(|v| v / lambda).collect(),
            theta: self.theta.clone(),
            length: self.length * lambda,
            closed: self.closed,
        }
    }

    /// Shoelace area `½∮(x dz − z dx)` of the sample polygon.
    pub fn enclosed_area(&self) -> f64 {
        let n = self.n();
        let mut a = 0.0;
        for i in 0..n {
            a += self.x[i] * self.z[i + 1] - self.x[i + 1] * self.z[i];
        }
        a += self.x[n] * self.z[0] - self.x[0] * self.z[n];
        0.5 * a
    }

    /// Extent of the curve along the unit direction at angle `phi`.
    pub fn width(&self, phi: f64) -> f64 {
        let (c, s) = (phi.cos(), phi.sin());
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for (x, z) in self.x.iter().zip(&self.z) {
            let v = x * c + z * s;
            lo = lo.min(v);
            hi = hi.max(v);
        }
        hi - lo
    }

    /// Minimal width over all directions: coarse scan, then golden-section refinement.
    pub fn min_width(&self) -> f64 {
        let step = PI / WIDTH_DIRECTIONS as f64;
        let (k, _) = (0..WIDTH_DIRECTIONS)
            .map(|k| (k, self.width(k as f64 * step)))
            .fold((0, f64::INFINITY), |acc, v| if v.1 < acc.1 { v } else { acc });
        let phi = k as f64 * step;
        let (_, w) = golden_min(|t| self.width(t), phi - step, phi + step, 1e-12);
        w.min(self.width(phi))
    }

    fn is_convex(&self) -> bool {
        let n = self.n();
        let h = self.h();
        let k = self.theta.windows(2).map(|w| (w[1] - w[0]).abs() / h).fold(0.0, f64::max);
        let monotone = self.theta.windows(2).all(|w| w[1] - w[0] >= -1e-9 * k * h);
        let turning = self.theta[n] - self.theta[0];
        monotone && (turning - 2.0 * PI).abs() <= 1e-6
    }
}

/// Positions by composite trapezoid, curvature by centered differences.
pub fn reconstruct(angle: &AngleFunction) -> PlaneCurve {
    let h = angle.h();
    let th = angle.theta();
    let cos: Vec<f64> = th.iter().map(|t| t.cos()).collect();
    let sin: Vec<f64> = th.iter().map(|t| t.sin()).collect();
    let x = cumulative_trapezoid(&cos, h);
    let z = cumulative_trapezoid(&sin, h);
    let kappa = gradient(th, h);
    let n = th.len() - 1;
    let closed = (x[n] - x[0]).hypot(z[n] - z[0]) <= CLOSURE_TOL * angle.length();
    PlaneCurve { x, z, kappa, theta: th.to_vec(), length: angle.length(), closed }
}

/// `∫|κ|^p ds` by composite trapezoid.
pub fn bending_energy(curve: &PlaneCurve, p: f64) -> Result<f64> {
    if !(p >= 1.0) {
        return Err(Error::Domain(format!("bending energy needs p ≥ 1, got {p}")));
    }
    let v: Vec<f64> = curve.kappa.iter().map(|k| k.abs().powf(p)).collect();
    Ok(trapezoid(&v, curve.h()))
}

/// `∫κ² ≥ πL/A` for closed convex curves.
pub fn gage_report(curve: &PlaneCurve) -> Result<InequalityReport> {
    if !curve.closed {
        return Err(Error::Precondition(format!(
            "curve is open (closure error {:e})",
            curve.closure_error()
        )));
    }
    if !curve.is_convex() {
        return Err(Error::Precondition("curve is not convex".into()));
    }
    let lhs = bending_energy(curve, 2.0)?;
    let rhs = PI * curve.length / curve.enclosed_area().abs();
    Ok(InequalityReport::check_relative("gage", lhs, rhs, QUAD_TOL).on("curve", curve.n(), None))
}

/// `∫|κ|^p ≥ c̃_p r^{1−p}` with `r` the minimal strip width.
pub fn strip_energy_bound(curve: &PlaneCurve, p: f64) -> Result<InequalityReport> {
    if !curve.closed {
        return Err(Error::Precondition(format!(
            "curve is open (closure error {:e})",
            curve.closure_error()
        )));
    }
    let r = curve.min_width();
    if !(r > curve.h()) {
        return Err(Error::Resolution(format!("strip width {r:e} below grid spacing")));
    }
    let lhs = bending_energy(curve, p)?;
    let rhs = constants(p)?.c_tilde_p * r.powf(1.0 - p);
    Ok(InequalityReport::check_relative("strip", lhs, rhs, QUAD_TOL).on("curve", curve.n(), None))
}
