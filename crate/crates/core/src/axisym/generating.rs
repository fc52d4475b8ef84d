use std::f64::consts::PI;

use crate::curve::angle::AngleFunction;
use crate::curve::plane::reconstruct;
use crate::error::{Error, Result};

/// Tolerance on the pole tangent angles.
pub const POLE_ANGLE_TOL: f64 = 1e-8;
/// Closure and orientation tolerance relative to `L`.
pub const CLOSURE_TOL: f64 = 1e-6;

/// A point inside grid cell `cell` where the continuous angle function
/// crosses a multiple of π; `value` is the angle there.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Breakpoint {
    pub cell: usize,
    pub value: f64,
}

/// Profile `(x, z)` of a simply connected surface of revolution about the
/// z-axis, starting and ending on the axis.
#[derive(Debug, Clone)]
pub struct GeneratingCurve {
    angle: AngleFunction,
    x: Vec<f64>,
    z: Vec<f64>,
    delta_pole: f64,
    breakpoints: Vec<Breakpoint>,
}

impl GeneratingCurve {
    pub fn angle(&self) -> &AngleFunction {
        &self.angle
    }
    pub fn theta(&self) -> &[f64] {
        self.angle.theta()
    }
    pub fn x(&self) -> &[f64] {
        &self.x
    }
    pub fn z(&self) -> &[f64] {
        &self.z
    }
    pub fn length(&self) -> f64 {
        self.angle.length()
    }
    pub fn n(&self) -> usize {
        self.angle.n()
    }
    pub fn h(&self) -> f64 {
        self.angle.h()
    }
    pub fn delta_pole(&self) -> f64 {
        self.delta_pole
    }
    pub fn lipschitz(&self) -> f64 {
        self.angle.lipschitz()
    }
    pub fn breakpoints(&self) -> &[Breakpoint] {
        &self.breakpoints
    }

    /// θ nondecreasing (up to `1e−9·K·h` per step) from 0 to π.
    pub fn is_convex(&self) -> bool {
        let th = self.theta();
        let slack = 1e-9 * self.lipschitz().max(1.0) * self.h();
        th.windows(2).all(|w| w[1] - w[0] >= -slack) && (th[th.len() - 1] - PI).abs() <= POLE_ANGLE_TOL
    }

    pub fn scaled(&self, lambda: f64) -> Result<Self> {
        with_breakpoints(self.angle.scaled(lambda)?, self.delta_pole * lambda, self.breakpoints.clone())
    }
}

/// Cells whose end samples straddle a multiple of π, with the crossed value.
pub fn crossings(theta: &[f64]) -> Vec<Breakpoint> {
    let mut out = Vec::new();
    for (i, w) in theta.windows(2).enumerate() {
        let (a, b) = (w[0] / PI, w[1] / PI);
        let (ka, kb) = (a.floor(), b.floor());
        if ka != kb && a != ka && b != kb {
            out.push(Breakpoint { cell: i, value: ka.max(kb) * PI });
        }
    }
    out
}

/// Checks every condition on a generating curve and caches the profile.
pub fn validate_generating_curve(angle: AngleFunction, delta_pole: f64) -> Result<GeneratingCurve> {
    let bps = crossings(angle.theta());
    with_breakpoints(angle, delta_pole, bps)
}

/// As [`validate_generating_curve`], with fold points supplied by the caller
/// (used when the angle function descends from one with known crossings).
pub fn with_breakpoints(angle: AngleFunction, delta_pole: f64, breakpoints: Vec<Breakpoint>) -> Result<GeneratingCurve> {
    let th = angle.theta();
    let n = angle.n();
    let (start, end) = (th[0], th[n]);
    let turns = (end - PI) / (2.0 * PI);
    if start.abs() > POLE_ANGLE_TOL || (turns - turns.round()).abs() * 2.0 * PI > POLE_ANGLE_TOL {
        return Err(Error::BadPoleTangents { start, end });
    }
    let plane = reconstruct(&angle);
    let l = angle.length();
    if plane.x[n].abs() > CLOSURE_TOL * l {
        return Err(Error::BadClosure(plane.x[n]));
    }
    if let Some(i) = (1..n).find(|&i| !(plane.x[i] > 0.0)) {
        return Err(Error::PinchedProfile { index: i, x: plane.x[i] });
    }
    if plane.z[n] < -CLOSURE_TOL * l {
        return Err(Error::Orientation(plane.z[n]));
    }
    if !(delta_pole >= 0.0) {
        return Err(Error::Domain(format!("pole radius must be nonnegative, got {delta_pole}")));
    }
    Ok(GeneratingCurve { angle, x: plane.x, z: plane.z, delta_pole, breakpoints })
}

/// Validation with the default pole radius of two grid cells.
pub fn generating_curve(angle: AngleFunction) -> Result<GeneratingCurve> {
    let d = 2.0 * angle.h();
    validate_generating_curve(angle, d)
}
