//! Arclength resampling of smooth parametric curves.

use std::f64::consts::PI;

use crate::curve::angle::AngleFunction;
use crate::error::Result;
use crate::quad::integrate;

/// Resamples a regular parametric curve on `[t0, t1]` to a uniform arclength
/// grid of `n` intervals. `speed` is `|γ'(t)|` and `direction` returns the
/// tangent angle modulo 2π; the result is unwrapped to a continuous function.
pub fn arclength_angle<S, D>(t0: f64, t1: f64, n: usize, speed: S, direction: D) -> Result<AngleFunction>
where
    S: Fn(f64) -> f64,
    D: Fn(f64) -> f64,
{
    let panels = 4 * n;
    let dt = (t1 - t0) / panels as f64;
    let mut cum = Vec::with_capacity(panels + 1);
    cum.push(0.0);
    for k in 0..panels {
        let a = t0 + k as f64 * dt;
        let seg = integrate(&speed, a, a + dt, 1e-15)?;
        cum.push(cum[k] + seg);
    }
    let length = cum[panels];
    let h = length / n as f64;
    let mut theta = Vec::with_capacity(n + 1);
    let mut k = 0usize;
    for i in 0..=n {
        let target = i as f64 * h;
        while k + 1 < panels && cum[k + 1] < target {
            k += 1;
        }
        let a = t0 + k as f64 * dt;
        let mut t = a + dt * ((target - cum[k]) / (cum[k + 1] - cum[k])).clamp(0.0, 1.0);
        for _ in 0..8 {
            let s = cum[k] + integrate(&speed, a, t, 1e-15)?;
            let step = (s - target) / speed(t);
            t -= step;
            if step.abs() < 1e-15 * (1.0 + t.abs()) {
                break;
            }
        }
        let t = if i == 0 { t0 } else if i == n { t1 } else { t };
        theta.push(direction(t));
    }
    unwrap(&mut theta);
    AngleFunction::new(length, theta)
}

/// Removes 2π jumps between consecutive samples.
pub fn unwrap(theta: &mut [f64]) {
    for i in 1..theta.len() {
        let d = theta[i] - theta[i - 1];
        let k = (d / (2.0 * PI)).round();
        theta[i] -= 2.0 * PI * k;
    }
}

/// Ellipse `(a cos t, b sin t)` traversed once counter-clockwise, starting at
/// `t = −π/2` so that the tangent angle runs from 0 to 2π.
pub fn ellipse(a: f64, b: f64, n: usize) -> Result<AngleFunction> {
    arclength_angle(
        -PI / 2.0,
        1.5 * PI,
        n,
        |t| (a * t.sin()).hypot(b * t.cos()),
        |t| (b * t.cos()).atan2(-a * t.sin()),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circle_resampling_is_identity() {
        let a = ellipse(1.0, 1.0, 256).unwrap();
        assert!((a.length() - 2.0 * PI).abs() < 1e-12);
        for (i, t) in a.theta().iter().enumerate() {
            assert!((t - a.s(i)).abs() < 1e-10);
        }
    }

    #[test]
    fn ellipse_perimeter() {
        // Ramanujan's second approximation is accurate to ~1e-10 relative at 2:1
        let (a, b) = (2.0f64, 1.0f64);
        let hh = ((a - b) / (a + b)).powi(2);
        let approx = PI * (a + b) * (1.0 + 3.0 * hh / (10.0 + (4.0 - 3.0 * hh).sqrt()));
        let e = ellipse(a, b, 512).unwrap();
        assert!((e.length() - approx).abs() / approx < 1e-8);
        assert!(e.theta()[0].abs() < 1e-12 && (e.theta()[512] - 2.0 * PI).abs() < 1e-12);
    }
}
