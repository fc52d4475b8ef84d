//! The equality curve of the strip bound: the graph of `u` over `[−1, 1]`
//! with `u' = f⁻¹(A x)`, closed by its reflection in the horizontal line
//! through the two vertical junction points.
//!
//! Along the graph, with `φ = atan u'`, the curvature is `A cos^{1/p} φ` and
//! `ds = dφ / (A cos^{1/p} φ)`. The arclength is inverted through
//! `K(w) = ∫₀^w sin^{−1/p}`, written with `u = v^q`, `q = p/(p−1)`, so the
//! integrand `q (v^q / sin v^q)^{1/p}` is smooth.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::curve::angle::AngleFunction;
use crate::curve::constants::{a_limit_closed, beta};
use crate::curve::plane::{reconstruct, PlaneCurve};
use crate::error::{Error, Result};
use crate::quad::{bisect_increasing, integrate};

const INVERSION_TOL: f64 = 1e-12;

#[derive(Debug, Clone)]
pub struct ExtremalCurve {
    pub p: f64,
    pub a_limit: f64,
    /// Arclength of one of the four congruent quarters.
    pub quarter_length: f64,
    pub angle: AngleFunction,
    pub curve: PlaneCurve,
    /// Graph samples `(x, u(x))` on a uniform grid over `[−1, 1]`.
    pub graph_x: Vec<f64>,
    pub graph_u: Vec<f64>,
    /// Curvature at the grid points nearest the two junctions `|x| = 1`.
    pub junction_curvature: f64,
}

struct Inverter {
    p: f64,
    q: f64,
}

impl Inverter {
    fn new(p: f64) -> Self {
        Self { p, q: p / (p - 1.0) }
    }

    fn integrand(&self, v: f64) -> f64 {
        let u = v.powf(self.q);
        let ratio = if u < 1e-8 { 1.0 + u * u / 6.0 } else { u / u.sin() };
        self.q * ratio.powf(1.0 / self.p)
    }

    /// `K` as a function of the substituted upper limit `v = w^{1/q}`.
    fn k(&self, v: f64) -> f64 {
        integrate(|t| self.integrand(t), 0.0, v, 1e-15).unwrap_or(f64::NAN)
    }

    /// Solves `K(w) = target` for `w ∈ [0, π/2]`.
    fn solve(&self, target: f64) -> f64 {
        if target <= 0.0 {
            return 0.0;
        }
        let vmax = FRAC_PI_2.powf(1.0 / self.q);
        let (mut lo, mut hi) = (0.0, vmax);
        let mut v = (target / self.q).min(vmax);
        for _ in 0..60 {
            let r = self.k(v) - target;
            if r.abs() < 1e-15 * target.max(1.0) {
                break;
            }
            if r > 0.0 {
                hi = v;
            } else {
                lo = v;
            }
            let next = v - r / self.integrand(v);
            v = if next > lo && next < hi { next } else { 0.5 * (lo + hi) };
        }
        v.powf(self.q)
    }
}

/// `f(t)` after the substitution `τ = tan φ`, evaluated at `φ`.
fn f_of_phi(p: f64, phi: f64) -> f64 {
    let e = (p - 1.0) / p;
    integrate(|t: f64| t.cos().max(0.0).powf(e), 0.0, phi, 1e-15).unwrap_or(f64::NAN)
}

/// Slope angle `φ = atan f⁻¹(A x)` of the graph at `|x| ≤ 1`.
pub fn slope_angle(p: f64, a_limit: f64, x: f64) -> f64 {
    if x.abs() >= 1.0 {
        return FRAC_PI_2;
    }
    let target = a_limit * x.abs();
    bisect_increasing(|phi| f_of_phi(p, phi) - target, 0.0, FRAC_PI_2, INVERSION_TOL)
}

/// Height profile `u(x) = p/(A(p−1)) · (1 − cos^{(p−1)/p} φ(x))`.
pub fn graph_height(p: f64, a_limit: f64, x: f64) -> f64 {
    let top = p / (a_limit * (p - 1.0));
    if x.abs() >= 1.0 {
        return top;
    }
    let phi = slope_angle(p, a_limit, x);
    top * (1.0 - phi.cos().max(0.0).powf((p - 1.0) / p))
}

pub fn extremal_curve(p: f64, n: usize) -> Result<ExtremalCurve> {
    if !(p > 1.0 && p.is_finite()) {
        return Err(Error::Domain(format!("extremal curve needs p > 1, got {p}")));
    }
    if n < 8 {
        return Err(Error::Domain("extremal curve needs n ≥ 8".into()));
    }
    let a = a_limit_closed(p);
    let k_full = 0.5 * beta(0.5, (p - 1.0) / (2.0 * p));
    let quarter = k_full / a;
    let inv = Inverter::new(p);
    let quarter_theta = |sigma: f64| -> f64 {
        if sigma >= quarter {
            return FRAC_PI_2;
        }
        FRAC_PI_2 - inv.solve(k_full - a * sigma)
    };
    let length = 4.0 * quarter;
    let angle = AngleFunction::from_fn(length, n, |s| {
        let s = s.clamp(0.0, length);
        if s <= quarter {
            quarter_theta(s)
        } else if s <= 2.0 * quarter {
            PI - quarter_theta(2.0 * quarter - s)
        } else if s <= 3.0 * quarter {
            PI + quarter_theta(s - 2.0 * quarter)
        } else {
            2.0 * PI - quarter_theta(length - s)
        }
    })?;
    let mut curve = reconstruct(&angle);
    let h = angle.h();
    let junction = [quarter, 3.0 * quarter]
        .iter()
        .map(|s| curve.kappa[((s / h).round() as usize).min(n)].abs())
        .fold(0.0, f64::max);
    curve.closed = curve.closure_error() <= 1e-6 * length;

    let m = n / 2;
    let graph_x: Vec<f64> = (0..=m).map(|i| -1.0 + 2.0 * i as f64 / m as f64).collect();
    let graph_u = graph_x.iter().map(|&x| graph_height(p, a, x)).collect();
    Ok(ExtremalCurve {
        p,
        a_limit: a,
        quarter_length: quarter,
        angle,
        curve,
        graph_x,
        graph_u,
        junction_curvature: junction,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slope_angle_hits_the_ends() {
        let a = a_limit_closed(2.0);
        assert!(slope_angle(2.0, a, 0.0).abs() < 1e-10);
        assert!((slope_angle(2.0, a, 1.0) - FRAC_PI_2).abs() < 1e-6);
    }

    #[test]
    fn inverter_round_trip() {
        let inv = Inverter::new(2.0);
        for w in [1e-6f64, 0.1, 0.7, 1.5] {
            let v = w.powf(1.0 / inv.q);
            let k = inv.k(v);
            assert!((inv.solve(k) - w).abs() < 1e-10, "{w}");
            // against direct quadrature of sin^{-1/2}
            let direct = integrate(|t: f64| t.sin().powf(-0.5), 0.0, w, 1e-12).unwrap();
            assert!((k - direct).abs() < 1e-7, "{k} vs {direct}");
        }
    }

    #[test]
    fn rejects_p_at_most_one() {
        assert!(matches!(extremal_curve(1.0, 64), Err(Error::Domain(_))));
    }
}
