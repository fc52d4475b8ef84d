//! The strip constant `c̃_p` and the slicing constant `c_p`.
//!
//! Both are built from `A = f(∞)` with `f(t) = ∫₀^t (1+τ²)^{(1−3p)/(2p)} dτ`.
//! Under `τ = tan φ` the improper integral becomes `∫₀^{π/2} cos^{(p−1)/p} φ dφ`,
//! which is also `½ B(½, (2p−1)/(2p))`.

use serde::{Deserialize, Serialize};
use statrs::function::gamma::ln_gamma;
use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};
use crate::quad::integrate;

const QUAD_TOL: f64 = 1e-14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Quadrature,
    LogGamma,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstantsTable {
    pub p: f64,
    pub c_tilde_p: f64,
    pub c_p: f64,
    pub a_limit: f64,
    /// Method behind `c_tilde_p`, `c_p` and `a_limit`.
    pub method: Method,
    pub c_tilde_p_quadrature: f64,
    pub a_limit_quadrature: f64,
    /// `2^{−p} c̃_p ∫₀¹ g^{p−1}` over the full unit interval.
    pub c_p_slicing_form: f64,
    /// `2 A^p · 2∫₀^{1/2} (1+t^{−2})^{(1−p)/2} dt`.
    pub c_p_product_form: f64,
    /// Largest relative disagreement among the redundant evaluations.
    pub discrepancy: f64,
}

pub fn ln_beta(a: f64, b: f64) -> f64 {
    ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b)
}

pub fn beta(a: f64, b: f64) -> f64 {
    ln_beta(a, b).exp()
}

/// `f(∞)` through the beta function.
pub fn a_limit_closed(p: f64) -> f64 {
    0.5 * beta(0.5, (2.0 * p - 1.0) / (2.0 * p))
}

/// `f(∞)` by adaptive quadrature on `[0, π/2]`.
pub fn a_limit_quadrature(p: f64) -> Result<f64> {
    let e = (p - 1.0) / p;
    integrate(|phi| phi.cos().max(0.0).powf(e), 0.0, FRAC_PI_2, QUAD_TOL)
}

/// The barrier profile `g(t) = (1 + (½ − |t − ½|)^{−2})^{−1/2}` on `[0, 1]`.
pub fn barrier(t: f64) -> f64 {
    let u = 0.5 - (t - 0.5).abs();
    if u <= 0.0 {
        0.0
    } else {
        u / (1.0 + u * u).sqrt()
    }
}

/// `∫₀¹ g(t)^{p−1} dt`, integrated on both halves separately (kink at ½).
pub fn barrier_moment(p: f64) -> Result<f64> {
    let f = |t: f64| if p == 1.0 { 1.0 } else { barrier(t).powf(p - 1.0) };
    Ok(integrate(f, 0.0, 0.5, QUAD_TOL)? + integrate(f, 0.5, 1.0, QUAD_TOL)?)
}

pub fn constants(p: f64) -> Result<ConstantsTable> {
    if !(p >= 1.0 && p.is_finite()) {
        return Err(Error::Domain(format!("constants need p ≥ 1, got {p}")));
    }
    let a_closed = a_limit_closed(p);
    let a_quad = a_limit_quadrature(p)?;
    let c_tilde = 2.0 * (2.0 * a_closed).powf(p);
    let c_tilde_quad = 2.0 * (2.0 * a_quad).powf(p);
    let half = integrate(
        |t: f64| if t == 0.0 { if p == 1.0 { 1.0 } else { 0.0 } } else { (1.0 + t.powi(-2)).powf(0.5 * (1.0 - p)) },
        0.0,
        0.5,
        QUAD_TOL,
    )?;
    let slicing = 2f64.powf(-p) * c_tilde * barrier_moment(p)?;
    let product = 2.0 * a_quad.powf(p) * 2.0 * half;
    let rel = |a: f64, b: f64| (a - b).abs() / a.abs().max(b.abs());
    let discrepancy = rel(c_tilde, c_tilde_quad).max(rel(slicing, product)).max(rel(a_closed, a_quad));
    Ok(ConstantsTable {
        p,
        c_tilde_p: c_tilde,
        c_p: slicing,
        a_limit: a_closed,
        method: Method::LogGamma,
        c_tilde_p_quadrature: c_tilde_quad,
        a_limit_quadrature: a_quad,
        c_p_slicing_form: slicing,
        c_p_product_form: product,
        discrepancy,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn p_one_gives_pi() {
        let c = constants(1.0).unwrap();
        assert!((c.c_p - PI).abs() < 1e-10);
        assert!((c.c_tilde_p - 2.0 * PI).abs() < 1e-10);
        assert!((c.a_limit - FRAC_PI_2).abs() < 1e-12);
    }

    #[test]
    fn barrier_moment_matches_antiderivative() {
        // ∫ t/√(1+t²) = √(1+t²)
        let m = barrier_moment(2.0).unwrap();
        assert!((m - (5f64.sqrt() - 2.0)).abs() < 1e-10, "{m}");
    }

    #[test]
    fn rejects_p_below_one() {
        assert!(matches!(constants(0.5), Err(Error::Domain(_))));
        assert!(constants(f64::NAN).is_err());
    }

    #[test]
    fn closed_and_quadrature_forms_agree() {
        for p in [1.0, 1.5, 2.0, 3.0, 5.0] {
            let c = constants(p).unwrap();
            assert!(c.discrepancy < 1e-10, "p={p}: {c:?}");
        }
    }
}
