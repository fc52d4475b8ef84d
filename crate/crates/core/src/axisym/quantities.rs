//! Area, volume and curvature integrals of a surface of revolution.
//!
//! `∫|H|` and `∫H` use a cell scheme: on cell `i` the integrand
//! `sin θ + θ_s x` integrates to `h(sin θ_i + sin θ_{i+1})/2 + (θ_{i+1} − θ_i) X̃_i`
//! with `X̃_i = x_i + h cos θ_i / 2`. Cells in which θ crosses a multiple of π
//! are split at the crossing before taking absolute values. Summed without
//! absolute values, the scheme reproduces the trapezoid rule for
//! `π∫(sin θ − θ cos θ)` exactly whenever `x(L) = 0`.

use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::axisym::generating::GeneratingCurve;
use crate::axisym::geometry::diameter;
use crate::quad::trapezoid;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SurfaceQuantities {
    pub area: f64,
    pub volume: f64,
    pub total_h: f64,
    /// `∫H` through `π∫(sin θ − θ cos θ)`.
    pub total_h_g_form: f64,
    pub total_abs_h: f64,
    pub willmore: f64,
    pub diameter: f64,
    pub iso_ratio: f64,
    pub e: f64,
    pub e_prime: f64,
}

/// `(∫|H|, ∫H)` from the cell scheme.
pub fn mean_curvature_integrals(g: &GeneratingCurve) -> (f64, f64) {
    let th = g.theta();
    let x = g.x();
    let h = g.h();
    let bps = g.breakpoints();
    let mut k = 0;
    let (mut abs, mut signed) = (0.0, 0.0);
    for i in 0..g.n() {
        let xt = x[i] + 0.5 * h * th[i].cos();
        let (s0, s1) = (th[i].sin(), th[i + 1].sin());
        while k < bps.len() && bps[k].cell < i {
            k += 1;
        }
        if k < bps.len() && bps[k].cell == i {
            let v = bps[k].value;
            let q1 = 0.5 * h * s0 + (v - th[i]) * xt;
            let q2 = 0.5 * h * s1 + (th[i + 1] - v) * xt;
            abs += q1.abs() + q2.abs();
            signed += q1 + q2;
        } else {
            let q = 0.5 * h * (s0 + s1) + (th[i + 1] - th[i]) * xt;
            abs += q.abs();
            signed += q;
        }
    }
    (PI * abs, PI * signed)
}

/// `π∫(sin θ − θ cos θ)` by composite trapezoid.
pub fn total_h_g_form(g: &GeneratingCurve) -> f64 {
    let v: Vec<f64> = g.theta().iter().map(|t| t.sin() - t * t.cos()).collect();
    PI * trapezoid(&v, g.h())
}

/// `2H` on each grid cell by the midpoint rule; inside the pole radius the
/// removable singularity `sin θ / x → θ_s` is replaced by its limit.
pub fn two_h_cells(g: &GeneratingCurve) -> Vec<f64> {
    let th = g.theta();
    let x = g.x();
    let h = g.h();
    let l = g.length();
    let dp = g.delta_pole();
    (0..g.n())
        .map(|i| {
            let ts = (th[i + 1] - th[i]) / h;
            let sm = (i as f64 + 0.5) * h;
            if sm < dp || sm > l - dp {
                2.0 * ts
            } else {
                let xm = 0.5 * (x[i] + x[i + 1]);
                ts + (0.5 * (th[i] + th[i + 1])).sin() / xm
            }
        })
        .collect()
}

/// `∫H² = 2π∫H² x ds`, midpoint rule on cells.
pub fn willmore_energy(g: &GeneratingCurve) -> f64 {
    let x = g.x();
    let h = g.h();
    two_h_cells(g)
        .iter()
        .enumerate()
        .map(|(i, t)| 0.25 * t * t * 0.5 * (x[i] + x[i + 1]))
        .sum::<f64>()
        * 2.0
        * PI
        * h
}

pub fn area(g: &GeneratingCurve) -> f64 {
    2.0 * PI * trapezoid(g.x(), g.h())
}

pub fn volume(g: &GeneratingCurve) -> f64 {
    let v: Vec<f64> = g.x().iter().zip(g.theta()).map(|(x, t)| x * x * t.sin()).collect();
    PI * trapezoid(&v, g.h())
}

pub fn surface_quantities(g: &GeneratingCurve) -> SurfaceQuantities {
    let area = area(g);
    let volume = volume(g);
    let (total_abs_h, total_h) = mean_curvature_integrals(g);
    let willmore = willmore_energy(g);
    let iso_ratio = area.powf(1.5) / volume;
    SurfaceQuantities {
        area,
        volume,
        total_h,
        total_h_g_form: total_h_g_form(g),
        total_abs_h,
        willmore,
        diameter: diameter(g).0,
        iso_ratio,
        e: area / volume * total_h / willmore,
        e_prime: iso_ratio / willmore,
    }
}
