//! Profiles with corners: broken lines from the axis to the axis, and the
//! convex-hull bodies `Γ^h_{a,A}` bounded by two disks and two cone frusta.
//!
//! For a broken line with segment angles `ψ_k`, lengths `ℓ_k` and turning
//! angles `Δ_c` at corners with radius `x_c`,
//! `∫|H| = π Σ |sin ψ_k| ℓ_k + π Σ |Δ_c| x_c`.

use serde::{Deserialize, Serialize};
use std::f64::consts::{FRAC_PI_2, PI};

use crate::axisym::geometry::profile_diameter;
use crate::curve::angle::AngleFunction;
use crate::error::{Error, Result};

/// Exact quantities of a singular profile, for comparison with mollified runs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SingularTargets {
    pub total_abs_h: f64,
    pub diameter: f64,
    pub u: f64,
    pub v_remainder: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BrokenLine {
    vertices: Vec<(f64, f64)>,
    /// Unwrapped direction of each segment.
    angles: Vec<f64>,
    lengths: Vec<f64>,
    /// Tangent angle at the final pole, in π + 2πℤ.
    end_angle: f64,
}

impl BrokenLine {
    /// Vertices from one pole to the other; the first and last lie on the axis.
    pub fn new(vertices: &[(f64, f64)]) -> Result<Self> {
        let mut v: Vec<(f64, f64)> = Vec::new();
        for p in vertices {
            if v.last().is_none_or(|q: &(f64, f64)| (q.0 - p.0).hypot(q.1 - p.1) > 1e-15) {
                v.push(*p);
            }
        }
        if v.len() < 2 {
            return Err(Error::Construction("broken line needs two distinct vertices".into()));
        }
        if v[0].0 != 0.0 || v[v.len() - 1].0 != 0.0 {
            return Err(Error::Construction("broken line must start and end on the axis".into()));
        }
        let mut angles: Vec<f64> = Vec::new();
        let mut lengths = Vec::new();
        let mut prev = 0.0;
        for w in v.windows(2) {
            let (dx, dz) = (w[1].0 - w[0].0, w[1].1 - w[0].1);
            let raw = dz.atan2(dx);
            let a = raw - 2.0 * PI * ((raw - prev) / (2.0 * PI)).round();
            angles.push(a);
            lengths.push(dx.hypot(dz));
            prev = a;
        }
        let end_angle = PI + 2.0 * PI * ((prev - PI) / (2.0 * PI)).round();
        Ok(Self { vertices: v, angles, lengths, end_angle })
    }

    pub fn vertices(&self) -> &[(f64, f64)] {
        &self.vertices
    }

    pub fn length(&self) -> f64 {
        self.lengths.iter().sum()
    }

    /// Turning angle at every vertex, poles included.
    fn corner_jumps(&self) -> Vec<f64> {
        let k = self.angles.len();
        let mut jumps = Vec::with_capacity(k + 1);
        jumps.push(self.angles[0]);
        for i in 1..k {
            jumps.push(self.angles[i] - self.angles[i - 1]);
        }
        jumps.push(self.end_angle - self.angles[k - 1]);
        jumps
    }

    pub fn exact_total_abs_h(&self) -> f64 {
        let smooth: f64 = self.angles.iter().zip(&self.lengths).map(|(a, l)| a.sin().abs() * l).sum();
        let corners: f64 = self
            .corner_jumps()
            .iter()
            .zip(&self.vertices)
            .map(|(j, v)| j.abs() * v.0)
            .sum();
        PI * (smooth + corners)
    }

    pub fn exact_diameter(&self) -> f64 {
        let x: Vec<f64> = self.vertices.iter().map(|v| v.0).collect();
        let z: Vec<f64> = self.vertices.iter().map(|v| v.1).collect();
        profile_diameter(&x, &z, 1.0).0
    }

    pub fn targets(&self) -> SingularTargets {
        let l = self.length();
        let mean = |f: &dyn Fn(f64) -> f64| -> f64 {
            self.angles.iter().zip(&self.lengths).map(|(a, len)| f(*a) * len).sum::<f64>() / l
        };
        SingularTargets {
            total_abs_h: self.exact_total_abs_h(),
            diameter: self.exact_diameter(),
            u: mean(&|a| (1.0 - a.sin()).max(0.0).sqrt()).powi(2),
            v_remainder: mean(&|a| a.cos().abs()).powi(2) + mean(&|a| (-a.sin()).max(0.0)),
        }
    }

    /// Angle function in which every jump is replaced by a linear ramp over
    /// arclength `delta`: centred on interior corners, one-sided at the poles.
    pub fn mollified(&self, delta: f64, n: usize) -> Result<AngleFunction> {
        let l = self.length();
        let min_len = self.lengths.iter().cloned().fold(f64::INFINITY, f64::min);
        if !(delta > 0.0) || delta >= min_len {
            return Err(Error::Construction(format!(
                "mollification radius {delta} must be positive and below the shortest segment {min_len}"
            )));
        }
        let jumps = self.corner_jumps();
        let mut pos = Vec::with_capacity(jumps.len());
        let mut acc = 0.0;
        pos.push(0.0);
        for len in &self.lengths {
            acc += len;
            pos.push(acc);
        }
        let last = jumps.len() - 1;
        AngleFunction::from_fn(l, n, |s| {
            let mut t = 0.0;
            for (k, (j, c)) in jumps.iter().zip(&pos).enumerate() {
                if *j == 0.0 {
                    continue;
                }
                let (lo, hi) = if k == 0 {
                    (0.0, delta)
                } else if k == last {
                    (l - delta, l)
                } else {
                    (c - 0.5 * delta, c + 0.5 * delta)
                };
                t += j * ((s - lo) / (hi - lo)).clamp(0.0, 1.0);
            }
            t
        })
    }
}

/// The body bounded by two disks of radius `a` at heights 0 and `h` and two
/// cone frusta meeting at radius `a_mid` at height `h/2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SingularRevolvedBody {
    pub h: f64,
    pub a: f64,
    pub a_mid: f64,
}

impl SingularRevolvedBody {
    pub fn new(h: f64, a: f64, a_mid: f64) -> Result<Self> {
        if !(h >= 0.0 && a >= 0.0 && a_mid >= a) || !(h.is_finite() && a_mid.is_finite()) {
            return Err(Error::Domain(format!("need 0 ≤ a ≤ A and h ≥ 0, got h={h}, a={a}, A={a_mid}")));
        }
        Ok(Self { h, a, a_mid })
    }

    /// Cone angle with `tan θ_c = 2(A − a)/h`.
    pub fn theta_c(&self) -> f64 {
        if self.h == 0.0 {
            if self.a_mid > self.a {
                FRAC_PI_2
            } else {
                0.0
            }
        } else {
            (2.0 * (self.a_mid - self.a) / self.h).atan()
        }
    }

    pub fn profile(&self) -> Result<BrokenLine> {
        let (h, a, m) = (self.h, self.a, self.a_mid);
        BrokenLine::new(&[(0.0, 0.0), (a, 0.0), (m, 0.5 * h), (a, h), (0.0, h)])
    }

    /// `(M, d)` with `M = πh + π²a + 2πθ_c(A − a)`.
    pub fn exact_singular_m(&self) -> (f64, f64) {
        let m = PI * self.h + PI * PI * self.a + 2.0 * PI * self.theta_c() * (self.a_mid - self.a);
        let d = self.profile().map(|b| b.exact_diameter()).unwrap_or(0.0);
        (m, d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn general_formula_matches_closed_form() {
        for (h, a, m) in [(1.0, 0.1, 0.1), (1.0, 0.0, 0.01), (0.5, 0.2, 0.7), (2.0, 0.3, 0.4)] {
            let body = SingularRevolvedBody::new(h, a, m).unwrap();
            let line = body.profile().unwrap();
            assert!((line.exact_total_abs_h() - body.exact_singular_m().0).abs() < 1e-12);
        }
    }

    #[test]
    fn limiting_bodies() {
        let seg = SingularRevolvedBody::new(2.0, 0.0, 0.0).unwrap();
        assert!((seg.exact_singular_m().0 - 2.0 * PI).abs() < 1e-14);
        let disk = SingularRevolvedBody::new(0.0, 0.0, 1.5).unwrap();
        assert!((disk.theta_c() - FRAC_PI_2).abs() < 1e-15);
        assert!((disk.exact_singular_m().0 - PI * PI * 1.5).abs() < 1e-12);
        assert!((disk.exact_singular_m().1 - 3.0).abs() < 1e-12);
    }

    #[test]
    fn broken_line_angles_and_end_pole() {
        let e = 0.05;
        let b = BrokenLine::new(&[(0.0, 0.0), (e * e, -e), (e * e, 1.0 + e), (0.0, 1.0)]).unwrap();
        assert!((b.angles[1] - FRAC_PI_2).abs() < 1e-15);
        assert!((b.end_angle - PI).abs() < 1e-15);
        assert!((b.angles[2] - (PI + (1.0 / e).atan())).abs() < 1e-14);
    }
}
