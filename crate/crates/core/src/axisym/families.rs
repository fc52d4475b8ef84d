//! Parametric test surfaces.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::f64::consts::{FRAC_PI_2, PI};

use crate::axisym::generating::{generating_curve, GeneratingCurve};
use crate::axisym::singular::{BrokenLine, SingularRevolvedBody, SingularTargets};
use crate::curve::angle::AngleFunction;
use crate::curve::parametric::arclength_angle;
use crate::curve::plane::reconstruct;
use crate::error::{Error, Result};
use crate::quad::trapezoid;

/// Overhang angle of the dumbbell bulbs.
const DUMBBELL_OVERHANG: f64 = 0.3;
const RANDOM_MODES: usize = 6;
const RANDOM_ATTEMPTS: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    Sphere { r: f64 },
    /// Equatorial semi-axis `a`, polar semi-axis `c`.
    Spheroid { a: f64, c: f64 },
    /// Cylinder of radius ε and length 1 capped by hemispheres.
    Cigar { eps: f64 },
    /// ε-neighbourhood of the unit disk.
    Pancake { eps: f64 },
    /// `Γ^h_{a,A}`, mollified.
    Gamma { h: f64, a: f64, a_mid: f64 },
    /// Profile through `(0,0), (ε²,−ε), (ε²,1+ε), (0,1)`, mollified.
    BrokenLine { eps: f64 },
    /// Two bulbs of radius `bulge` with overhanging lower sides, joined by a
    /// cylindrical neck of radius `neck`.
    Dumbbell { neck: f64, bulge: f64 },
    /// Random Fourier profile; `k` scales the mode amplitudes.
    RandomLipschitz { seed: u64, k: f64 },
}

/// A generating curve together with its provenance.
#[derive(Debug, Clone)]
pub struct Surface {
    pub name: String,
    /// `None` for surfaces read from an explicit curve.
    pub family: Option<Family>,
    pub curve: GeneratingCurve,
    pub delta: Option<f64>,
    pub seed: Option<u64>,
    /// Exact quantities of the singular limit for mollified families.
    pub singular: Option<SingularTargets>,
}

impl Family {
    pub fn name(&self) -> String {
        match *self {
            Family::Sphere { r } => format!("sphere(r={r})"),
            Family::Spheroid { a, c } => format!("spheroid(a={a},c={c})"),
            Family::Cigar { eps } => format!("cigar(eps={eps})"),
            Family::Pancake { eps } => format!("pancake(eps={eps})"),
            Family::Gamma { h, a, a_mid } => format!("gamma(h={h},a={a},A={a_mid})"),
            Family::BrokenLine { eps } => format!("broken_line(eps={eps})"),
            Family::Dumbbell { neck, bulge } => format!("dumbbell(neck={neck},bulge={bulge})"),
            Family::RandomLipschitz { seed, k } => format!("random_lipschitz(seed={seed},K={k})"),
        }
    }

    pub fn is_mollified(&self) -> bool {
        matches!(self, Family::Gamma { .. } | Family::BrokenLine { .. })
    }

    /// Singular profile of a mollified family.
    pub fn broken_line(&self) -> Option<Result<BrokenLine>> {
        match *self {
            Family::Gamma { h, a, a_mid } => Some(SingularRevolvedBody::new(h, a, a_mid).and_then(|b| b.profile())),
            Family::BrokenLine { eps } => {
                let e2 = eps * eps;
                Some(BrokenLine::new(&[(0.0, 0.0), (e2, -eps), (e2, 1.0 + eps), (0.0, 1.0)]))
            }
            _ => None,
        }
    }

    pub fn build(&self, n: usize, delta: Option<f64>) -> Result<Surface> {
        let positive = |name: &str, v: f64| {
            if v > 0.0 && v.is_finite() {
                Ok(())
            } else {
                Err(Error::Construction(format!("{name} must be positive, got {v}")))
            }
        };
        if n < 16 {
            return Err(Error::Construction(format!("grid too coarse: n = {n}")));
        }
        let mut seed = None;
        let mut singular = None;
        let angle = match *self {
            Family::Sphere { r } => {
                positive("r", r)?;
                AngleFunction::from_fn(PI * r, n, |s| s / r)?
            }
            Family::Spheroid { a, c } => {
                positive("a", a)?;
                positive("c", c)?;
                arclength_angle(0.0, PI, n, |t| (a * t.cos()).hypot(c * t.sin()), |t| (c * t.sin()).atan2(a * t.cos()))?
            }
            Family::Cigar { eps } => {
                positive("eps", eps)?;
                let cap = FRAC_PI_2 * eps;
                AngleFunction::from_fn(1.0 + PI * eps, n, |s| {
                    if s < cap {
                        s / eps
                    } else if s <= cap + 1.0 {
                        FRAC_PI_2
                    } else {
                        FRAC_PI_2 + (s - cap - 1.0) / eps
                    }
                })?
            }
            Family::Pancake { eps } => {
                positive("eps", eps)?;
                AngleFunction::from_fn(2.0 + PI * eps, n, |s| ((s - 1.0) / eps).clamp(0.0, PI))?
            }
            Family::Gamma { .. } | Family::BrokenLine { .. } => {
                let delta = delta.ok_or_else(|| Error::Construction("mollified family needs delta".into()))?;
                let line = self.broken_line().expect("mollified family")?;
                singular = Some(line.targets());
                line.mollified(delta, n)?
            }
            Family::Dumbbell { neck, bulge } => dumbbell(neck, bulge, n)?,
            Family::RandomLipschitz { seed: s, k } => {
                seed = Some(s);
                random_lipschitz(s, k, n)?
            }
        };
        let curve = generating_curve(angle)?;
        Ok(Surface {
            name: self.name(),
            family: Some(*self),
            curve,
            delta: if self.is_mollified() { delta } else { None },
            seed,
            singular,
        })
    }
}

/// Piecewise-circular dumbbell: flat bottom disk, bulb arc turning past π
/// by the overhang angle, a concave fillet back to vertical, a straight neck,
/// then the mirror image `θ(L − s) = π − θ(s)`.
fn dumbbell(neck: f64, bulge: f64, n: usize) -> Result<AngleFunction> {
    if !(bulge > 0.0) {
        return Err(Error::Construction(format!("bulge must be positive, got {bulge}")));
    }
    if !(neck > 0.0) {
        return Err(Error::Construction(format!("pinched dumbbell neck: {neck}")));
    }
    let eta = DUMBBELL_OVERHANG;
    let fillet = 0.25 * bulge;
    let flat = neck + bulge * eta.sin() + fillet * (1.0 + eta.sin());
    let half = [
        (0.0, 0.0, flat),
        (0.0, PI + eta, bulge * (PI + eta)),
        (PI + eta, FRAC_PI_2, fillet * (FRAC_PI_2 + eta)),
        (FRAC_PI_2, FRAC_PI_2, 0.5 * bulge),
    ];
    let mut pieces: Vec<(f64, f64, f64)> = half.to_vec();
    pieces.extend(half.iter().rev().map(|&(a, b, l)| (PI - b, PI - a, l)));
    let total: f64 = pieces.iter().map(|p| p.2).sum();
    AngleFunction::from_fn(total, n, |s| {
        let mut pos = 0.0;
        for &(a, b, l) in &pieces {
            if s <= pos + l {
                return a + (b - a) * ((s - pos) / l).clamp(0.0, 1.0);
            }
            pos += l;
        }
        PI
    })
}

/// `θ(t) = πt + Σ_k a_k sin(kπt) + c sin²(πt)` on `L = π`, `a_k` uniform in
/// `[−k_amp/(4k), k_amp/(4k)]` and `c` chosen by Newton's method so that the
/// trapezoid profile closes on the axis. Draws continue from the same seeded
/// stream until the profile has `x > 0` in the interior.
fn random_lipschitz(seed: u64, k_amp: f64, n: usize) -> Result<AngleFunction> {
    if !(k_amp >= 0.0 && k_amp.is_finite()) {
        return Err(Error::Construction(format!("amplitude must be nonnegative, got {k_amp}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let l = PI;
    let h = l / n as f64;
    let t: Vec<f64> = (0..=n).map(|i| i as f64 / n as f64).collect();
    let bump: Vec<f64> = t.iter().map(|t| (PI * t).sin().powi(2)).collect();
    for _ in 0..RANDOM_ATTEMPTS {
        let coef: Vec<f64> = (1..=RANDOM_MODES)
            .map(|k| rng.gen_range(-1.0..1.0) * 0.25 * k_amp / k as f64)
            .collect();
        let base: Vec<f64> = t
            .iter()
            .map(|&t| PI * t + coef.iter().enumerate().map(|(k, a)| a * ((k + 1) as f64 * PI * t).sin()).sum::<f64>())
            .collect();
        let Some(theta) = close_on_axis(&base, &bump, h) else { continue };
        let angle = AngleFunction::new(l, theta)?;
        let plane = reconstruct(&angle);
        if !(1..n).all(|i| plane.x[i] > 0.0) {
            continue;
        }
        return if plane.z[n] < 0.0 { angle.map_theta(|v| -v) } else { Ok(angle) };
    }
    Err(Error::Construction(format!("no admissible profile for seed {seed}")))
}

fn close_on_axis(base: &[f64], bump: &[f64], h: f64) -> Option<Vec<f64>> {
    let mut c = 0.0;
    for _ in 0..60 {
        let th: Vec<f64> = base.iter().zip(bump).map(|(b, w)| b + c * w).collect();
        let f = trapezoid(&th.iter().map(|v| v.cos()).collect::<Vec<_>>(), h);
        if f.abs() < 1e-15 {
            return Some(th);
        }
        let df = -trapezoid(&th.iter().zip(bump).map(|(v, w)| v.sin() * w).collect::<Vec<_>>(), h);
        if df == 0.0 || !df.is_finite() {
            return None;
        }
        c -= f / df;
        if !c.is_finite() || c.abs() > 50.0 {
            return None;
        }
    }
    None
}

/// Richardson extrapolation to δ → 0 of a statistic with an `a δ + b δ²`
/// expansion, from values at `δ₀, δ₀/2, δ₀/4`.
pub fn richardson3(v: [f64; 3]) -> f64 {
    (8.0 * v[2] - 6.0 * v[1] + v[0]) / 3.0
}

/// Evaluates `stat` on a mollified family at `δ₀, δ₀/2, δ₀/4` and extrapolates
/// each component to δ = 0.
pub fn extrapolate_mollified<F>(family: &Family, n: usize, delta0: f64, stat: F) -> Result<Vec<f64>>
where
    F: Fn(&Surface) -> Vec<f64>,
{
    let mut runs = Vec::with_capacity(3);
    for k in 0..3 {
        let s = family.build(n, Some(delta0 / f64::powi(2.0, k)))?;
        runs.push(stat(&s));
    }
    Ok((0..runs[0].len()).map(|j| richardson3([runs[0][j], runs[1][j], runs[2][j]])).collect())
}
