use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Relative tolerance on grid spacing when samples arrive with explicit arclengths.
const GRID_TOL: f64 = 1e-9;

/// Tangent angle θ sampled on the uniform grid `s_i = i·L/n`, `i = 0..=n`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AngleFunction {
    length: f64,
    theta: Vec<f64>,
    /// Discrete Lipschitz certificate `max |θ_{i+1} − θ_i| / h`.
    lipschitz: f64,
}

impl AngleFunction {
    pub fn new(length: f64, theta: Vec<f64>) -> Result<Self> {
        if !(length.is_finite() && length > 0.0) {
            return Err(Error::Domain(format!("length must be positive, got {length}")));
        }
        if theta.len() < 3 {
            return Err(Error::Domain("need at least two grid intervals".into()));
        }
        if theta.iter().any(|t| !t.is_finite()) {
            return Err(Error::Domain("non-finite angle sample".into()));
        }
        let h = length / (theta.len() - 1) as f64;
        let lipschitz = theta
            .windows(2)
            .map(|w| (w[1] - w[0]).abs() / h)
            .fold(0.0, f64::max);
        Ok(Self { length, theta, lipschitz })
    }

    /// Builds from explicit `(s_i, θ_i)` pairs, rejecting anything but a
    /// uniform grid starting at zero.
    pub fn from_samples(s: &[f64], theta: Vec<f64>) -> Result<Self> {
        if s.len() != theta.len() || s.len() < 3 {
            return Err(Error::Domain("mismatched or too few samples".into()));
        }
        let n = s.len() - 1;
        let length = s[n];
        let h = length / n as f64;
        if s[0].abs() > GRID_TOL * length {
            return Err(Error::NonUniformGrid(format!("s_0 = {}", s[0])));
        }
        for (i, si) in s.iter().enumerate() {
            if (si - i as f64 * h).abs() > GRID_TOL * length.max(1.0) {
                return Err(Error::NonUniformGrid(format!("sample {i} at s = {si}")));
            }
        }
        Self::new(length, theta)
    }

    /// Samples `f` on the uniform grid of `n` intervals over `[0, length]`.
    pub fn from_fn<F: Fn(f64) -> f64>(length: f64, n: usize, f: F) -> Result<Self> {
        let h = length / n as f64;
        Self::new(length, (0..=n).map(|i| f(i as f64 * h)).collect())
    }

    pub fn length(&self) -> f64 {
        self.length
    }

    /// Number of grid intervals.
    pub fn n(&self) -> usize {
        self.theta.len() - 1
    }

    pub fn h(&self) -> f64 {
        self.length / self.n() as f64
    }

    pub fn s(&self, i: usize) -> f64 {
        i as f64 * self.h()
    }

    pub fn theta(&self) -> &[f64] {
        &self.theta
    }

    pub fn lipschitz(&self) -> f64 {
        self.lipschitz
    }

    /// The same angle function on the curve dilated by `lambda`.
    pub fn scaled(&self, lambda: f64) -> Result<Self> {
        Self::new(self.length * lambda, self.theta.clone())
    }

    pub fn map_theta<F: Fn(f64) -> f64>(&self, f: F) -> Result<Self> {
        Self::new(self.length, self.theta.iter().map(|&t| f(t)).collect())
    }

    /// Centered finite-difference derivative, second-order one-sided at the ends.
    pub fn derivative(&self) -> Vec<f64> {
        gradient(&self.theta, self.h())
    }
}

/// Second-order finite-difference gradient of uniformly spaced samples.
pub fn gradient(v: &[f64], h: f64) -> Vec<f64> {
    let n = v.len();
    let mut d = vec![0.0; n];
    if n < 3 {
        if n == 2 {
            d[0] = (v[1] - v[0]) / h;
            d[1] = d[0];
        }
        return d;
    }
    d[0] = (-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * h);
    d[n - 1] = (3.0 * v[n - 1] - 4.0 * v[n - 2] + v[n - 3]) / (2.0 * h);
    for i in 1..n - 1 {
        d[i] = (v[i + 1] - v[i - 1]) / (2.0 * h);
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_uniform_grid() {
        let s = [0.0, 0.1, 0.25, 0.3];
        let err = AngleFunction::from_samples(&s, vec![0.0; 4]).unwrap_err();
        assert!(matches!(err, Error::NonUniformGrid(_)));
        let s = [0.0, 0.1, 0.2, 0.3];
        let a = AngleFunction::from_samples(&s, vec![0.0, 0.1, 0.2, 0.3]).unwrap();
        assert!((a.lipschitz() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn gradient_exact_on_quadratics() {
        let h = 0.01;
        let v: Vec<f64> = (0..50).map(|i| (i as f64 * h).powi(2)).collect();
        let d = gradient(&v, h);
        for (i, di) in d.iter().enumerate() {
            assert!((di - 2.0 * i as f64 * h).abs() < 1e-10);
        }
    }
}
