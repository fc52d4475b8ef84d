use serde::{Deserialize, Serialize};

/// One evaluated inequality `lhs ≥ rhs` (or a recorded, unasserted quantity).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InequalityReport {
    pub id: String,
    pub surface: String,
    pub lhs: f64,
    pub rhs: f64,
    /// `lhs − rhs`; for relative checks the tolerance is scaled accordingly.
    pub deficit: f64,
    pub tolerance: f64,
    pub pass: bool,
    /// Unasserted records always pass.
    pub asserted: bool,
    pub n: usize,
    pub delta: Option<f64>,
    pub seed: Option<u64>,
}

impl InequalityReport {
    /// Asserted check `lhs ≥ rhs` with an absolute tolerance on the deficit.
    pub fn check(id: &str, lhs: f64, rhs: f64, tolerance: f64) -> Self {
        let deficit = lhs - rhs;
        Self {
            id: id.to_string(),
            surface: String::new(),
            lhs,
            rhs,
            deficit,
            tolerance,
            pass: deficit.is_finite() && deficit >= -tolerance,
            asserted: true,
            n: 0,
            delta: None,
            seed: None,
        }
    }

    /// `lhs ≥ rhs` with tolerance relative to `max(|lhs|, |rhs|)`.
    pub fn check_relative(id: &str, lhs: f64, rhs: f64, rel: f64) -> Self {
        Self::check(id, lhs, rhs, rel * lhs.abs().max(rhs.abs()))
    }

    /// Strict check `lhs > rhs`; the tolerance is stored but not granted.
    pub fn check_strict(id: &str, lhs: f64, rhs: f64, tolerance: f64) -> Self {
        let mut r = Self::check(id, lhs, rhs, tolerance);
        r.pass = r.deficit.is_finite() && r.deficit > 0.0;
        r
    }

    /// Two-sided check `|lhs − rhs| ≤ rel·|rhs|`.
    pub fn identity(id: &str, lhs: f64, rhs: f64, rel: f64) -> Self {
        let mut r = Self::check(id, lhs, rhs, rel * rhs.abs());
        r.pass = r.deficit.abs() <= r.tolerance;
        r
    }

    /// A measured quantity with no assertion attached.
    pub fn record(id: &str, lhs: f64, rhs: f64) -> Self {
        let mut r = Self::check(id, lhs, rhs, 0.0);
        r.pass = true;
        r.asserted = false;
        r
    }

    pub fn on(mut self, surface: &str, n: usize, delta: Option<f64>) -> Self {
        self.surface = surface.to_string();
        self.n = n;
        self.delta = delta;
        self
    }

    pub fn with_seed(mut self, seed: Option<u64>) -> Self {
        self.seed = seed;
        self
    }

    /// `lhs / rhs`.
    pub fn ratio(&self) -> f64 {
        self.lhs / self.rhs
    }
}
