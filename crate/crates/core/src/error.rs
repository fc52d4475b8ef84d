use thiserror::Error;

/// Errors raised by curve construction, validation and the verification pipelines.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("non-uniform grid: {0}")]
    NonUniformGrid(String),
    #[error("resolution error: {0}")]
    Resolution(String),
    #[error("quadrature did not converge (achieved {achieved:e})")]
    Accuracy { achieved: f64 },
    #[error("pinched profile: x = {x:e} at interior sample {index}")]
    PinchedProfile { index: usize, x: f64 },
    #[error("bad pole tangents: theta(0) = {start}, theta(L) = {end}")]
    BadPoleTangents { start: f64, end: f64 },
    #[error("orientation violation: z(L) = {0:e}")]
    Orientation(f64),
    #[error("profile does not close on the axis: x(L) = {0:e}")]
    BadClosure(f64),
    #[error("construction error: {0}")]
    Construction(String),
    #[error("step size too large: {0}")]
    StepSize(String),
    #[error("verification failed at {stage}: residual {residual:e}")]
    Verification { stage: String, residual: f64 },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
