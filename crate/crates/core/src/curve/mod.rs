//! Plane curves stored as tangent-angle functions.

pub mod angle;
pub mod constants;
pub mod extremal;
pub mod parametric;
pub mod plane;

pub use angle::AngleFunction;
pub use constants::{constants, ConstantsTable, Method};
pub use extremal::{extremal_curve, ExtremalCurve};
pub use plane::{bending_energy, gage_report, reconstruct, strip_energy_bound, PlaneCurve};
