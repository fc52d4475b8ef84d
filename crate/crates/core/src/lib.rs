//! Geometric quantities, rearrangements and curvature inequalities for closed
//! surfaces of revolution and convex bodies of revolution.

pub mod axisym;
pub mod convex;
pub mod curve;
pub mod error;
pub mod flow;
pub mod io;
pub mod quad;
pub mod rearrange;
pub mod report;

pub use error::{Error, Result};
pub use report::InequalityReport;
