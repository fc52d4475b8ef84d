//! Simply connected surfaces of revolution given by a generating curve
//! `(x(s), z(s))` in arclength, rotated about the z-axis.
//!
//! Mean curvature is the average of the principal curvatures with the inward
//! normal, `H = (θ_s + sin θ / x)/2`, so `H ≡ 1` on the unit sphere.

pub mod families;
pub mod generating;
pub mod geometry;
pub mod quantities;
pub mod singular;
pub mod stats;

pub use families::{Family, Surface};
pub use generating::{generating_curve, validate_generating_curve, GeneratingCurve};
pub use geometry::{diameter, width};
pub use quantities::{surface_quantities, SurfaceQuantities};
pub use singular::{BrokenLine, SingularRevolvedBody, SingularTargets};
pub use stats::{axial_stats, segment_deviation, simon_report, topping_deficit, AxialStats, ToppingReport};
