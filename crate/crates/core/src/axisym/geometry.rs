//! Diameter and widths of a surface of revolution from its profile.
//!
//! The surface diameter is the diameter of the point set `P ∪ RP`, where
//! `P` is the sampled profile and `R(x, z) = (−x, z)`: the farthest pair of
//! points on two meridian copies lies in one plane through the axis on
//! opposite sides. It is computed on the convex hull of `P ∪ RP` by
//! rotating calipers.

use crate::axisym::generating::GeneratingCurve;

#[derive(Debug, Clone, Copy)]
struct Tagged {
    x: f64,
    z: f64,
    index: usize,
}

fn cross(o: &Tagged, a: &Tagged, b: &Tagged) -> f64 {
    (a.x - o.x) * (b.z - o.z) - (a.z - o.z) * (b.x - o.x)
}

fn dist2(a: &Tagged, b: &Tagged) -> f64 {
    (a.x - b.x).powi(2) + (a.z - b.z).powi(2)
}

fn convex_hull(mut pts: Vec<Tagged>) -> Vec<Tagged> {
    pts.sort_by(|a, b| a.x.total_cmp(&b.x).then(a.z.total_cmp(&b.z)));
    if pts.len() < 3 {
        return pts;
    }
    let mut lower: Vec<Tagged> = Vec::new();
    for p in &pts {
        while lower.len() >= 2 && cross(&lower[lower.len() - 2], &lower[lower.len() - 1], p) <= 0.0 {
            lower.pop();
        }
        lower.push(*p);
    }
    let mut upper: Vec<Tagged> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2 && cross(&upper[upper.len() - 2], &upper[upper.len() - 1], p) <= 0.0 {
            upper.pop();
        }
        upper.push(*p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Diameter of a finite point set with the indices of a farthest pair.
fn point_set_diameter(pts: Vec<Tagged>) -> (f64, usize, usize) {
    let hull = convex_hull(pts);
    let m = hull.len();
    match m {
        0 => return (0.0, 0, 0),
        1 => return (0.0, hull[0].index, hull[0].index),
        2 => return (dist2(&hull[0], &hull[1]).sqrt(), hull[0].index, hull[1].index),
        _ => {}
    }
    let mut best = (0.0, hull[0].index, hull[0].index);
    let mut j = 1;
    for i in 0..m {
        let ni = (i + 1) % m;
        while cross(&hull[i], &hull[ni], &hull[(j + 1) % m]).abs() > cross(&hull[i], &hull[ni], &hull[j]).abs() {
            j = (j + 1) % m;
        }
        for k in [i, ni] {
            let d = dist2(&hull[k], &hull[j]);
            if d > best.0 {
                best = (d, hull[k].index, hull[j].index);
            }
        }
    }
    (best.0.sqrt(), best.1, best.2)
}

fn profile_points(x: &[f64], z: &[f64]) -> Vec<Tagged> {
    let n = x.len();
    let mut pts = Vec::with_capacity(2 * n);
    for i in 0..n {
        pts.push(Tagged { x: x[i], z: z[i], index: i });
        pts.push(Tagged { x: -x[i], z: z[i], index: i });
    }
    pts
}

/// Diameter of the surface generated by a sampled profile, with the
/// arclengths `(s₁, s₂)` of a farthest pair.
pub fn profile_diameter(x: &[f64], z: &[f64], h: f64) -> (f64, (f64, f64)) {
    let (d, i, j) = point_set_diameter(profile_points(x, z));
    (d, (i as f64 * h, j as f64 * h))
}

pub fn diameter(g: &GeneratingCurve) -> (f64, (f64, f64)) {
    profile_diameter(g.x(), g.z(), g.h())
}

/// `max_{i,j} |γ_i − Rγ_j|` by exhaustive search.
pub fn diameter_brute_force(x: &[f64], z: &[f64]) -> f64 {
    let mut best: f64 = 0.0;
    for i in 0..x.len() {
        for j in 0..x.len() {
            best = best.max((x[i] + x[j]).powi(2) + (z[i] - z[j]).powi(2));
        }
    }
    best.sqrt()
}

/// Extent of the surface along a direction at angle `alpha ∈ [0, π]` from the axis.
pub fn width(g: &GeneratingCurve, alpha: f64) -> f64 {
    profile_width(g.x(), g.z(), alpha)
}

pub fn profile_width(x: &[f64], z: &[f64], alpha: f64) -> f64 {
    let (sa, ca) = (alpha.sin().abs(), alpha.cos());
    let mut hi = f64::NEG_INFINITY;
    let mut lo = f64::INFINITY;
    for (xi, zi) in x.iter().zip(z) {
        hi = hi.max(xi * sa + zi * ca);
        lo = lo.min(-xi * sa + zi * ca);
    }
    hi - lo
}
