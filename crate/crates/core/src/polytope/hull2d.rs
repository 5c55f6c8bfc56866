//! Exact planar convex hull (Andrew's monotone chain).

use num_rational::BigRational;
use num_traits::Signed;

use crate::lattice::RationalPoint;

fn cross(o: &RationalPoint, a: &RationalPoint, b: &RationalPoint) -> BigRational {
    let (ox, oy) = (&o.coords[0], &o.coords[1]);
    (&a.coords[0] - ox) * (&b.coords[1] - oy) - (&a.coords[1] - oy) * (&b.coords[0] - ox)
}

/// Hull vertices in counter-clockwise order starting from the lowest-x,
/// lowest-y point. Collinear boundary points are dropped; duplicates are
/// merged. Inputs must be two-dimensional.
pub fn convex_hull_2d(points: &[RationalPoint]) -> Vec<RationalPoint> {
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut lower: Vec<RationalPoint> = Vec::new();
    for p in &pts {
        while lower.len() >= 2 && !cross(&lower[lower.len() - 2], &lower[lower.len() - 1], p).is_positive() {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<RationalPoint> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2 && !cross(&upper[upper.len() - 2], &upper[upper.len() - 1], p).is_positive() {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}
