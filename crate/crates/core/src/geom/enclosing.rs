//! Smallest enclosing circle.

use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::Point;

/// Fixed seed for the shuffle; the result does not depend on it beyond rounding.
const SHUFFLE_SEED: u64 = 0x5eed_c1c1e;

/// A circle that contains every vertex, with the vertices that pin it.
#[derive(Debug, Clone, PartialEq)]
pub struct EnclosingCircle {
    /// Center.
    pub center: Point,
    /// Radius.
    pub radius: f64,
    /// Two or three vertices on the circle that determine it.
    pub support: Vec<Point>,
}

impl EnclosingCircle {
    fn from_two(a: Point, b: Point) -> Self {
        let center = (a + b) * 0.5;
        Self { center, radius: center.dist(a), support: alloc::vec![a, b] }
    }

    /// Circumcircle, or `None` for (nearly) collinear points.
    fn from_three(a: Point, b: Point, c: Point) -> Option<Self> {
        let ab = b - a;
        let ac = c - a;
        let d = 2.0 * ab.cross(ac);
        let scale = ab.dot(ab).max(ac.dot(ac));
        if d.abs() <= 1e-14 * scale {
            return None;
        }
        let (b2, c2) = (ab.dot(ab), ac.dot(ac));
        let u = Point::new((ac.y * b2 - ab.y * c2) / d, (ab.x * c2 - ac.x * b2) / d);
        let center = a + u;
        let radius = center.dist(a).max(center.dist(b)).max(center.dist(c));
        Some(Self { center, radius, support: alloc::vec![a, b, c] })
    }

    /// Whether `p` lies in the circle up to `tol`.
    pub fn contains(&self, p: Point, tol: f64) -> bool {
        self.center.dist(p) <= self.radius + tol
    }
}

/// Randomized incremental (Welzl) construction, iterative form, expected `O(n)`.
pub(super) fn min_enclosing_circle(vertices: &[Point], scale: f64) -> EnclosingCircle {
    let tol = 1e-12 * scale;
    let mut pts = vertices.to_vec();
    pts.shuffle(&mut ChaCha8Rng::seed_from_u64(SHUFFLE_SEED));
    let mut circle = EnclosingCircle::from_two(pts[0], pts[1]);
    for i in 2..pts.len() {
        if circle.contains(pts[i], tol) {
            continue;
        }
        circle = EnclosingCircle::from_two(pts[0], pts[i]);
        for j in 1..i {
            if circle.contains(pts[j], tol) {
                continue;
            }
            circle = EnclosingCircle::from_two(pts[i], pts[j]);
            for k in 0..j {
                if circle.contains(pts[k], tol) {
                    continue;
                }
                circle = EnclosingCircle::from_three(pts[i], pts[j], pts[k]).unwrap_or_else(|| {
                    // collinear: the two farthest apart span the circle
                    let pairs = [(pts[i], pts[j]), (pts[i], pts[k]), (pts[j], pts[k])];
                    let (a, b) = pairs
                        .into_iter()
                        .max_by(|p, q| p.0.dist2(p.1).total_cmp(&q.0.dist2(q.1)))
                        .unwrap_or((pts[i], pts[j]));
                    EnclosingCircle::from_two(a, b)
                });
            }
        }
    }
    circle
}
