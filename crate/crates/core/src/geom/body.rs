use alloc::vec::Vec;

use super::{chebyshev, diameter, enclosing, EnclosingCircle, Incircle, Point};
use crate::error::{Error, Result};
use crate::math::{atan2, PI};

/// Turning angle above which the discrete energy is flagged as coarse.
pub const COARSE_TURNING: f64 = 0.3;

/// A closed convex polygon with counterclockwise vertices.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvexBody {
    vertices: Vec<Point>,
    scale: f64,
}

/// Discrete elastic energy with the largest turning angle that went into it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolygonEnergy {
    /// `½ Σ Δφᵢ² / ℓᵢ`.
    pub value: f64,
    /// Largest turning angle `Δφᵢ`, in radians.
    pub max_turning: f64,
}

impl PolygonEnergy {
    /// True when some vertex turns by more than [`COARSE_TURNING`]; the value
    /// is then a poor stand-in for the smooth energy.
    pub fn is_coarse(&self) -> bool {
        self.max_turning > COARSE_TURNING
    }
}

impl ConvexBody {
    /// Validates a counterclockwise vertex loop.
    ///
    /// Rejects fewer than three vertices, non-finite coordinates, repeated
    /// consecutive vertices, clockwise turns beyond `1e−12·scale²` and loops
    /// that wind more than once.
    pub fn new(vertices: Vec<Point>) -> Result<Self> {
        let n = vertices.len();
        if n < 3 {
            return Err(Error::Degenerate { reason: "fewer than three vertices", index: n });
        }
        if let Some(i) = vertices.iter().position(|p| !(p.x.is_finite() && p.y.is_finite())) {
            return Err(Error::Degenerate { reason: "non-finite coordinate", index: i });
        }
        let scale = bounding_scale(&vertices);
        if scale == 0.0 {
            return Err(Error::Degenerate { reason: "all vertices coincide", index: 0 });
        }
        let min_edge = 1e-14 * scale;
        for i in 0..n {
            if vertices[i].dist(vertices[(i + 1) % n]) <= min_edge {
                return Err(Error::Degenerate { reason: "repeated vertex", index: (i + 1) % n });
            }
        }
        let eps = 1e-12 * scale * scale;
        let mut total = 0.0;
        for i in 0..n {
            let e0 = vertices[i] - vertices[(i + n - 1) % n];
            let e1 = vertices[(i + 1) % n] - vertices[i];
            let c = e0.cross(e1);
            if c < -eps {
                return Err(Error::NonConvex { index: i });
            }
            total += atan2(c, e0.dot(e1));
        }
        if (total - 2.0 * PI).abs() > 1e-6 {
            return Err(Error::Degenerate { reason: "vertex loop does not wind once counterclockwise", index: 0 });
        }
        Ok(Self { vertices, scale })
    }

    /// The vertices, counterclockwise.
    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// Number of vertices.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    /// Always false; a body has at least three vertices.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Larger side of the bounding box; the length unit of all tolerances.
    pub fn scale(&self) -> f64 {
        self.scale
    }

    /// The body dilated by `t > 0` about the origin.
    pub fn scaled(&self, t: f64) -> Result<Self> {
        if !(t > 0.0 && t.is_finite()) {
            return Err(Error::Domain { name: "t", value: t, expected: "(0, ∞)" });
        }
        Self::new(self.vertices.iter().map(|&p| p * t).collect())
    }

    fn edge(&self, i: usize) -> Point {
        let n = self.vertices.len();
        self.vertices[(i + 1) % n] - self.vertices[i]
    }

    /// Sum of edge lengths.
    pub fn perimeter(&self) -> f64 {
        (0..self.len()).map(|i| self.edge(i).norm()).sum()
    }

    /// Shoelace area.
    pub fn area(&self) -> f64 {
        let n = self.len();
        0.5 * (0..n).map(|i| self.vertices[i].cross(self.vertices[(i + 1) % n])).sum::<f64>()
    }

    /// Turning angle at each vertex, in `[0, π)`.
    pub fn turning_angles(&self) -> Vec<f64> {
        let n = self.len();
        (0..n)
            .map(|i| {
                let e0 = self.edge((i + n - 1) % n);
                let e1 = self.edge(i);
                atan2(e0.cross(e1), e0.dot(e1))
            })
            .collect()
    }

    /// `½ Σ Δφᵢ² / ℓᵢ` with `ℓᵢ` the mean of the two edges at vertex `i`.
    ///
    /// Converges to `½∫k² ds` for fine samplings of a `C^{1,1}` curve and
    /// diverges under refinement if the polygon has true corners.
    pub fn polygon_energy(&self) -> PolygonEnergy {
        let n = self.len();
        let mut value = 0.0;
        let mut max_turning: f64 = 0.0;
        for (i, phi) in self.turning_angles().into_iter().enumerate() {
            let l = 0.5 * (self.edge((i + n - 1) % n).norm() + self.edge(i).norm());
            value += phi * phi / l;
            max_turning = max_turning.max(phi);
        }
        PolygonEnergy { value: 0.5 * value, max_turning }
    }

    /// Largest distance between two vertices, by rotating calipers.
    pub fn diameter(&self) -> f64 {
        diameter::rotating_calipers(&self.vertices)
    }

    /// Largest distance between two vertices by checking every pair.
    pub fn diameter_brute_force(&self) -> f64 {
        diameter::brute_force(&self.vertices)
    }

    /// Smallest enclosing circle.
    pub fn enclosing_circle(&self) -> EnclosingCircle {
        enclosing::min_enclosing_circle(&self.vertices, self.scale)
    }

    /// Radius of the smallest enclosing circle.
    pub fn circumradius(&self) -> f64 {
        self.enclosing_circle().radius
    }

    /// Largest inscribed circle (Chebyshev center).
    pub fn incircle(&self) -> Result<Incircle> {
        chebyshev::chebyshev_center(&self.vertices, self.scale)
    }

    /// Radius and center of the largest inscribed circle.
    pub fn inradius(&self) -> Result<(f64, Point)> {
        self.incircle().map(|c| (c.radius, c.center))
    }
}

fn bounding_scale(v: &[Point]) -> f64 {
    let (mut x0, mut x1, mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    for p in v {
        x0 = x0.min(p.x);
        x1 = x1.max(p.x);
        y0 = y0.min(p.y);
        y1 = y1.max(p.y);
    }
    (x1 - x0).max(y1 - y0)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::math::{cos, sin};
    use alloc::vec;
    use approx::assert_abs_diff_eq;

    pub(crate) fn regular(n: usize, radius: f64) -> ConvexBody {
        ConvexBody::new(
            (0..n)
                .map(|i| {
                    let t = 2.0 * PI * i as f64 / n as f64;
                    Point::new(radius * cos(t), radius * sin(t))
                })
                .collect(),
        )
        .unwrap()
    }

    pub(crate) fn square() -> ConvexBody {
        ConvexBody::new(vec![
            Point::new(-1.0, -1.0),
            Point::new(1.0, -1.0),
            Point::new(1.0, 1.0),
            Point::new(-1.0, 1.0),
        ])
        .unwrap()
    }

    #[test]
    fn unit_square() {
        let b = ConvexBody::new(vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(1.0, 1.0),
            Point::new(0.0, 1.0),
        ])
        .unwrap();
        assert_eq!(b.perimeter(), 4.0);
        assert_eq!(b.area(), 1.0);
        assert_eq!(b.diameter(), core::f64::consts::SQRT_2);
    }

    #[test]
    fn fine_disk() {
        let b = regular(10_000, 1.0);
        assert_abs_diff_eq!(b.perimeter(), 2.0 * PI, epsilon = 1e-6);
        assert_abs_diff_eq!(b.area(), PI, epsilon = 1e-6);
    }

    #[test]
    fn disk_energy_converges_at_second_order() {
        let e36 = regular(36, 1.0).polygon_energy().value;
        let e360 = regular(360, 1.0).polygon_energy().value;
        assert_abs_diff_eq!(e360, PI, epsilon = 1e-3);
        assert!((e36 - e360).abs() < 1e-2);
        // error ratio of a second order scheme for a tenfold refinement
        let ratio = (e36 - PI) / (e360 - PI);
        assert!((ratio - 100.0).abs() < 2.0, "ratio = {ratio}");
    }

    #[test]
    fn coarse_flag() {
        assert!(square().polygon_energy().is_coarse());
        assert!(!regular(64, 1.0).polygon_energy().is_coarse());
    }

    #[test]
    fn rejects_reflex_vertex_with_its_index() {
        let dart = vec![
            Point::new(0.0, 0.0),
            Point::new(2.0, 0.0),
            Point::new(1.0, 0.5),
            Point::new(2.0, 2.0),
            Point::new(0.0, 2.0),
        ];
        assert_eq!(ConvexBody::new(dart), Err(Error::NonConvex { index: 2 }));
    }

    #[test]
    fn rejects_clockwise_and_repeated() {
        let mut v = square().vertices().to_vec();
        v.reverse();
        assert!(matches!(ConvexBody::new(v), Err(Error::NonConvex { .. })));
        let mut v = square().vertices().to_vec();
        v.insert(1, v[1]);
        assert!(matches!(ConvexBody::new(v), Err(Error::Degenerate { .. })));
        assert!(ConvexBody::new(vec![Point::default(), Point::new(1.0, 0.0)]).is_err());
    }

    #[test]
    fn rejects_double_winding() {
        let v = (0..10)
            .map(|i| {
                let t = 4.0 * PI * i as f64 / 10.0;
                Point::new(cos(t), sin(t))
            })
            .collect();
        assert!(matches!(ConvexBody::new(v), Err(Error::Degenerate { .. })));
    }

    #[test]
    fn accepts_collinear_vertices() {
        let b = ConvexBody::new(vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(2.0, 0.0),
            Point::new(2.0, 1.0),
            Point::new(0.0, 1.0),
        ])
        .unwrap();
        assert_abs_diff_eq!(b.area(), 2.0);
    }
}
