//! Discrete convex arcs and bodies, and the six functionals
//! `E, P, A, D, R, r` evaluated on them.

mod arc;
mod body;
mod chebyshev;
mod diameter;
mod enclosing;
mod report;

pub use arc::{reconstruct_points, TangentAngleArc};
pub use body::{ConvexBody, PolygonEnergy, COARSE_TURNING};
pub use chebyshev::Incircle;
pub use enclosing::EnclosingCircle;
pub use report::{functionals, FunctionalsReport, Products};

use core::ops::{Add, Mul, Neg, Sub};

use crate::math::hypot;

/// A point (or vector) in the plane.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point {
    /// Abscissa.
    pub x: f64,
    /// Ordinate.
    pub y: f64,
}

impl Point {
    /// Builds a point from its coordinates.
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    /// z-component of the cross product.
    #[inline]
    pub fn cross(self, o: Point) -> f64 {
        self.x * o.y - self.y * o.x
    }

    /// Dot product.
    #[inline]
    pub fn dot(self, o: Point) -> f64 {
        self.x * o.x + self.y * o.y
    }

    /// Euclidean norm.
    #[inline]
    pub fn norm(self) -> f64 {
        hypot(self.x, self.y)
    }

    /// Distance to `o`.
    #[inline]
    pub fn dist(self, o: Point) -> f64 {
        crate::math::sqrt(self.dist2(o))
    }

    /// Squared distance to `o`.
    #[inline]
    pub fn dist2(self, o: Point) -> f64 {
        let dx = self.x - o.x;
        let dy = self.y - o.y;
        dx * dx + dy * dy
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, t: f64) -> Point {
        Point::new(self.x * t, self.y * t)
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}
