use alloc::vec::Vec;

use super::Point;
use crate::error::{Error, Result};
use crate::math::{cos, sin};

/// An arc stored as its tangent angle on a uniform arclength grid
/// `s_i = i·L/(n−1)`.
///
/// The angle must be nondecreasing, which is what makes the arc convex.
#[derive(Debug, Clone, PartialEq)]
pub struct TangentAngleArc {
    length: f64,
    theta: Vec<f64>,
    start: Point,
}

impl TangentAngleArc {
    /// Validates and wraps the samples.
    pub fn new(length: f64, theta: Vec<f64>, start: Point) -> Result<Self> {
        if !(length.is_finite() && length > 0.0) {
            return Err(Error::Domain { name: "length", value: length, expected: "(0, ∞)" });
        }
        if theta.len() < 2 {
            return Err(Error::Domain { name: "n_samples", value: theta.len() as f64, expected: "at least 2 samples" });
        }
        if let Some(bad) = theta.iter().position(|t| !t.is_finite()) {
            return Err(Error::Domain { name: "theta", value: theta[bad], expected: "finite angles" });
        }
        if let Some(w) = theta.windows(2).position(|w| w[1] < w[0]) {
            return Err(Error::NonMonotone { index: w + 1 });
        }
        Ok(Self { length, theta, start })
    }

    /// Number of samples, endpoints included.
    pub fn n_samples(&self) -> usize {
        self.theta.len()
    }

    /// Total arc length.
    pub fn length(&self) -> f64 {
        self.length
    }

    /// Grid spacing.
    pub fn ds(&self) -> f64 {
        self.length / (self.theta.len() - 1) as f64
    }

    /// Tangent angle samples.
    pub fn theta(&self) -> &[f64] {
        &self.theta
    }

    /// Position of the first sample.
    pub fn start(&self) -> Point {
        self.start
    }

    /// Positions of all samples, by trapezoid integration of `(cos θ, sin θ)`.
    pub fn reconstruct_curve(&self) -> Vec<Point> {
        reconstruct_points(&self.theta, self.ds(), self.start)
    }

    /// `½ Σ (Δθ)² / Δs`, the elastic energy of the piecewise-affine angle.
    pub fn elastic_energy(&self) -> f64 {
        let ds = self.ds();
        0.5 * self.theta.windows(2).map(|w| (w[1] - w[0]) * (w[1] - w[0])).sum::<f64>() / ds
    }
}

/// Trapezoid reconstruction of a curve from tangent-angle samples with spacing `ds`.
/// No monotonicity is required.
pub fn reconstruct_points(theta: &[f64], ds: f64, start: Point) -> Vec<Point> {
    let mut out = Vec::with_capacity(theta.len());
    let Some(&first) = theta.first() else {
        return out;
    };
    let mut p = start;
    let (mut c0, mut s0) = (cos(first), sin(first));
    out.push(p);
    for &t in &theta[1..] {
        let (c1, s1) = (cos(t), sin(t));
        p = Point::new(p.x + 0.5 * ds * (c0 + c1), p.y + 0.5 * ds * (s0 + s1));
        out.push(p);
        c0 = c1;
        s0 = s1;
    }
    out
}
