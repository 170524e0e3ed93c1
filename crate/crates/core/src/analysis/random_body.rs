//! Seeded random smooth convex bodies.

use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geom::{ConvexBody, Point};
use crate::math::{cos, sin, PI};

/// Family of shapes to draw from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ShapeFamily {
    /// Ellipse with the given semi-axes, randomly rotated.
    Ellipse {
        /// First semi-axis.
        a: f64,
        /// Second semi-axis.
        b: f64,
    },
    /// Support function `1 + Σ_{k=2}^{k_max} (aₖ cos kφ + bₖ sin kφ)` with
    /// coefficients up to `0.35/k²`, randomly scaled and rotated.
    Fourier {
        /// Highest harmonic.
        k_max: usize,
    },
}

const MAX_RETRIES: usize = 32;

/// Draws a convex body with `n` vertices. The same seed gives the same body.
///
/// Fourier bodies are redrawn (up to 32 times) until the radius of
/// curvature `h + h″` is positive on a fine check grid.
pub fn random_smooth_body(seed: u64, n: usize, family: ShapeFamily) -> Result<ConvexBody> {
    if n < 3 {
        return Err(Error::Domain { name: "n", value: n as f64, expected: "at least 3 vertices" });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match family {
        ShapeFamily::Ellipse { a, b } => {
            if !(a > 0.0 && b > 0.0) {
                return Err(Error::Domain { name: "semi-axis", value: a.min(b), expected: "(0, ∞)" });
            }
            let rot: f64 = rng.random_range(0.0..2.0 * PI);
            let (cr, sr) = (cos(rot), sin(rot));
            let v = (0..n)
                .map(|i| {
                    let t = 2.0 * PI * i as f64 / n as f64;
                    let (x, y) = (a * cos(t), b * sin(t));
                    Point::new(cr * x - sr * y, sr * x + cr * y)
                })
                .collect();
            ConvexBody::new(v)
        }
        ShapeFamily::Fourier { k_max } => {
            for _ in 0..MAX_RETRIES {
                let coeffs: Vec<(f64, f64)> = (2..=k_max.max(2))
                    .map(|k| {
                        let amp = 0.35 / (k * k) as f64;
                        (rng.random_range(-amp..amp), rng.random_range(-amp..amp))
                    })
                    .collect();
                let scale: f64 = rng.random_range(0.5..2.0);
                let phase: f64 = rng.random_range(0.0..2.0 * PI);
                let radius_of_curvature = |phi: f64| {
                    1.0 + coeffs
                        .iter()
                        .enumerate()
                        .map(|(i, &(a, b))| {
                            let k = (i + 2) as f64;
                            (1.0 - k * k) * (a * cos(k * phi) + b * sin(k * phi))
                        })
                        .sum::<f64>()
                };
                let check = 8 * n.max(256);
                if (0..check).any(|i| radius_of_curvature(2.0 * PI * i as f64 / check as f64) <= 0.05) {
                    continue;
                }
                let v = (0..n)
                    .map(|i| {
                        let phi = 2.0 * PI * i as f64 / n as f64 + phase;
                        let (mut h, mut dh) = (1.0, 0.0);
                        for (j, &(a, b)) in coeffs.iter().enumerate() {
                            let k = (j + 2) as f64;
                            let (c, s) = (cos(k * (phi - phase)), sin(k * (phi - phase)));
                            h += a * c + b * s;
                            dh += k * (b * c - a * s);
                        }
                        let (c, s) = (cos(phi), sin(phi));
                        Point::new(scale * (h * c - dh * s), scale * (h * s + dh * c))
                    })
                    .collect();
                return ConvexBody::new(v);
            }
            Err(Error::Degenerate { reason: "no positively curved body after retries", index: MAX_RETRIES })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn ellipse_area() {
        let b = random_smooth_body(0, 4000, ShapeFamily::Ellipse { a: 2.0, b: 1.0 }).unwrap();
        assert_abs_diff_eq!(b.area(), 2.0 * PI, epsilon = 1e-4);
    }

    #[test]
    fn deterministic() {
        let f = ShapeFamily::Fourier { k_max: 4 };
        assert_eq!(random_smooth_body(1, 500, f).unwrap(), random_smooth_body(1, 500, f).unwrap());
        assert_ne!(random_smooth_body(1, 500, f).unwrap(), random_smooth_body(2, 500, f).unwrap());
    }
}
