//! The optimal domain `Ω*` and its stadium variants.

use alloc::vec::Vec;

use super::{build_arc, OptimalArc, OptimalArcSpec};
use crate::error::{Error, Result};
use crate::geom::{ConvexBody, Point};
use crate::math::FRAC_PI_2;

/// Smallest vertex count accepted by [`build_omega_star`].
pub const MIN_VERTICES: usize = 64;

/// `Ω*`, possibly stretched into a stadium by two horizontal segments.
#[derive(Debug, Clone, PartialEq)]
pub struct OptimalDomain {
    /// The polygon.
    pub body: ConvexBody,
    /// Constants of the `α = π/2` arc.
    pub arc_spec: OptimalArcSpec,
    /// The sampled right half, before any shift.
    pub half_arc: OptimalArc,
    /// Half length `h` of each inserted horizontal segment.
    pub segment_half_length: f64,
}

/// Builds `Ω*` with about `n_samples` vertices.
///
/// The right half is the `α = π/2` arc from `(0, −1)` to `(0, 1)`,
/// reconstructed by trapezoid integration; the left half is its mirror
/// image. With `h > 0` the halves move apart by `±h` and the poles become
/// horizontal segments of length `2h`.
pub fn build_omega_star(n_samples: usize, h: f64) -> Result<OptimalDomain> {
    if n_samples < MIN_VERTICES {
        return Err(Error::Domain { name: "n_samples", value: n_samples as f64, expected: "at least 64" });
    }
    if !(h >= 0.0 && h.is_finite()) {
        return Err(Error::Domain { name: "h", value: h, expected: "[0, ∞)" });
    }
    let m = n_samples / 2 + 1;
    let half_arc = build_arc(FRAC_PI_2, m)?;
    let mut right = half_arc.arc.reconstruct_curve();
    // the trapezoid endpoint is within O(ds⁴) of the pole; pin it there
    right[m - 1] = Point::new(0.0, 1.0);
    right[0] = Point::new(0.0, -1.0);
    for p in right.iter_mut().skip(1).take(m - 2) {
        p.x = p.x.max(0.0);
    }

    let mut vertices: Vec<Point> = Vec::with_capacity(2 * m);
    vertices.extend(right.iter().map(|p| Point::new(p.x + h, p.y)));
    let left = right.iter().rev().map(|p| Point::new(-p.x - h, p.y));
    if h > 0.0 {
        vertices.extend(left);
    } else {
        vertices.extend(left.skip(1).take(m - 2));
    }
    let body = ConvexBody::new(vertices)?;
    Ok(OptimalDomain { body, arc_spec: half_arc.spec, half_arc, segment_half_length: h })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn vertex_counts() {
        assert_eq!(build_omega_star(64, 0.0).unwrap().body.len(), 64);
        assert_eq!(build_omega_star(64, 0.5).unwrap().body.len(), 66);
        assert!(build_omega_star(63, 0.0).is_err());
        assert!(build_omega_star(100, -1.0).is_err());
    }

    #[test]
    fn mirror_symmetric() {
        let d = build_omega_star(200, 0.0).unwrap();
        let v = d.body.vertices();
        let n = v.len();
        for i in 1..n / 2 {
            assert_eq!(v[i].x, -v[n - i].x);
            assert_eq!(v[i].y, v[n - i].y);
        }
    }

    #[test]
    fn height_two_and_width_four_over_a() {
        let d = build_omega_star(4000, 0.0).unwrap();
        let v = d.body.vertices();
        let ymax = v.iter().map(|p| p.y).fold(f64::MIN, f64::max);
        let ymin = v.iter().map(|p| p.y).fold(f64::MAX, f64::min);
        assert_eq!(ymax - ymin, 2.0);
        let xmax = v.iter().map(|p| p.x).fold(f64::MIN, f64::max);
        assert_abs_diff_eq!(xmax, 2.0 / 1.198_140_234_735_592, epsilon = 1e-6);
    }
}
