//! Polygon diameter.

use super::Point;

/// Brute-force `O(n²)` maximum pairwise distance.
pub(super) fn brute_force(v: &[Point]) -> f64 {
    let mut best: f64 = 0.0;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            best = best.max(v[i].dist2(v[j]));
        }
    }
    crate::math::sqrt(best)
}

/// Rotating calipers over a convex counterclockwise polygon.
///
/// For every edge the antipodal vertex is advanced while the next edge still
/// points "forward" relative to it. Near-parallel edge pairs and rounding
/// noise on nearly collinear runs can make the antipodal vertex ambiguous by
/// one step, so each candidate is compared against its neighbours as well.
pub(super) fn rotating_calipers(v: &[Point]) -> f64 {
    let n = v.len();
    let at = |i: usize| v[i % n];
    let edge = |i: usize| at(i + 1) - at(i);
    let mut j = 1;
    let mut best: f64 = 0.0;
    for i in 0..n {
        let e = edge(i);
        let mut steps = 0;
        while steps < n && e.cross(edge(j)) > 0.0 {
            j += 1;
            steps += 1;
        }
        for k in [j + n - 1, j, j + 1] {
            best = best.max(at(i).dist2(at(k))).max(at(i + 1).dist2(at(k)));
        }
    }
    crate::math::sqrt(best)
}

#[cfg(test)]
mod tests {
    use super::super::body::tests::{regular, square};
    use approx::assert_abs_diff_eq;

    #[test]
    fn square_diagonal() {
        assert_eq!(square().diameter(), 2.0 * core::f64::consts::SQRT_2);
    }

    #[test]
    fn regular_polygons_match_brute_force() {
        for n in [3, 4, 5, 6, 7, 100, 360, 1001] {
            let b = regular(n, 1.0);
            assert_eq!(b.diameter(), b.diameter_brute_force(), "n = {n}");
        }
        assert_abs_diff_eq!(regular(360, 1.0).diameter(), 2.0, epsilon = 1e-4);
    }
}
