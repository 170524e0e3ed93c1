//! Largest inscribed circle as a three-variable linear program.
//!
//! With outward unit edge normals `nᵢ` and offsets `bᵢ = nᵢ·vᵢ` the problem
//! is `max t` subject to `nᵢ·p + t ≤ bᵢ`. It is solved by the simplex method
//! on its dual, `min Σ bᵢwᵢ` subject to `Σ wᵢnᵢ = 0`, `Σ wᵢ = 1`, `w ≥ 0`,
//! whose bases are triples of edges. A basis is a triangle circumscribing the
//! current circle; an iteration swaps in the most violated edge.

use alloc::vec::Vec;

use super::Point;
use crate::error::{Error, Result};
use crate::math::{atan2, solve3, transpose, Mat3, PI};

/// Chebyshev center and radius of a convex polygon.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Incircle {
    /// Center of a largest inscribed disk.
    pub center: Point,
    /// Its radius.
    pub radius: f64,
    /// Edges (by starting vertex) that the disk touches at the optimum.
    pub active: [usize; 3],
    /// Simplex iterations used.
    pub iterations: usize,
}

pub(super) fn chebyshev_center(v: &[Point], scale: f64) -> Result<Incircle> {
    let n = v.len();
    let rows: Vec<[f64; 3]> = (0..n)
        .map(|i| {
            let e = v[(i + 1) % n] - v[i];
            let len = e.norm();
            [e.y / len, -e.x / len, 1.0]
        })
        .collect();
    let rhs: Vec<f64> = (0..n).map(|i| rows[i][0] * v[i].x + rows[i][1] * v[i].y).collect();

    let mut basis = initial_basis(&rows);
    let tol = 1e-13 * scale;
    let bland_after = 10 * n + 100;
    let max_iter = 100 * n + 1000;
    let degenerate = |index| Error::Degenerate { reason: "inscribed-circle program is singular", index };

    for iter in 0..max_iter {
        let bmat: Mat3 = [rows[basis[0]], rows[basis[1]], rows[basis[2]]];
        let z = solve3(bmat, [rhs[basis[0]], rhs[basis[1]], rhs[basis[2]]]).ok_or(degenerate(basis[0]))?;
        let w = solve3(transpose(bmat), [0.0, 0.0, 1.0]).ok_or(degenerate(basis[0]))?;

        let viol = |k: usize| rows[k][0] * z[0] + rows[k][1] * z[1] + z[2] - rhs[k];
        let entering = if iter < bland_after {
            (0..n).max_by(|&a, &b| viol(a).total_cmp(&viol(b))).filter(|&k| viol(k) > tol)
        } else {
            (0..n).find(|&k| viol(k) > tol)
        };
        let Some(k) = entering else {
            return Ok(Incircle { center: Point::new(z[0], z[1]), radius: z[2], active: basis, iterations: iter });
        };

        let d = solve3(transpose(bmat), rows[k]).ok_or(degenerate(k))?;
        let mut leave: Option<(usize, f64)> = None;
        for j in 0..3 {
            if d[j] > 1e-14 {
                let ratio = w[j].max(0.0) / d[j];
                let better = match leave {
                    None => true,
                    Some((lj, lr)) => ratio < lr || (ratio == lr && basis[j] < basis[lj]),
                };
                if better {
                    leave = Some((j, ratio));
                }
            }
        }
        let (j, _) = leave.ok_or(degenerate(k))?;
        basis[j] = k;
    }
    Err(degenerate(basis[0]))
}

/// Edge 0, the last edge whose normal is less than a half turn past edge 0's,
/// and the edge after it. Consecutive normal gaps of a convex polygon are
/// below π, so these three normals surround the origin and the dual weights
/// of the basis are nonnegative.
fn initial_basis(rows: &[[f64; 3]]) -> [usize; 3] {
    let n = rows.len();
    let a0 = atan2(rows[0][1], rows[0][0]);
    let offset = |i: usize| {
        let mut d = atan2(rows[i][1], rows[i][0]) - a0;
        while d < 0.0 {
            d += 2.0 * PI;
        }
        while d >= 2.0 * PI {
            d -= 2.0 * PI;
        }
        d
    };
    let i1 = (1..n).rev().find(|&i| offset(i) < PI).unwrap_or(1).min(n - 2);
    [0, i1, i1 + 1]
}
