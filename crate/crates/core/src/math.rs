//! Float functions that `core` does not provide.

pub(crate) use libm::{asin, atan2, cos, hypot, sin, sqrt, tan};

pub(crate) const PI: f64 = core::f64::consts::PI;
pub(crate) const FRAC_PI_2: f64 = core::f64::consts::FRAC_PI_2;
pub(crate) const SQRT_2: f64 = core::f64::consts::SQRT_2;

#[inline]
pub(crate) fn sq(x: f64) -> f64 {
    x * x
}

pub(crate) type Mat3 = [[f64; 3]; 3];

/// Solves `m x = r` by Gaussian elimination with partial pivoting.
#[allow(clippy::needless_range_loop)]
pub(crate) fn solve3(mut m: Mat3, mut r: [f64; 3]) -> Option<[f64; 3]> {
    for col in 0..3 {
        let piv = (col..3).max_by(|&a, &b| m[a][col].abs().total_cmp(&m[b][col].abs()))?;
        if m[piv][col].abs() < 1e-300 {
            return None;
        }
        m.swap(col, piv);
        r.swap(col, piv);
        for row in col + 1..3 {
            let f = m[row][col] / m[col][col];
            for k in col..3 {
                m[row][k] -= f * m[col][k];
            }
            r[row] -= f * r[col];
        }
    }
    let mut x = [0.0; 3];
    for row in (0..3).rev() {
        let s: f64 = (row + 1..3).map(|k| m[row][k] * x[k]).sum();
        x[row] = (r[row] - s) / m[row][row];
    }
    Some(x)
}

pub(crate) fn transpose(m: Mat3) -> Mat3 {
    let mut t = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            t[i][j] = m[j][i];
        }
    }
    t
}

/// `cos α` computed as `sin(π/2 − α)`, which is exactly zero at
/// `α = FRAC_PI_2` and accurate near it.
#[inline]
pub(crate) fn cos_from_right(alpha: f64) -> f64 {
    sin(FRAC_PI_2 - alpha)
}
