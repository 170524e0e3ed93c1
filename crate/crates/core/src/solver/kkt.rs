//! Optimality check of a computed arc.
//!
//! An optimal arc has `θ′ = (c₀ + c₁(y + 1) + c₂x)⁺` for some constants.
//! The constants are fitted by least squares and two residuals are
//! reported: the misfit of that affine law, and the misfit of the first
//! integral `½θ′² = c₂ sin θ − c₁ cos θ` that it implies when the length is
//! also optimal. A circle satisfies the affine law with `c₀ = 1` and nothing
//! else, so only the second residual rules it out.

use alloc::vec::Vec;

use crate::geom::{reconstruct_points, Point};
use crate::math::{cos, sin, solve3, sq, sqrt, Mat3};

/// Fitted constants and the two relative RMS residuals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KktFit {
    /// Constant term.
    pub c0: f64,
    /// Coefficient of `y + 1`; equals `λ₁`.
    pub c1: f64,
    /// Coefficient of `x`; equals `−λ₂`.
    pub c2: f64,
    /// RMS of `θ′ − (c₀ + c₁(y+1) + c₂x)⁺` over mean `θ′`.
    pub affine_residual: f64,
    /// RMS of `½θ′² − c₂ sin θ + c₁ cos θ` over `(mean θ′)²`.
    pub hamiltonian_residual: f64,
}

impl KktFit {
    /// The larger of the two residuals.
    pub fn residual(&self) -> f64 {
        self.affine_residual.max(self.hamiltonian_residual)
    }
}

/// Fits the optimality law to samples `theta` on a uniform grid of total
/// `length` starting at `start`. Curvatures and positions are taken at cell
/// midpoints.
pub fn kkt_residual(theta: &[f64], length: f64, start: Point) -> KktFit {
    let cells = theta.len().saturating_sub(1);
    if cells == 0 {
        return KktFit { c0: 0.0, c1: 0.0, c2: 0.0, affine_residual: 0.0, hamiltonian_residual: 0.0 };
    }
    let ds = length / cells as f64;
    let pts = reconstruct_points(theta, ds, start);
    let k: Vec<f64> = theta.windows(2).map(|w| (w[1] - w[0]) / ds).collect();
    let mid_theta: Vec<f64> = theta.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect();
    let feats: Vec<[f64; 3]> = pts
        .windows(2)
        .map(|w| {
            let m = (w[0] + w[1]) * 0.5;
            [1.0, m.y + 1.0, m.x]
        })
        .collect();
    let kmax = k.iter().cloned().fold(0.0, f64::max);
    let mean_k = k.iter().sum::<f64>() / cells as f64;
    if kmax <= 0.0 || mean_k <= 0.0 {
        return KktFit { c0: 0.0, c1: 0.0, c2: 0.0, affine_residual: 0.0, hamiltonian_residual: 0.0 };
    }

    let affine = |c: &[f64; 3], f: &[f64; 3]| c[0] * f[0] + c[1] * f[1] + c[2] * f[2];
    let mut active: Vec<bool> = k.iter().map(|&v| v > 1e-9 * kmax).collect();
    let mut c = [0.0; 3];
    for _ in 0..50 {
        let mut m: Mat3 = [[0.0; 3]; 3];
        let mut r = [0.0; 3];
        for i in (0..cells).filter(|&i| active[i]) {
            for a in 0..3 {
                r[a] += feats[i][a] * k[i];
                for b in 0..3 {
                    m[a][b] += feats[i][a] * feats[i][b];
                }
            }
        }
        c = match solve3(m, r) {
            Some(c) => c,
            None => break,
        };
        let next: Vec<bool> = (0..cells).map(|i| affine(&c, &feats[i]) > 0.0).collect();
        if next == active {
            break;
        }
        active = next;
    }

    let mut aff = 0.0;
    let mut ham = 0.0;
    for i in 0..cells {
        aff += sq(k[i] - affine(&c, &feats[i]).max(0.0));
        ham += sq(0.5 * k[i] * k[i] - c[2] * sin(mid_theta[i]) + c[1] * cos(mid_theta[i]));
    }
    KktFit {
        c0: c[0],
        c1: c[1],
        c2: c[2],
        affine_residual: sqrt(aff / cells as f64) / mean_k,
        hamiltonian_residual: sqrt(ham / cells as f64) / sq(mean_k),
    }
}
