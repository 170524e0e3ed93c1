//! The closed-form optimal arcs between two contact points and the optimal
//! domain assembled from them.
//!
//! An arc spanning the angle `2α` on the unit circle solves
//! `θ′ = K_α √cos(θ − α)` with `K_α = C(α)/sin α`, `C(α) = ∫₀^α √cos t dt`.
//! Its energy is `E(α) = C(α)²/sin α` and its length
//! `L_α = (2/K_α) ∫₀^α dt/√cos t`. At `α = π/2` the arc is half of the
//! optimal domain `Ω*`, with `θ′ = a √sin θ` and `x = (2/a) √sin θ`.

mod domain;
mod sample;

pub use domain::{build_omega_star, OptimalDomain};
pub use sample::{build_arc, OptimalArc};

use crate::error::{Error, Result};
use crate::math::{cos, cos_from_right, sin, sq, FRAC_PI_2};
use crate::quadrature::{int_inv_sqrt_cos, int_sqrt_cos};

/// Everything that determines the optimal arc for a half contact angle `α`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OptimalArcSpec {
    /// Half the angle between the two contact points, in `(0, π/2]`.
    pub alpha: f64,
    /// Curvature scale `K_α = C(α)/sin α`.
    pub k_alpha: f64,
    /// Multiplier of the horizontal closure constraint.
    pub lambda1: f64,
    /// Multiplier of the vertical closure constraint.
    pub lambda2: f64,
    /// Arc length `L_α`.
    pub l_alpha: f64,
    /// `C(α) = ∫₀^α √cos t dt`.
    pub sqrt_cos_integral: f64,
}

pub(crate) fn check_alpha(alpha: f64) -> Result<()> {
    if alpha > 0.0 && alpha <= FRAC_PI_2 {
        Ok(())
    } else {
        Err(Error::Domain { name: "alpha", value: alpha, expected: "(0, π/2]" })
    }
}

impl OptimalArcSpec {
    /// Computes all constants for `alpha ∈ (0, π/2]`.
    pub fn new(alpha: f64) -> Result<Self> {
        check_alpha(alpha)?;
        let c = int_sqrt_cos(alpha)?;
        let k_alpha = c / sin(alpha);
        let (lambda1, lambda2) = multipliers_from(alpha, c);
        let l_alpha = 2.0 / k_alpha * int_inv_sqrt_cos(alpha)?;
        Ok(Self { alpha, k_alpha, lambda1, lambda2, l_alpha, sqrt_cos_integral: c })
    }

    /// Energy `C(α)²/sin α`.
    pub fn energy(&self) -> f64 {
        self.k_alpha * self.sqrt_cos_integral
    }

    /// Curvature at both endpoints, `K_α √cos α`; it is at most one.
    pub fn endpoint_curvature(&self) -> f64 {
        self.k_alpha * libm::sqrt(cos_from_right(self.alpha).max(0.0))
    }

    /// Residual of `½θ′² + λ₂ sin θ + λ₁ cos θ = 0` at one sample.
    pub fn first_integral_residual(&self, theta: f64, curvature: f64) -> f64 {
        0.5 * sq(curvature) + self.lambda2 * sin(theta) + self.lambda1 * cos(theta)
    }
}

fn multipliers_from(alpha: f64, c: f64) -> (f64, f64) {
    let lambda2 = -sq(c) / (2.0 * sin(alpha));
    let lambda1 = if alpha == FRAC_PI_2 { 0.0 } else { -cos(alpha) * sq(c) / (2.0 * sq(sin(alpha))) };
    (lambda1, lambda2)
}

/// `(λ₁, λ₂)` with `−λ₁ = cos α · C(α)² / (2 sin²α)` and `λ₂ = λ₁ tan α`.
///
/// At `α = π/2`, `λ₁ = 0` and `λ₂ = −a²/2`.
pub fn multipliers(alpha: f64) -> Result<(f64, f64)> {
    check_alpha(alpha)?;
    Ok(multipliers_from(alpha, int_sqrt_cos(alpha)?))
}

/// `E(α) = C(α)² / sin α`.
pub fn energy_closed_form(alpha: f64) -> Result<f64> {
    check_alpha(alpha)?;
    Ok(sq(int_sqrt_cos(alpha)?) / sin(alpha))
}

/// `L_α = (2 sin α / C(α)) ∫₀^α dt/√cos t`.
pub fn arc_length(alpha: f64) -> Result<f64> {
    Ok(OptimalArcSpec::new(alpha)?.l_alpha)
}
