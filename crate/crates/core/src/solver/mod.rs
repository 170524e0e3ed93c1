//! Numerical solutions of the arc problem, independent of the closed form.
//!
//! For half contact angle `α` and length `L` the arc minimizes
//! `½∫θ′² ds` over `θ(0) = 0`, `θ(L) = 2α`, `θ′ ≥ 0`, subject to
//!
//! ```text
//! ∫₀ᴸ cos θ ds = sin 2α,      ∫₀ᴸ sin θ ds = 1 − cos 2α,
//! ```
//!
//! which make it join `(0, −1)` to the contact point at angle `2α` on the
//! unit circle. [`solve_fixed_length`] discretizes the problem directly and
//! [`solve_free_length`] also optimizes `L`. For `α = π/2`,
//! [`shoot_pendulum`] and [`solve_bvp_via_shooting`] follow the first-order
//! pendulum equation `θ′ = √(c² − a₀ sin θ)` instead.

mod discrete;
mod free_length;
mod kkt;
mod pava;
mod shooting;

pub use discrete::{solve_fixed_length, solve_fixed_length_warm, ElasticaProblem};
pub use free_length::{default_length_bracket, solve_free_length};
pub use kkt::{kkt_residual, KktFit};
pub use pava::pava;
pub use shooting::{
    length_supremum, shoot_pendulum, shooting_map, solve_bvp_via_shooting, PendulumPath, ShootingSolution,
};

use alloc::vec::Vec;

/// Lagrange multipliers of the two closure constraints, in the sign
/// convention of `½θ′² + λ₂ sin θ + λ₁ cos θ = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Multipliers {
    /// Multiplier of `∫ cos θ = sin 2α`.
    pub lambda1: f64,
    /// Multiplier of `∫ sin θ = 1 − cos 2α`.
    pub lambda2: f64,
}

/// Output of the discrete solver.
#[derive(Debug, Clone, PartialEq)]
pub struct ElasticaSolution {
    /// Half contact angle.
    pub alpha: f64,
    /// Arc length.
    pub length: f64,
    /// Tangent angle at `sᵢ = i·L/n`, `i = 0..=n`.
    pub theta: Vec<f64>,
    /// Discrete energy `½ Σ (Δθ)²/Δs`.
    pub energy: f64,
    /// Residuals of the cosine and sine closure constraints.
    pub residuals: [f64; 2],
    /// Constraint multipliers.
    pub multipliers: Multipliers,
    /// Fit of the optimality condition to the computed arc.
    pub kkt: KktFit,
    /// `kkt.residual()`.
    pub kkt_residual: f64,
    /// Final projected-gradient norm.
    pub projected_gradient: f64,
    /// Inner iterations spent.
    pub iterations: usize,
    /// Augmented-Lagrangian updates spent.
    pub outer_iterations: usize,
    /// Set by [`solve_free_length`] when the best length sits on a flat
    /// edge of the search bracket, so the length itself is not resolved.
    pub length_at_edge: bool,
}
