//! Sampling the optimal arc on a uniform arclength grid.
//!
//! The arclength `s(θ) = (1/K) ∫₀^θ du/√cos(u − α)` is singular at both ends
//! when `α = π/2`. The substitution `sin((θ − α)/2) = sin φ / √2` removes the
//! singularity:
//!
//! ```text
//! θ = α + 2 asin(sin φ / √2),   ds = (√2/K) dφ / √(1 − ½ sin²φ),   θ′ = K cos φ,
//! ```
//!
//! with `φ` running over `[−φ_α, φ_α]`, `sin φ_α = √2 sin(α/2)`. The integrand
//! in `φ` is smooth, so each grid cell is integrated by an 8-point
//! Gauss–Legendre rule and inverted by Newton from the previous sample.

use alloc::vec::Vec;

use super::{check_alpha, OptimalArcSpec};
use crate::error::{Error, Result};
use crate::geom::{Point, TangentAngleArc};
use crate::math::{asin, cos, sin, sqrt, SQRT_2};
use crate::quadrature::gauss_legendre_8;

/// Smallest grid accepted by [`build_arc`].
pub const MIN_SAMPLES: usize = 16;

/// A sampled optimal arc: tangent angles plus the exact curvature at each
/// sample.
#[derive(Debug, Clone, PartialEq)]
pub struct OptimalArc {
    /// Constants of the arc.
    pub spec: OptimalArcSpec,
    /// Tangent angle samples, starting at `(0, −1)`.
    pub arc: TangentAngleArc,
    /// `θ′(sᵢ)`.
    pub curvature: Vec<f64>,
}

fn speed(phi: f64) -> f64 {
    let s = sin(phi);
    1.0 / sqrt(1.0 - 0.5 * s * s)
}

/// `∫_{φ₀}^{φ₁} dψ/√(1 − ½ sin²ψ)` on a short interval.
fn cell(phi0: f64, phi1: f64) -> f64 {
    gauss_legendre_8(speed, phi0, phi1)
}

fn theta_of(alpha: f64, phi: f64) -> f64 {
    alpha + 2.0 * asin(sin(phi) / SQRT_2)
}

/// Samples the optimal arc for `alpha` at `n_samples` equally spaced
/// arclengths, from `θ = 0` at `(0, −1)` to `θ = 2α`.
pub fn build_arc(alpha: f64, n_samples: usize) -> Result<OptimalArc> {
    check_alpha(alpha)?;
    if n_samples < MIN_SAMPLES {
        return Err(Error::Domain { name: "n_samples", value: n_samples as f64, expected: "at least 16" });
    }
    let spec = OptimalArcSpec::new(alpha)?;
    let phi_a = asin((SQRT_2 * sin(0.5 * alpha)).min(1.0));

    // φ-length of half the arc, by composite Gauss–Legendre
    let panels = 64;
    let half: f64 = (0..panels)
        .map(|k| {
            let a = -phi_a + phi_a * k as f64 / panels as f64;
            let b = -phi_a + phi_a * (k + 1) as f64 / panels as f64;
            cell(a, b)
        })
        .sum();
    let step = 2.0 * half / (n_samples - 1) as f64;

    let mut phi = Vec::with_capacity(n_samples);
    phi.push(-phi_a);
    let last_marched = (n_samples - 1) / 2;
    let mut prev = -phi_a;
    for _ in 1..=last_marched {
        let next = newton_cell(prev, step)?;
        phi.push(next);
        prev = next;
    }
    if n_samples % 2 == 1 {
        phi[last_marched] = 0.0;
    }
    for i in phi.len()..n_samples {
        let mirror = phi[n_samples - 1 - i];
        phi.push(-mirror);
    }

    let mut theta: Vec<f64> = Vec::with_capacity(n_samples);
    for (i, &p) in phi.iter().enumerate() {
        let mirror = n_samples - 1 - i;
        let t = if i == 0 {
            0.0
        } else if i == n_samples - 1 {
            2.0 * alpha
        } else if i > last_marched {
            2.0 * alpha - theta[mirror]
        } else {
            theta_of(alpha, p)
        };
        theta.push(t);
    }
    let curvature = phi.iter().map(|&p| spec.k_alpha * cos(p)).collect();
    let arc = TangentAngleArc::new(spec.l_alpha, theta, Point::new(0.0, -1.0))?;
    Ok(OptimalArc { spec, arc, curvature })
}

/// Finds `φ₁ > φ₀` with `∫_{φ₀}^{φ₁} speed = step`.
fn newton_cell(phi0: f64, step: f64) -> Result<f64> {
    let mut phi1 = phi0 + step / speed(phi0);
    for _ in 0..50 {
        let r = cell(phi0, phi1) - step;
        let dphi = r / speed(phi1);
        phi1 -= dphi;
        if dphi.abs() <= 2.0 * f64::EPSILON * phi1.abs().max(1.0) {
            return Ok(phi1);
        }
    }
    Err(Error::Quadrature { est_error: (cell(phi0, phi1) - step).abs() })
}

impl OptimalArc {
    /// Largest `|½θ′² + λ₂ sin θ + λ₁ cos θ|` over the samples.
    pub fn first_integral_residual(&self) -> f64 {
        self.arc
            .theta()
            .iter()
            .zip(&self.curvature)
            .map(|(&t, &k)| self.spec.first_integral_residual(t, k).abs())
            .fold(0.0, f64::max)
    }

    /// Largest `|k″ + ½k³|` over interior samples, with `k″` by central
    /// second differences of the sampled curvature.
    pub fn shape_derivative_residual(&self) -> f64 {
        let ds = self.arc.ds();
        self.curvature
            .windows(3)
            .map(|w| ((w[2] - 2.0 * w[1] + w[0]) / (ds * ds) + 0.5 * w[1] * w[1] * w[1]).abs())
            .fold(0.0, f64::max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::math::{FRAC_PI_2, PI};
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    #[test]
    fn endpoints_and_midpoint() {
        for &alpha in &[0.1, 0.5, PI / 4.0, 1.2, FRAC_PI_2] {
            for n in [17, 64, 401] {
                let arc = build_arc(alpha, n).unwrap();
                let th = arc.arc.theta();
                assert_eq!(th[0], 0.0);
                assert_eq!(th[n - 1], 2.0 * alpha);
                if n % 2 == 1 {
                    assert_abs_diff_eq!(th[n / 2], alpha, epsilon = 1e-10);
                }
                assert!(th.windows(2).all(|w| w[1] > w[0]));
            }
        }
    }

    #[test]
    fn curvature_matches_the_ode() {
        let arc = build_arc(1.0, 101).unwrap();
        let k = arc.spec.k_alpha;
        for (t, c) in arc.arc.theta().iter().zip(&arc.curvature) {
            assert_abs_diff_eq!(*c, k * sqrt(cos(t - 1.0)), epsilon = 1e-12);
        }
        assert_abs_diff_eq!(arc.curvature[0], arc.spec.endpoint_curvature(), epsilon = 1e-14);
        assert_abs_diff_eq!(arc.curvature[100], arc.curvature[0], epsilon = 1e-14);
    }

    #[test]
    fn inverts_the_arclength_exactly() {
        // θ(s) is recovered to rounding: check s(θ) by direct quadrature at a few samples
        let alpha = 1.2;
        let arc = build_arc(alpha, 41).unwrap();
        let k = arc.spec.k_alpha;
        for i in [1, 7, 13, 20] {
            let th = arc.arc.theta()[i];
            let s =
                crate::quadrature::adaptive_simpson(|u| 1.0 / sqrt(cos(u - alpha)), 0.0, th, 1e-14).unwrap().value / k;
            assert_abs_diff_eq!(s, i as f64 * arc.arc.ds(), epsilon = 1e-12);
        }
    }

    #[test]
    fn energy_converges_to_closed_form() {
        for &alpha in &[0.2, PI / 4.0, FRAC_PI_2] {
            let arc = build_arc(alpha, 4000).unwrap();
            assert_relative_eq!(arc.arc.elastic_energy(), arc.spec.energy(), max_relative = 1e-5);
        }
    }

    #[test]
    fn first_integral_vanishes() {
        for &alpha in &[0.05, 0.7, FRAC_PI_2] {
            assert!(build_arc(alpha, 500).unwrap().first_integral_residual() < 1e-12);
        }
    }

    #[test]
    fn rejects_small_grids() {
        assert!(build_arc(1.0, 15).is_err());
        assert!(build_arc(0.0, 100).is_err());
    }
}
