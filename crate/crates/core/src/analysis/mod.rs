//! Calculus of the optimal energy `E(α)` and the checks built on it.
//!
//! With `C(α) = ∫₀^α √cos t dt` and `h(α) = √cos α · C(α)/sin α`:
//!
//! ```text
//! E′(α) = h(2 − h)
//! E″(α) = (2 cos α/sin α)(1 − h)(1 − h(1 + tan²α/2))
//! R(α)  = C(α) − 2 sin α cos^{3/2}α/(1 + cos²α),   R′(α) = 16 sin²α √cos α/(cos 2α + 3)²
//! ```
//!
//! `E″ < 0` and `R ≥ 0` give concavity and then sub-additivity of `E`.

mod inequalities;
mod random_body;
mod split;

pub use inequalities::{inequality_suite, InequalityCheck, InequalityReport, INEQUALITY_TOL, REFUSE_TURNING};
pub use random_body::{random_smooth_body, ShapeFamily};
pub use split::{contact_split, subadditivity_gap, subadditivity_scan, ContactSplit, SubadditivityReport};

use alloc::vec::Vec;

use crate::error::Result;
use crate::math::{cos, cos_from_right, sin, sq, sqrt, FRAC_PI_2};
use crate::optimal_arc::{check_alpha, energy_closed_form};
use crate::quadrature::int_sqrt_cos;

/// `h(α) = √cos α · C(α)/sin α`, the endpoint curvature of the optimal arc.
pub fn h_alpha(alpha: f64) -> Result<f64> {
    check_alpha(alpha)?;
    Ok(h_from(alpha, int_sqrt_cos(alpha)?))
}

fn h_from(alpha: f64, c: f64) -> f64 {
    sqrt(cos_from_right(alpha)) * c / sin(alpha)
}

/// `E′(α) = h(2 − h)`.
pub fn e_prime(alpha: f64) -> Result<f64> {
    let h = h_alpha(alpha)?;
    Ok(h * (2.0 - h))
}

/// `E″(α)`, evaluated as `(2 cos α/sin α)(1 − h)² − (1 − h)·C(α)/√cos α`,
/// which is the displayed formula with `h tan²α` expanded. Tends to `−∞` at
/// `π/2`, where it returns `-inf`.
pub fn e_second(alpha: f64) -> Result<f64> {
    check_alpha(alpha)?;
    let c = int_sqrt_cos(alpha)?;
    let cosa = cos_from_right(alpha);
    let h = h_from(alpha, c);
    if cosa == 0.0 {
        return Ok(f64::NEG_INFINITY);
    }
    Ok(2.0 * cosa / sin(alpha) * sq(1.0 - h) - (1.0 - h) * c / sqrt(cosa))
}

/// `R(α) = C(α) − 2 sin α/(√cos α (2 + tan²α))`, in the form
/// `C(α) − 2 sin α cos^{3/2}α/(1 + cos²α)` that stays finite at `π/2`.
/// Defined on `[0, π/2]` with `R(0) = 0`.
pub fn r_alpha(alpha: f64) -> Result<f64> {
    if alpha == 0.0 {
        return Ok(0.0);
    }
    check_alpha(alpha)?;
    let cosa = cos_from_right(alpha);
    Ok(int_sqrt_cos(alpha)? - 2.0 * sin(alpha) * cosa * sqrt(cosa) / (1.0 + cosa * cosa))
}

/// `R′(α) = 16 sin²α √cos α/(cos 2α + 3)²` on `[0, π/2]`.
pub fn r_prime(alpha: f64) -> Result<f64> {
    if alpha != 0.0 {
        check_alpha(alpha)?;
    }
    let cosa = cos_from_right(alpha);
    Ok(16.0 * sq(sin(alpha)) * sqrt(cosa) / sq(cos(2.0 * alpha) + 3.0))
}

/// Step of the finite differences used to cross-check derivatives.
pub const FD_STEP: f64 = 1e-5;

/// Finite-difference `E′`: central where `α ± δ` are admissible, second-order
/// one-sided otherwise.
pub fn e_prime_fd(alpha: f64, step: f64) -> Result<f64> {
    check_alpha(alpha)?;
    let e = |a: f64| energy_closed_form(a);
    if alpha + step <= FRAC_PI_2 && alpha - step > 0.0 {
        Ok((e(alpha + step)? - e(alpha - step)?) / (2.0 * step))
    } else if alpha + step > FRAC_PI_2 {
        Ok((3.0 * e(alpha)? - 4.0 * e(alpha - step)? + e(alpha - 2.0 * step)?) / (2.0 * step))
    } else {
        Ok((-3.0 * e(alpha)? + 4.0 * e(alpha + step)? - e(alpha + 2.0 * step)?) / (2.0 * step))
    }
}

/// One row of [`EAlphaTable`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EAlphaRow {
    /// Half contact angle.
    pub alpha: f64,
    /// `E(α)`.
    pub e: f64,
    /// `E′` from the closed form.
    pub e_prime: f64,
    /// `E′` by finite differences.
    pub e_prime_fd: f64,
    /// `E″`.
    pub e_second: f64,
    /// `h(α)`.
    pub h: f64,
    /// `R(α)`.
    pub r: f64,
}

/// `E`, its derivatives, `h` and `R` on the grid `αₖ = (π/2)·k/n`, `k = 1..=n`.
#[derive(Debug, Clone, PartialEq)]
pub struct EAlphaTable {
    /// Rows in increasing `α`.
    pub rows: Vec<EAlphaRow>,
}

impl EAlphaTable {
    /// Tabulates `n ≥ 2` rows.
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(crate::Error::Domain { name: "grid", value: n as f64, expected: "at least 2 rows" });
        }
        let rows = (1..=n)
            .map(|k| {
                let alpha = if k == n { FRAC_PI_2 } else { FRAC_PI_2 * k as f64 / n as f64 };
                Ok(EAlphaRow {
                    alpha,
                    e: energy_closed_form(alpha)?,
                    e_prime: e_prime(alpha)?,
                    e_prime_fd: e_prime_fd(alpha, FD_STEP)?,
                    e_second: e_second(alpha)?,
                    h: h_alpha(alpha)?,
                    r: r_alpha(alpha)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { rows })
    }

    /// Grid triples `α₁ < α₂ < α₃` (consecutive rows, and every row against
    /// the two ends) where `E(α₂)` falls below the chord by more than `1e−12`.
    pub fn concavity_violations(&self) -> usize {
        let r = &self.rows;
        let below = |a: &EAlphaRow, b: &EAlphaRow, c: &EAlphaRow| {
            let t = (b.alpha - a.alpha) / (c.alpha - a.alpha);
            b.e < (1.0 - t) * a.e + t * c.e - 1e-12
        };
        let mut count = r.windows(3).filter(|w| below(&w[0], &w[1], &w[2])).count();
        if r.len() >= 3 {
            let (first, last) = (&r[0], &r[r.len() - 1]);
            count += r[1..r.len() - 1].iter().filter(|m| below(first, m, last)).count();
        }
        count
    }

    /// Whether `h` strictly decreases down the table. Observed, not claimed.
    pub fn h_decreasing(&self) -> bool {
        self.rows.windows(2).all(|w| w[1].h < w[0].h)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::math::PI;
    use approx::assert_abs_diff_eq;

    #[test]
    fn h_limits() {
        assert_eq!(h_alpha(FRAC_PI_2).unwrap(), 0.0);
        assert_abs_diff_eq!(h_alpha(1e-3).unwrap(), 1.0, epsilon = 1e-6);
        assert_abs_diff_eq!(h_alpha(PI / 4.0).unwrap(), 0.885_130_52, epsilon = 1e-8);
    }

    #[test]
    fn e_prime_values() {
        assert_eq!(e_prime(FRAC_PI_2).unwrap(), 0.0);
        assert_abs_diff_eq!(e_prime(1e-3).unwrap(), 1.0, epsilon = 1e-9);
        assert_abs_diff_eq!(e_prime(PI / 4.0).unwrap(), 0.986_805_002_144, epsilon = 1e-11);
    }

    #[test]
    fn e_second_value_and_sign() {
        assert_abs_diff_eq!(e_second(PI / 4.0).unwrap(), -0.075_284_488_3, epsilon = 1e-9);
        assert_eq!(e_second(FRAC_PI_2).unwrap(), f64::NEG_INFINITY);
    }

    #[test]
    fn r_at_zero() {
        assert_eq!(r_alpha(0.0).unwrap(), 0.0);
        assert_eq!(r_prime(0.0).unwrap(), 0.0);
        assert!(r_alpha(FRAC_PI_2).unwrap() > 1.19);
    }

    #[test]
    fn table_shape() {
        let t = EAlphaTable::new(10).unwrap();
        assert_eq!(t.rows.len(), 10);
        assert_eq!(t.rows[9].alpha, FRAC_PI_2);
        assert_eq!(t.rows[9].e_prime, 0.0);
        assert_eq!(t.concavity_violations(), 0);
        assert!(t.h_decreasing());
    }
}
