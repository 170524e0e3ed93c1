//! Incomplete elliptic integral of the first kind and the Jacobi amplitude,
//! in the parameter convention
//!
//! ```text
//! F(φ | m) = ∫₀^φ dt / √(1 − m sin² t).
//! ```
//!
//! Parameters `m > 1` are allowed on their real branch
//! `|sin φ| ≤ 1/√m`, via the reciprocal-parameter transformation
//! `F(φ | m) = F(β | 1/m) / √m` with `sin β = √m sin φ`. That branch is
//! where `F(−π/4 | 2) = −½ ∫₀^{π/2} dt/√cos t` lives.

use super::{adaptive_simpson, invert_monotone_newton};
use crate::error::{Error, Result};
use crate::math::{asin, sin, sqrt, FRAC_PI_2, PI};

const TOL: f64 = 1e-14;

fn integrand(m: f64) -> impl Fn(f64) -> f64 {
    move |t: f64| {
        let s = sin(t);
        1.0 / sqrt(1.0 - m * s * s)
    }
}

/// Incomplete elliptic integral of the first kind `F(φ | m)`.
///
/// Errors with [`Error::Domain`] when `1 − m sin² t` turns negative on
/// `[0, φ]`, or when the integral diverges (`m = 1`, `|φ| ≥ π/2`).
pub fn elliptic_f(phi: f64, m: f64) -> Result<f64> {
    if !phi.is_finite() || !m.is_finite() {
        return Err(Error::Domain { name: "phi", value: phi, expected: "finite arguments" });
    }
    if phi == 0.0 {
        return Ok(0.0);
    }
    if m > 1.0 {
        let arg = sqrt(m) * sin(phi);
        if phi.abs() > FRAC_PI_2 || arg.abs() > 1.0 + 4.0 * f64::EPSILON {
            return Err(Error::Domain { name: "phi", value: phi, expected: "|sin φ| ≤ 1/√m for m > 1" });
        }
        let beta = asin(arg.clamp(-1.0, 1.0));
        return Ok(elliptic_f(beta, 1.0 / m)? / sqrt(m));
    }
    if m == 1.0 && phi.abs() >= FRAC_PI_2 {
        return Err(Error::Domain { name: "phi", value: phi, expected: "|φ| < π/2 for m = 1" });
    }
    // F(φ + kπ) = F(φ) + 2k K(m)
    let k = libm::round(phi / PI);
    let reduced = phi - k * PI;
    let mut value = adaptive_simpson(integrand(m), 0.0, reduced, TOL)?.value;
    if k != 0.0 {
        value += 2.0 * k * adaptive_simpson(integrand(m), 0.0, FRAC_PI_2, TOL)?.value;
    }
    Ok(value)
}

/// Jacobi amplitude `am(u | m)`: the `φ` with `F(φ | m) = u`.
///
/// For `m > 1` only the real branch `|u| ≤ F(asin(1/√m) | m)` is covered.
pub fn jacobi_am(u: f64, m: f64) -> Result<f64> {
    if u == 0.0 {
        return Ok(0.0);
    }
    let bound = if m > 1.0 {
        asin(1.0 / sqrt(m))
    } else if m == 1.0 {
        FRAC_PI_2 * (1.0 - 1e-15)
    } else {
        // |F'| lies between 1 and 1/√(1−m), so |φ| ≤ |u|·max(1, √(1−m)).
        u.abs() * 1.0f64.max(sqrt(1.0 - m)) * (1.0 + 1e-12) + 1e-300
    };
    let f = |phi: f64| elliptic_f(phi, m).unwrap_or(f64::NAN);
    let top = f(bound);
    if m >= 1.0 && u.abs() > top {
        return Err(Error::Domain { name: "u", value: u, expected: "|u| ≤ F(φ_max | m)" });
    }
    let df = |phi: f64| {
        let s = sin(phi);
        1.0 / sqrt((1.0 - m * s * s).max(0.0))
    };
    invert_monotone_newton(f, df, u, (-bound, bound), u.clamp(-bound, bound))
}
