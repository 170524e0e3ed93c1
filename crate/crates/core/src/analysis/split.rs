//! Sub-additivity of `E` and the contact-splitting argument.

use alloc::vec::Vec;

use super::h_alpha;
use crate::error::{Error, Result};
use crate::math::{sq, FRAC_PI_2, PI};
use crate::optimal_arc::energy_closed_form;
use crate::quadrature::gauss_legendre_8;
use crate::search::golden_section;

/// Below this total angle the gap is integrated from `E′` instead of
/// differenced, since `E(α) + E(β) − E(α + β) = O(α⁵)` is lost to rounding.
const STABLE_BELOW: f64 = 0.05;

/// `E(t)` on `[0, π/2]` with `E(0) = 0`.
fn energy0(t: f64) -> Result<f64> {
    if t == 0.0 {
        Ok(0.0)
    } else {
        energy_closed_form(t)
    }
}

/// `1 − E′(t) = (1 − h(t))²`, with `t = 0` allowed.
fn one_minus_e_prime(t: f64) -> Result<f64> {
    if t == 0.0 {
        return Ok(0.0);
    }
    Ok(sq(1.0 - h_alpha(t)?))
}

/// `E(α) + E(β) − E(α + β)` for `α, β > 0`, `α + β ≤ π/2`.
///
/// For small angles it is computed as
/// `∫₀^β [(1 − h(α + t))² − (1 − h(t))²] dt`, which keeps relative accuracy.
pub fn subadditivity_gap(alpha: f64, beta: f64) -> Result<f64> {
    if !(alpha > 0.0 && beta > 0.0 && alpha + beta <= FRAC_PI_2) {
        return Err(Error::Domain { name: "alpha + beta", value: alpha + beta, expected: "(0, π/2], both positive" });
    }
    if alpha + beta >= STABLE_BELOW {
        return Ok(energy_closed_form(alpha)? + energy_closed_form(beta)? - energy_closed_form(alpha + beta)?);
    }
    let panels = 16;
    let mut err = None;
    let mut total = 0.0;
    for k in 0..panels {
        let a = beta * k as f64 / panels as f64;
        let b = beta * (k + 1) as f64 / panels as f64;
        total += gauss_legendre_8(
            |t| match (one_minus_e_prime(alpha + t), one_minus_e_prime(t)) {
                (Ok(x), Ok(y)) => x - y,
                (Err(e), _) | (_, Err(e)) => {
                    err = Some(e);
                    0.0
                }
            },
            a,
            b,
        );
    }
    match err {
        Some(e) => Err(e),
        None => Ok(total),
    }
}

/// Smallest sub-additivity gap over a grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SubadditivityReport {
    /// Grid size per axis.
    pub grid_n: usize,
    /// Admissible pairs checked.
    pub pairs: usize,
    /// Pairs whose gap is not strictly positive.
    pub violations: usize,
    /// Smallest gap found.
    pub min_gap: f64,
    /// Pair `(α, β)` attaining it.
    pub argmin: (f64, f64),
}

/// Checks `E(α + β) < E(α) + E(β)` for all `α = (π/2)i/n`, `β = (π/2)j/n`,
/// `i, j ≥ 1`, `i + j ≤ n`.
pub fn subadditivity_scan(grid_n: usize) -> Result<SubadditivityReport> {
    if grid_n < 2 {
        return Err(Error::Domain { name: "grid_n", value: grid_n as f64, expected: "at least 2" });
    }
    let step = FRAC_PI_2 / grid_n as f64;
    let angle = |i: usize| if i == grid_n { FRAC_PI_2 } else { step * i as f64 };
    let e: Vec<f64> = (0..=grid_n).map(|i| energy0(angle(i))).collect::<Result<_>>()?;
    let mut report =
        SubadditivityReport { grid_n, pairs: 0, violations: 0, min_gap: f64::INFINITY, argmin: (0.0, 0.0) };
    for i in 1..grid_n {
        for j in 1..=grid_n - i {
            let gap = if angle(i + j) < STABLE_BELOW {
                subadditivity_gap(angle(i), angle(j))?
            } else {
                e[i] + e[j] - e[i + j]
            };
            report.pairs += 1;
            if !(gap > 0.0) {
                report.violations += 1;
            }
            if gap < report.min_gap {
                report.min_gap = gap;
                report.argmin = (angle(i), angle(j));
            }
        }
    }
    Ok(report)
}

/// Minimum of `e(t) = E(t) + E(γ − t)` over `t ∈ [γ − π/2, π/2]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContactSplit {
    /// Total angle `γ`.
    pub gamma: f64,
    /// Minimizer.
    pub t_min: f64,
    /// `e(t_min)`.
    pub e_min: f64,
    /// Distance from the minimizer to the nearer end of the interval.
    pub endpoint_distance: f64,
    /// Whether the grid values of `e` rise up to `γ/2` and fall after it.
    pub peaks_at_middle: bool,
}

/// Minimizes `e(t)` by a grid scan refined with golden section.
pub fn contact_split(gamma: f64, grid_n: usize) -> Result<ContactSplit> {
    if !(FRAC_PI_2..=PI).contains(&gamma) {
        return Err(Error::Domain { name: "gamma", value: gamma, expected: "[π/2, π]" });
    }
    let lo = (gamma - FRAC_PI_2).max(0.0);
    let hi = FRAC_PI_2;
    let e = |t: f64| -> Result<f64> {
        let t = t.clamp(lo, hi);
        Ok(energy0(t)? + energy0((gamma - t).clamp(0.0, FRAC_PI_2))?)
    };
    if hi - lo <= 0.0 {
        return Ok(ContactSplit { gamma, t_min: hi, e_min: e(hi)?, endpoint_distance: 0.0, peaks_at_middle: true });
    }
    let n = grid_n.max(2);
    let ts: Vec<f64> = (0..=n).map(|k| if k == n { hi } else { lo + (hi - lo) * k as f64 / n as f64 }).collect();
    let vals: Vec<f64> = ts.iter().map(|&t| e(t)).collect::<Result<_>>()?;
    let (k, _) = vals.iter().enumerate().fold((0, f64::INFINITY), |acc, (i, &v)| if v < acc.1 { (i, v) } else { acc });
    let (a, b) = (ts[k.saturating_sub(1)], ts[(k + 1).min(n)]);
    let refined = golden_section(e, a, b, 1e-10)?;
    let (t_min, e_min) = if vals[k] <= refined.value { (ts[k], vals[k]) } else { (refined.x, refined.value) };

    let mid = 0.5 * gamma;
    let peaks_at_middle = ts.windows(2).zip(vals.windows(2)).all(|(t, v)| {
        if t[1] <= mid {
            v[1] >= v[0]
        } else if t[0] >= mid {
            v[1] <= v[0]
        } else {
            true
        }
    });
    Ok(ContactSplit { gamma, t_min, e_min, endpoint_distance: (t_min - lo).min(hi - t_min), peaks_at_middle })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    #[test]
    fn quarter_turn_pair() {
        let gap = subadditivity_gap(PI / 4.0, PI / 4.0).unwrap();
        assert_abs_diff_eq!(gap, 2.0 * 0.783_456_034_2 - 1.435_540_022_09, epsilon = 1e-9);
    }

    #[test]
    fn stable_gap_matches_series() {
        for &a in &[1e-4, 1e-3, 1e-2] {
            // 2E(a) − E(2a) with E(a) = a − a⁵/180 + O(a⁷)
            assert_relative_eq!(subadditivity_gap(a, a).unwrap(), a.powi(5) / 6.0, max_relative = 1e-3);
        }
    }

    #[test]
    fn small_scan() {
        let r = subadditivity_scan(20).unwrap();
        assert_eq!(r.pairs, 190);
        assert_eq!(r.violations, 0);
        assert!(r.min_gap > 0.0);
    }

    #[test]
    fn split_at_pi_is_the_full_domain() {
        let s = contact_split(PI, 50).unwrap();
        assert_eq!(s.t_min, FRAC_PI_2);
        assert_relative_eq!(s.e_min, 2.0 * energy_closed_form(FRAC_PI_2).unwrap(), max_relative = 1e-14);
    }

    #[test]
    fn split_minimum_at_an_end() {
        for gamma in [FRAC_PI_2, FRAC_PI_2 + 0.1, 3.0 * PI / 4.0, PI - 0.1] {
            let s = contact_split(gamma, 200).unwrap();
            assert!(s.endpoint_distance < 1e-6, "gamma = {gamma}");
            assert!(s.peaks_at_middle);
        }
        let s = contact_split(FRAC_PI_2, 100).unwrap();
        assert_relative_eq!(s.e_min, energy_closed_form(FRAC_PI_2).unwrap(), max_relative = 1e-14);
        assert!(contact_split(1.0, 10).is_err());
    }
}
