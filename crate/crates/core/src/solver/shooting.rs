//! The pendulum formulation for `α = π/2`.
//!
//! A critical arc satisfies `θ′ = √(c² − a₀ sin θ)` with `θ(0) = 0`. It hits
//! `θ = π` after `L = ∫₀^π du/√(c² − a₀ sin u)`, the vertical closure reads
//! `∫₀^{π/2} sin u/√(c² − a₀ sin u) du = 1`, and its energy is
//! `E = c²L/2 − a₀`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::math::{asin, cos, sin, sq, sqrt, FRAC_PI_2, PI};
use crate::quadrature::{adaptive_simpson, invert_monotone};

const STEP_TOL: f64 = 1e-12;
const MAP_TOL: f64 = 1e-13;

/// A trajectory of the pendulum equation from `θ = 0` to `θ = π`.
#[derive(Debug, Clone, PartialEq)]
pub struct PendulumPath {
    /// Arclength at each accepted step.
    pub s: Vec<f64>,
    /// Angle at each accepted step.
    pub theta: Vec<f64>,
    /// Arclength at which `θ = π`.
    pub l_hit: f64,
    /// `∫ cos θ ds` up to the hit.
    pub int_cos: f64,
    /// `∫ sin θ ds` up to the hit.
    pub int_sin: f64,
    /// `½ ∫ θ′² ds` up to the hit.
    pub energy: f64,
}

type State = [f64; 4];

fn rhs(c2: f64, a0: f64, y: &State) -> State {
    let (s, c) = (sin(y[0]), cos(y[0]));
    let k2 = (c2 - a0 * s).max(0.0);
    [sqrt(k2), c, s, 0.5 * k2]
}

fn rk4(c2: f64, a0: f64, y: &State, h: f64) -> State {
    let add = |y: &State, k: &State, t: f64| [y[0] + t * k[0], y[1] + t * k[1], y[2] + t * k[2], y[3] + t * k[3]];
    let k1 = rhs(c2, a0, y);
    let k2 = rhs(c2, a0, &add(y, &k1, 0.5 * h));
    let k3 = rhs(c2, a0, &add(y, &k2, 0.5 * h));
    let k4 = rhs(c2, a0, &add(y, &k3, h));
    let mut out = *y;
    for i in 0..4 {
        out[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    out
}

/// Integrates `θ′ = √(c² − a₀ sin θ)` from `θ(0) = 0` by fourth-order
/// Runge–Kutta with step doubling, until `θ = π` or `s = l_max`.
///
/// If `c² − a₀ sin θ` vanishes somewhere on `[0, π]` the trajectory cannot
/// pass that angle and the failure is [`Error::TurningPoint`]; otherwise
/// running out of length is [`Error::LengthExhausted`].
pub fn shoot_pendulum(c: f64, a0: f64, l_max: f64) -> Result<PendulumPath> {
    if !(c >= 0.0 && c.is_finite()) {
        return Err(Error::Domain { name: "c", value: c, expected: "[0, ∞)" });
    }
    if !a0.is_finite() {
        return Err(Error::Domain { name: "a0", value: a0, expected: "finite" });
    }
    if !(l_max > 0.0 && l_max.is_finite()) {
        return Err(Error::Domain { name: "l_max", value: l_max, expected: "(0, ∞)" });
    }
    let c2 = c * c;
    let turn = if c2 == 0.0 && a0 >= 0.0 {
        Some(0.0)
    } else if a0 > 0.0 && c2 <= a0 * (1.0 + 1e-12) {
        Some(asin((c2 / a0).min(1.0)))
    } else if c2 == 0.0 {
        Some(0.0)
    } else {
        None
    };
    let stalled = |s: f64, theta: f64| match turn {
        Some(_) => Error::TurningPoint { s, theta },
        None => Error::LengthExhausted { l_max, theta },
    };
    if turn == Some(0.0) {
        return Err(stalled(0.0, 0.0));
    }

    let mut y: State = [0.0; 4];
    let mut s = 0.0;
    let mut h = (l_max * 1e-3).min(1e-2);
    let mut path_s = alloc::vec![0.0];
    let mut path_t = alloc::vec![0.0];
    while s < l_max {
        if let Some(t) = turn {
            if y[0] >= t - 1e-10 {
                return Err(stalled(s, y[0]));
            }
        }
        h = h.min(l_max - s);
        if h < 1e-15 * l_max.max(1.0) {
            return Err(stalled(s, y[0]));
        }
        let full = rk4(c2, a0, &y, h);
        let half = rk4(c2, a0, &rk4(c2, a0, &y, 0.5 * h), 0.5 * h);
        let err = (0..4).map(|i| (half[i] - full[i]).abs()).fold(0.0, f64::max) / 15.0;
        // below the rounding level of the state, a smaller step cannot help
        let floor = 8.0 * f64::EPSILON * half.iter().fold(1.0f64, |m, v| m.max(v.abs()));
        let tol = (STEP_TOL * h).max(floor);
        if err > tol {
            h *= (0.9 * sqrt(sqrt(tol / err))).max(0.1);
            continue;
        }
        let mut next = half;
        for i in 0..4 {
            next[i] += (half[i] - full[i]) / 15.0;
        }
        if next[0] >= PI {
            let hit = land_on_pi(c2, a0, &y, h);
            let end = rk4(c2, a0, &rk4(c2, a0, &y, 0.5 * hit), 0.5 * hit);
            path_s.push(s + hit);
            path_t.push(PI);
            return Ok(PendulumPath {
                s: path_s,
                theta: path_t,
                l_hit: s + hit,
                int_cos: end[1],
                int_sin: end[2],
                energy: end[3],
            });
        }
        y = next;
        s += h;
        path_s.push(s);
        path_t.push(y[0]);
        let grow = if err > 0.0 { 0.9 * sqrt(sqrt(tol / err)) } else { 4.0 };
        h *= grow.clamp(0.2, 4.0);
    }
    Err(stalled(s, y[0]))
}

/// Step `h* ∈ (0, h]` from `y` that lands on `θ = π`, by safeguarded secant.
fn land_on_pi(c2: f64, a0: f64, y: &State, h: f64) -> f64 {
    let g = |t: f64| rk4(c2, a0, &rk4(c2, a0, y, 0.5 * t), 0.5 * t)[0] - PI;
    let (mut lo, mut hi) = (0.0, h);
    let (mut glo, mut ghi) = (y[0] - PI, g(h));
    for _ in 0..200 {
        let mut t = lo - glo * (hi - lo) / (ghi - glo);
        if !(t > lo && t < hi) {
            t = 0.5 * (lo + hi);
        }
        let gt = g(t);
        if gt.abs() < 1e-15 || hi - lo < 1e-16 {
            return t;
        }
        if gt < 0.0 {
            lo = t;
            glo = gt;
            ghi *= 0.5;
        } else {
            hi = t;
            ghi = gt;
            glo *= 0.5;
        }
    }
    0.5 * (lo + hi)
}

/// `sin(w)/w`, continuous at zero.
fn sinc(w: f64) -> f64 {
    if w.abs() < 1e-4 {
        1.0 - w * w / 6.0
    } else {
        sin(w) / w
    }
}

/// `(L, G)` for `p = c²` and `q = a₀`:
/// `L = ∫₀^π du/√(p − q sin u)`, `G = ∫₀^{π/2} sin u/√(p − q sin u) du`.
///
/// Both are integrated after `u = v²`, which keeps them regular as `p → 0`.
pub fn shooting_map(p: f64, q: f64) -> Result<(f64, f64)> {
    if !(p >= 0.0 && p > q && (p > 0.0 || q < 0.0)) {
        return Err(Error::Domain { name: "c²", value: p, expected: "c² > max(a₀, 0), or c = 0 with a₀ < 0" });
    }
    // for q > 0, p − q sin u = (p − q) + 2q sin²(π/4 − u/2) avoids cancellation when q ≈ p
    let gap = p - q;
    let radicand = move |u: f64| if q > 0.0 { gap + 2.0 * q * sq(sin(0.25 * PI - 0.5 * u)) } else { p - q * sin(u) };
    // 2v/√(p − q sin v²), regular at v = 0 even when p = 0
    let weight = move |v: f64| {
        if v == 0.0 {
            if p == 0.0 {
                2.0 / sqrt(-q)
            } else {
                0.0
            }
        } else if p == 0.0 {
            2.0 / sqrt(-q * sinc(v * v))
        } else {
            2.0 * v / sqrt(radicand(v * v))
        }
    };
    let top = sqrt(FRAC_PI_2);
    let half_length = adaptive_simpson(weight, 0.0, top, MAP_TOL)?.value;
    let g = adaptive_simpson(|v| sin(v * v) * weight(v), 0.0, top, MAP_TOL)?.value;
    Ok((2.0 * half_length, g))
}

/// Supremum of the lengths reachable by the shooting family: the `c → 0`
/// limit, where `G(0, a₀) = 1` forces `a₀ = −(∫₀^{π/2} √sin u du)²`.
pub fn length_supremum() -> Result<f64> {
    let (_, g1) = shooting_map(0.0, -1.0)?;
    Ok(shooting_map(0.0, -g1 * g1)?.0)
}

/// A solved boundary-value problem for `α = π/2`.
#[derive(Debug, Clone, PartialEq)]
pub struct ShootingSolution {
    /// Curvature at the start, `θ′(0) = c`.
    pub c: f64,
    /// Pendulum parameter `a₀`.
    pub a0: f64,
    /// Prescribed length.
    pub length: f64,
    /// `c²L/2 − a₀`.
    pub energy: f64,
    /// `½∫θ′²` along the integrated path.
    pub energy_path: f64,
    /// The integrated path.
    pub path: PendulumPath,
}

/// Finds `(c, a₀)` whose trajectory hits `θ = π` at `length` and satisfies
/// the vertical closure `G = 1` of [`shooting_map`].
///
/// For each `c` the closure fixes `a₀`, and the length along that curve is
/// then a monotone function of `c` alone, so the two conditions reduce to a
/// bracketed scalar root. Solutions exist for `π ≤ L <` [`length_supremum`];
/// above it the result is [`Error::Bracket`]. A root whose residuals are
/// still too large is reported as [`Error::NewtonDivergence`].
pub fn solve_bvp_via_shooting(length: f64) -> Result<ShootingSolution> {
    if !(length >= PI * (1.0 - 1e-12) && length.is_finite()) {
        return Err(Error::Domain { name: "L", value: length, expected: "[π, ∞)" });
    }
    let sup = length_supremum()?;
    if length >= sup {
        return Err(Error::Bracket { target: length, lo: PI, hi: sup });
    }
    // along the closure curve G = 1 the length decreases from sup (c = 0) to π (c = 1);
    // a one-dimensional search in c stays well conditioned as c → 0
    let closed_length = |c: f64| -> Result<f64> {
        let q = closure_a0(c)?;
        Ok(shooting_map(c * c, q)?.0)
    };
    let failure = core::cell::Cell::new(None);
    let neg_length = |c: f64| match closed_length(c) {
        Ok(l) => -l,
        Err(e) => {
            failure.set(Some(e));
            f64::NAN
        }
    };
    let c = if length <= PI { 1.0 } else { invert_monotone(neg_length, -length, (0.0, 1.0))? };
    if let Some(e) = failure.take() {
        return Err(e);
    }
    let q = if c == 1.0 { 0.0 } else { closure_a0(c)? };
    let (l, g) = shooting_map(c * c, q)?;
    if !((l - length).abs() < 1e-9 && (g - 1.0).abs() < 1e-10) {
        return Err(Error::NewtonDivergence(l - length, g - 1.0));
    }
    let energy = 0.5 * c * c * length - q;
    let path = shoot_pendulum(c, q, length * (1.0 + 1e-6) + 1e-9)?;
    Ok(ShootingSolution { c, a0: q, length, energy, energy_path: path.energy, path })
}

/// The `a₀` with `G(c², a₀) = 1`; `G` increases in `a₀` and diverges as `a₀ → c²`.
fn closure_a0(c: f64) -> Result<f64> {
    let p = c * c;
    let g = |q: f64| shooting_map(p, q).map(|r| r.1).unwrap_or(f64::NAN);
    let mut lo = -2.0;
    while g(lo) > 1.0 {
        lo *= 2.0;
    }
    // approach the singular end geometrically instead of probing it directly
    let mut gap = 0.1 * p.max(1e-2);
    while !(g(p - gap) > 1.0) {
        gap *= 0.1;
        if gap < 1e-12 * p.max(1e-2) {
            return Err(Error::Bracket { target: 1.0, lo, hi: p });
        }
    }
    invert_monotone(g, 1.0, (lo, p - gap))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn unit_circle() {
        let p = shoot_pendulum(1.0, 0.0, 10.0).unwrap();
        assert_abs_diff_eq!(p.l_hit, PI, epsilon = 1e-10);
        assert_abs_diff_eq!(p.int_sin, 2.0, epsilon = 1e-10);
        assert_abs_diff_eq!(p.int_cos, 0.0, epsilon = 1e-10);
        assert_abs_diff_eq!(p.energy, PI / 2.0, epsilon = 1e-10);
    }

    #[test]
    fn stall_and_exhaustion_are_distinct() {
        assert!(matches!(shoot_pendulum(1.0, 0.0, 1.0), Err(Error::LengthExhausted { .. })));
        assert!(matches!(shoot_pendulum(0.5, 1.0, 10.0), Err(Error::TurningPoint { .. })));
        assert!(matches!(shoot_pendulum(1.0, 1.0, 50.0), Err(Error::TurningPoint { .. })));
        assert!(matches!(shoot_pendulum(0.0, 0.5, 1.0), Err(Error::TurningPoint { .. })));
    }

    #[test]
    fn map_matches_the_circle() {
        let (l, g) = shooting_map(1.0, 0.0).unwrap();
        assert_abs_diff_eq!(l, PI, epsilon = 1e-12);
        assert_abs_diff_eq!(g, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn circle_solves_the_bvp_at_length_pi() {
        let s = solve_bvp_via_shooting(PI).unwrap();
        assert_abs_diff_eq!(s.c, 1.0, epsilon = 1e-8);
        assert_abs_diff_eq!(s.a0, 0.0, epsilon = 1e-8);
        assert!(solve_bvp_via_shooting(3.0).is_err());
    }

    #[test]
    fn sine_integral_agrees_with_the_map() {
        let path = shoot_pendulum(1.2, 0.5, 10.0).unwrap();
        let (_, g) = shooting_map(1.44, 0.5).unwrap();
        assert_abs_diff_eq!(path.int_sin, 2.0 * g, epsilon = 1e-8);
    }

    #[test]
    fn small_c_approaches_the_supremum() {
        let a2 = sq(crate::quadrature::int_sqrt_cos(FRAC_PI_2).unwrap());
        let p = shoot_pendulum(1e-4, -a2, 10.0).unwrap();
        let sup = length_supremum().unwrap();
        assert!((p.l_hit - sup).abs() < 1e-3);
        assert!((p.int_sin - 2.0).abs() < 1e-3);

        let s = solve_bvp_via_shooting(sup - 1e-4).unwrap();
        assert!(s.c < 1e-3);
        assert_abs_diff_eq!(s.a0, -a2, epsilon = 1e-6);
        assert_abs_diff_eq!(s.energy, a2, epsilon = 1e-6);
        assert!(solve_bvp_via_shooting(sup + 1e-3).is_err());
    }

    #[test]
    fn energy_identity_across_lengths() {
        for l in [3.2, 3.6, 4.0, 4.3, 4.37] {
            let s = solve_bvp_via_shooting(l).unwrap();
            assert_abs_diff_eq!(s.path.l_hit, l, epsilon = 1e-9);
            assert_abs_diff_eq!(s.energy, s.energy_path, epsilon = 1e-7);
            assert_abs_diff_eq!(s.path.int_cos, 0.0, epsilon = 1e-8);
            assert_abs_diff_eq!(s.path.int_sin, 2.0, epsilon = 1e-8);
        }
    }
}
