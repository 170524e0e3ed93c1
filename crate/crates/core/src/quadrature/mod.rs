//! Quadrature for the two special integrals of the problem,
//!
//! ```text
//! C(α) = ∫₀^α √cos t dt        and        S(α) = ∫₀^α dt / √cos t ,
//! ```
//!
//! on `0 ≤ α ≤ π/2`, plus monotone inversion and the elliptic integral of the
//! first kind in the parameter (`m`) convention.
//!
//! Both integrands misbehave at `t = π/2`: `√cos` has an unbounded derivative
//! and `1/√cos` is integrable but unbounded. The last stretch
//! `[π/2 − TAIL, α]` is therefore mapped by `t = π/2 − v²`, which turns the
//! integrands into `2v·√sin(v²)` and `2v/√sin(v²)`, both smooth in `v`.

mod elliptic;

pub use elliptic::{elliptic_f, jacobi_am};

use crate::error::{Error, Result};
use crate::math::{cos, sin, sqrt, FRAC_PI_2};

/// Width of the interval next to `π/2` that is integrated after substitution.
const TAIL: f64 = 0.25;
/// Target absolute error of the special integrals. Far below what any caller
/// needs, but the sub-additivity gaps of `E(α)` near zero are `O(α⁵)`.
const SPECIAL_TOL: f64 = 1e-14;
const MAX_DEPTH: u32 = 48;
/// Evaluation budget; refinement stops (and the result is flagged) beyond it.
const MAX_EVALUATIONS: usize = 2_000_000;

/// Value of an adaptive integration together with its error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    /// Integral estimate.
    pub value: f64,
    /// Estimated absolute error.
    pub est_error: f64,
    /// Number of integrand evaluations.
    pub evaluations: usize,
}

/// Adaptive Simpson rule with Richardson correction on `[a, b]`.
///
/// Panels are split until the local error estimate drops under their share
/// of `tol`, or until the estimate is at the rounding floor of the panel.
/// Returns [`Error::Quadrature`] if the depth limit or the evaluation budget
/// is hit first.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Result<QuadResult> {
    if a == b {
        return Ok(QuadResult { value: 0.0, est_error: 0.0, evaluations: 0 });
    }
    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    let mut state = SimpsonState { evaluations: 3, est_error: 0.0, exhausted: false };
    let value = simpson_step(&f, a, b, fa, fm, fb, whole, tol, MAX_DEPTH, &mut state);
    if state.exhausted && state.est_error > tol {
        return Err(Error::Quadrature { est_error: state.est_error });
    }
    Ok(QuadResult { value, est_error: state.est_error, evaluations: state.evaluations })
}

struct SimpsonState {
    evaluations: usize,
    est_error: f64,
    exhausted: bool,
}

#[allow(clippy::too_many_arguments)]
fn simpson_step<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
    state: &mut SimpsonState,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    state.evaluations += 2;
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    let floor = 64.0 * f64::EPSILON * (left.abs() + right.abs());
    if delta.abs() <= 15.0 * tol || delta.abs() <= floor {
        state.est_error += delta.abs() / 15.0;
        return left + right + delta / 15.0;
    }
    if depth == 0 || state.evaluations > MAX_EVALUATIONS {
        state.exhausted = true;
        state.est_error += delta.abs() / 15.0;
        return left + right + delta / 15.0;
    }
    simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, state)
        + simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, state)
}

/// 8-point Gauss–Legendre rule on `[a, b]`; used on short panels of smooth
/// integrands where it is exact to rounding.
pub(crate) fn gauss_legendre_8<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64) -> f64 {
    const NODES: [f64; 4] =
        [0.183_434_642_495_649_8, 0.525_532_409_916_329, 0.796_666_477_413_626_7, 0.960_289_856_497_536_2];
    const WEIGHTS: [f64; 4] =
        [0.362_683_783_378_362, 0.313_706_645_877_887_3, 0.222_381_034_453_374_5, 0.101_228_536_290_376_3];
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let mut acc = 0.0;
    for (x, w) in NODES.iter().zip(WEIGHTS.iter()) {
        acc += w * (f(mid - half * x) + f(mid + half * x));
    }
    acc * half
}

fn check_angle(name: &'static str, alpha: f64) -> Result<()> {
    if (0.0..=FRAC_PI_2).contains(&alpha) {
        Ok(())
    } else {
        Err(Error::Domain { name, value: alpha, expected: "[0, π/2]" })
    }
}

/// `sin(w)/w`, continuous at zero.
fn sinc(w: f64) -> f64 {
    if w.abs() < 1e-4 {
        1.0 - w * w / 6.0
    } else {
        sin(w) / w
    }
}

/// Integrates `f` on `[0, α]` where `f(π/2 − v²)·2v = tail(v)` is the smooth
/// form of the integrand near `π/2`.
fn split_integral<F, G>(alpha: f64, f: F, tail: G) -> Result<f64>
where
    F: Fn(f64) -> f64,
    G: Fn(f64) -> f64,
{
    let cut = FRAC_PI_2 - TAIL;
    if alpha <= cut {
        return Ok(adaptive_simpson(f, 0.0, alpha, SPECIAL_TOL)?.value);
    }
    let head = adaptive_simpson(f, 0.0, cut, SPECIAL_TOL)?.value;
    let v_lo = sqrt((FRAC_PI_2 - alpha).max(0.0));
    let rest = adaptive_simpson(tail, v_lo, sqrt(TAIL), SPECIAL_TOL)?.value;
    Ok(head + rest)
}

/// `∫₀^α √cos t dt` for `α ∈ [0, π/2]`.
///
/// At `α = π/2` this is the constant `a ≈ 1.1981402` that sets the scale of
/// the optimal domain.
pub fn int_sqrt_cos(alpha: f64) -> Result<f64> {
    check_angle("alpha", alpha)?;
    split_integral(
        alpha,
        |t| sqrt(cos(t).max(0.0)),
        |v| {
            let w = v * v;
            2.0 * w * sqrt(sinc(w))
        },
    )
}

/// `∫₀^α dt / √cos t` for `α ∈ [0, π/2]`; finite at `π/2` (≈ 2.6220576).
pub fn int_inv_sqrt_cos(alpha: f64) -> Result<f64> {
    check_angle("alpha", alpha)?;
    split_integral(alpha, |t| 1.0 / sqrt(cos(t)), |v| 2.0 / sqrt(sinc(v * v)))
}

/// Residual tolerance accepted by [`invert_monotone`].
fn inversion_tol(target: f64) -> f64 {
    1e-12 * target.abs() + 1e-14
}

/// Solves `f(x) = target` for `f` strictly increasing on `bracket`.
///
/// Derivative-free: Illinois-modified regula falsi, falling back to
/// bisection when it stalls.
pub fn invert_monotone<F: Fn(f64) -> f64>(f: F, target: f64, bracket: (f64, f64)) -> Result<f64> {
    let (mut lo, mut hi) = bracket;
    let mut flo = f(lo) - target;
    let mut fhi = f(hi) - target;
    check_bracket(flo, fhi, target)?;
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    let tol = inversion_tol(target);
    let mut side = 0i8;
    for iter in 0..400 {
        let mut x = if iter % 8 == 7 { 0.5 * (lo + hi) } else { lo - flo * (hi - lo) / (fhi - flo) };
        if !(x > lo && x < hi) {
            x = 0.5 * (lo + hi);
        }
        let fx = f(x) - target;
        if fx.abs() <= tol || hi - lo <= 4.0 * f64::EPSILON * x.abs().max(f64::MIN_POSITIVE) {
            return Ok(x);
        }
        if fx < 0.0 {
            lo = x;
            flo = fx;
            if side == -1 {
                fhi *= 0.5;
            }
            side = -1;
        } else {
            hi = x;
            fhi = fx;
            if side == 1 {
                flo *= 0.5;
            }
            side = 1;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Like [`invert_monotone`] but takes Newton steps with `df`, safeguarded by
/// the bracket. Iterates past the residual tolerance until the Newton
/// correction is at the rounding level, so the result is as accurate as `f`.
pub fn invert_monotone_newton<F, D>(f: F, df: D, target: f64, bracket: (f64, f64), guess: f64) -> Result<f64>
where
    F: Fn(f64) -> f64,
    D: Fn(f64) -> f64,
{
    let (mut lo, mut hi) = bracket;
    let flo = f(lo) - target;
    let fhi = f(hi) - target;
    check_bracket(flo, fhi, target)?;
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    let tol = inversion_tol(target);
    let mut x = if guess > lo && guess < hi { guess } else { 0.5 * (lo + hi) };
    for _ in 0..200 {
        let r = f(x) - target;
        if r == 0.0 {
            return Ok(x);
        }
        if r < 0.0 {
            lo = x;
        } else {
            hi = x;
        }
        let d = df(x);
        let step = if d > 0.0 { -r / d } else { f64::NAN };
        let next = x + step;
        if next > lo && next < hi {
            if r.abs() <= tol && step.abs() <= 4.0 * f64::EPSILON * x.abs().max(1.0) {
                return Ok(next);
            }
            x = next;
        } else {
            if r.abs() <= tol && hi - lo <= 4.0 * f64::EPSILON * x.abs().max(1.0) {
                return Ok(x);
            }
            x = 0.5 * (lo + hi);
        }
    }
    Ok(x)
}

fn check_bracket(flo: f64, fhi: f64, target: f64) -> Result<()> {
    if flo <= 0.0 && fhi >= 0.0 {
        Ok(())
    } else {
        Err(Error::Bracket { target, lo: flo + target, hi: fhi + target })
    }
}
