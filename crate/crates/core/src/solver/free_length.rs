use core::cell::RefCell;

use super::discrete::{solve_fixed_length_warm, ElasticaProblem};
use super::ElasticaSolution;
use crate::error::{Error, Result};
use crate::math::{sin, tan, FRAC_PI_2};
use crate::search::golden_section;

const LENGTH_TOL: f64 = 1e-6;
/// Relative energy drop over the outer 1% of the bracket still treated as flat.
const PLATEAU_TOL: f64 = 1e-4;

/// Default search interval for the arc length: just above the chord, up to
/// the shorter of the two tangent segments through the contact points and a
/// generous multiple of the circular arc `2α`.
pub fn default_length_bracket(alpha: f64) -> (f64, f64) {
    let chord = 2.0 * sin(alpha);
    let hi = if alpha < FRAC_PI_2 { (2.0 * tan(alpha)).min(1.45 * 2.0 * alpha) } else { 1.45 * 2.0 * alpha };
    (chord * (1.0 + 1e-3), hi)
}

/// Minimizes the discrete energy over the arc length as well, by golden
/// section over `L` to `1e−6`, warm-starting each solve from the previous one.
///
/// Fails with [`Error::Bracket`] if the energy is still decreasing at either
/// end of `bracket`. A drop below [`PLATEAU_TOL`] relative over the outer
/// 1% counts as flat: the solution is returned with `length_at_edge` set.
/// This happens at `α = π/2`, where every `L ≥ L₀` reaches the minimum with
/// convexity enforced, and without convexity the energy creeps down further
/// through arcs with inflections.
pub fn solve_free_length(
    alpha: f64,
    bracket: Option<(f64, f64)>,
    n: usize,
    enforce_convexity: bool,
) -> Result<ElasticaSolution> {
    if !(alpha > 0.0 && alpha <= FRAC_PI_2) {
        return Err(Error::Domain { name: "alpha", value: alpha, expected: "(0, π/2]" });
    }
    let (lo, hi) = bracket.unwrap_or_else(|| default_length_bracket(alpha));
    let warm: RefCell<Option<ElasticaSolution>> = RefCell::new(None);
    let best: RefCell<Option<ElasticaSolution>> = RefCell::new(None);
    let solve = |length: f64| -> Result<ElasticaSolution> {
        let problem = ElasticaProblem { alpha, length, n, enforce_convexity };
        let sol = solve_fixed_length_warm(&problem, warm.borrow().as_ref())?;
        *warm.borrow_mut() = Some(sol.clone());
        Ok(sol)
    };
    let m = golden_section(
        |length| {
            let sol = solve(length)?;
            let e = sol.energy;
            let better = best.borrow().as_ref().is_none_or(|b| e < b.energy);
            if better {
                *best.borrow_mut() = Some(sol);
            }
            Ok(e)
        },
        lo,
        hi,
        LENGTH_TOL,
    )?;
    let mut best = best.into_inner().ok_or(Error::Bracket { target: m.x, lo, hi })?;

    let edge = 10.0 * LENGTH_TOL;
    let probe = 1e-2 * (hi - lo);
    let at_lo = m.x - lo < edge;
    let at_hi = hi - m.x < edge;
    if at_lo || at_hi {
        let inner = solve(if at_lo { lo + probe } else { hi - probe })?.energy;
        if best.energy < inner - PLATEAU_TOL * inner.abs() {
            return Err(Error::Bracket { target: m.x, lo, hi });
        }
        best.length_at_edge = true;
    }
    Ok(best)
}
