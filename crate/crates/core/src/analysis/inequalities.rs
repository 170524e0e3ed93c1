//! The five scale-invariant lower bounds for convex bodies.

use crate::error::{Error, Result};
use crate::geom::{functionals, ConvexBody, FunctionalsReport};
use crate::math::{sq, FRAC_PI_2, PI};
use crate::quadrature::int_sqrt_cos;

/// Relative tolerance for pass/fail and for flagging equality.
pub const INEQUALITY_TOL: f64 = 1e-3;
/// Turning angle above which the suite refuses to run.
pub const REFUSE_TURNING: f64 = 0.6;

/// One product against its lower bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InequalityCheck {
    /// Short name, e.g. `"EP"`.
    pub name: &'static str,
    /// Value of the product.
    pub product: f64,
    /// Lower bound.
    pub bound: f64,
    /// `product − bound`.
    pub deficit: f64,
    /// `deficit / bound`.
    pub relative_deficit: f64,
    /// `relative_deficit ≥ −INEQUALITY_TOL`.
    pub pass: bool,
    /// `|relative_deficit| ≤ INEQUALITY_TOL`: the body is (numerically) extremal.
    pub equality: bool,
}

/// Functionals of a body and the five inequality checks.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InequalityReport {
    /// The functionals.
    pub functionals: FunctionalsReport,
    /// `EP ≥ 2π²`, `E²A ≥ π³`, `ED ≥ 2π`, `ER ≥ π`, `Er ≥ 2a²`.
    pub checks: [InequalityCheck; 5],
    /// Largest turning angle of the polygon.
    pub max_turning: f64,
    /// Set when the turning angle exceeds the coarse-sampling warning level.
    pub coarse: bool,
}

impl InequalityReport {
    /// Whether every inequality holds within tolerance.
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Bounds in the order `EP, E²A, ED, ER, Er`.
pub fn bounds() -> Result<[f64; 5]> {
    let a = int_sqrt_cos(FRAC_PI_2)?;
    Ok([2.0 * PI * PI, PI * PI * PI, 2.0 * PI, PI, 2.0 * sq(a)])
}

/// Evaluates the five inequalities on `body`.
///
/// Refuses bodies whose largest turning angle exceeds [`REFUSE_TURNING`]:
/// their discrete energy says little about any smooth body.
pub fn inequality_suite(body: &ConvexBody) -> Result<InequalityReport> {
    let pe = body.polygon_energy();
    if pe.max_turning > REFUSE_TURNING {
        return Err(Error::CoarseSampling { max_turning: pe.max_turning, limit: REFUSE_TURNING });
    }
    let f = functionals(body)?;
    let names = ["EP", "E2A", "ED", "ER", "Er"];
    let products = f.products.as_array();
    let bounds = bounds()?;
    let check = |i: usize| {
        let deficit = products[i] - bounds[i];
        let relative_deficit = deficit / bounds[i];
        InequalityCheck {
            name: names[i],
            product: products[i],
            bound: bounds[i],
            deficit,
            relative_deficit,
            pass: relative_deficit >= -INEQUALITY_TOL,
            equality: relative_deficit.abs() <= INEQUALITY_TOL,
        }
    };
    Ok(InequalityReport {
        functionals: f,
        checks: [check(0), check(1), check(2), check(3), check(4)],
        max_turning: pe.max_turning,
        coarse: pe.is_coarse(),
    })
}
