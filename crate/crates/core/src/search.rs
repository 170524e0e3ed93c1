//! Golden-section minimization of a unimodal function.

use crate::error::{Error, Result};

/// Where a scalar minimization ended up.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Minimum {
    /// Abscissa of the best evaluation.
    pub x: f64,
    /// Function value there.
    pub value: f64,
    /// Number of evaluations spent.
    pub evaluations: usize,
}

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Minimizes `f` on `[lo, hi]` until the bracket is shorter than `tol`.
///
/// `f` may be stateful (warm starts) and fallible; the first error aborts
/// the search. The returned point is the best one evaluated.
pub fn golden_section<F>(mut f: F, lo: f64, hi: f64, tol: f64) -> Result<Minimum>
where
    F: FnMut(f64) -> Result<f64>,
{
    if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
        return Err(Error::Domain { name: "bracket", value: hi - lo, expected: "lo < hi, both finite" });
    }
    let (mut a, mut b) = (lo, hi);
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c)?;
    let mut fd = f(d)?;
    let mut evaluations = 2;
    let mut best = if fc <= fd { (c, fc) } else { (d, fd) };
    while b - a > tol {
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c)?;
            if fc < best.1 {
                best = (c, fc);
            }
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d)?;
            if fd < best.1 {
                best = (d, fd);
            }
        }
        evaluations += 1;
    }
    Ok(Minimum { x: best.0, value: best.1, evaluations })
}
