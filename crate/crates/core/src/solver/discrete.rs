//! Direct minimization of the discretized arc problem.
//!
//! Unknowns are `θ₀..θₙ` on a uniform grid with `θ₀ = 0`, `θₙ = 2α` pinned.
//! The two closure constraints use the trapezoid rule. An augmented
//! Lagrangian handles the constraints; each inner iteration takes one
//! projected-gradient step (projection by pool-adjacent-violators) and then a
//! Newton step restricted to the blocks of equal angles the projection left
//! behind. The Newton system is tridiagonal plus a rank-two term and is
//! solved in `O(n)`.

use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;

use super::kkt::kkt_residual;
use super::pava::pava;
use super::{ElasticaSolution, Multipliers};
use crate::error::{Error, Result};
use crate::geom::Point;
use crate::math::{cos, sin, FRAC_PI_2};

const MIN_CELLS: usize = 32;
const CONSTRAINT_TOL: f64 = 1e-8;
const GRADIENT_TOL: f64 = 1e-7;
const INNER_TOL: f64 = 2e-8;
const MAX_INNER: usize = 100_000;
const MAX_OUTER: usize = 200;
const RHO_START: f64 = 10.0;
const RHO_MAX: f64 = 1e6;

/// One instance of the fixed-length problem.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ElasticaProblem {
    /// Half contact angle, in `(0, π/2]`.
    pub alpha: f64,
    /// Arc length; at least the chord `2 sin α`.
    pub length: f64,
    /// Number of grid cells, at least 32.
    pub n: usize,
    /// Whether `θ` is constrained to be nondecreasing.
    pub enforce_convexity: bool,
}

impl ElasticaProblem {
    fn validate(&self) -> Result<()> {
        if !(self.alpha > 0.0 && self.alpha <= FRAC_PI_2) {
            return Err(Error::Domain { name: "alpha", value: self.alpha, expected: "(0, π/2]" });
        }
        if self.n < MIN_CELLS {
            return Err(Error::Domain { name: "n", value: self.n as f64, expected: "at least 32 cells" });
        }
        let chord = 2.0 * sin(self.alpha);
        if !self.length.is_finite() || self.length < chord * (1.0 + 1e-9) {
            return Err(Error::InfeasibleLength { length: self.length, chord });
        }
        Ok(())
    }
}

struct Discrete {
    n: usize,
    ds: f64,
    end: f64,
    target: [f64; 2],
    convex: bool,
}

impl Discrete {
    fn new(p: &ElasticaProblem) -> Self {
        let end = 2.0 * p.alpha;
        Self { n: p.n, ds: p.length / p.n as f64, end, target: [sin(end), 1.0 - cos(end)], convex: p.enforce_convexity }
    }

    fn energy(&self, th: &[f64]) -> f64 {
        0.5 * th.windows(2).map(|w| (w[1] - w[0]) * (w[1] - w[0])).sum::<f64>() / self.ds
    }

    fn constraints(&self, th: &[f64]) -> [f64; 2] {
        let (mut c, mut s) = (0.0, 0.0);
        for (i, &t) in th.iter().enumerate() {
            let w = if i == 0 || i == self.n { 0.5 } else { 1.0 };
            c += w * cos(t);
            s += w * sin(t);
        }
        [self.ds * c - self.target[0], self.ds * s - self.target[1]]
    }

    fn merit(&self, th: &[f64], lambda: [f64; 2], rho: f64) -> f64 {
        let c = self.constraints(th);
        self.energy(th) + lambda[0] * c[0] + lambda[1] * c[1] + 0.5 * rho * (c[0] * c[0] + c[1] * c[1])
    }

    /// Gradient of the merit function; zero at the pinned ends.
    fn gradient(&self, th: &[f64], mu: [f64; 2]) -> Vec<f64> {
        let mut g = vec![0.0; self.n + 1];
        for i in 1..self.n {
            let lap = (2.0 * th[i] - th[i - 1] - th[i + 1]) / self.ds;
            g[i] = lap + self.ds * (-mu[0] * sin(th[i]) + mu[1] * cos(th[i]));
        }
        g
    }

    fn project(&self, th: &mut [f64]) {
        th[0] = 0.0;
        th[self.n] = self.end;
        if self.convex {
            let inner = pava(&th[1..self.n]);
            for (t, v) in th[1..self.n].iter_mut().zip(inner) {
                *t = v.clamp(0.0, self.end);
            }
        }
    }

    fn lipschitz(&self, mu: [f64; 2], rho: f64) -> f64 {
        4.0 / self.ds + self.ds * (mu[0].abs() + mu[1].abs()) + rho * 2.0 * self.ds * self.ds * (self.n + 1) as f64
    }

    /// Maximal runs of interior nodes sharing a value. Runs equal to a pinned
    /// end value are attached to that end and dropped.
    fn blocks(&self, th: &[f64]) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut i = 1;
        while i < self.n {
            let mut j = i;
            if self.convex {
                while j + 1 < self.n && th[j + 1] == th[i] {
                    j += 1;
                }
            }
            let pinned = self.convex && (th[i] == th[0] || th[i] == th[self.n]);
            if !pinned {
                out.push((i, j));
            }
            i = j + 1;
        }
        out
    }

    /// Newton direction on the free blocks, expanded to the full grid.
    fn newton_direction(&self, th: &[f64], g: &[f64], mu: [f64; 2], rho: f64) -> Option<Vec<f64>> {
        let blocks = self.blocks(th);
        let m = blocks.len();
        if m == 0 {
            return None;
        }
        let ds = self.ds;
        let mut diag = vec![0.0; m];
        let mut off = vec![0.0; m.saturating_sub(1)];
        let mut rhs = vec![0.0; m];
        let mut u = [vec![0.0; m], vec![0.0; m]];
        for (b, &(lo, hi)) in blocks.iter().enumerate() {
            let mut curv = 0.0;
            for i in lo..=hi {
                let (s, c) = (sin(th[i]), cos(th[i]));
                curv -= ds * (mu[0] * c + mu[1] * s);
                u[0][b] -= ds * s;
                u[1][b] += ds * c;
                rhs[b] -= g[i];
            }
            diag[b] = 2.0 / ds + curv;
            if b + 1 < m && blocks[b + 1].0 == hi + 1 {
                off[b] = -1.0 / ds;
            }
        }
        let gnorm = rhs.iter().map(|v| v * v).sum::<f64>();
        let scale = 2.0 / ds;
        for &shift in &[0.0, 1e-8, 1e-6, 1e-4, 1e-2, 1.0, 1e2] {
            let shifted: Vec<f64> = diag.iter().map(|d| d + shift * scale).collect();
            let Some(d) = woodbury(&shifted, &off, &u, rho, &rhs) else {
                continue;
            };
            let descent: f64 = d.iter().zip(&rhs).map(|(a, b)| a * b).sum();
            let dnorm = d.iter().map(|v| v * v).sum::<f64>();
            if descent.is_finite() && descent > 1e-12 * libm::sqrt(gnorm * dnorm) {
                let mut full = vec![0.0; self.n + 1];
                for (b, &(lo, hi)) in blocks.iter().enumerate() {
                    for v in &mut full[lo..=hi] {
                        *v = d[b];
                    }
                }
                return Some(full);
            }
        }
        None
    }
}

/// Solves `(T + ρ UᵀU) x = r` with `T` symmetric tridiagonal.
fn woodbury(diag: &[f64], off: &[f64], u: &[Vec<f64>; 2], rho: f64, r: &[f64]) -> Option<Vec<f64>> {
    let y = thomas(diag, off, r)?;
    let z0 = thomas(diag, off, &u[0])?;
    let z1 = thomas(diag, off, &u[1])?;
    let dot = |a: &[f64], b: &[f64]| a.iter().zip(b).map(|(x, y)| x * y).sum::<f64>();
    // (I/ρ + U T⁻¹ Uᵀ) w = U T⁻¹ r
    let m00 = 1.0 / rho + dot(&u[0], &z0);
    let m01 = dot(&u[0], &z1);
    let m10 = dot(&u[1], &z0);
    let m11 = 1.0 / rho + dot(&u[1], &z1);
    let det = m00 * m11 - m01 * m10;
    if !det.is_finite() || det.abs() < 1e-300 {
        return None;
    }
    let b0 = dot(&u[0], &y);
    let b1 = dot(&u[1], &y);
    let w0 = (m11 * b0 - m01 * b1) / det;
    let w1 = (m00 * b1 - m10 * b0) / det;
    let x: Vec<f64> = (0..r.len()).map(|i| y[i] - z0[i] * w0 - z1[i] * w1).collect();
    x.iter().all(|v| v.is_finite()).then_some(x)
}

/// Thomas algorithm; `None` on a non-positive pivot.
fn thomas(diag: &[f64], off: &[f64], r: &[f64]) -> Option<Vec<f64>> {
    let m = diag.len();
    let mut c = vec![0.0; m];
    let mut d = vec![0.0; m];
    let mut piv = diag[0];
    if piv <= 0.0 {
        return None;
    }
    c[0] = if m > 1 { off[0] / piv } else { 0.0 };
    d[0] = r[0] / piv;
    for i in 1..m {
        piv = diag[i] - off[i - 1] * c[i - 1];
        if piv <= 0.0 {
            return None;
        }
        c[i] = if i + 1 < m { off[i] / piv } else { 0.0 };
        d[i] = (r[i] - off[i - 1] * d[i - 1]) / piv;
    }
    for i in (0..m - 1).rev() {
        d[i] -= c[i] * d[i + 1];
    }
    Some(d)
}

/// Solves the fixed-length problem from the linear initial guess
/// `θᵢ = 2α·i/n`.
pub fn solve_fixed_length(problem: &ElasticaProblem) -> Result<ElasticaSolution> {
    solve_fixed_length_warm(problem, None)
}

/// Like [`solve_fixed_length`], but starts from the angles and multipliers
/// of `warm` when it has the same grid.
pub fn solve_fixed_length_warm(problem: &ElasticaProblem, warm: Option<&ElasticaSolution>) -> Result<ElasticaSolution> {
    problem.validate()?;
    let d = Discrete::new(problem);
    let n = d.n;
    let warm = warm.filter(|w| w.theta.len() == n + 1 && w.alpha == problem.alpha);
    let mut th: Vec<f64> = match warm {
        Some(w) => w.theta.clone(),
        None => (0..=n).map(|i| d.end * i as f64 / n as f64).collect(),
    };
    d.project(&mut th);
    // the solver works with λ in `E + λ·c`; the reported multipliers are −λ
    let mut lambda = match warm {
        Some(w) => [-w.multipliers.lambda1, -w.multipliers.lambda2],
        None => [0.0, 0.0],
    };
    let mut rho = RHO_START;
    let mut c_prev = f64::INFINITY;
    let mut iterations = 0;
    let mut pg = f64::INFINITY;

    for outer in 0..MAX_OUTER {
        loop {
            let c = d.constraints(&th);
            let mu = [lambda[0] + rho * c[0], lambda[1] + rho * c[1]];
            let g = d.gradient(&th, mu);
            let lip = d.lipschitz(mu, rho);
            let mut trial: Vec<f64> = th.iter().zip(&g).map(|(t, gi)| t - gi / lip).collect();
            d.project(&mut trial);
            pg = lip * th.iter().zip(&trial).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max) / d.ds;
            if pg < INNER_TOL {
                break;
            }
            if iterations >= MAX_INNER {
                let best = finish(problem, &d, th, lambda, rho, pg, iterations, outer);
                return Err(Error::NonConvergence { iterations, best: Box::new(best) });
            }
            iterations += 1;
            th = trial;
            newton_step(&d, &mut th, lambda, rho);
        }
        let c = d.constraints(&th);
        let cnorm = c[0].abs().max(c[1].abs());
        if cnorm < CONSTRAINT_TOL && pg < GRADIENT_TOL {
            return Ok(finish(problem, &d, th, lambda, rho, pg, iterations, outer + 1));
        }
        lambda[0] += rho * c[0];
        lambda[1] += rho * c[1];
        if cnorm > 0.25 * c_prev {
            rho = (2.0 * rho).min(RHO_MAX);
        }
        c_prev = cnorm;
    }
    let best = finish(problem, &d, th, lambda, rho, pg, iterations, MAX_OUTER);
    Err(Error::NonConvergence { iterations, best: Box::new(best) })
}

fn newton_step(d: &Discrete, th: &mut Vec<f64>, lambda: [f64; 2], rho: f64) {
    let c = d.constraints(th);
    let mu = [lambda[0] + rho * c[0], lambda[1] + rho * c[1]];
    let g = d.gradient(th, mu);
    let Some(dir) = d.newton_direction(th, &g, mu, rho) else {
        return;
    };
    let f0 = d.merit(th, lambda, rho);
    let mut t = 1.0;
    for _ in 0..40 {
        let mut trial: Vec<f64> = th.iter().zip(&dir).map(|(a, b)| a + t * b).collect();
        d.project(&mut trial);
        let decrease: f64 = g.iter().zip(trial.iter().zip(th.iter())).map(|(gi, (a, b))| gi * (a - b)).sum();
        if d.merit(&trial, lambda, rho) <= f0 + 1e-4 * decrease {
            *th = trial;
            return;
        }
        t *= 0.5;
    }
}

#[allow(clippy::too_many_arguments)]
fn finish(
    p: &ElasticaProblem,
    d: &Discrete,
    th: Vec<f64>,
    lambda: [f64; 2],
    rho: f64,
    pg: f64,
    iterations: usize,
    outer: usize,
) -> ElasticaSolution {
    let residuals = d.constraints(&th);
    let mu = [lambda[0] + rho * residuals[0], lambda[1] + rho * residuals[1]];
    let kkt = kkt_residual(&th, p.length, Point::new(0.0, -1.0));
    ElasticaSolution {
        alpha: p.alpha,
        length: p.length,
        energy: d.energy(&th),
        theta: th,
        residuals,
        multipliers: Multipliers { lambda1: -mu[0], lambda2: -mu[1] },
        kkt_residual: kkt.residual(),
        kkt,
        projected_gradient: pg,
        iterations,
        outer_iterations: outer,
        length_at_edge: false,
    }
}
