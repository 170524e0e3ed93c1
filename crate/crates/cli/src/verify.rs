//! The acceptance suite behind `elastica verify`.
//!
//! Thirteen criteria, each reduced to a measured value, a reference and a
//! tolerance. `quick` builds bodies with 800 vertices, `full` with 4000
//! and tightens the tolerances where the discretization allows it.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};
use std::time::Instant;

use clap::ValueEnum;
use elastica_core::analysis::{
    contact_split, e_prime, e_prime_fd, e_second, h_alpha, inequality_suite, r_alpha, r_prime, random_smooth_body,
    subadditivity_scan, ShapeFamily,
};
use elastica_core::optimal_arc::{arc_length, build_arc, build_omega_star, energy_closed_form};
use elastica_core::quadrature::{elliptic_f, int_inv_sqrt_cos, int_sqrt_cos};
use elastica_core::solver::{kkt_residual, solve_free_length};
use elastica_core::{ConvexBody, Error, Point};
use serde::Serialize;

use crate::report::sig9;

/// How thorough the run is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    /// 800-vertex bodies.
    Quick,
    /// 4000-vertex bodies, tighter tolerances.
    Full,
}

impl Level {
    fn vertices(self) -> usize {
        match self {
            Level::Quick => 800,
            Level::Full => 4000,
        }
    }

    fn pick(self, quick: f64, full: f64) -> f64 {
        match self {
            Level::Quick => quick,
            Level::Full => full,
        }
    }
}

/// The two integrals the suite checks, swappable for the negative control.
#[derive(Clone, Copy)]
pub struct Quadrature {
    /// `∫₀^α √cos`.
    pub sqrt_cos: fn(f64) -> Result<f64, Error>,
    /// `∫₀^α 1/√cos`.
    pub inv_sqrt_cos: fn(f64) -> Result<f64, Error>,
}

impl Default for Quadrature {
    fn default() -> Self {
        Self { sqrt_cos: int_sqrt_cos, inv_sqrt_cos: int_inv_sqrt_cos }
    }
}

impl Quadrature {
    /// A deliberately crude 16-cell midpoint rule, for checking that the
    /// suite notices bad quadrature.
    pub fn corrupted() -> Self {
        fn midpoint(alpha: f64, f: fn(f64) -> f64) -> f64 {
            let h = alpha / 16.0;
            (0..16).map(|i| f((i as f64 + 0.5) * h)).sum::<f64>() * h
        }
        Self {
            sqrt_cos: |a| Ok(midpoint(a, |t| t.cos().sqrt())),
            inv_sqrt_cos: |a| Ok(midpoint(a, |t| 1.0 / t.cos().sqrt())),
        }
    }
}

/// Options of a run.
#[derive(Clone, Copy)]
pub struct Options {
    /// Level.
    pub level: Level,
    /// Integrals under test.
    pub quadrature: Quadrature,
}

/// Outcome of one criterion.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Criterion {
    /// 1 to 13.
    pub id: u8,
    /// Short name.
    pub name: &'static str,
    /// Whether it passed.
    pub pass: bool,
    /// The measured quantity (an error, a gap, a count…).
    pub value: f64,
    /// Threshold it was compared with.
    pub threshold: f64,
    /// Human-readable summary.
    pub detail: String,
    /// Wall time in seconds.
    pub seconds: f64,
}

/// Outcome of the suite.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Verdict {
    /// Level run.
    pub level: Level,
    /// Whether every criterion passed.
    pub pass: bool,
    /// Per-criterion results.
    pub criteria: Vec<Criterion>,
}

impl Verdict {
    /// Criteria that failed.
    pub fn failures(&self) -> impl Iterator<Item = &Criterion> {
        self.criteria.iter().filter(|c| !c.pass)
    }
}

/// Γ(x) by the Lanczos approximation (g = 7, nine terms).
pub fn gamma(x: f64) -> f64 {
    const C: [f64; 9] = [
        0.999_999_999_999_809_9,
        676.520_368_121_885_1,
        -1_259.139_216_722_402_8,
        771.323_428_777_653_1,
        -176.615_029_162_140_6,
        12.507_343_278_686_905,
        -0.138_571_095_265_720_12,
        9.984_369_578_019_572e-6,
        1.505_632_735_149_311_6e-7,
    ];
    if x < 0.5 {
        return PI / ((PI * x).sin() * gamma(1.0 - x));
    }
    let x = x - 1.0;
    let s = C[0] + C.iter().enumerate().skip(1).map(|(i, c)| c / (x + i as f64)).sum::<f64>();
    let t = x + 7.5;
    (2.0 * PI).sqrt() * t.powf(x + 0.5) * (-t).exp() * s
}

/// `a = ∫₀^{π/2} √cos = (√π/2)Γ(3/4)/Γ(5/4)`.
pub fn a_oracle() -> f64 {
    0.5 * PI.sqrt() * gamma(0.75) / gamma(1.25)
}

/// `∫₀^{π/2} 1/√cos = (√π/2)Γ(1/4)/Γ(3/4)`.
pub fn j_oracle() -> f64 {
    0.5 * PI.sqrt() * gamma(0.25) / gamma(0.75)
}

type Measured = Result<(bool, f64, f64, String), Error>;

struct Suite {
    level: Level,
    quad: Quadrature,
}

fn grid(n: usize, lo: f64, hi: f64) -> impl Iterator<Item = f64> {
    (0..n).map(move |i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
}

fn rel(x: f64, y: f64) -> f64 {
    (x - y).abs() / y.abs()
}

fn regular(n: usize) -> Result<ConvexBody, Error> {
    ConvexBody::new(
        (0..n)
            .map(|i| {
                let t = 2.0 * PI * i as f64 / n as f64;
                Point::new(t.cos(), t.sin())
            })
            .collect(),
    )
}

impl Suite {
    fn optimal_energy(&self) -> Measured {
        let start = Instant::now();
        let e = build_omega_star(self.level.vertices(), 0.0)?.body.polygon_energy().value;
        let secs = start.elapsed().as_secs_f64();
        let tol = self.level.pick(1e-3, 1e-4);
        let err = (e - 2.87110).abs();
        Ok((err <= tol && secs < 5.0, err, tol, format!("E = {} in {secs:.3} s", sig9(e))))
    }

    fn constant_a(&self) -> Measured {
        let a = (self.quad.sqrt_cos)(FRAC_PI_2)?;
        let err = (a - a_oracle()).abs();
        let tol = self.level.pick(1e-10, 1e-12);
        Ok((err <= tol, err, tol, format!("a = {a:.15}, Gamma oracle {:.15}", a_oracle())))
    }

    fn length_formula(&self) -> Measured {
        let l0 = arc_length(FRAC_PI_2)?;
        let oracle = 2.0 * j_oracle() / a_oracle();
        let a = (self.quad.sqrt_cos)(FRAC_PI_2)?;
        let j = (self.quad.inv_sqrt_cos)(FRAC_PI_2)?;
        let quadrature_route = 2.0 * j / a;
        let elliptic_route = -4.0 * elliptic_f(-FRAC_PI_4, 2.0)? / a;
        let err = [l0, quadrature_route, elliptic_route].iter().map(|l| (l - oracle).abs()).fold(0.0, f64::max);
        let tol = 1e-8;
        Ok((err <= tol, err, tol, format!("L0 = {l0:.12}, elliptic route {elliptic_route:.12}, oracle {oracle:.12}")))
    }

    fn inradius(&self) -> Measured {
        let inc = build_omega_star(self.level.vertices(), 0.0)?.body.incircle()?;
        let err = (inc.radius - 1.0).abs();
        let off = inc.center.norm();
        let pass = err <= 1e-4 && off <= 1e-6;
        Ok((pass, err, 1e-4, format!("r = {}, centre offset {off:e}", sig9(inc.radius))))
    }

    fn disk_baseline(&self) -> Measured {
        let rep = inequality_suite(&regular(10_000)?)?;
        let expect = [2.0 * PI * PI, PI * PI * PI, 2.0 * PI, PI, PI];
        let err = rep.checks.iter().zip(expect).map(|(c, e)| rel(c.product, e)).fold(0.0, f64::max);
        let tol = self.level.pick(1e-3, 1e-5);
        let er = rep.checks[4].product;
        let gap = er - 2.0 * a_oracle() * a_oracle();
        Ok((err <= tol && gap > 0.0, err, tol, format!("E·r = {}, gap to 2a² = {}", sig9(er), sig9(gap))))
    }

    fn oracle_agreement(&self) -> Measured {
        let tol = self.level.pick(5e-4, 1e-4);
        let mut worst: f64 = 0.0;
        let mut below = false;
        let mut parts = Vec::new();
        for alpha in [0.2, 0.5, FRAC_PI_4, 1.2, FRAC_PI_2] {
            let sol = solve_free_length(alpha, None, 800, true)?;
            let e = energy_closed_form(alpha)?;
            let r = (sol.energy - e) / e;
            worst = worst.max(r.abs());
            below |= r < -tol;
            parts.push(format!("{alpha:.4}: {r:+.2e}"));
        }
        Ok((worst <= tol && !below, worst, tol, parts.join(", ")))
    }

    fn kkt_form(&self) -> Measured {
        let start = Point::new(0.0, -1.0);
        let mut worst: f64 = 0.0;
        let mut first_integral: f64 = 0.0;
        for alpha in [0.2, 0.5, FRAC_PI_4, 1.2, FRAC_PI_2] {
            let arc = build_arc(alpha, 801)?;
            worst = worst.max(kkt_residual(arc.arc.theta(), arc.arc.length(), start).residual());
            first_integral = first_integral.max(arc.first_integral_residual());
        }
        let n = 800;
        let circle: Vec<f64> = (0..=n).map(|i| PI * i as f64 / n as f64).collect();
        let control = kkt_residual(&circle, PI, start).residual();
        let pass = worst < 1e-4 && control > 1e-2 && first_integral < 1e-8;
        Ok((
            pass,
            worst,
            1e-4,
            format!("closed form {worst:.2e}, circle {control:.2e}, first integral {first_integral:.2e}"),
        ))
    }

    fn shape_derivative(&self) -> Measured {
        let res = |n| build_omega_star(n, 0.0).map(|d| d.half_arc.shape_derivative_residual());
        let (coarse, fine) = (res(1000)?, res(4000)?);
        let order = (coarse / fine).log2() / 2.0;
        Ok((order >= 1.8, order, 1.8, format!("residual {coarse:.3e} at n=1000, {fine:.3e} at n=4000")))
    }

    fn calculus(&self) -> Measured {
        let mut fd_err: f64 = 0.0;
        let mut r_err: f64 = 0.0;
        let step = 1e-5;
        for t in grid(1000, 0.01, FRAC_PI_2 - 0.01) {
            fd_err = fd_err.max((e_prime(t)? - e_prime_fd(t, step)?).abs());
            let rfd = (r_alpha(t + step)? - r_alpha(t - step)?) / (2.0 * step);
            r_err = r_err.max((r_prime(t)? - rfd).abs());
        }
        let mut bad = 0usize;
        for t in grid(1000, 1e-3, FRAC_PI_2) {
            let h = h_alpha(t)?;
            if !(e_second(t)? < 0.0 && r_alpha(t)? >= 0.0 && (0.0..=1.0).contains(&h)) {
                bad += 1;
            }
        }
        let worst = fd_err.max(r_err);
        let pass = worst < 1e-6 && bad == 0;
        Ok((pass, worst, 1e-6, format!("E′ {fd_err:.2e}, R′ {r_err:.2e}, sign violations {bad}")))
    }

    fn subadditivity(&self) -> Measured {
        let rep = subadditivity_scan(200)?;
        let pass = rep.violations == 0 && rep.min_gap > 0.0;
        Ok((
            pass,
            rep.min_gap,
            0.0,
            format!(
                "min gap {:.9e} at ({:.6}, {:.6}) over {} pairs",
                rep.min_gap, rep.argmin.0, rep.argmin.1, rep.pairs
            ),
        ))
    }

    fn contact_split(&self) -> Measured {
        let mut worst: f64 = 0.0;
        let mut peaks = true;
        for gamma in [FRAC_PI_2 + 0.1, 3.0 * FRAC_PI_4, PI - 0.1] {
            let s = contact_split(gamma, 400)?;
            worst = worst.max(s.endpoint_distance);
            peaks &= s.peaks_at_middle;
        }
        Ok((worst <= 1e-6 && peaks, worst, 1e-6, format!("largest endpoint distance {worst:.2e}")))
    }

    fn fuzz(&self) -> Measured {
        let mut violations = 0usize;
        let mut smallest = f64::INFINITY;
        for seed in 0..100u64 {
            let family = if seed % 2 == 0 {
                ShapeFamily::Ellipse { a: 1.25 + (seed % 7) as f64 * 0.25, b: 1.0 }
            } else {
                ShapeFamily::Fourier { k_max: 2 + (seed as usize % 5) }
            };
            let rep = inequality_suite(&random_smooth_body(seed, self.level.vertices(), family)?)?;
            for c in &rep.checks {
                smallest = smallest.min(c.relative_deficit);
                if !(c.deficit > 0.0) {
                    violations += 1;
                }
            }
        }
        Ok((violations == 0, violations as f64, 0.0, format!("smallest relative deficit {smallest:.3e}")))
    }

    fn stadium(&self) -> Measured {
        let n = self.level.vertices();
        let base = build_omega_star(n, 0.0)?.body;
        let e0 = base.polygon_energy().value;
        let r0 = base.inradius()?.0;
        let (mut de, mut dr): (f64, f64) = (0.0, 0.0);
        for h in [0.25, 0.5, 1.0] {
            let b = build_omega_star(n, h)?.body;
            de = de.max((b.polygon_energy().value - e0).abs());
            dr = dr.max((b.inradius()?.0 - r0).abs());
        }
        Ok((de <= 1e-6 && dr <= 1e-4, de, 1e-6, format!("ΔE {de:.2e}, Δr {dr:.2e}")))
    }
}

/// Names of the criteria, in order.
pub const NAMES: [&str; 13] = [
    "optimal energy value",
    "constant a",
    "length formula",
    "inradius of the optimal domain",
    "disk baseline",
    "oracle agreement",
    "KKT form",
    "shape-derivative identity",
    "calculus suite",
    "sub-additivity",
    "contact split",
    "fuzz inequalities",
    "stadium invariance",
];

/// Runs every criterion. A criterion whose computation errors fails with
/// the error as its detail; the others still run.
pub fn run(options: &Options) -> Verdict {
    let suite = Suite { level: options.level, quad: options.quadrature };
    let checks: [fn(&Suite) -> Measured; 13] = [
        Suite::optimal_energy,
        Suite::constant_a,
        Suite::length_formula,
        Suite::inradius,
        Suite::disk_baseline,
        Suite::oracle_agreement,
        Suite::kkt_form,
        Suite::shape_derivative,
        Suite::calculus,
        Suite::subadditivity,
        Suite::contact_split,
        Suite::fuzz,
        Suite::stadium,
    ];
    let criteria: Vec<Criterion> = checks
        .iter()
        .zip(NAMES)
        .enumerate()
        .map(|(i, (check, name))| {
            let start = Instant::now();
            let (pass, value, threshold, detail) = match check(&suite) {
                Ok(m) => m,
                Err(e) => (false, f64::NAN, f64::NAN, format!("error: {e}")),
            };
            Criterion { id: i as u8 + 1, name, pass, value, threshold, detail, seconds: start.elapsed().as_secs_f64() }
        })
        .collect();
    Verdict { level: options.level, pass: criteria.iter().all(|c| c.pass), criteria }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lanczos_reference_values() {
        assert!((gamma(0.5) - PI.sqrt()).abs() < 1e-14);
        assert!((gamma(6.0) - 120.0).abs() < 1e-10);
        assert!((a_oracle() - 1.198_140_234_735_59).abs() < 1e-13);
        assert!((j_oracle() - 2.622_057_554_292_12).abs() < 1e-13);
    }

    #[test]
    fn corrupted_quadrature_is_visibly_wrong() {
        let q = Quadrature::corrupted();
        assert!(((q.sqrt_cos)(FRAC_PI_2).unwrap() - a_oracle()).abs() > 1e-4);
    }
}
