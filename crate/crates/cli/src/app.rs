//! The `elastica` command line.

use std::f64::consts::{FRAC_PI_2, PI};
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use elastica_core::analysis::{subadditivity_scan, EAlphaTable};
use elastica_core::optimal_arc::{build_omega_star, energy_closed_form};
use elastica_core::quadrature::int_sqrt_cos;
use elastica_core::solver::{
    kkt_residual, length_supremum, solve_bvp_via_shooting, solve_free_length, ElasticaSolution, ShootingSolution,
};
use elastica_core::{Error, Point};
use serde::Serialize;

use crate::error::{CliError, EXIT_OK};
use crate::formats::{read_body, write_csv, write_json, BodyFormat};
use crate::report::{sig9, to_json, BodyReport};
use crate::verify::{self, Level, Quadrature};

/// Angles this far above `π/2` are read as `π/2`, so that `--alpha 1.5708` works.
const HALF_TURN_SLACK: f64 = 1e-3;

#[derive(Parser)]
#[command(
    name = "elastica",
    version,
    about = "Optimal convex domains for the elastic energy under an inradius constraint"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the optimal domain and print its functionals.
    OmegaStar(OmegaStarArgs),
    /// Evaluate the functionals and inequalities of a body file.
    Functionals(FunctionalsArgs),
    /// Tabulate E(α) and its derivatives as CSV.
    TableEalpha(TableArgs),
    /// Solve the arc problem numerically and compare with the closed form.
    Solve(SolveArgs),
    /// Run the acceptance suite.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Csv,
    Json,
    Svg,
}

#[derive(Args)]
struct OmegaStarArgs {
    /// Number of vertices (at least 64).
    #[arg(long, default_value_t = 4000)]
    n: usize,
    /// Half length of the straight segments inserted at the poles.
    #[arg(long, default_value_t = 0.0)]
    h: f64,
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,
    /// Output file; defaults to omega-star.<format>.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write an SVG rendering here.
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Args)]
struct FunctionalsArgs {
    /// Body file (CSV, or JSON by extension).
    input: PathBuf,
    /// Override the format guessed from the extension.
    #[arg(long, value_enum)]
    format: Option<BodyFormat>,
}

#[derive(Args)]
struct TableArgs {
    /// Number of rows; also the sub-additivity grid size.
    #[arg(long, default_value_t = 100)]
    grid: usize,
    /// Output file; standard output if absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    /// Discrete minimization over the arc and its length.
    Direct,
    /// Pendulum shooting over a grid of lengths (α = π/2 only).
    Shoot,
}

#[derive(Args)]
struct SolveArgs {
    /// Half contact angle in (0, π/2].
    #[arg(long)]
    alpha: f64,
    /// Grid cells (direct mode) or lengths (shoot mode).
    #[arg(long, default_value_t = 800)]
    n: usize,
    #[arg(long, value_enum, default_value_t = Mode::Direct)]
    mode: Mode,
    /// Drop the constraint θ′ ≥ 0.
    #[arg(long)]
    no_convexity: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Level::Quick)]
    level: Level,
    /// Also write the verdict here.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Replace the quadrature with a crude rule (negative control).
    #[arg(long, hide = true)]
    corrupt_quadrature: bool,
}

/// Parses `args` (program name first), runs the subcommand and returns the
/// exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code() as u8;
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let result = match cli.command {
        Command::OmegaStar(a) => omega_star(&a, out),
        Command::Functionals(a) => functionals(&a, out, err),
        Command::TableEalpha(a) => table_ealpha(&a, out, err),
        Command::Solve(a) => solve(&a, out, err),
        Command::Verify(a) => run_verify(&a, out),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if let CliError::Numerical(Error::NonConvergence { best, .. }) = &e {
                let _ = writeln!(err, "best iterate: {}", to_json(&SolutionJson::new(best, None)));
            }
            e.exit_code()
        }
    }
}

fn write_file(path: &Path, contents: impl AsRef<[u8]>) -> Result<(), CliError> {
    fs::write(path, contents).map_err(CliError::io(format!("writing {}", path.display())))
}

fn omega_star(a: &OmegaStarArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let dom = build_omega_star(a.n, a.h)?;
    let ext = match a.format {
        OutputFormat::Csv => "csv",
        OutputFormat::Json => "json",
        OutputFormat::Svg => "svg",
    };
    let path = a.out.clone().unwrap_or_else(|| PathBuf::from(format!("omega-star.{ext}")));
    let v = dom.body.vertices();
    let mut buf = Vec::new();
    match a.format {
        OutputFormat::Csv => write_csv(v, &mut buf).map_err(|e| CliError::Failed(e.to_string()))?,
        OutputFormat::Json => write_json(v, &mut buf).map_err(CliError::io("encoding JSON"))?,
        OutputFormat::Svg => buf = render_svg(&dom.body, dom.segment_half_length)?.into_bytes(),
    }
    write_file(&path, buf)?;
    if let Some(svg) = &a.svg {
        write_file(svg, render_svg(&dom.body, dom.segment_half_length)?)?;
    }
    out.write_all(to_json(&BodyReport::new(&dom.body)?).as_bytes()).map_err(CliError::io("writing report"))
}

/// The body with its inscribed unit disk and the two contact points.
fn render_svg(body: &elastica_core::ConvexBody, h: f64) -> Result<String, CliError> {
    let inc = body.incircle()?;
    let contacts = [Point::new(0.0, -1.0), Point::new(0.0, 1.0)];
    let marks: Vec<Point> = if h > 0.0 {
        contacts.iter().flat_map(|&c| [c + Point::new(h, 0.0), c - Point::new(h, 0.0)]).collect()
    } else {
        contacts.to_vec()
    };
    Ok(crate::svg::render(body, Some((inc.center, inc.radius)), &marks))
}

fn functionals(a: &FunctionalsArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    let body = read_body(&a.input, a.format)?;
    let report = BodyReport::new(&body)?;
    if report.inequalities.is_none() {
        let _ =
            writeln!(err, "warning: polygon too coarse (max turning {} rad); inequalities skipped", report.max_turning);
    }
    out.write_all(to_json(&report).as_bytes()).map_err(CliError::io("writing report"))
}

fn table_ealpha(a: &TableArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    let table = EAlphaTable::new(a.grid)?;
    let mut w = csv::Writer::from_writer(Vec::new());
    let csv_err = |e: csv::Error| CliError::Failed(e.to_string());
    w.write_record(["alpha", "E", "Eprime_analytic", "Eprime_fd", "Esecond", "h", "R"]).map_err(csv_err)?;
    for r in &table.rows {
        let cells = [r.alpha, r.e, r.e_prime, r.e_prime_fd, r.e_second, r.h, r.r].map(|x| sig9(x).to_string());
        w.write_record(&cells).map_err(csv_err)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Failed(e.to_string()))?;
    match &a.out {
        Some(path) => write_file(path, bytes)?,
        None => out.write_all(&bytes).map_err(CliError::io("writing table"))?,
    }

    let split = subadditivity_scan(a.grid)?;
    let concavity = table.concavity_violations();
    // h reaches 0 exactly at π/2, so it is checked on [0, 1]
    let sign_errors = table
        .rows
        .iter()
        .filter(|r| !(r.e > 0.0 && r.e_second < 0.0 && r.r >= 0.0 && (0.0..=1.0).contains(&r.h)))
        .count();
    let _ = writeln!(err, "rows: {}", table.rows.len());
    let _ = writeln!(
        err,
        "min sub-additivity gap: {:e} at ({}, {}); violations: {}",
        sig9(split.min_gap),
        sig9(split.argmin.0),
        sig9(split.argmin.1),
        split.violations
    );
    let _ = writeln!(err, "concavity violations: {concavity}");
    let _ = writeln!(err, "sign violations: {sign_errors}");
    if !table.h_decreasing() {
        let _ = writeln!(err, "note: h is not strictly decreasing on this grid");
    }
    if split.violations > 0 || concavity > 0 || sign_errors > 0 {
        return Err(CliError::Failed("E(α) table invariants violated".into()));
    }
    Ok(())
}

#[derive(Serialize)]
struct SolutionJson {
    alpha: f64,
    length: f64,
    energy: f64,
    closed_form_energy: Option<f64>,
    relative_difference: Option<f64>,
    kkt_residual: f64,
    kkt_constants: [f64; 3],
    multipliers: [f64; 2],
    constraint_residuals: [f64; 2],
    length_at_bracket_edge: bool,
    iterations: usize,
    outer_iterations: usize,
}

impl SolutionJson {
    fn new(s: &ElasticaSolution, closed_form: Option<f64>) -> Self {
        Self {
            alpha: sig9(s.alpha),
            length: sig9(s.length),
            energy: sig9(s.energy),
            closed_form_energy: closed_form.map(sig9),
            relative_difference: closed_form.map(|e| sig9((s.energy - e) / e)),
            kkt_residual: sig9(s.kkt_residual),
            kkt_constants: [s.kkt.c0, s.kkt.c1, s.kkt.c2].map(sig9),
            multipliers: [s.multipliers.lambda1, s.multipliers.lambda2].map(sig9),
            constraint_residuals: s.residuals.map(sig9),
            length_at_bracket_edge: s.length_at_edge,
            iterations: s.iterations,
            outer_iterations: s.outer_iterations,
        }
    }
}

#[derive(Serialize)]
struct ShootRow {
    length: f64,
    c: f64,
    a0: f64,
    energy: f64,
    energy_path: f64,
}

impl From<&ShootingSolution> for ShootRow {
    fn from(s: &ShootingSolution) -> Self {
        Self {
            length: sig9(s.length),
            c: sig9(s.c),
            a0: sig9(s.a0),
            energy: sig9(s.energy),
            energy_path: sig9(s.energy_path),
        }
    }
}

#[derive(Serialize)]
struct ShootJson {
    alpha: f64,
    lengths: Vec<ShootRow>,
    best_length: f64,
    energy: f64,
    closed_form_energy: f64,
    relative_difference: f64,
    kkt_residual: f64,
}

fn solve(a: &SolveArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    let mut alpha = a.alpha;
    if alpha > FRAC_PI_2 && alpha <= FRAC_PI_2 + HALF_TURN_SLACK {
        alpha = FRAC_PI_2;
    }
    if !(alpha > 0.0 && alpha <= FRAC_PI_2) {
        return Err(CliError::Usage(format!("--alpha {} is outside (0, π/2]", a.alpha)));
    }
    let text = match a.mode {
        Mode::Direct => {
            if a.n < 32 {
                return Err(CliError::Usage(format!("--n {} is below 32", a.n)));
            }
            let sol = solve_free_length(alpha, None, a.n, !a.no_convexity)?;
            if sol.length_at_edge {
                let _ = writeln!(
                    err,
                    "note: the energy is flat up to the edge of the length bracket; the length is not resolved"
                );
            }
            to_json(&SolutionJson::new(&sol, Some(energy_closed_form(alpha)?)))
        }
        Mode::Shoot => {
            if (alpha - FRAC_PI_2).abs() > HALF_TURN_SLACK {
                return Err(CliError::Usage("--mode shoot needs --alpha π/2".into()));
            }
            if a.n < 2 {
                return Err(CliError::Usage(format!("--n {} is below 2", a.n)));
            }
            to_json(&shoot(a.n)?)
        }
    };
    out.write_all(text.as_bytes()).map_err(CliError::io("writing report"))
}

/// Solves at `m` lengths from `π` towards the supremum, closer together near
/// the top, and keeps the lowest energy.
fn shoot(m: usize) -> Result<ShootJson, CliError> {
    let sup = length_supremum()?;
    let solutions = (0..m)
        .map(|k| {
            let t = 1.0 - (1.0 - k as f64 / (m - 1) as f64).powi(4);
            let length = PI + (sup - PI) * t.min(1.0 - 1e-7);
            solve_bvp_via_shooting(length)
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let best = solutions.iter().min_by(|x, y| x.energy.total_cmp(&y.energy)).expect("m ≥ 2");
    let a = int_sqrt_cos(FRAC_PI_2)?;
    let closed = a * a;
    let theta = resample(&best.path.s, &best.path.theta, best.length, 800);
    let kkt = kkt_residual(&theta, best.length, Point::new(0.0, -1.0));
    Ok(ShootJson {
        alpha: sig9(FRAC_PI_2),
        lengths: solutions.iter().map(Into::into).collect(),
        best_length: sig9(best.length),
        energy: sig9(best.energy),
        closed_form_energy: sig9(closed),
        relative_difference: sig9((best.energy - closed) / closed),
        kkt_residual: sig9(kkt.residual()),
    })
}

/// Linear interpolation of `(s, θ)` onto `cells + 1` uniform points of `[0, length]`.
fn resample(s: &[f64], theta: &[f64], length: f64, cells: usize) -> Vec<f64> {
    let mut j = 0;
    (0..=cells)
        .map(|i| {
            let x = length * i as f64 / cells as f64;
            while j + 2 < s.len() && s[j + 1] < x {
                j += 1;
            }
            let t = ((x - s[j]) / (s[j + 1] - s[j])).clamp(0.0, 1.0);
            theta[j] + t * (theta[j + 1] - theta[j])
        })
        .collect()
}

fn run_verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let quadrature = if a.corrupt_quadrature { Quadrature::corrupted() } else { Quadrature::default() };
    let verdict = verify::run(&verify::Options { level: a.level, quadrature });
    let text = to_json(&verdict);
    if let Some(path) = &a.json {
        write_file(path, &text)?;
    }
    out.write_all(text.as_bytes()).map_err(CliError::io("writing verdict"))?;
    if verdict.pass {
        return Ok(());
    }
    let failed: Vec<String> = verdict.failures().map(|c| format!("{} ({})", c.id, c.name)).collect();
    Err(CliError::Failed(format!("failed criteria: {}", failed.join(", "))))
}
