//! `fracstab` command-line front end.
//!
//! Exit codes: 0 success (or stable), 1 unstable, 2 usage or invalid input,
//! 3 boundary / indeterminate. Complex numbers are written `a+bi` on the
//! command line and `{"re": a, "im": b}` in JSON. CSV output uses a header
//! row, `,` separators, LF line ends, and 17 significant digits.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::error::{Error, Result};
use crate::kernel::ComplexOrder;
use crate::solver::SimulationOptions;
use crate::stability::{
    boundary_curve, classify_eigenvalues, classify_lambda, detect_self_intersection, eigenvalues,
    is_simple_order, Status, DEFAULT_SAMPLES, MIN_DETECTION_SAMPLES,
};
use crate::systems::{build_system, equilibrium_verdict, logistic_intervals};
use crate::{CMatrix, CVector};

pub const EXIT_STABLE: i32 = 0;
pub const EXIT_UNSTABLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INDETERMINATE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "fracstab",
    version,
    about = "Complex-order fractional difference equations: boundary curves, stability checks, simulation"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sample the stability boundary curve γ(t).
    Boundary(BoundaryArgs),
    /// Classify an eigenvalue or a matrix.
    Check(CheckArgs),
    /// Integrate a built-in system.
    Simulate(SimulateArgs),
    /// Stable λ-intervals of both logistic-map equilibria.
    LogisticIntervals(IntervalArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct BoundaryArgs {
    /// Order α, e.g. 0.8+0.7i
    #[arg(long, value_parser = parse_complex_arg, allow_hyphen_values = true)]
    pub alpha: Option<Complex64>,
    /// Uniform samples on [0, 2π] before endpoint refinement
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Output file (stdout when omitted)
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// JSON file whose fields override the flags
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[arg(long, value_parser = parse_complex_arg, allow_hyphen_values = true)]
    pub alpha: Option<Complex64>,
    /// Scalar eigenvalue, e.g. 0.2+0.5i
    #[arg(long, value_parser = parse_complex_arg, allow_hyphen_values = true, conflicts_with = "matrix")]
    pub lambda: Option<Complex64>,
    /// JSON file holding a square matrix of complex entries
    #[arg(long)]
    pub matrix: Option<PathBuf>,
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[arg(long, value_parser = parse_complex_arg, allow_hyphen_values = true)]
    pub alpha: Option<Complex64>,
    /// linear, logistic, or coupled2d
    #[arg(long)]
    pub system: Option<String>,
    /// System parameter as key=value (repeatable)
    #[arg(long = "param", value_parser = parse_param, allow_hyphen_values = true)]
    pub params: Vec<(String, Complex64)>,
    /// Initial state, comma separated
    #[arg(long, allow_hyphen_values = true)]
    pub x0: Option<String>,
    #[arg(long)]
    pub steps: Option<usize>,
    /// Divergence cutoff on ‖x‖
    #[arg(long)]
    pub cutoff: Option<f64>,
    /// CSV output file (stdout when omitted)
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Summary JSON (defaults to <output>.summary.json, or stderr)
    #[arg(long)]
    pub summary: Option<PathBuf>,
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct IntervalArgs {
    #[arg(long, value_parser = parse_complex_arg, allow_hyphen_values = true)]
    pub alpha: Option<Complex64>,
    #[arg(long)]
    pub config: Option<PathBuf>,
}

/// Parses `a`, `bi`, `a+bi`, `a-bi` (also `i`, `-i`, exponents like `1e-3-2e-1i`).
pub fn parse_complex(s: &str) -> Result<Complex64> {
    let bad = || Error::InvalidArgument(format!("cannot parse complex number {s:?}"));
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err(bad());
    }
    let parse_imag = |body: &str| -> Result<f64> {
        match body {
            "" | "+" => Ok(1.0),
            "-" => Ok(-1.0),
            _ => body.parse::<f64>().map_err(|_| bad()),
        }
    };
    let Some(body) = t.strip_suffix('i') else {
        return t
            .parse::<f64>()
            .ok()
            .filter(|re| re.is_finite())
            .map(|re| Complex64::new(re, 0.0))
            .ok_or_else(bad);
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let value = match split {
        Some(k) => Complex64::new(
            body[..k].parse::<f64>().map_err(|_| bad())?,
            parse_imag(&body[k..])?,
        ),
        None => Complex64::new(0.0, parse_imag(body)?),
    };
    if value.re.is_finite() && value.im.is_finite() {
        Ok(value)
    } else {
        Err(bad())
    }
}

fn parse_complex_arg(s: &str) -> std::result::Result<Complex64, String> {
    parse_complex(s).map_err(|e| e.to_string())
}

fn parse_param(s: &str) -> std::result::Result<(String, Complex64), String> {
    let (k, v) = s
        .split_once('=')
        .ok_or_else(|| format!("expected key=value, got {s:?}"))?;
    Ok((k.trim().to_string(), parse_complex_arg(v)?))
}

fn parse_vector(s: &str) -> std::result::Result<Vec<Complex64>, String> {
    s.split(',').map(parse_complex_arg).collect()
}

/// Complex value in JSON: either a bare number or `{"re": .., "im": ..}`.
#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(untagged)]
pub enum JsonComplex {
    Real(f64),
    Parts { re: f64, im: f64 },
}

impl From<JsonComplex> for Complex64 {
    fn from(j: JsonComplex) -> Self {
        match j {
            JsonComplex::Real(re) => Complex64::new(re, 0.0),
            JsonComplex::Parts { re, im } => Complex64::new(re, im),
        }
    }
}

/// Fields accepted by `--config`; each one present overrides its flag.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub alpha: Option<JsonComplex>,
    pub samples: Option<usize>,
    pub format: Option<Format>,
    pub output: Option<PathBuf>,
    pub lambda: Option<JsonComplex>,
    pub matrix: Option<Vec<Vec<JsonComplex>>>,
    pub system: Option<String>,
    pub params: Option<BTreeMap<String, JsonComplex>>,
    pub x0: Option<Vec<JsonComplex>>,
    pub steps: Option<usize>,
    pub cutoff: Option<f64>,
    pub summary: Option<PathBuf>,
}

fn load_config(path: Option<&Path>) -> Result<ConfigFile> {
    match path {
        None => Ok(ConfigFile::default()),
        Some(p) => Ok(serde_json::from_str(&fs::read_to_string(p)?)?),
    }
}

fn require<T>(value: Option<T>, field: &str) -> Result<T> {
    value.ok_or_else(|| Error::InvalidArgument(format!("missing required field `{field}`")))
}

fn order_from(alpha: Option<Complex64>) -> Result<ComplexOrder> {
    let a = require(alpha, "alpha")?;
    ComplexOrder::from_complex(a).map_err(|e| Error::InvalidArgument(format!("field `alpha`: {e}")))
}

fn num(x: f64) -> String {
    format!("{x:.16e}")
}

fn complex_json(z: Complex64) -> serde_json::Value {
    json!({ "re": z.re, "im": z.im })
}

fn matrix_from_json(rows: Vec<Vec<JsonComplex>>) -> Result<CMatrix> {
    let n = rows.len();
    if n == 0 || rows.iter().any(|r| r.len() != n) {
        return Err(Error::InvalidArgument(
            "field `matrix` must be a non-empty square array".into(),
        ));
    }
    Ok(CMatrix::from_fn(n, n, |i, j| rows[i][j].into()))
}

fn write_out(path: Option<&Path>, stdout: &mut dyn Write, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

/// Runs one command; returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = if code == 0 {
                write!(stdout, "{e}")
            } else {
                write!(stderr, "{e}")
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Boundary(a) => cmd_boundary(a, stdout),
        Command::Check(a) => cmd_check(a, stdout),
        Command::Simulate(a) => cmd_simulate(a, stdout, stderr),
        Command::LogisticIntervals(a) => cmd_logistic_intervals(a, stdout),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

pub fn cmd_boundary(args: BoundaryArgs, stdout: &mut dyn Write) -> Result<i32> {
    let cfg = load_config(args.config.as_deref())?;
    let order = order_from(cfg.alpha.map(Into::into).or(args.alpha))?;
    let samples = cfg.samples.or(args.samples).unwrap_or(DEFAULT_SAMPLES);
    let format = cfg.format.or(args.format).unwrap_or(Format::Csv);
    let output = cfg.output.or(args.output);

    let curve = boundary_curve(order, samples)?;
    let text = match format {
        Format::Csv => {
            let mut s = String::from("t,re,im\n");
            for p in &curve.samples {
                s.push_str(&format!(
                    "{},{},{}\n",
                    num(p.t),
                    num(p.point.re),
                    num(p.point.im)
                ));
            }
            s
        }
        Format::Json => {
            let crossing = if samples >= MIN_DETECTION_SAMPLES {
                detect_self_intersection(&curve)?
            } else {
                None
            };
            let pts: Vec<_> = curve
                .samples
                .iter()
                .map(|p| json!({ "t": p.t, "re": p.point.re, "im": p.point.im }))
                .collect();
            let doc = json!({
                "order": order,
                "is_simple": curve.is_simple,
                "self_intersection": crossing.map(|(t1, t2)| json!({ "t1": t1, "t2": t2 })),
                "n_samples": samples,
                "samples": pts,
            });
            serde_json::to_string_pretty(&doc)? + "\n"
        }
    };
    write_out(output.as_deref(), stdout, &text)?;
    Ok(EXIT_STABLE)
}

fn exit_for(status: Status) -> i32 {
    match status {
        Status::Stable => EXIT_STABLE,
        Status::Unstable => EXIT_UNSTABLE,
        Status::Boundary => EXIT_INDETERMINATE,
    }
}

pub fn cmd_check(args: CheckArgs, stdout: &mut dyn Write) -> Result<i32> {
    let cfg = load_config(args.config.as_deref())?;
    let order = order_from(cfg.alpha.map(Into::into).or(args.alpha))?;
    let lambda: Option<Complex64> = cfg.lambda.map(Into::into).or(args.lambda);
    let matrix = match (cfg.matrix, &args.matrix) {
        (Some(rows), _) => Some(matrix_from_json(rows)?),
        (None, Some(path)) => {
            let rows: Vec<Vec<JsonComplex>> = serde_json::from_str(&fs::read_to_string(path)?)?;
            Some(matrix_from_json(rows)?)
        }
        (None, None) => None,
    };

    let (status, doc) = match (lambda, matrix) {
        (Some(_), Some(_)) => {
            return Err(Error::InvalidArgument(
                "give either `lambda` or `matrix`, not both".into(),
            ))
        }
        (None, None) => {
            return Err(Error::InvalidArgument(
                "missing required field `lambda` or `matrix`".into(),
            ))
        }
        (Some(l), None) => {
            let v = classify_lambda(order, l);
            (
                v.status,
                json!({
                    "order": order,
                    "lambda": complex_json(l),
                    "verdict": v,
                    "reason": v.reason(),
                }),
            )
        }
        (None, Some(m)) => {
            let ev = eigenvalues(&m)?;
            let mv = classify_eigenvalues(order, &ev);
            (
                mv.verdict.status,
                json!({
                    "order": order,
                    "eigenvalues": mv.eigenvalues,
                    "verdict": mv.verdict,
                    "reason": mv.verdict.reason(),
                }),
            )
        }
    };
    writeln!(stdout, "{}", serde_json::to_string_pretty(&doc)?)?;
    Ok(exit_for(status))
}

#[derive(Serialize)]
struct EquilibriumReport {
    point: Vec<serde_json::Value>,
    verdict: Option<crate::stability::StabilityVerdict>,
    error: Option<String>,
}

pub fn cmd_simulate(
    args: SimulateArgs,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32> {
    let cfg = load_config(args.config.as_deref())?;
    let order = order_from(cfg.alpha.map(Into::into).or(args.alpha))?;
    let system = require(cfg.system.or(args.system), "system")?;
    let params: BTreeMap<String, Complex64> = match cfg.params {
        Some(p) => p.into_iter().map(|(k, v)| (k, v.into())).collect(),
        None => args.params.into_iter().collect(),
    };
    let x0: Vec<Complex64> = match cfg.x0 {
        Some(v) => v.into_iter().map(Into::into).collect(),
        None => parse_vector(&require(args.x0, "x0")?).map_err(Error::InvalidArgument)?,
    };
    let steps = require(cfg.steps.or(args.steps), "steps")?;
    let cutoff = cfg
        .cutoff
        .or(args.cutoff)
        .unwrap_or(SimulationOptions::default().divergence_cutoff);
    if cutoff.is_nan() || cutoff <= 0.0 {
        return Err(Error::InvalidArgument(
            "field `cutoff` must be positive".into(),
        ));
    }
    let output = cfg.output.or(args.output);
    let summary_path = cfg.summary.or(args.summary).or_else(|| {
        output
            .as_ref()
            .map(|o| PathBuf::from(format!("{}.summary.json", o.display())))
    });

    let sys = build_system(&system, &params)?;
    if x0.len() != sys.map.dimension() {
        return Err(Error::InvalidArgument(format!(
            "field `x0` has {} components, system {system} needs {}",
            x0.len(),
            sys.map.dimension()
        )));
    }
    let x0 = CVector::from_vec(x0);
    let traj =
        SimulationOptions::with_cutoff(cutoff).simulate_nonlinear(order, &sys.map, &x0, steps)?;

    let dim = x0.len();
    let mut csv = String::from("t");
    for k in 1..=dim {
        csv.push_str(&format!(",re_x{k},im_x{k},abs_x{k}"));
    }
    csv.push('\n');
    for (t, x) in traj.states.iter().enumerate() {
        csv.push_str(&t.to_string());
        for z in x.iter() {
            csv.push_str(&format!(",{},{},{}", num(z.re), num(z.im), num(z.norm())));
        }
        csv.push('\n');
    }
    write_out(output.as_deref(), stdout, &csv)?;

    let equilibria: Vec<EquilibriumReport> = sys
        .equilibria
        .iter()
        .map(|p| {
            let r = equilibrium_verdict(order, &sys.map, p);
            EquilibriumReport {
                point: p.iter().map(|&z| complex_json(z)).collect(),
                verdict: r.as_ref().ok().cloned(),
                error: r.err().map(|e| e.to_string()),
            }
        })
        .collect();
    let nearest = sys
        .equilibria
        .iter()
        .enumerate()
        .min_by(|a, b| (a.1 - &x0).norm().total_cmp(&(b.1 - &x0).norm()))
        .map(|(i, _)| i);
    let verdict = nearest.and_then(|i| equilibria[i].verdict.clone());
    let summary = json!({
        "order": order,
        "system": sys.name,
        "params": params.iter().map(|(k, v)| (k.clone(), complex_json(*v))).collect::<BTreeMap<_, _>>(),
        "steps": steps,
        "states_written": traj.len(),
        "final_norm": traj.last().norm(),
        "diverged_at": traj.diverged_at,
        "divergence_cutoff": cutoff,
        "verdict": verdict,
        "equilibria": equilibria,
    });
    let text = serde_json::to_string_pretty(&summary)? + "\n";
    match summary_path {
        Some(p) => fs::write(p, text)?,
        None => stderr.write_all(text.as_bytes())?,
    }
    Ok(EXIT_STABLE)
}

pub fn cmd_logistic_intervals(args: IntervalArgs, stdout: &mut dyn Write) -> Result<i32> {
    let cfg = load_config(args.config.as_deref())?;
    let order = order_from(cfg.alpha.map(Into::into).or(args.alpha))?;
    let doc = if is_simple_order(order) {
        let iv = logistic_intervals(order)?;
        json!({ "order": order, "status": "ok", "intervals": { "x1": iv.x1, "x2": iv.x2 } })
    } else {
        json!({
            "order": order,
            "status": "unstable for all eigenvalues",
            "intervals": { "x1": [], "x2": [] },
        })
    };
    writeln!(stdout, "{}", serde_json::to_string_pretty(&doc)?)?;
    Ok(EXIT_STABLE)
}
