//! Command-line front end for the `ortho` binary.
//!
//! Every command prints one [`OutputRecord`] as JSON (or a flat CSV table
//! with `--csv`). Exit codes: 0 success, 2 usage or domain error, 3 a
//! tolerance check failed.

use std::path::PathBuf;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::analysis::{
    conjecture_check_with, find_extrema, find_extrema_in, find_zeros, involution_metrics,
    ConjectureReport, ExtremaReport, InvolutionReport,
};
use crate::error::{Error, Result};
use crate::family::{
    exponential_closed_form, logarithmic_closed_form, rational_closed_form, Family, FamilySpec,
};
use crate::legendre::JacobiParams;
use crate::polynomial::Polynomial;
use crate::projection::{gram, project, transmuted_gram_report_exact, ExpansionResult, GramReport};
use crate::quadrature::gauss_rule;
use crate::roots::linspace;
use crate::transmuted::transmuted_poly;

pub const SCHEMA_VERSION: &str = "1";

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_TOLERANCE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "ortho", version, about = "Orthogonal function families on [0,1]")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Emit a flat CSV table instead of JSON.
    #[arg(long, global = true)]
    pub csv: bool,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Attach run metadata (version, timestamp) in a separate `meta` field.
    #[arg(long, global = true)]
    pub meta: bool,
}

#[derive(Args, Debug, Clone)]
pub struct FamilyArgs {
    #[arg(long, value_enum, default_value_t = FamilyArg::Altered)]
    pub family: FamilyArg,
    /// Base of the exponential/logarithmic families (> 1).
    #[arg(long, default_value_t = 2.0)]
    pub b: f64,
    /// Parameter of the rational family (> 0).
    #[arg(long, default_value_t = 1.0)]
    pub c: f64,
    /// Odd degree of the transmutation map.
    #[arg(long, default_value_t = 3)]
    pub nu: u32,
    /// Jacobi exponent at x = 1 (generalized altered family).
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<f64>,
    /// Jacobi exponent at x = 0 (generalized altered family).
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<f64>,
    /// Power of (x+1)/2 (generalized altered family).
    #[arg(long)]
    pub gamma: Option<f64>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyArg {
    Altered,
    Rational,
    Exponential,
    Logarithmic,
    Transmuted,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Altered => Family::Altered,
            FamilyArg::Rational => Family::Rational,
            FamilyArg::Exponential => Family::Exponential,
            FamilyArg::Logarithmic => Family::Logarithmic,
            FamilyArg::Transmuted => Family::Transmuted,
        }
    }
}

impl FamilyArgs {
    pub fn spec(&self) -> Result<FamilySpec> {
        let jacobi = match (self.alpha, self.beta) {
            (None, None) => None,
            (a, b) => Some(JacobiParams::new(a.unwrap_or(0.0), b.unwrap_or(0.0))?),
        };
        let spec = FamilySpec {
            family: self.family.into(),
            b: self.b,
            c: self.c,
            nu: self.nu,
            jacobi,
            gamma: self.gamma.unwrap_or(1.0),
        };
        spec.validate()?;
        Ok(spec)
    }
}

/// Functions available to `expand`.
#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TestFunction {
    /// f(x) = 1
    One,
    /// f(x) = x
    X,
    /// f(x) = exp(x)
    Exp,
    /// f(x) = sin(πx)
    Sin,
    /// f(x) = ln(1 + x)
    Log1p,
}

impl TestFunction {
    pub fn eval(self, x: f64) -> f64 {
        match self {
            TestFunction::One => 1.0,
            TestFunction::X => x,
            TestFunction::Exp => x.exp(),
            TestFunction::Sin => (std::f64::consts::PI * x).sin(),
            TestFunction::Log1p => x.ln_1p(),
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Tabulate f_n on a grid `start:stop:count`.
    Eval {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "0:1:101", allow_hyphen_values = true)]
        grid: String,
    },
    /// Exact closed form: rational numerator, exponential F_n(t),
    /// logarithmic G_n(t) or transmuted polynomial.
    ClosedForm {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        n: usize,
    },
    /// Gram matrix under the family's weight with closed-form diagonal.
    Gram {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long = "N", default_value_t = 6)]
        size: usize,
        /// Gauss–Legendre points.
        #[arg(long, env = "ORTHO_QUAD_ORDER", default_value_t = 128)]
        order: usize,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        /// Exact rational arithmetic (transmuted family only).
        #[arg(long)]
        exact: bool,
    },
    /// Zeros of f_n in [lo, hi].
    Zeros {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        lo: f64,
        #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
        hi: f64,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
    },
    /// Interior local extrema of f_n, on its natural domain unless
    /// --lo/--hi are given.
    Extrema {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true, requires = "hi")]
        lo: Option<f64>,
        #[arg(long, allow_hyphen_values = true, requires = "lo")]
        hi: Option<f64>,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Compare extremal values of R_n, E_n and L_n.
    Conjecture {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        #[arg(long, default_value_t = 2.0)]
        b: f64,
        #[arg(long, default_value_t = 1.0)]
        c: f64,
    },
    /// Distance between the exponential map and its inverse on [0,1].
    Involution {
        #[arg(long, default_value_t = 2.0)]
        b: f64,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
    },
    /// Orthogonal expansion of a test function.
    Expand {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value_t = TestFunction::One)]
        f: TestFunction,
        #[arg(long = "N", default_value_t = 6)]
        size: usize,
        #[arg(long, env = "ORTHO_QUAD_ORDER", default_value_t = 128)]
        order: usize,
        /// Extra sample grid `start:stop:count`, e.g. for extrapolation
        /// outside [0,1].
        #[arg(long, allow_hyphen_values = true)]
        sample: Option<String>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Meta {
    pub version: String,
    pub unix_time: u64,
}

/// Envelope of every report printed by the CLI.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord<P> {
    pub schema_version: String,
    pub command: String,
    pub spec: Option<FamilySpec>,
    pub payload: P,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meta: Option<Meta>,
}

impl<P> OutputRecord<P> {
    pub fn new(command: &str, spec: Option<FamilySpec>, payload: P) -> Self {
        Self {
            schema_version: SCHEMA_VERSION.to_string(),
            command: command.to_string(),
            spec,
            payload,
            meta: None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct EvalRow {
    pub x: f64,
    pub value: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EvalTable {
    pub n: usize,
    pub rows: Vec<EvalRow>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClosedForm {
    pub n: usize,
    /// `x` for rational numerators and transmuted polynomials, `t` otherwise.
    pub variable: String,
    /// Exact ascending coefficients as `p` or `p/q`.
    pub coefficients: Vec<String>,
    pub display: String,
    /// Denominator `(1 + cx)^pole_order` for the rational family.
    pub pole_order: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ZerosTable {
    pub n: usize,
    pub interval: [f64; 2],
    pub tol: f64,
    pub zeros: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Expansion {
    pub function: TestFunction,
    pub result: ExpansionResult,
}

/// A rendered command result and the process exit code it implies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub exit_code: i32,
}

/// Flat table view used by `--csv`.
pub trait Tabular {
    fn header(&self) -> Vec<String>;
    fn rows(&self) -> Vec<Vec<f64>>;
}

impl Tabular for EvalTable {
    fn header(&self) -> Vec<String> {
        vec!["x".into(), "value".into()]
    }
    fn rows(&self) -> Vec<Vec<f64>> {
        self.rows.iter().map(|r| vec![r.x, r.value]).collect()
    }
}

impl Tabular for ZerosTable {
    fn header(&self) -> Vec<String> {
        vec!["x".into()]
    }
    fn rows(&self) -> Vec<Vec<f64>> {
        self.zeros.iter().map(|&z| vec![z]).collect()
    }
}

impl Tabular for GramReport {
    fn header(&self) -> Vec<String> {
        (self.first_index..self.first_index + self.size)
            .map(|n| format!("n{n}"))
            .collect()
    }
    fn rows(&self) -> Vec<Vec<f64>> {
        self.matrix.clone()
    }
}

impl Tabular for ExtremaReport {
    fn header(&self) -> Vec<String> {
        vec!["x".into(), "value".into()]
    }
    fn rows(&self) -> Vec<Vec<f64>> {
        self.abscissas
            .iter()
            .zip(&self.values)
            .map(|(&x, &v)| vec![x, v])
            .collect()
    }
}

impl Tabular for ConjectureReport {
    fn header(&self) -> Vec<String> {
        ["r", "e", "l", "value_r", "value_e", "value_l"]
            .map(String::from)
            .to_vec()
    }
    fn rows(&self) -> Vec<Vec<f64>> {
        self.matched_triples
            .iter()
            .map(|t| vec![t.r, t.e, t.l, t.value_r, t.value_e, t.value_l])
            .collect()
    }
}

impl Tabular for InvolutionReport {
    fn header(&self) -> Vec<String> {
        vec!["fixed_point".into()]
    }
    fn rows(&self) -> Vec<Vec<f64>> {
        self.fixed_points.iter().map(|&x| vec![x]).collect()
    }
}

impl Tabular for ClosedForm {
    fn header(&self) -> Vec<String> {
        vec!["power".into(), "coefficient".into()]
    }
    fn rows(&self) -> Vec<Vec<f64>> {
        self.coefficients
            .iter()
            .enumerate()
            .map(|(k, c)| vec![k as f64, parse_fraction(c)])
            .collect()
    }
}

impl Tabular for Expansion {
    fn header(&self) -> Vec<String> {
        vec!["x".into(), "value".into(), "reconstruction".into()]
    }
    fn rows(&self) -> Vec<Vec<f64>> {
        self.result
            .sampled_errors
            .iter()
            .map(|s| vec![s.x, s.value, s.reconstruction])
            .collect()
    }
}

fn parse_fraction(s: &str) -> f64 {
    match s.split_once('/') {
        Some((p, q)) => p.parse::<f64>().unwrap_or(f64::NAN) / q.parse::<f64>().unwrap_or(f64::NAN),
        None => s.parse().unwrap_or(f64::NAN),
    }
}

/// Parses `start:stop:count` into an inclusive uniform grid.
pub fn parse_grid(s: &str) -> Result<Vec<f64>> {
    let bad = || Error::invalid("grid", s, "expected start:stop:count");
    let parts: Vec<&str> = s.split(':').collect();
    let [a, b, n] = parts.as_slice() else {
        return Err(bad());
    };
    let lo: f64 = a.trim().parse().map_err(|_| bad())?;
    let hi: f64 = b.trim().parse().map_err(|_| bad())?;
    let count: usize = n.trim().parse().map_err(|_| bad())?;
    if count == 0 || !lo.is_finite() || !hi.is_finite() {
        return Err(bad());
    }
    Ok(linspace(lo, hi, count))
}

fn render<P: Serialize + Tabular>(
    cli: &Cli,
    command: &str,
    spec: Option<FamilySpec>,
    payload: P,
) -> Result<String> {
    if cli.csv {
        let mut out = payload.header().join(",");
        out.push('\n');
        for row in payload.rows() {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:?}")).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        return Ok(out);
    }
    let mut record = OutputRecord::new(command, spec, payload);
    if cli.meta {
        record.meta = Some(Meta {
            version: env!("CARGO_PKG_VERSION").to_string(),
            unix_time: SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0),
        });
    }
    let mut text = serde_json::to_string_pretty(&record)
        .map_err(|e| Error::Unsupported(format!("serialization failed: {e}")))?;
    text.push('\n');
    Ok(text)
}

fn fraction_strings(p: &Polynomial) -> Vec<String> {
    p.coeffs()
        .iter()
        .map(|c| {
            if c.is_integer() {
                c.numer().to_string()
            } else {
                format!("{}/{}", c.numer(), c.denom().abs())
            }
        })
        .collect()
}

fn closed_form(spec: &FamilySpec, n: usize) -> Result<ClosedForm> {
    let (poly, variable, pole_order) = match spec.family {
        Family::Rational => {
            let (num, order) = rational_closed_form(n, spec.c)?;
            (num, "x", Some(order))
        }
        Family::Exponential if spec.b == 2.0 => (exponential_closed_form(n)?, "t", None),
        Family::Exponential => {
            return Err(Error::Unsupported(
                "closed-form F_n(t) is tabulated for b = 2 only".into(),
            ))
        }
        Family::Logarithmic => (logarithmic_closed_form(n, spec.b)?, "t", None),
        Family::Transmuted => (transmuted_poly(spec.nu, n)?, "x", None),
        Family::Altered => {
            if spec.is_generalized() {
                return Err(Error::Unsupported(
                    "closed form of the generalized altered family".into(),
                ));
            }
            let s = spec.shift().expect("altered family has a shift");
            let lin = Polynomial::from_coeffs(vec![
                crate::polynomial::rat_from_f64("alpha", s.alpha * s.a)?,
                crate::polynomial::rat_from_f64("alpha", s.alpha)?,
            ]);
            if n == 0 {
                return Err(Error::invalid("n", n, "members are indexed from 1"));
            }
            (&lin * &crate::legendre::shifted_legendre(n - 1), "x", None)
        }
    };
    Ok(ClosedForm {
        n,
        variable: variable.to_string(),
        coefficients: fraction_strings(&poly),
        display: poly.to_string().replace('x', variable),
        pole_order,
    })
}

/// Executes a parsed command line. Usage and domain problems come back as
/// `Err`; a failed tolerance check is an `Ok` output with exit code 3.
pub fn run(cli: &Cli) -> Result<Output> {
    let ok = |text| Output { text, exit_code: EXIT_OK };
    match &cli.command {
        Command::Eval { family, n, grid } => {
            let spec = family.spec()?;
            let rows = parse_grid(grid)?
                .into_iter()
                .map(|x| Ok(EvalRow { x, value: spec.eval(*n, x)? }))
                .collect::<Result<Vec<_>>>()?;
            render(cli, "eval", Some(spec), EvalTable { n: *n, rows }).map(ok)
        }
        Command::ClosedForm { family, n } => {
            let spec = family.spec()?;
            render(cli, "closed-form", Some(spec), closed_form(&spec, *n)?).map(ok)
        }
        Command::Gram {
            family,
            size,
            order,
            tol,
            exact,
        } => {
            let spec = family.spec()?;
            let report = if *exact {
                if spec.family != Family::Transmuted {
                    return Err(Error::Unsupported(
                        "--exact applies to the transmuted family only".into(),
                    ));
                }
                transmuted_gram_report_exact(spec.nu, *size)?
            } else {
                gram(&spec, *size, &gauss_rule(*order)?)?
            };
            let passed = report.passes(*tol);
            let text = render(cli, "gram", Some(spec), report)?;
            Ok(Output {
                text,
                exit_code: if passed { EXIT_OK } else { EXIT_TOLERANCE },
            })
        }
        Command::Zeros { family, n, lo, hi, tol } => {
            let spec = family.spec()?;
            let zeros = find_zeros(&spec, *n, *lo, *hi, *tol)?;
            let table = ZerosTable {
                n: *n,
                interval: [*lo, *hi],
                tol: *tol,
                zeros,
            };
            render(cli, "zeros", Some(spec), table).map(ok)
        }
        Command::Extrema { family, n, lo, hi, tol } => {
            let spec = family.spec()?;
            let report = match (lo, hi) {
                (Some(lo), Some(hi)) => find_extrema_in(&spec, *n, *lo, *hi, *tol)?,
                _ => find_extrema(&spec, *n, *tol)?,
            };
            render(cli, "extrema", Some(spec), report).map(ok)
        }
        Command::Conjecture { n, tol, b, c } => {
            let report = conjecture_check_with(*n, *b, *c, *tol)?;
            render(cli, "conjecture", None, report).map(ok)
        }
        Command::Involution { b, tol } => {
            let report = involution_metrics(*b, *tol)?;
            render(cli, "involution", None, report).map(ok)
        }
        Command::Expand {
            family,
            f,
            size,
            order,
            sample,
        } => {
            let spec = family.spec()?;
            let func = *f;
            let mut result = project(|x| func.eval(x), &spec, *size, &gauss_rule(*order)?)?;
            if let Some(grid) = sample {
                result.sampled_errors = result.sample(|x| func.eval(x), &parse_grid(grid)?)?;
            }
            let payload = Expansion { function: func, result };
            render(cli, "expand", Some(spec), payload).map(ok)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Result<Output> {
        let cli = Cli::try_parse_from(std::iter::once("ortho").chain(args.iter().copied())).unwrap();
        run(&cli)
    }

    #[test]
    fn grid_parsing() {
        assert_eq!(parse_grid("0:1:3").unwrap(), vec![0.0, 0.5, 1.0]);
        assert!(parse_grid("0:1").is_err());
        assert!(parse_grid("0:1:0").is_err());
        assert!(parse_grid("a:1:2").is_err());
    }

    #[test]
    fn eval_domain_error_is_an_error() {
        let err = run_args(&["eval", "--family", "rational", "--n", "2", "--grid", "-2:0:3"]);
        assert!(matches!(err, Err(Error::Domain { .. })));
    }

    #[test]
    fn gram_tolerance_sets_exit_code() {
        let out = run_args(&["gram", "--family", "altered", "--N", "3", "--order", "64"]).unwrap();
        assert_eq!(out.exit_code, EXIT_OK);
        let out = run_args(&["gram", "--family", "exponential", "--N", "6", "--order", "2"]).unwrap();
        assert_eq!(out.exit_code, EXIT_TOLERANCE);
    }

    #[test]
    fn exact_gram_requires_transmuted() {
        assert!(run_args(&["gram", "--family", "rational", "--exact"]).is_err());
    }

    #[test]
    fn closed_form_display() {
        let out = run_args(&["closed-form", "--family", "transmuted", "--nu", "3", "--n", "1"]).unwrap();
        assert!(out.text.contains("-2x^3 + 2x^2 - 2x + 1"));
        let out = run_args(&["closed-form", "--family", "exponential", "--n", "2"]).unwrap();
        assert!(out.text.contains("4t^2 - 3t"));
    }

    #[test]
    fn csv_output_shape() {
        let out = run_args(&["eval", "--family", "transmuted", "--n", "1", "--grid", "0:1:2", "--csv"]).unwrap();
        assert_eq!(out.text, "x,value\n0.0,1.0\n1.0,-1.0\n");
    }
}
