//! Command-line front end. [`run`] parses arguments, writes one JSON object
//! (or one text line) per result, and returns the process exit code.

use std::io::Write;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde::Serialize;
use serde_json::{json, Value};

use crate::basis::{self, BesselKind};
use crate::exact::{format_rational, parse_rational, Rational};
use crate::identities::{
    corollary1_grid, equal_degree_grid, hypergeom_suite, positivity_scan, tenths,
    HypergeomIdentity, IdentityReport,
};
use crate::linearize::{beta_row, Method, RecurrenceTable};
use crate::student_t::{
    boros_moll_lhs_quadrature, boros_moll_rhs, gamma_coeffs, gamma_coeffs_printed,
};
use crate::{carlitz, Error, Poly};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_CHECK_FAILED: i32 = 2;
pub const EXIT_NO_CONVERGENCE: i32 = 3;

pub const DEFAULT_SEED: u64 = 20_240_601;

#[derive(Parser, Debug)]
#[command(
    name = "bessel-linc",
    version,
    about = "Exact linearization coefficients of Bessel polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Coefficients of q_n, y_n or theta_n
    Basis(BasisArgs),
    /// Linearization coefficients beta_k^{(n,m)}(a)
    Beta(BetaArgs),
    /// Run an identity suite
    Verify(VerifyArgs),
    /// Exact Boros-Moll weights gamma_k
    Gamma(GammaArgs),
    /// Boros-Moll integral: exact right side against quadrature
    Integral(IntegralArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Q,
    Y,
    Theta,
}

impl From<KindArg> for BesselKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Q => BesselKind::Q,
            KindArg::Y => BesselKind::Y,
            KindArg::Theta => BesselKind::Theta,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    SingleSum,
    Hypergeom,
    Recurrence,
    Oracle,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    Pfaff,
    Gauss,
    Contiguous,
    Quadratic,
    Corollary1,
    EqualDegree,
    Positivity,
}

#[derive(Args, Debug)]
struct BasisArgs {
    #[arg(long, value_enum)]
    kind: KindArg,
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args, Debug)]
struct BetaArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: usize,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, value_enum, default_value = "single-sum")]
    method: MethodArg,
    /// Evaluate at a rational point "p/q"
    #[arg(long, value_parser = rational_arg)]
    eval: Option<Rational>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(value_enum)]
    suite: Suite,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, default_value_t = 6)]
    max: usize,
    /// Comma-separated sample points in (0, 1); defaults to 1/10, ..., 9/10
    #[arg(long, value_delimiter = ',', value_parser = rational_arg)]
    samples: Vec<Rational>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args, Debug)]
struct GammaArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: usize,
    /// Use the unweighted sum instead of the corrected weights
    #[arg(long)]
    printed: bool,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args, Debug)]
struct IntegralArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: usize,
    #[arg(long, allow_hyphen_values = true)]
    x: f64,
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    /// Largest accepted |lhs/rhs - 1|
    #[arg(long, default_value_t = 1e-9)]
    max_deviation: f64,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

/// Line sink shared by every subcommand.
struct Output<'a, W: Write> {
    out: &'a mut W,
    format: Format,
}

impl<W: Write> Output<'_, W> {
    fn emit(&mut self, json: &Value, text: impl FnOnce() -> String) -> std::io::Result<()> {
        match self.format {
            Format::Json => writeln!(self.out, "{json}"),
            Format::Text => writeln!(self.out, "{}", text()),
        }
    }
}

enum Failure {
    Usage(String),
    Io(std::io::Error),
    Lib(Error),
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Outcome = std::result::Result<bool, Failure>;

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T, O, E>(args: I, out: &mut O, err: &mut E) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
    O: Write,
    E: Write,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    let result = match cli.command {
        Command::Basis(a) => run_basis(a, out),
        Command::Beta(a) => run_beta(a, out),
        Command::Verify(a) => run_verify(a, out),
        Command::Gamma(a) => run_gamma(a, out),
        Command::Integral(a) => run_integral(a, out),
    };
    match result {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_CHECK_FAILED,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
        Err(Failure::Lib(e @ Error::QuadratureNonConvergence { .. })) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_NO_CONVERGENCE
        }
        Err(Failure::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn run_basis<W: Write>(a: BasisArgs, out: &mut W) -> Outcome {
    let v = basis::coeffs(a.kind.into(), a.n)?;
    let coeffs: Vec<String> = v.coeffs.iter().map(format_rational).collect();
    let json = json!({ "kind": v.kind, "n": v.n, "var": "u", "coeffs": coeffs });
    let text = || {
        format!(
            "{}_{}(u) = {}",
            v.kind,
            v.n,
            v.to_poly().to_string().replace('a', "u")
        )
    };
    Output {
        out,
        format: a.format,
    }
    .emit(&json, text)?;
    Ok(true)
}

fn poly_json(p: &Poly) -> Value {
    serde_json::to_value(p).expect("Poly serializes")
}

fn eval_json(row: &[Poly], at: &Option<Rational>) -> Option<Vec<String>> {
    at.as_ref()
        .map(|x| row.iter().map(|p| format_rational(&p.eval(x))).collect())
}

fn run_beta<W: Write>(a: BetaArgs, out: &mut W) -> Outcome {
    let (n, m) = (a.n, a.m);
    if let Some(k) = a.k {
        if k > n + m {
            return Err(Failure::Usage(format!("--k {k} exceeds n + m = {}", n + m)));
        }
    }
    let methods: Vec<Method> = match a.method {
        MethodArg::SingleSum => vec![Method::SingleSum],
        MethodArg::Hypergeom => vec![Method::Hypergeom],
        MethodArg::Recurrence => vec![Method::Recurrence],
        MethodArg::Oracle => vec![Method::Oracle],
        MethodArg::All => Method::ALL.to_vec(),
    };
    let mut rows = Vec::with_capacity(methods.len());
    for &method in &methods {
        let row = match method {
            Method::Recurrence => RecurrenceTable::new().row(n, m)?.clone(),
            Method::Oracle => carlitz::beta_oracle(n, m)?,
            _ => beta_row(method, n, m)?,
        };
        rows.push((method, row));
    }
    let select = |row: &[Poly]| -> Vec<Poly> {
        match a.k {
            Some(k) => vec![row[k].clone()],
            None => row.to_vec(),
        }
    };
    let (reference_method, reference) = (&rows[0].0, select(&rows[0].1));
    let disagreeing: Vec<&'static str> = rows
        .iter()
        .filter(|(_, r)| select(r) != reference)
        .map(|(m, _)| m.name())
        .collect();
    let agree = disagreeing.is_empty();

    let mut json = json!({ "n": n, "m": m });
    let obj = json.as_object_mut().expect("object");
    match a.k {
        Some(k) => {
            obj.insert("k".into(), json!(k));
            obj.insert("beta".into(), poly_json(&reference[0]));
        }
        None => {
            obj.insert(
                "row".into(),
                Value::Array(reference.iter().map(poly_json).collect()),
            );
        }
    }
    if a.method == MethodArg::All {
        obj.insert(
            "methods".into(),
            json!(methods.iter().map(|m| m.name()).collect::<Vec<_>>()),
        );
        obj.insert("agreement".into(), json!(agree));
        obj.insert("disagreeing".into(), json!(disagreeing));
    } else {
        obj.insert("method".into(), json!(reference_method.name()));
    }
    if let (Some(x), Some(values)) = (&a.eval, eval_json(&reference, &a.eval)) {
        obj.insert("a".into(), json!(format_rational(x)));
        obj.insert("values".into(), json!(values));
    }

    let text = || {
        let first = a.k.unwrap_or(0);
        let mut lines: Vec<String> = reference
            .iter()
            .enumerate()
            .map(|(i, p)| {
                let mut line = format!("beta_{}^({n},{m})(a) = {p}", first + i);
                if let Some(x) = &a.eval {
                    line.push_str(&format!(
                        "    [a={}: {}]",
                        format_rational(x),
                        format_rational(&p.eval(x))
                    ));
                }
                line
            })
            .collect();
        if a.method == MethodArg::All {
            lines.push(format!("agreement: {agree}"));
        }
        lines.join("\n")
    };
    Output {
        out,
        format: a.format,
    }
    .emit(&json, text)?;
    Ok(agree)
}

fn emit_reports<W: Write>(
    out: &mut Output<'_, W>,
    suite: &str,
    reports: &[IdentityReport],
) -> Outcome {
    for r in reports {
        out.emit(&serde_json::to_value(r).expect("report serializes"), || {
            r.to_string()
        })?;
    }
    let failed = reports.iter().filter(|r| !r.holds).count();
    let summary = json!({
        "summary": suite,
        "cases": reports.len(),
        "passed": reports.len() - failed,
        "failed": failed,
    });
    out.emit(&summary, || {
        format!(
            "{suite}: {} of {} passed",
            reports.len() - failed,
            reports.len()
        )
    })?;
    Ok(failed == 0)
}

fn run_verify<W: Write>(a: VerifyArgs, out: &mut W) -> Outcome {
    let mut out = Output {
        out,
        format: a.format,
    };
    let (name, reports) = match a.suite {
        Suite::Pfaff | Suite::Gauss | Suite::Contiguous | Suite::Quadratic => {
            let kind = match a.suite {
                Suite::Pfaff => HypergeomIdentity::Pfaff,
                Suite::Gauss => HypergeomIdentity::Gauss,
                Suite::Contiguous => HypergeomIdentity::Contiguous,
                _ => HypergeomIdentity::Quadratic,
            };
            (kind.name(), hypergeom_suite(kind, a.trials, a.seed)?)
        }
        Suite::Corollary1 => ("corollary1", corollary1_grid(a.max)?),
        Suite::EqualDegree => ("equal-degree", equal_degree_grid(a.max)?),
        Suite::Positivity => {
            let samples = if a.samples.is_empty() {
                tenths()
            } else {
                a.samples.clone()
            };
            let scan = positivity_scan(a.max, &samples)?;
            for z in &scan.zeros_outside_strict_range {
                let json = json!({
                    "note": "zero outside strict range",
                    "n": z.n, "m": z.m, "k": z.k, "a": format_rational(&z.a),
                });
                out.emit(&json, || {
                    format!(
                        "note: beta_{}^({},{}) vanishes at a={}",
                        z.k,
                        z.n,
                        z.m,
                        format_rational(&z.a)
                    )
                })?;
            }
            ("positivity", scan.reports)
        }
    };
    emit_reports(&mut out, name, &reports)
}

#[derive(Serialize)]
struct GammaLine {
    n: usize,
    m: usize,
    printed: bool,
    first: usize,
    gamma: Vec<String>,
    sum: String,
}

fn run_gamma<W: Write>(a: GammaArgs, out: &mut W) -> Outcome {
    let g = if a.printed {
        gamma_coeffs_printed(a.n, a.m)?
    } else {
        gamma_coeffs(a.n, a.m)?
    };
    let line = GammaLine {
        n: g.n,
        m: g.m,
        printed: a.printed,
        first: g.first,
        gamma: g.values.iter().map(format_rational).collect(),
        sum: format_rational(&g.sum()),
    };
    let text = || {
        let mut lines: Vec<String> = g
            .iter()
            .map(|(k, v)| format!("gamma_{k} = {}", format_rational(v)))
            .collect();
        lines.push(format!("sum = {}", format_rational(&g.sum())));
        lines.join("\n")
    };
    Output {
        out,
        format: a.format,
    }
    .emit(&serde_json::to_value(&line).expect("serializes"), text)?;
    Ok(true)
}

fn run_integral<W: Write>(a: IntegralArgs, out: &mut W) -> Outcome {
    let Some(x_exact) = BigRational::from_float(a.x) else {
        return Err(Failure::Usage(format!("--x must be finite, got {}", a.x)));
    };
    let rhs = boros_moll_rhs(a.n, a.m, &x_exact)?;
    let lhs = boros_moll_lhs_quadrature(a.n, a.m, a.x, a.tol)?;
    let rhs_f = rhs.to_f64();
    let deviation = (lhs.value / rhs_f - 1.0).abs();
    let pass = deviation <= a.max_deviation;
    let json = json!({
        "n": a.n,
        "m": a.m,
        "x": a.x,
        "rhs": rhs.to_string(),
        "rhs_f64": rhs_f,
        "lhs": lhs.value,
        "abs_error_estimate": lhs.abs_error_estimate,
        "evaluations": lhs.evaluations,
        "relative_deviation": deviation,
        "pass": pass,
    });
    let text = || {
        format!(
            "rhs = {rhs} = {rhs_f:.15e}\nlhs = {:.15e} (+/- {:.1e}, {} evaluations)\nrelative deviation = {deviation:.3e}",
            lhs.value, lhs.abs_error_estimate, lhs.evaluations
        )
    };
    Output {
        out,
        format: a.format,
    }
    .emit(&json, text)?;
    Ok(pass)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("bessel-linc").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn oracle_values_at_half() {
        let (code, out, _) = call(&[
            "beta", "--n", "1", "--m", "1", "--method", "oracle", "--eval", "1/2",
        ]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(out.trim()).unwrap();
        assert_eq!(v["values"], json!(["0", "1/4", "3/4"]));
    }

    #[test]
    fn usage_errors_exit_one() {
        assert_eq!(call(&["beta", "--n", "1"]).0, EXIT_USAGE);
        assert_eq!(
            call(&["beta", "--n", "1", "--m", "1", "--bogus"]).0,
            EXIT_USAGE
        );
        assert_eq!(
            call(&["beta", "--n", "1", "--m", "1", "--eval", "0.5"]).0,
            EXIT_USAGE
        );
        assert_eq!(
            call(&["beta", "--n", "1", "--m", "1", "--k", "3"]).0,
            EXIT_USAGE
        );
        assert_eq!(call(&["basis", "--kind", "q", "--n", "65"]).0, EXIT_USAGE);
        assert_eq!(call(&["--help"]).0, EXIT_OK);
    }
}
