use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use ladder_core::fock::{virasoro_residual, CreationVar, FockConfig, FockVector};
use ladder_core::hopf::{antipode, coproduct, gamma, s_star_y, HopfElement, Monomial};
use ladder_core::multiset::monomials_up_to;
use ladder_core::standard_module::{act, matrix};
use ladder_core::{BasisKey, LinComb, Scalar};
use serde_json::json;

use crate::eval::{eval, EvalError, Value};
use crate::expr::{parse, ParseError};
use crate::suites::{run_suite, Params, Suite};

#[derive(Debug, Parser)]
#[command(
    name = "ladder",
    version,
    about = "Exact algebra of ladder insertion and elimination"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum HopfOp {
    Coproduct,
    Antipode,
    Sy,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate an expression to canonical form.
    Eval {
        expr: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Apply an element to a vector of the standard module.
    Act {
        expr: String,
        /// A combination of t[k] basis vectors.
        #[arg(long)]
        vector: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the truncation of an element to t[0..=N].
    Matrix {
        expr: String,
        #[arg(long)]
        size: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Hopf algebra operations on G[m] or on a monomial like G[1]^2*G[3].
    Hopf {
        #[arg(value_enum)]
        op: HopfOp,
        input: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check the Virasoro relations in the Fock realization.
    Virasoro {
        #[command(subcommand)]
        op: VirasoroOp,
    },
    /// Run a verification suite and emit one JSON report line per suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        max_index: Option<u64>,
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum VirasoroOp {
    /// Residual of [L_n, L_m] against the Virasoro relation on every
    /// monomial up to the given degree, one JSON line each.
    #[command(allow_negative_numbers = true)]
    Bracket {
        n: i64,
        m: i64,
        #[arg(long, default_value = "0")]
        mu: String,
        #[arg(long, default_value = "0")]
        lambda: String,
        #[arg(long, default_value_t = 4)]
        max_degree: u64,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error at byte {}\n{}", .error.offset, .error.render(.input))]
    Parse { input: String, error: ParseError },
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        2
    }
}

/// Outcome of a command that ran to completion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
        }
    }
}

fn evaluate(input: &str) -> Result<Value, CliError> {
    let expr = parse(input).map_err(|error| CliError::Parse {
        input: input.to_string(),
        error,
    })?;
    Ok(eval(&expr)?)
}

fn scalar_arg(name: &str, s: &str) -> Result<Scalar, CliError> {
    s.parse()
        .map_err(|_| CliError::Usage(format!("--{name}: '{s}' is not a rational like 1/2 or 1/2+1/3*i")))
}

/// One term per line with right-aligned coefficients.
fn aligned<K: BasisKey>(x: &LinComb<K>) -> String {
    if x.is_zero() {
        return "0\n".into();
    }
    let coeffs: Vec<String> = x.iter().map(|(_, c)| c.to_string()).collect();
    let width = coeffs.iter().map(String::len).max().unwrap_or(1);
    x.keys()
        .zip(&coeffs)
        .map(|(k, c)| format!("{c:>width$}  {k}\n"))
        .collect()
}

fn hopf_input(s: &str) -> Result<HopfElement, CliError> {
    let s = s.trim();
    if let Ok(m) = s.parse::<u64>() {
        return Ok(gamma(m));
    }
    let bad = || CliError::Usage(format!("'{s}' is neither an index m nor a monomial like G[1]^2*G[3]"));
    if s == "1" {
        return Ok(HopfElement::basis(Monomial::unit()));
    }
    let mut factors = Vec::new();
    for factor in s.split('*') {
        let factor = factor.trim();
        let (base, power) = match factor.split_once('^') {
            Some((b, p)) => (b.trim(), p.trim().parse::<usize>().map_err(|_| bad())?),
            None => (factor, 1),
        };
        let k = base
            .strip_prefix("G[")
            .and_then(|r| r.strip_suffix(']'))
            .and_then(|k| k.trim().parse::<u64>().ok())
            .ok_or_else(bad)?;
        factors.extend(std::iter::repeat_n(k, power));
    }
    Ok(HopfElement::basis(Monomial::new(factors)))
}

fn write_element<K: BasisKey>(out: &mut impl Write, x: &LinComb<K>, format: Format) -> Result<(), CliError> {
    match format {
        Format::Json => writeln!(out, "{}", x.to_json())?,
        Format::Text => write!(out, "{}", aligned(x))?,
        Format::Csv => return Err(CliError::Usage("csv output is only available for matrix".into())),
    }
    Ok(())
}

/// Runs a parsed command, writing its normal output to `out`.
pub fn execute(command: Command, out: &mut impl Write) -> Result<Status, CliError> {
    match command {
        Command::Eval { expr, format } => {
            let value = evaluate(&expr)?;
            match format {
                Format::Json => writeln!(out, "{}", value.to_json())?,
                _ => writeln!(out, "{value}")?,
            }
        }
        Command::Act { expr, vector, format } => {
            let x = evaluate(&expr)?.into_lie()?;
            let v = evaluate(&vector)?.into_vector()?;
            let image = act(&x, &v);
            match format {
                Format::Json => writeln!(out, "{}", image.to_json())?,
                _ => writeln!(out, "{image}")?,
            }
        }
        Command::Matrix { expr, size, format } => {
            let x = evaluate(&expr)?.into_lie()?;
            let mat = matrix(&x, size);
            match format {
                Format::Json => writeln!(out, "{}", mat.to_json())?,
                Format::Csv => write!(out, "{}", mat.to_csv())?,
                Format::Text => write!(out, "{mat}")?,
            }
        }
        Command::Hopf { op, input, format } => match op {
            HopfOp::Coproduct => write_element(out, &coproduct(&hopf_input(&input)?), format)?,
            HopfOp::Antipode => write_element(out, &antipode(&hopf_input(&input)?), format)?,
            HopfOp::Sy => {
                let m = input
                    .trim()
                    .parse::<u64>()
                    .map_err(|_| CliError::Usage(format!("sy takes a ladder index, got '{input}'")))?;
                write_element(out, &s_star_y(m), format)?;
            }
        },
        Command::Virasoro {
            op:
                VirasoroOp::Bracket {
                    n,
                    m,
                    mu,
                    lambda,
                    max_degree,
                },
        } => {
            let cfg = FockConfig::new(scalar_arg("mu", &mu)?, scalar_arg("lambda", &lambda)?);
            let mut status = Status::Pass;
            for mono in monomials_up_to::<CreationVar>(max_degree) {
                let degree = mono.degree();
                let v = FockVector::basis(mono);
                let r = virasoro_residual(&cfg, n, m, &v);
                let mut line = json!({
                    "suite": "virasoro",
                    "n": n,
                    "m": m,
                    "mu": cfg.mu.to_string(),
                    "lambda": cfg.lambda.to_string(),
                    "degree": degree,
                    "monomial": v.to_string(),
                    "pass": r.is_zero(),
                });
                if !r.is_zero() {
                    status = Status::Fail;
                    line["residual"] = r.to_json();
                }
                writeln!(out, "{line}")?;
            }
            return Ok(status);
        }
        Command::Verify {
            suite,
            trials,
            seed,
            max_index,
            report,
        } => {
            let params = Params {
                trials,
                seed,
                max_index,
            };
            let reports = run_suite(suite, &params);
            let mut file = report.map(File::create).transpose()?;
            let mut status = Status::Pass;
            for r in &reports {
                let line = r.to_json_line();
                writeln!(out, "{line}")?;
                if let Some(f) = file.as_mut() {
                    writeln!(f, "{line}")?;
                }
                eprintln!(
                    "{:<16} {} ({} checks, {} ms)",
                    r.suite,
                    if r.pass { "pass" } else { "FAIL" },
                    r.checks,
                    r.elapsed_ms
                );
                if !r.pass {
                    status = Status::Fail;
                }
            }
            return Ok(status);
        }
    }
    Ok(Status::Pass)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (Result<Status, CliError>, String) {
        let cli = Cli::try_parse_from(std::iter::once("ladder").chain(args.iter().copied())).unwrap();
        let mut out = Vec::new();
        let status = execute(cli.command, &mut out);
        (status, String::from_utf8(out).unwrap())
    }

    #[test]
    fn eval_text_and_json() {
        let (s, out) = run(&["eval", "[Z[1,0],Z[0,1]]"]);
        assert_eq!(s.unwrap(), Status::Pass);
        assert_eq!(out, "-Z[0,0] + Z[1,1]\n");
        let (_, out) = run(&["eval", "2*Z[1,1] - 1/3*Z[0,2]", "--format", "json"]);
        assert_eq!(
            out.trim(),
            r#"{"terms":[{"n":0,"m":2,"coeff":"-1/3"},{"n":1,"m":1,"coeff":"2"}]}"#
        );
    }

    #[test]
    fn parse_errors_point_at_the_offset() {
        let (s, _) = run(&["eval", "Z[1,"]);
        let err = s.unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(err.to_string().ends_with("    ^ expected an index, found end of input"));
    }

    #[test]
    fn act_on_vector() {
        let (_, out) = run(&["act", "Z[2,1]", "--vector", "t[3] + 1/2*t[0]"]);
        assert_eq!(out, "t[4]\n");
        let (s, _) = run(&["act", "Z[2,1]", "--vector", "Z[1,1]"]);
        assert!(s.is_err());
    }

    #[test]
    fn matrix_formats() {
        let (_, out) = run(&["matrix", "Z[1,0]", "--size", "2", "--format", "csv"]);
        assert_eq!(out, "0,0,0\n1,0,0\n0,1,0\n");
        let (_, out) = run(&["matrix", "E[0,1]", "--size", "1"]);
        assert_eq!(out, "0 1\n0 0\n");
    }

    #[test]
    fn hopf_outputs() {
        let (_, out) = run(&["hopf", "antipode", "2"]);
        assert_eq!(out, " 1  G[1]^2\n-1  G[2]\n");
        let (_, out) = run(&["hopf", "sy", "2", "--format", "json"]);
        assert!(out.contains(r#""monomial":[2]"#));
        let (_, out) = run(&["hopf", "coproduct", "G[1]^2"]);
        assert_eq!(out.lines().count(), 3);
        let (s, _) = run(&["hopf", "sy", "G[1]"]);
        assert!(s.is_err());
    }

    #[test]
    fn virasoro_lines() {
        let (s, out) = run(&[
            "virasoro",
            "bracket",
            "2",
            "-2",
            "--mu",
            "1/2",
            "--lambda",
            "1/3",
            "--max-degree",
            "2",
        ]);
        assert_eq!(s.unwrap(), Status::Pass);
        assert_eq!(out.lines().count(), 4);
        for line in out.lines() {
            let v: serde_json::Value = serde_json::from_str(line).unwrap();
            assert_eq!(v["pass"], true);
        }
    }

    #[test]
    fn verify_reports_one_line() {
        let (s, out) = run(&["verify", "antisymmetry", "--trials", "5", "--max-index", "2"]);
        assert_eq!(s.unwrap(), Status::Pass);
        let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
        assert_eq!(v["suite"], "antisymmetry");
        assert_eq!(v["pass"], true);
        assert_eq!(v["failures"], serde_json::json!([]));
    }
}
