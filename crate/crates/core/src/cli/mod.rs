//! The `meanbound` command line.
//!
//! Exit codes: 0 success, 1 certification failure, 2 usage error.

mod record;

use std::env;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{Map, Value};

use crate::bounds::{certify, sharp_bounds, InequalitySpec};
use crate::error::Error;
use crate::kernels::{h_eval_with, BernoulliTable, HFunctionId, SeriesKind, MAX_BERNOULLI_INDEX};
use crate::means::{eval_mean, MeanKind, PositivePair};

pub use record::{fmt_num, OutputRecord, Precision, SCHEMA_VERSION};

pub const BERNOULLI_MAX_VAR: &str = "MEANBOUND_BERNOULLI_MAX";

pub const EXIT_OK: i32 = 0;
pub const EXIT_CERTIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "meanbound",
    version,
    about = "Bivariate means and their sharp bounds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate one mean at (a, b).
    Mean {
        /// C, Cbar, A, G, H, S, P or T
        #[arg(long)]
        kind: String,
        #[arg(long, allow_hyphen_values = true)]
        a: f64,
        #[arg(long, allow_hyphen_values = true)]
        b: f64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the sharp constants of all seven inequalities.
    BoundsTable {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Sample-check one inequality (or `all`) at its sharp constants.
    Certify {
        #[arg(long)]
        id: String,
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print exact series coefficients.
    Series {
        /// csc, cot, cscsq, h1 or h3
        #[arg(long = "fn")]
        function: String,
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Evaluate a kernel function h1..h4.
    Hfun {
        #[arg(long)]
        id: String,
        #[arg(long, allow_hyphen_values = true)]
        x: f64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

/// What a run produced; `main` forwards it to the process streams.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CliOutput {
    fn ok(stdout: String) -> Self {
        Self {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(msg: impl std::fmt::Display) -> Self {
        Self {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

/// Runs the CLI reading the Bernoulli cap from the environment.
pub fn run<I, T>(args: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_with_env(args, env::var(BERNOULLI_MAX_VAR).ok().as_deref())
}

/// Runs the CLI with an explicit `MEANBOUND_BERNOULLI_MAX` value.
pub fn run_with_env<I, T>(args: I, bernoulli_max: Option<&str>) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.exit_code() == 0 {
                CliOutput::ok(text)
            } else {
                CliOutput {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let bernoulli_max = match bernoulli_max.map(str::trim) {
        None | Some("") => MAX_BERNOULLI_INDEX,
        Some(s) => match s.parse::<usize>() {
            Ok(n) => n,
            Err(_) => {
                return CliOutput::usage(format!(
                    "{BERNOULLI_MAX_VAR} must be an integer, got `{s}`"
                ))
            }
        },
    };
    dispatch(cli.command, bernoulli_max)
}

fn dispatch(command: Command, bernoulli_max: usize) -> CliOutput {
    let table = || BernoulliTable::new(bernoulli_max);
    match command {
        Command::Mean { kind, a, b, format } => {
            let out = kind
                .parse::<MeanKind>()
                .and_then(|k| Ok((k, PositivePair::new(a, b)?)))
                .map(|(k, pair)| cmd_mean(k, pair, bernoulli_max));
            finish(out, format, true)
        }
        Command::BoundsTable { format } => finish(cmd_bounds_table(bernoulli_max), format, false),
        Command::Certify {
            id,
            samples,
            seed,
            tol,
            format,
        } => {
            let specs = if id == "all" {
                Ok(InequalitySpec::all())
            } else {
                InequalitySpec::from_name(&id).map(|s| vec![s])
            };
            let out =
                specs.and_then(|specs| cmd_certify(&specs, samples, seed, tol, bernoulli_max));
            match out {
                Ok((record, passed)) => {
                    let mut o = render(&record, format, false);
                    if !passed {
                        o.code = EXIT_CERTIFY_FAILED;
                    }
                    o
                }
                Err(e) => CliOutput::usage(e),
            }
        }
        Command::Series {
            function,
            order,
            format,
        } => {
            let out = SeriesKind::from_name(&function)
                .ok_or_else(|| {
                    Error::Domain(format!(
                        "unknown series `{function}` (expected csc, cot, cscsq, h1, h3)"
                    ))
                })
                .and_then(|kind| cmd_series(kind, order, &table()?));
            finish(out, format, false)
        }
        Command::Hfun { id, x, format } => {
            let out = id
                .parse::<HFunctionId>()
                .and_then(|h| cmd_hfun(h, x, &table()?));
            finish(out, format, true)
        }
    }
}

fn finish(out: crate::Result<OutputRecord>, format: Format, single_value: bool) -> CliOutput {
    match out {
        Ok(record) => render(&record, format, single_value),
        Err(e) => CliOutput::usage(e),
    }
}

fn render(record: &OutputRecord, format: Format, single_value: bool) -> CliOutput {
    let stdout = match format {
        Format::Json => record.to_json(),
        Format::Csv => record.to_csv(),
        Format::Text if single_value => {
            let v = record.results[0]["value"].as_f64().unwrap_or(f64::NAN);
            format!("{}\n", fmt_num(v))
        }
        Format::Text => record.to_text(),
    };
    CliOutput::ok(stdout)
}

fn row(fields: Vec<(&str, Value)>) -> Map<String, Value> {
    fields
        .into_iter()
        .map(|(k, v)| (k.to_string(), v))
        .collect()
}

pub fn cmd_mean(kind: MeanKind, pair: PositivePair, bernoulli_max: usize) -> OutputRecord {
    let value = eval_mean(kind, pair);
    let mut r = OutputRecord::new("mean", bernoulli_max)
        .input("kind", kind.symbol())
        .input("a", pair.a())
        .input("b", pair.b());
    r.results.push(row(vec![
        ("kind", kind.symbol().into()),
        ("a", pair.a().into()),
        ("b", pair.b().into()),
        ("value", value.into()),
    ]));
    r
}

pub fn cmd_bounds_table(bernoulli_max: usize) -> crate::Result<OutputRecord> {
    let mut r = OutputRecord::new("bounds-table", bernoulli_max);
    for spec in InequalitySpec::all() {
        let b = sharp_bounds(&spec)?;
        r.results.push(row(vec![
            ("id", spec.id.as_str().into()),
            ("target", spec.target.symbol().into()),
            ("hi", spec.hi.symbol().into()),
            ("lo", spec.lo.symbol().into()),
            ("kernel", spec.kernel.name().into()),
            ("alpha_exact", b.alpha_exact.into()),
            ("alpha", b.alpha.into()),
            ("beta_exact", b.beta_exact.into()),
            ("beta", b.beta.into()),
        ]));
    }
    Ok(r)
}

/// Returns the record and whether every report passed.
pub fn cmd_certify(
    specs: &[InequalitySpec],
    samples: usize,
    seed: u64,
    tol: f64,
    bernoulli_max: usize,
) -> crate::Result<(OutputRecord, bool)> {
    let ids: Vec<&str> = specs.iter().map(|s| s.id.as_str()).collect();
    let mut r = OutputRecord::new("certify", bernoulli_max)
        .input("id", ids.join(","))
        .input("samples", samples as u64)
        .input("seed", seed)
        .input("tol", tol);
    let mut all_passed = true;
    for spec in specs {
        let rep = certify(spec, samples, seed, tol)?;
        all_passed &= rep.passed();
        let gap = |name: &str| {
            rep.sharpness
                .iter()
                .find(|p| p.constant == name)
                .map_or(f64::NAN, |p| p.gap)
        };
        r.results.push(row(vec![
            ("id", rep.id.as_str().into()),
            ("samples", (rep.samples as u64).into()),
            ("violations", (rep.violations as u64).into()),
            ("worst_margin", rep.worst_margin.into()),
            ("worst_x", rep.worst_x.into()),
            ("seed", rep.seed.into()),
            ("tol", rep.tolerance.into()),
            ("alpha", rep.alpha.into()),
            ("beta", rep.beta.into()),
            ("alpha_probe_gap", gap("alpha").into()),
            ("beta_probe_gap", gap("beta").into()),
            ("passed", rep.passed().to_string().into()),
        ]));
    }
    Ok((r, all_passed))
}

pub const MAX_SERIES_ORDER: usize = 16;

pub fn cmd_series(
    kind: SeriesKind,
    order: usize,
    table: &BernoulliTable,
) -> crate::Result<OutputRecord> {
    if !(1..=MAX_SERIES_ORDER).contains(&order) {
        return Err(Error::Range(format!(
            "order must be in [1, {MAX_SERIES_ORDER}], got {order}"
        )));
    }
    let coeffs = table.exact_coefficients(kind, order)?;
    let mut r = OutputRecord::new("series", table.max_index())
        .input("fn", kind.name())
        .input("order", order as u64);
    if let Some(lead) = kind.leading_term() {
        r.notes.insert("leading_term".into(), lead.into());
    }
    for (i, c) in coeffs.iter().enumerate() {
        let n = i + 1;
        let decimal = num_traits::ToPrimitive::to_f64(c).unwrap_or(f64::NAN);
        r.results.push(row(vec![
            ("n", (n as u64).into()),
            ("power", i64::from(kind.power(n)).into()),
            ("coefficient", c.to_string().into()),
            ("decimal", decimal.into()),
        ]));
    }
    Ok(r)
}

pub fn cmd_hfun(id: HFunctionId, x: f64, table: &BernoulliTable) -> crate::Result<OutputRecord> {
    let value = h_eval_with(id, x, table)?;
    let mut r = OutputRecord::new("hfun", table.max_index())
        .input("id", id.name())
        .input("x", x);
    r.results.push(row(vec![
        ("id", id.name().into()),
        ("x", x.into()),
        ("value", value.into()),
    ]));
    Ok(r)
}
