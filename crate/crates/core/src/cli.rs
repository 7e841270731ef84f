//! The `harmsum` command line: `eval`, `verify` and `table`.
//!
//! Exit codes: 0 success, 1 verification mismatch (or internal
//! inconsistency), 2 unknown family, 3 invalid parameters, 4 out of domain.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::closed_forms::{
    binomial_power_sum, integrated_order_sum, order_sum_closed, order_sum_extrapolated, q_n,
    s1_n_of_z, s_n_at_1, s_n_of_z, s_via_3f2, sp_at_one, squared_binomial_sum_legendre,
};
use crate::error::Error;
use crate::exact::{
    format_rational, harmonic, log_moment, parse_rational, rational_to_f64, LogPolynomial,
    Polynomial, Rational,
};
use crate::hypergeom::{laguerre, laplace_laguerre, legendre_p, r_n};
use crate::integral::{
    order_sum_laguerre_integral, order_sum_limit_quadrature, q_n_integral, sp_integral,
    sp_integral_order, squared_binomial_quadrature, QuadratureConfig,
};
use crate::oracle::{order_sum, s_general, OrderSumSpec, SumSpec};
use crate::recursions::{order_sum_recursive, s_recursive, sp_coupled, sp_descending};
use crate::verify::{run_verification, VerificationConfig, VerificationRun};

pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_UNKNOWN_FAMILY: i32 = 2;
pub const EXIT_INVALID: i32 = 3;
pub const EXIT_DOMAIN: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "harmsum",
    version,
    about = "Exact binomial-harmonic number sums"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate one family at one parameter point.
    Eval {
        /// Family name; `eval list` prints them all.
        family: String,
        #[command(flatten)]
        params: ParamArgs,
        /// Extra parameters as key=value.
        #[arg(value_name = "KEY=VALUE")]
        extra: Vec<String>,
    },
    /// Run the identity verification suite.
    Verify {
        /// JSON config file; defaults apply to missing fields.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Write the JSON report (an array of identity reports) here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Tabulate a family over an inclusive range of n, e.g. `1..10`.
    Table {
        family: String,
        range: String,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(value_name = "KEY=VALUE")]
        extra: Vec<String>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

// Taken as strings so that malformed values map to exit code 3 rather
// than to clap's usage error.
#[derive(Debug, Args)]
struct ParamArgs {
    #[arg(long, allow_hyphen_values = true)]
    n: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    p: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    q: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    r: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    m: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    z: Option<String>,
    #[arg(long = "M", allow_hyphen_values = true)]
    big_m: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    x: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    u: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    k: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    j: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Absolute tolerance for quadrature families.
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Debug)]
struct CliError {
    code: i32,
    message: String,
}

impl CliError {
    fn invalid(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_INVALID,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidParameter(_) | Error::Parse(_) => EXIT_INVALID,
            Error::OutOfDomain(_)
            | Error::Divergent(_)
            | Error::NonRemovablePole(_)
            | Error::NonConvergence(_) => EXIT_DOMAIN,
            Error::Inconsistency(_) => EXIT_MISMATCH,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Parameters of one evaluation, keyed by flag name (`M` for `--M`).
#[derive(Debug, Clone, Default)]
pub struct Params {
    values: BTreeMap<String, String>,
    quadrature: QuadratureConfig,
}

impl Params {
    fn from_args(args: &ParamArgs, extra: &[String]) -> CliResult<Self> {
        let mut values = BTreeMap::new();
        let flags = [
            ("n", &args.n),
            ("p", &args.p),
            ("q", &args.q),
            ("r", &args.r),
            ("m", &args.m),
            ("z", &args.z),
            ("M", &args.big_m),
            ("x", &args.x),
            ("u", &args.u),
            ("k", &args.k),
            ("j", &args.j),
            ("alpha", &args.alpha),
        ];
        for (key, value) in flags {
            if let Some(v) = value {
                values.insert(key.to_string(), v.clone());
            }
        }
        for kv in extra {
            let (k, v) = kv
                .split_once('=')
                .ok_or_else(|| CliError::invalid(format!("expected key=value, got {kv:?}")))?;
            if values.insert(k.to_string(), v.to_string()).is_some() {
                return Err(CliError::invalid(format!("parameter {k} given twice")));
            }
        }
        let quadrature = match args.tol {
            Some(t) if t > 0.0 => QuadratureConfig::with_abs_tol(t),
            Some(_) => return Err(CliError::invalid("--tol must be positive")),
            None => QuadratureConfig::default(),
        };
        Ok(Params { values, quadrature })
    }

    fn set(&mut self, key: &str, value: String) {
        self.values.insert(key.to_string(), value);
    }

    fn raw(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(String::as_str)
    }

    fn int<T: std::str::FromStr>(&self, key: &str, default: Option<T>) -> CliResult<T> {
        match self.raw(key) {
            Some(s) => s.parse().map_err(|_| {
                CliError::invalid(format!("{key} must be a nonnegative integer, got {s:?}"))
            }),
            None => default.ok_or_else(|| CliError::invalid(format!("missing parameter {key}"))),
        }
    }

    fn rational(&self, key: &str, default: Option<Rational>) -> CliResult<Rational> {
        match self.raw(key) {
            Some(s) => Ok(parse_rational(s)?),
            None => default.ok_or_else(|| CliError::invalid(format!("missing parameter {key}"))),
        }
    }

    fn n(&self) -> CliResult<u64> {
        self.int("n", None)
    }
}

/// Result of one evaluation.
#[derive(Debug, Clone)]
pub enum EvalValue {
    Exact(Rational),
    Numeric {
        value: f64,
        error_estimate: Option<f64>,
    },
    Poly(Polynomial),
}

impl EvalValue {
    fn text(&self) -> String {
        match self {
            EvalValue::Exact(r) => format_rational(r),
            EvalValue::Numeric {
                value,
                error_estimate: Some(e),
            } => {
                format!("{value:.15e} ± {e:.1e}")
            }
            EvalValue::Numeric {
                value,
                error_estimate: None,
            } => format!("{value:.15e}"),
            EvalValue::Poly(p) => p.to_string(),
        }
    }

    fn json(&self) -> serde_json::Value {
        match self {
            EvalValue::Exact(r) => json!({
                "kind": "exact",
                "value": format_rational(r),
                "approx": rational_to_f64(r),
            }),
            EvalValue::Numeric {
                value,
                error_estimate,
            } => json!({
                "kind": "numeric",
                "value": value,
                "error_estimate": error_estimate,
            }),
            EvalValue::Poly(p) => json!({
                "kind": "polynomial",
                "value": p.to_string(),
                "coefficients": p.coeffs().iter().map(format_rational).collect::<Vec<_>>(),
            }),
        }
    }
}

struct Family {
    name: &'static str,
    params: &'static str,
    description: &'static str,
    eval: fn(&Params) -> CliResult<EvalValue>,
}

impl Family {
    fn allowed(&self) -> Vec<&'static str> {
        self.params
            .split_whitespace()
            .map(|p| p.trim_matches(|c| c == '[' || c == ']'))
            .collect()
    }
}

fn exact(r: crate::Result<Rational>) -> CliResult<EvalValue> {
    Ok(EvalValue::Exact(r?))
}

fn one() -> Option<Rational> {
    Some(Rational::from_integer(1.into()))
}

const FAMILIES: &[Family] = &[
    Family {
        name: "s",
        params: "n [p] [q] [r] [m] [z]",
        description: "sum_j j^p [H_j^(q)]^m C(n,j)^r z^j by direct summation",
        eval: |p| {
            let spec = SumSpec {
                n: p.n()?,
                p: p.int("p", Some(0))?,
                q: p.int("q", Some(1))?,
                r: p.int("r", Some(1))?,
                m: p.int("m", Some(1))?,
                z: p.rational("z", one())?,
            };
            exact(s_general(&spec))
        },
    },
    Family {
        name: "s-recursive",
        params: "n [p] [z]",
        description: "S_n^(p)(z) by the coupled recursion in n",
        eval: |p| {
            let (n, order, z) = (p.n()?, p.int("p", Some(0))?, p.rational("z", one())?);
            exact(if order == 0 {
                s_recursive(n, &z)
            } else {
                sp_coupled(n, order, &z)
            })
        },
    },
    Family {
        name: "s-descending",
        params: "n p [z]",
        description: "S_n^(p)(z) by the descending recursion in p",
        eval: |p| {
            exact(sp_descending(
                p.n()?,
                p.int("p", None)?,
                &p.rational("z", one())?,
            ))
        },
    },
    Family {
        name: "s-3f2",
        params: "n [z]",
        description: "S_n(z) from its terminating 3F2 form",
        eval: |p| exact(s_via_3f2(p.n()?, &p.rational("z", one())?)),
    },
    Family {
        name: "s-integral",
        params: "n [p] [q] [z]",
        description: "S_n^(p)(q,1,1,z) by exact integration of its integral representation",
        eval: |p| {
            let (n, order, q) = (p.n()?, p.int("p", Some(0))?, p.int("q", Some(1))?);
            let z = p.rational("z", one())?;
            exact(if q == 1 {
                sp_integral(n, order, &z)
            } else {
                sp_integral_order(n, order, q, &z)
            })
        },
    },
    Family {
        name: "s-log-form",
        params: "n [p] [z]",
        description: "S_n(z) (p = 0) or S_n^(1)(z) (p = 1) from the logarithmic closed form",
        eval: |p| {
            let (n, order, z) = (p.n()?, p.int::<u32>("p", Some(0))?, p.rational("z", one())?);
            let v = match order {
                0 => s_n_of_z(n, &z)?,
                1 => s1_n_of_z(n, &z)?,
                _ => return Err(CliError::invalid("s-log-form supports p = 0 and p = 1")),
            };
            Ok(match v.exact {
                Some(e) => EvalValue::Exact(e),
                None => EvalValue::Numeric {
                    value: v.to_f64(),
                    error_estimate: None,
                },
            })
        },
    },
    Family {
        name: "s-at-one",
        params: "n [p]",
        description: "S_n^(p)(1), p <= 2, from harmonic-number closed forms",
        eval: |p| {
            let (n, order) = (p.n()?, p.int("p", Some(0))?);
            exact(if order == 0 {
                s_n_at_1(n)
            } else {
                sp_at_one(n, order)
            })
        },
    },
    Family {
        name: "binomial-power",
        params: "n p x",
        description: "sum_j C(n,j)^p H_j x^(-j) from the parameter derivative of pF(p-1)",
        eval: |p| {
            exact(binomial_power_sum(
                p.n()?,
                p.int("p", None)?,
                &p.rational("x", None)?,
            ))
        },
    },
    Family {
        name: "squared-binomial",
        params: "n [x]",
        description: "sum_j C(n,j)^2 H_j x^(-j) from Legendre P_n and R_n",
        eval: |p| {
            exact(squared_binomial_sum_legendre(
                p.n()?,
                &p.rational("x", one())?,
            ))
        },
    },
    Family {
        name: "squared-binomial-quadrature",
        params: "n",
        description: "sum_j C(n,j)^2 H_j by quadrature over (1, inf)",
        eval: |p| {
            let r = squared_binomial_quadrature(p.n()?, &p.quadrature)?;
            Ok(EvalValue::Numeric {
                value: r.value,
                error_estimate: Some(r.error_estimate),
            })
        },
    },
    Family {
        name: "order-sum",
        params: "n M [z]",
        description: "sum_{m=2}^n C(n,m) H_M^(m) z^m by direct summation",
        eval: |p| {
            exact(order_sum(&OrderSumSpec::plain(
                p.n()?,
                p.int("M", None)?,
                p.rational("z", one())?,
            )))
        },
    },
    Family {
        name: "order-sum-recursive",
        params: "n M [z]",
        description: "order sum by the recursion in M",
        eval: |p| {
            exact(order_sum_recursive(
                p.n()?,
                p.int("M", None)?,
                &p.rational("z", one())?,
            ))
        },
    },
    Family {
        name: "order-sum-closed",
        params: "n M [z]",
        description: "order sum in closed form",
        eval: |p| {
            exact(order_sum_closed(
                p.n()?,
                p.int("M", None)?,
                &p.rational("z", one())?,
            ))
        },
    },
    Family {
        name: "order-sum-integral",
        params: "n M [z]",
        description: "order sum by exact integration of the Laguerre representation",
        eval: |p| {
            exact(order_sum_laguerre_integral(
                p.n()?,
                p.int("M", None)?,
                &p.rational("z", one())?,
            ))
        },
    },
    Family {
        name: "order-sum-limit",
        params: "n [z]",
        description: "M -> inf limit of the order sum by quadrature",
        eval: |p| {
            let z = rational_to_f64(&p.rational("z", one())?);
            let r = order_sum_limit_quadrature(p.n()?, z, &p.quadrature)?;
            Ok(EvalValue::Numeric {
                value: r.value,
                error_estimate: Some(r.error_estimate),
            })
        },
    },
    Family {
        name: "order-sum-extrapolated",
        params: "n M [z]",
        description: "order sum at M plus its asymptotic tail",
        eval: |p| {
            let z = rational_to_f64(&p.rational("z", one())?);
            let v = order_sum_extrapolated(p.n()?, p.int("M", None)?, z)?;
            Ok(EvalValue::Numeric {
                value: v,
                error_estimate: None,
            })
        },
    },
    Family {
        name: "integrated-order-sum",
        params: "n M [u]",
        description: "sum_{m=2}^n C(n,m) H_M^(m) u^m/(m+1)",
        eval: |p| {
            exact(integrated_order_sum(
                p.n()?,
                p.int("M", None)?,
                &p.rational("u", one())?,
            ))
        },
    },
    Family {
        name: "qn",
        params: "n",
        description: "Q_n = H_{2n} - 2 H_n",
        eval: |p| exact(q_n(p.n()?)),
    },
    Family {
        name: "qn-integral",
        params: "n",
        description: "Q_n by exact integration of (t^n - 1)^2/(t - 1)",
        eval: |p| exact(q_n_integral(p.n()?)),
    },
    Family {
        name: "harmonic",
        params: "n [q]",
        description: "generalized harmonic number H_n^(q)",
        eval: |p| exact(harmonic(p.int("n", None)?, p.int("q", Some(1))?)),
    },
    Family {
        name: "legendre",
        params: "n [x]",
        description: "Legendre polynomial P_n, or its value at x",
        eval: |p| poly_or_value(legendre_p(p.n()? as usize), p),
    },
    Family {
        name: "r-n",
        params: "n [x]",
        description: "the polynomial R_n = d/dν P_ν at ν = n, or its value at x",
        eval: |p| poly_or_value(r_n(p.n()? as usize), p),
    },
    Family {
        name: "laguerre",
        params: "n [alpha] [x]",
        description: "associated Laguerre polynomial L_n^alpha, or its value at x",
        eval: |p| poly_or_value(laguerre(p.n()? as usize, p.int("alpha", Some(0))?), p),
    },
    Family {
        name: "laplace-laguerre",
        params: "n z [k]",
        description: "int_0^inf L_{n-1}^1(-z v) e^(-k v) dv",
        eval: |p| {
            let k = p.rational("k", one())?;
            exact(laplace_laguerre(p.n()?, &p.rational("z", None)?, &k))
        },
    },
    Family {
        name: "log-moment",
        params: "k j",
        description: "int_0^1 t^k ln^j t dt",
        eval: |p| {
            let term = LogPolynomial::term(
                Rational::from_integer(1.into()),
                p.int("k", None)?,
                p.int("j", None)?,
            );
            Ok(EvalValue::Exact(log_moment(&term)))
        },
    },
];

fn poly_or_value(poly: Polynomial, p: &Params) -> CliResult<EvalValue> {
    Ok(match p.raw("x") {
        Some(_) => EvalValue::Exact(poly.eval(&p.rational("x", None)?)),
        None => EvalValue::Poly(poly),
    })
}

fn family(name: &str) -> CliResult<&'static Family> {
    FAMILIES
        .iter()
        .find(|f| f.name == name)
        .ok_or_else(|| CliError {
            code: EXIT_UNKNOWN_FAMILY,
            message: format!(
                "unknown family {name:?}; known: {}",
                FAMILIES
                    .iter()
                    .map(|f| f.name)
                    .collect::<Vec<_>>()
                    .join(", ")
            ),
        })
}

fn evaluate(fam: &Family, params: &Params) -> CliResult<EvalValue> {
    let allowed = fam.allowed();
    if let Some(k) = params
        .values
        .keys()
        .find(|k| !allowed.contains(&k.as_str()))
    {
        return Err(CliError::invalid(format!(
            "family {} takes {}, not {k}",
            fam.name, fam.params
        )));
    }
    (fam.eval)(params)
}

fn cmd_eval(name: &str, args: &ParamArgs, extra: &[String], out: &mut dyn Write) -> CliResult<()> {
    if name == "list" {
        for f in FAMILIES {
            writeln!(out, "{:<28} {:<22} {}", f.name, f.params, f.description).ok();
        }
        return Ok(());
    }
    let fam = family(name)?;
    let params = Params::from_args(args, extra)?;
    let value = evaluate(fam, &params)?;
    match args.format {
        Format::Text => writeln!(out, "{}", value.text()),
        Format::Json => {
            let doc =
                json!({ "family": fam.name, "params": params.values, "result": value.json() });
            writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&doc).unwrap_or_default()
            )
        }
        Format::Csv => {
            let keys: Vec<_> = params.values.keys().cloned().collect();
            let vals: Vec<_> = params.values.values().cloned().collect();
            writeln!(out, "{},value", keys.join(","))
                .and_then(|_| writeln!(out, "{},{}", vals.join(","), csv_field(&value.text())))
        }
    }
    .map_err(io_error)
}

fn parse_range(range: &str) -> CliResult<std::ops::RangeInclusive<u64>> {
    let bad = || CliError::invalid(format!("range must look like 1..10, got {range:?}"));
    let (lo, hi) = range.split_once("..").ok_or_else(bad)?;
    let hi = hi.strip_prefix('=').unwrap_or(hi);
    Ok(lo.trim().parse().map_err(|_| bad())?..=hi.trim().parse().map_err(|_| bad())?)
}

#[derive(Serialize)]
struct Row {
    n: u64,
    value: String,
}

fn cmd_table(
    name: &str,
    range: &str,
    args: &ParamArgs,
    extra: &[String],
    out: &mut dyn Write,
) -> CliResult<()> {
    let fam = family(name)?;
    let range = parse_range(range)?;
    let mut params = Params::from_args(args, extra)?;
    if params.raw("n").is_some() {
        return Err(CliError::invalid("n comes from the range"));
    }
    let mut rows = Vec::new();
    for n in range {
        params.set("n", n.to_string());
        rows.push(Row {
            n,
            value: evaluate(fam, &params)?.text(),
        });
    }
    let written = match args.format {
        Format::Text => {
            let width = rows
                .iter()
                .map(|r| r.n.to_string().len())
                .max()
                .unwrap_or(1)
                .max(1);
            writeln!(out, "{:>width$}  {}", "n", fam.name).and_then(|_| {
                rows.iter()
                    .try_for_each(|r| writeln!(out, "{:>width$}  {}", r.n, r.value))
            })
        }
        Format::Csv => writeln!(out, "n,value").and_then(|_| {
            rows.iter()
                .try_for_each(|r| writeln!(out, "{},{}", r.n, csv_field(&r.value)))
        }),
        Format::Json => {
            writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&rows).unwrap_or_default()
            )
        }
    };
    written.map_err(io_error)
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', ' ']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn io_error(e: std::io::Error) -> CliError {
    CliError {
        code: EXIT_MISMATCH,
        message: format!("write failed: {e}"),
    }
}

fn cmd_verify(
    config: Option<&PathBuf>,
    report_path: Option<&PathBuf>,
    format: Format,
    out: &mut dyn Write,
) -> CliResult<bool> {
    let config = match config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::invalid(format!("{}: {e}", path.display())))?;
            VerificationConfig::from_json(&text)?
        }
        None => VerificationConfig::default(),
    };
    let run = run_verification(&config)?;
    if let Some(path) = report_path {
        let text = serde_json::to_string_pretty(&run.reports).unwrap_or_default();
        std::fs::write(path, text + "\n")
            .map_err(|e| CliError::invalid(format!("{}: {e}", path.display())))?;
    }
    write_summary(&run, format, out).map_err(io_error)?;
    Ok(!run.failed)
}

fn write_summary(
    run: &VerificationRun,
    format: Format,
    out: &mut dyn Write,
) -> std::io::Result<()> {
    match format {
        Format::Json => {
            writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&run.reports).unwrap_or_default()
            )
        }
        Format::Csv => {
            writeln!(
                out,
                "identity,points,mismatches,out_of_domain,informational,status"
            )?;
            for r in &run.reports {
                writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    r.identity,
                    r.points.len(),
                    r.mismatches(),
                    out_of_domain(r),
                    r.informational,
                    status(r)
                )?;
            }
            Ok(())
        }
        Format::Text => {
            for r in &run.reports {
                writeln!(
                    out,
                    "{:<5} {:<36} {:>5} points  {:>3} mismatches  {:>3} out of domain  {:>6} ms",
                    status(r),
                    r.identity,
                    r.points.len(),
                    r.mismatches(),
                    out_of_domain(r),
                    r.duration_ms
                )?;
            }
            let verdict = if run.failed { "FAILED" } else { "ok" };
            writeln!(
                out,
                "{} identities, {} mismatches: {verdict}",
                run.reports.len(),
                run.mismatch_count()
            )
        }
    }
}

fn out_of_domain(r: &crate::verify::IdentityReport) -> usize {
    r.count(|o| matches!(o, crate::verify::Outcome::OutOfDomain { .. }))
}

fn status(r: &crate::verify::IdentityReport) -> &'static str {
    match (r.informational, r.mismatches()) {
        (true, _) => "info",
        (false, 0) => "pass",
        _ => "FAIL",
    }
}

/// Runs the CLI on `args` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    return 0;
                }
                _ => EXIT_INVALID,
            };
            let _ = write!(err, "{e}");
            return code;
        }
    };
    let result = match &cli.command {
        Command::Eval {
            family,
            params,
            extra,
        } => cmd_eval(family, params, extra, out),
        Command::Table {
            family,
            range,
            params,
            extra,
        } => cmd_table(family, range, params, extra, out),
        Command::Verify {
            config,
            out: path,
            format,
        } => match cmd_verify(config.as_ref(), path.as_ref(), *format, out) {
            Ok(true) => Ok(()),
            Ok(false) => return EXIT_MISMATCH,
            Err(e) => Err(e),
        },
    };
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message);
            e.code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("harmsum").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn eval_examples() {
        assert_eq!(
            run_str(&["eval", "s", "--n", "2", "--p", "0", "--z", "1"])
                .1
                .trim(),
            "7/2"
        );
        assert_eq!(
            run_str(&["eval", "s", "--n", "5", "--p", "0", "--z", "-1"])
                .1
                .trim(),
            "-1/5"
        );
        assert_eq!(run_str(&["eval", "qn", "--n", "1"]).1.trim(), "-1/2");
        assert_eq!(run_str(&["eval", "order-sum", "n=3", "M=2", "z=1/2"]).0, 0);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(
            run_str(&["eval", "nope", "--n", "1"]).0,
            EXIT_UNKNOWN_FAMILY
        );
        assert_eq!(run_str(&["eval", "s", "--n", "x"]).0, EXIT_INVALID);
        assert_eq!(
            run_str(&["eval", "s", "--n", "2", "--z", "0.5"]).0,
            EXIT_INVALID
        );
        assert_eq!(run_str(&["eval", "s"]).0, EXIT_INVALID);
        assert_eq!(
            run_str(&["eval", "qn", "--n", "1", "--z", "1"]).0,
            EXIT_INVALID
        );
        assert_eq!(
            run_str(&["eval", "s-log-form", "--n", "3", "--z", "-1/2"]).0,
            EXIT_DOMAIN
        );
        assert_eq!(run_str(&["bogus"]).0, EXIT_INVALID);
    }

    #[test]
    fn table_examples() {
        let (code, out, _) = run_str(&["table", "s", "1..3", "z=1", "--format", "csv"]);
        assert_eq!(code, 0);
        assert_eq!(out, "n,value\n1,1\n2,7/2\n3,28/3\n");
        let (_, out, _) = run_str(&["table", "qn", "1..2", "--format", "csv"]);
        assert_eq!(out, "n,value\n1,-1/2\n2,-11/12\n");
        let (code, out, _) = run_str(&["table", "qn", "3..2", "--format", "csv"]);
        assert_eq!((code, out.as_str()), (0, "n,value\n"));
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("1..3").unwrap(), 1..=3);
        assert_eq!(parse_range("1..=3").unwrap(), 1..=3);
        assert!(parse_range("1-3").is_err());
    }
}
