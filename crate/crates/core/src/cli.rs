//! The `qhaar` command line.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::algebra::{parse_expr, Word};
use crate::error::{Error, Result};
use crate::haar::closed::closed_values;
use crate::haar::{derive_linear_relation, Haar, HaarTable, Method};
use crate::normalform::{enumerate_basis, Reducer, StdExponents};
use crate::qfield::QRational;
use crate::verify::{run_suite, Suite};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

/// Exact Haar state on O(SL_q(3)).
#[derive(Debug, Parser)]
#[command(name = "qhaar", version)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text", env = "QHAAR_FORMAT")]
    pub format: Format,
    /// Directory of cached tables.
    #[arg(long, global = true, default_value = ".qhaar", env = "QHAAR_CACHE_DIR")]
    pub cache_dir: PathBuf,
    /// Highest order that may be computed.
    #[arg(long, global = true, default_value_t = 4, env = "QHAAR_MAX_ORDER")]
    pub max_order: u32,
    /// Neither read nor write cached tables.
    #[arg(long, global = true, env = "QHAAR_NO_CACHE")]
    pub no_cache: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Haar values of every basis monomial of one order.
    Table {
        order: u32,
        /// solver, algorithm or closed.
        #[arg(long, default_value = "solver")]
        method: String,
        /// With `--method closed`, print only the entries that have closed forms.
        #[arg(long)]
        partial: bool,
    },
    /// The Haar value of a monomial, e.g. `cegafh` or "x11 x22 x33".
    Haar { monomial: String },
    /// Decomposition of a monomial over the basis.
    Reduce { monomial: String },
    /// Basis monomials of one order.
    Basis { order: u32 },
    /// The relation from an equation basis and a comparing basis, given as
    /// exponent keys such as `0.0.0.0.0.2`.
    Relation {
        #[arg(long = "eq")]
        equation: String,
        #[arg(long = "cmp")]
        comparing: String,
    },
    /// The value at q = 1 of the Haar state of an expression.
    Limit { expr: String },
    /// Runs checks: tables, appendixC, symmetry, weingarten or all.
    Verify { suite: String },
}

/// Parses `args` (including the program name), runs the command, and
/// returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn engine(cli: &Cli) -> Haar {
    let cache = (!cli.no_cache).then(|| cli.cache_dir.clone());
    Haar::new().with_max_order(cli.max_order).with_cache_dir(cache)
}

fn render_value(v: &QRational, f: Format) -> String {
    match f {
        Format::Text => v.to_text(),
        Format::Json => v.to_json().to_string(),
        Format::Latex => v.to_latex(),
    }
}

fn check_order(m: u32, cli: &Cli) -> Result<()> {
    if m == 0 || m > cli.max_order {
        return Err(Error::Usage(format!("order must be between 1 and {}", cli.max_order)));
    }
    Ok(())
}

/// Runs a parsed command. Returns 0, or 1 when a verification fails.
pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let f = cli.format;
    match &cli.command {
        Command::Table { order, method, partial } => {
            check_order(*order, cli)?;
            let method: Method = method.parse()?;
            let table = if method == Method::Closed && *partial {
                HaarTable {
                    order: *order,
                    values: closed_values(*order)?,
                }
            } else {
                (*engine(cli).table_with(*order, method)?).clone()
            };
            write_table(&table, f, out)?;
        }
        Command::Haar { monomial } => {
            let w = Word::parse(monomial, 3)?;
            let v = engine(cli).value(&w)?;
            writeln!(out, "{}", render_value(&v, f))?;
        }
        Command::Reduce { monomial } => {
            let w = Word::parse(monomial, 3)?;
            let nf = Reducer::shared().reduce(&w)?;
            match f {
                Format::Json => {
                    let m: Map<String, Value> =
                        nf.iter().map(|(e, c)| (e.key(), c.to_qrational().to_json())).collect();
                    writeln!(out, "{}", Value::Object(m))?;
                }
                _ => {
                    for (e, c) in nf.iter() {
                        writeln!(out, "{}  {}", render_value(&c.to_qrational(), f), e.monomial_text())?;
                    }
                }
            }
        }
        Command::Basis { order } => {
            check_order(*order, cli)?;
            let basis = enumerate_basis(*order);
            match f {
                Format::Json => {
                    let v: Vec<Value> = basis
                        .iter()
                        .map(|e| json!({"key": e.key(), "monomial": e.monomial_text()}))
                        .collect();
                    writeln!(out, "{}", Value::Array(v))?;
                }
                _ => {
                    for e in &basis {
                        writeln!(out, "{}  {}", e.key(), e.monomial_text())?;
                    }
                }
            }
        }
        Command::Relation { equation, comparing } => {
            let l = StdExponents::parse_key(equation)?;
            let j = StdExponents::parse_key(comparing)?;
            for e in [&l, &j] {
                if !e.is_basis() || e.order() == 0 {
                    return Err(Error::Usage(format!("{} is not a basis monomial", e.monomial_text())));
                }
            }
            check_order(l.order(), cli)?;
            let rel = derive_linear_relation(&l, &j)?;
            let b = rel.rhs.to_qrational();
            match f {
                Format::Json => {
                    let cs: Map<String, Value> = rel
                        .coefficients
                        .iter()
                        .map(|(e, c)| (e.key(), c.to_qrational().to_json()))
                        .collect();
                    let v = json!({
                        "equation": l.key(),
                        "comparing": j.key(),
                        "coefficients": cs,
                        "rhs": b.to_json(),
                    });
                    writeln!(out, "{v}")?;
                }
                _ => {
                    for (e, c) in &rel.coefficients {
                        writeln!(out, "{}  h({})", render_value(&c.to_qrational(), f), e.monomial_text())?;
                    }
                    writeln!(out, "= {}  h({})", render_value(&b, f), l.monomial_text())?;
                }
            }
        }
        Command::Limit { expr } => {
            let p = parse_expr(expr, 3)?;
            let v = engine(cli).weingarten_limit(&p)?;
            match f {
                Format::Json => writeln!(out, "{}", json!({"limit": v.to_string()}))?,
                Format::Latex if !v.is_integer() => writeln!(out, "\\frac{{{}}}{{{}}}", v.numer(), v.denom())?,
                _ => writeln!(out, "{v}")?,
            }
        }
        Command::Verify { suite } => {
            let suite: Suite = suite.parse()?;
            let checks = run_suite(&engine(cli), suite)?;
            let passed = checks.iter().filter(|c| c.passed).count();
            match f {
                Format::Json => {
                    let v: Vec<Value> = checks
                        .iter()
                        .map(|c| json!({"suite": c.suite.to_string(), "name": c.name, "passed": c.passed, "detail": c.detail}))
                        .collect();
                    writeln!(out, "{}", json!({"passed": passed, "total": checks.len(), "checks": v}))?;
                }
                _ => {
                    for c in &checks {
                        writeln!(out, "{c}")?;
                    }
                    writeln!(out, "{passed}/{} checks passed", checks.len())?;
                }
            }
            return Ok(if passed == checks.len() { 0 } else { 1 });
        }
    }
    Ok(0)
}

fn write_table(t: &HaarTable, f: Format, out: &mut dyn Write) -> Result<()> {
    match f {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&t.to_json())?)?,
        Format::Text => {
            for (e, v) in &t.values {
                writeln!(out, "h({}) = {}", e.monomial_text(), v.to_text())?;
            }
        }
        Format::Latex => {
            for (e, v) in &t.values {
                writeln!(out, "h({}) &= {} \\\\", e.monomial_text(), v.to_latex())?;
            }
        }
    }
    Ok(())
}
