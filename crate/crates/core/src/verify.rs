//! Checkable claims about the Haar state: published tables, rewriting
//! identities, symmetries and limits at `q = 1`.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::Zero;

use crate::algebra::{gamma, omega, parse_expr, NcPoly, Word};
use crate::error::{Error, Result};
use crate::haar::closed::closed_values;
use crate::haar::golden::{golden_table, parse_scalar, REWRITE_IDENTITIES, WEINGARTEN};
use crate::haar::symmetry::{eq_re_pairs, symmetry_orbit};
use crate::haar::{Haar, Method};
use crate::normalform::{enumerate_basis, std_word, Reducer};
use crate::qfield::QRational;

/// A group of checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Tables,
    AppendixC,
    Symmetry,
    Weingarten,
    All,
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tables" => Ok(Suite::Tables),
            "appendixC" => Ok(Suite::AppendixC),
            "symmetry" => Ok(Suite::Symmetry),
            "weingarten" => Ok(Suite::Weingarten),
            "all" => Ok(Suite::All),
            _ => Err(Error::Usage(format!(
                "unknown suite `{s}` (tables, appendixC, symmetry, weingarten, all)"
            ))),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Tables => "tables",
            Suite::AppendixC => "appendixC",
            Suite::Symmetry => "symmetry",
            Suite::Weingarten => "weingarten",
            Suite::All => "all",
        })
    }
}

/// The outcome of one check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub suite: Suite,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} [{}] {}", self.suite, self.name)?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

fn check(suite: Suite, name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Check {
    Check {
        suite,
        name: name.into(),
        passed,
        detail: if passed { String::new() } else { detail.into() },
    }
}

/// Runs a suite. Orders beyond the engine's maximum are skipped.
pub fn run_suite(haar: &Haar, suite: Suite) -> Result<Vec<Check>> {
    match suite {
        Suite::Tables => tables(haar),
        Suite::AppendixC => appendix_c(),
        Suite::Symmetry => symmetry(haar),
        Suite::Weingarten => weingarten(haar),
        Suite::All => {
            let mut out = tables(haar)?;
            out.extend(appendix_c()?);
            out.extend(symmetry(haar)?);
            out.extend(weingarten(haar)?);
            Ok(out)
        }
    }
}

fn tables(haar: &Haar) -> Result<Vec<Check>> {
    let s = Suite::Tables;
    let mut out = Vec::new();
    for m in 1..=haar.max_order().min(3) {
        for entry in golden_table(m)? {
            for w in &entry.words {
                let v = haar.value(w)?;
                out.push(check(s, format!("order {m}: h({w})"), v == entry.value, format!("computed {v}")));
            }
        }
        let solver = haar.table_with(m, Method::Solver)?;
        let staged = haar.table_with(m, Method::Algorithm)?;
        let bad = solver.values.iter().filter(|(e, v)| staged.get(e) != Some(v)).count();
        out.push(check(
            s,
            format!("order {m}: staged algorithm equals solver"),
            bad == 0,
            format!("{bad} entries differ"),
        ));
        let closed = closed_values(m)?;
        let bad = closed.iter().filter(|(e, v)| solver.get(e) != Some(v)).count();
        out.push(check(
            s,
            format!("order {m}: {} closed forms equal solver", closed.len()),
            bad == 0,
            format!("{bad} entries differ"),
        ));
    }
    Ok(out)
}

fn appendix_c() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (name, ids) in REWRITE_IDENTITIES {
        let mut failed = Vec::new();
        for (lhs, rhs) in *ids {
            let got = Reducer::shared().reduce(&Word::parse(lhs, 3)?)?;
            let got: NcPoly<QRational> = got.iter().fold(NcPoly::zero(), |mut p, (e, c)| {
                p.add_term(c.to_qrational(), std_word(e));
                p
            });
            if got != parse_expr(rhs, 3)? {
                failed.push(*lhs);
            }
        }
        out.push(check(
            Suite::AppendixC,
            format!("{name} ({} identities)", ids.len()),
            failed.is_empty(),
            format!("mismatch for {}", failed.join(", ")),
        ));
    }
    Ok(out)
}

fn symmetry(haar: &Haar) -> Result<Vec<Check>> {
    let s = Suite::Symmetry;
    let mut out = Vec::new();
    for m in 1..=haar.max_order().min(3) {
        let t = haar.table(m)?;
        let mut bad = Vec::new();
        for e in enumerate_basis(m) {
            if symmetry_orbit(&e).iter().any(|x| t.get(x) != t.get(&e)) {
                bad.push(e.monomial_text());
            }
        }
        out.push(check(s, format!("order {m}: symmetry orbits share values"), bad.is_empty(), bad.join(", ")));
        let mut bad = Vec::new();
        for (a, b) in eq_re_pairs(m) {
            if t.get(&a) != t.get(&b) {
                bad.push(format!("{} vs {}", a.monomial_text(), b.monomial_text()));
            }
        }
        out.push(check(
            s,
            format!("order {m}: afh(ceg) against bfgcdh pairs"),
            bad.is_empty(),
            bad.join(", "),
        ));
        for (label, map) in [("gamma", gamma as fn(&Word) -> Word), ("omega", omega)] {
            let mut bad = Vec::new();
            for e in enumerate_basis(m) {
                let w = std_word(&e);
                if haar.value(&map(&w))? != haar.value(&w)? {
                    bad.push(e.monomial_text());
                }
            }
            out.push(check(s, format!("order {m}: {label} preserves h"), bad.is_empty(), bad.join(", ")));
        }
    }
    Ok(out)
}

fn weingarten(haar: &Haar) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (expr, value, (n, d)) in WEINGARTEN {
        let p = parse_expr(expr, 3)?;
        let v = haar.value_poly(&p)?;
        let want = parse_scalar(value)?;
        let limit = haar.weingarten_limit(&p)?;
        let want_limit = BigRational::new((*n).into(), (*d).into());
        let passed = v == want && limit == want_limit && !limit.is_zero();
        out.push(check(
            Suite::Weingarten,
            format!("h({expr}) -> {want_limit}"),
            passed,
            format!("computed {v}, limit {limit}"),
        ));
    }
    Ok(out)
}
