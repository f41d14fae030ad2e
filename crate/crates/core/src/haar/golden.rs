//! Published Haar values of standard monomials of order at most 3.
//!
//! Each entry lists monomials sharing one value, written in the syntax
//! accepted by [`Word::parse`](crate::Word::parse) and
//! [`parse_expr`](crate::algebra::parse_expr).

use crate::algebra::{parse_expr, Word};
use crate::error::{Error, Result};
use crate::normalform::StdExponents;
use crate::qfield::QRational;

const D2: &str = "(q^2 + 1)^2(q^4 + 1)(q^2 - q + 1)^2(q^2 + q + 1)^2";
const D2S: &str = "(q^2 + 1)^2(q^2 - q + 1)^2(q^2 + q + 1)^2";

const ORDER_1: &[(&[&str], &str)] = &[
    (&["aek"], "(1-q^2)^2/((1-q^4)(1-q^6))"),
    (&["afh", "bdk"], "(-q)(1-q^2)^2/((1-q^4)(1-q^6))"),
    (&["bfg", "cdh"], "(-q)^2(1-q^2)^2/((1-q^4)(1-q^6))"),
    (&["ceg"], "(-q)^3(1-q^2)^2/((1-q^4)(1-q^6))"),
];

fn order_2() -> Vec<(Vec<&'static str>, String)> {
    vec![
        (vec!["aekaek"], format!("(2q^8+q^4+1)/({D2})")),
        (vec!["aekafh", "aekbdk"], format!("-q(q^8 - q^6 + q^4 + 1)/({D2})")),
        (vec!["aekbfg", "aekcdh"], format!("-q^2(q^6 - q^4 - 1)/({D2})")),
        (vec!["aekceg"], format!("-q^3/({D2S})")),
        (vec!["afhafh", "bdkbdk"], format!("q^2(q^4+1)/({D2S})")),
        (vec!["afhbdk"], format!("-q^2(q^6 - q^4 - 1)/({D2})")),
        (vec!["afhbfg", "bdkcdh"], format!("-q^3/({D2S})")),
        (vec!["afhcdh", "bdkbfg"], format!("-q^3/({D2S})")),
        (vec!["afhceg", "bfgcdh", "bdkceg"], format!("q^4/({D2})")),
        (vec!["bfgbfg", "cdhcdh"], "q^4/((q^2 + 1)(q^2 - q + 1)^2(q^2 + q + 1)^2)".into()),
        (vec!["bfgceg", "cdhceg"], "-q^5/((q^2 + 1)(q^4 + 1)(q^2 - q + 1)^2(q^2 + q + 1)^2)".into()),
        (vec!["cegceg"], "q^6/((q^4 + 1)(q^2 - q + 1)^2(q^2 + q + 1)^2)".into()),
    ]
}

/// Denominators of the order-3 table, without the common `(1-q^10)`.
const T2: &str = "(q^2 + 1)^2(q^4 + 1)^2(q^2 - q + 1)^2(q^2 + q + 1)^2";
const T1: &str = "(q^2 + 1)(q^4 + 1)^2(q^2 - q + 1)^2(q^2 + q + 1)^2";
const T0: &str = "(q^2 + 1)(q^4 + 1)^2(q^2 - q + 1)(q^2 + q + 1)";

fn order_3() -> Vec<(Vec<&'static str>, String)> {
    let f = |num: &str, den: &str| format!("({num})/(({den})(1-q^10))");
    vec![
        (vec!["(aek)^3"], f("(q^20 + 6q^16 - 6q^14 + 13q^12 - 6q^10 + 9q^8 - 2q^6 + 3q^4 - q^2 + 1)(1-q^2)", T2)),
        (
            vec!["(aek)^2afh", "(aek)^2bdk"],
            f("-q(q^18 - 2q^14 + 7q^12 - 7q^10 + 8q^8 - 4q^6 + 3q^4 - q^2 + 1)(1-q^2)", T2),
        ),
        (
            vec!["(aek)^2bfg", "(aek)^2cdh"],
            f("-q^2(q^16 - q^14 - q^12 + 3q^10 - 5q^8 + 4q^6 - 3q^4 + q^2 - 1)(1-q^2)", T2),
        ),
        (vec!["(aek)^2ceg"], f("-q^3(q^14 + q^10 + 3q^8 - 2q^6 + 3q^4 - q^2 + 1)(1-q^2)", T2)),
        (
            vec!["aek(afh)^2", "aek(bdk)^2"],
            f("q^2(q^18 - 2q^16 + 2q^14 + q^12 - 3q^10 + 7q^8 - 4q^6 + 4q^4 - q^2 + 1)(1-q^2)", T2),
        ),
        (
            vec!["aekafhbdk"],
            f("-q^2(q^16 - q^14 - 2q^12 + 4q^10 - 6q^8 + 5q^6 - 3q^4 + q^2 - 1)(1-q^2)", T2),
        ),
        (
            vec!["aekafhbfg", "aekafhcdh"],
            f("-q^3(q^14 - q^12 + 2q^8 - 3q^6 + 3q^4 - q^2 + 1)(1-q^2)", T2),
        ),
        (vec!["aekafhceg"], f("q^4(q^10 - q^6 + 2q^4 - q^2 + 1)(1-q^2)", T2)),
        (
            vec!["aekbdkbfg", "aekbdkcdh"],
            f("q^3(q^16 - 2q^14 + 2q^12 - q^10 - 2q^8 + 3q^6 - 3q^4 + q^2 - 1)(1-q^2)", T2),
        ),
        (vec!["aekbdkceg"], f("q^4(q^12 - 2q^10 + 4q^8 - 5q^6 + 4q^4 - 2q^2 + 1)(1-q^2)", T1)),
        (
            vec!["aekbfgbfg", "aekcdhcdh"],
            f("-q^4(q^10 - 2q^8 + 3q^6 - 3q^4 + q^2 - 1)(1-q^2)", T1),
        ),
        (vec!["aekbfgcdh"], f("q^4(1-q^2)^2(q^10 + q^6 + 2q^4 + 1)", T2)),
        (vec!["aekbfgceg", "aekcdhceg"], f("q^5(q^3 - q - 1)(q^3 - q + 1)(1-q^2)", T1)),
        (vec!["aek(ceg)^2"], f("q^6(q^6 + q^4 + 1)(1-q^2)", T1)),
        (vec!["(afh)^3", "(bdk)^3"], f("-q^3(q^8 - q^6 + 3q^4 - q^2 + 1)^2(1-q^2)", T1)),
        (
            vec!["(afh)^2bdk", "afh(bdk)^2"],
            f("q^3(q^16 - 2q^14 + 2q^12 - 3q^8 + 4q^6 - 4q^4 + q^2 - 1)(1-q^2)", T2),
        ),
        (
            vec!["(afh)^2bfg", "(bdk)^2cdh", "(afh)^2cdh", "(bdk)^2bfg"],
            f("q^4(q^4 - q^2 + 1)(q^8 - q^6 + 3q^4 - q^2 + 1)(1-q^2)", T1),
        ),
        (vec!["(afh)^2ceg", "(bdk)^2ceg"], f("-q^5(q^4 - q^2 + 1)^2(1-q^2)", T1)),
        (
            vec!["afhbdkbfg", "afhbdkcdh"],
            f("q^4(q^12 - 3q^10 + 5q^8 - 6q^6 + 5q^4 - 2q^2 + 1)(1-q^2)", T1),
        ),
        (vec!["afhbdkceg"], f("-q^5(1-q^2)^2(q^10 + 2q^6 + q^4 + 1)", T2)),
        (
            vec!["afh(bfg)^2", "bdk(cdh)^2", "afh(cdh)^2", "bdk(bfg)^2"],
            f("-q^5(q^8 - q^6 + 3q^4 - q^2 + 1)(1-q^2)", T1),
        ),
        (vec!["afhbfgceg", "bdkcdhceg"], f("q^6(q^4 - q^2 + 1)(1-q^2)", T1)),
        (vec!["afhcdhceg", "bdkbfgceg"], f("q^6(q^4 - q^2 + 1)(1-q^2)", T1)),
        (vec!["afh(ceg)^2", "bdk(ceg)^2", "bfgcdhceg"], f("-q^7(1-q^2)", T1)),
        (vec!["(bfg)^3", "(cdh)^3"], f("q^6(q^8 - q^6 + 3q^4 - q^2 + 1)(1-q^2)", T0)),
        (vec!["(bfg)^2cdh", "bfg(cdh)^2"], f("q^6(q^4 - q^2 + 1)(1-q^2)", T1)),
        (vec!["(bfg)^2ceg", "(cdh)^2ceg"], f("-q^7(q^4 - q^2 + 1)(1-q^2)", T0)),
        (vec!["bfg(ceg)^2", "cdh(ceg)^2"], f("q^8(1-q^2)", T0)),
        (vec!["(ceg)^3"], "-q^9(1-q^2)/((q^2 + 1)(q^4 + 1)^2(1-q^10))".into()),
    ]
}

/// One published value and the monomials it belongs to.
#[derive(Clone, Debug)]
pub struct GoldenEntry {
    pub words: Vec<Word>,
    pub value: QRational,
}

fn scalar(expr: &str) -> Result<QRational> {
    let p = parse_expr(expr, 3)?;
    let mut terms = p.terms();
    match (terms.next(), terms.next()) {
        (None, _) => Ok(QRational::zero()),
        (Some((w, c)), None) if w.is_empty() => Ok(c.clone()),
        _ => Err(Error::Parse(format!("`{expr}` is not a scalar"))),
    }
}

/// The published table of order `m` (1, 2 or 3).
pub fn golden_table(m: u32) -> Result<Vec<GoldenEntry>> {
    let raw: Vec<(Vec<&str>, String)> = match m {
        1 => ORDER_1.iter().map(|(w, v)| (w.to_vec(), v.to_string())).collect(),
        2 => order_2(),
        3 => order_3(),
        _ => return Err(Error::Usage(format!("no published table of order {m}"))),
    };
    raw.into_iter()
        .map(|(ws, v)| {
            Ok(GoldenEntry {
                words: ws.iter().map(|w| Word::parse(w, 3)).collect::<Result<_>>()?,
                value: scalar(&v)?,
            })
        })
        .collect()
}

/// Exact values of some products with quantum minors, and their limits
/// at `q = 1`, as `(expression, value, limit)`.
pub const WEINGARTEN: &[(&str, &str, (i64, i64))] = &[
    ("a e (e k - q f h)(a k - q c g)", "q^2/((q^2+1)^2(q^4+1))", (1, 8)),
    ("e a (e k - q f h)(a k - q c g)", "q^2(q^6+q^2+1)/((q^2+1)^2(q^4+1)(q^4+q^2+1))", (1, 8)),
    ("a e (a k - q c g)(e k - q f h)", "(q^6+q^4+1)/((q^2+1)^2(q^4+1)(q^4+q^2+1))", (1, 8)),
    ("a (e k - q f h) e (a k - q c g)", "q^2/((q^2+1)^2(q^4+1))", (1, 8)),
    ("(-q)^-1 a h (b f - q c e)(d k - q f g)", "-q/((q^2+1)^2(q^4+1)(q^4+q^2+1))", (-1, 24)),
    ("(-q)^-1 h a (b f - q c e)(d k - q f g)", "-q^7/((q^2+1)^2(q^4+1)(q^4+q^2+1))", (-1, 24)),
    ("(-q)^-1 a h (d k - q f g)(b f - q c e)", "-q/((q^2+1)^2(q^4+1)(q^4+q^2+1))", (-1, 24)),
    ("(-q)^-1 a (d k - q f g) h (b f - q c e)", "-q^4/((q^2+1)^2(q^4+1)(q^4+q^2+1))", (-1, 24)),
    ("a a (e k - q f h)(e k - q f h)", "1/((q^4+1)(q^4+q^2+1))", (1, 6)),
    ("a (e k - q f h) a (e k - q f h)", "(q^4-q^2+1)/((q^4+1)(q^4+q^2+1))", (1, 6)),
];

/// Rewriting identities among order-2 and order-3 monomials, grouped as
/// `(name, [(word, right-hand side)])`. The right-hand sides are written
/// with standard monomials.
pub const REWRITE_IDENTITIES: &[(&str, &[(&str, &str)])] = &[
    (
        "ceg past aek, afh, bdk",
        &[
            ("cegaek", "aekceg+(q^3 - q)*afhceg-(q - 1/q)*bdkceg-(q^2 - 1)^2/q*bfgcdh"),
            ("cegafh", "q^2*afhceg+(1 - q^2)*bfgcdh"),
            ("cegbdk", "q^-2*bdkceg+(1 - q^-2)*bfgcdh"),
        ],
    ),
    (
        "cdh past aek, afh, bdk",
        &[
            ("cdhaek", "aekcdh+(q^4 - q^2)*afhceg+(1 - q^2)*bdkceg-(q^2 - 1)^2*bfgcdh"),
            ("cdhafh", "afhcdh+(q^3 - q)*afhceg-(q^3 - q)*bfgcdh"),
            ("cdhbdk", "bdkcdh-(q - 1/q)*bdkceg+(q - 1/q)*bfgcdh"),
        ],
    ),
    (
        "bfg past aek, afh, bdk",
        &[
            ("bfgaek", "aekbfg+(q^4 - q^2)*afhceg+(1 - q^2)*bdkceg-(q^2 - 1)^2*bfgcdh"),
            ("bfgafh", "afhbfg+(q^3 - q)*afhceg-(q^3 - q)*bfgcdh"),
            ("bfgbdk", "bdkbfg-(q - 1/q)*bdkceg+(q - 1/q)*bfgcdh"),
        ],
    ),
    (
        "bdk past afh",
        &[(
            "bdkafh",
            "q^-2*afhbdk+(1 - q^-2)*aekbfg+(1 - q^-2)*aekcdh-(q^2 - 1)^2/q^3*aekceg
             +(q^2 - 1)^2(q^2 + 1)/q^2*afhceg-(q^4 - q^2)*bfgcdh",
        )],
    ),
    (
        "afh past aek",
        &[(
            "afhaek",
            "aekafh+(q - 1/q)*afhbdk-(q - 1/q)*aekbfg-(q - 1/q)*aekcdh+(q - 1/q)^2*aekceg+(q - 1/q)*afhceg",
        )],
    ),
    (
        "bdk past aek",
        &[(
            "bdkaek",
            "aekbdk-(q - 1/q)*afhbdk+(q - 1/q)*aekbfg+(q - 1/q)*aekcdh-(q - 1/q)^2*aekceg
             +(q^2 - 1)^2(q^2 + 1)/q*afhceg-(q^3 - q)*bdkceg-q(q^2 - 1)^2*bfgcdh",
        )],
    ),
    (
        "afhbdkceg",
        &[(
            "afhbdkceg",
            "q*aekbfgcdh+(1 - q^2)*aekbfgceg+(1 - q^2)*aekcdhceg+(q^2 - 1)^2/q*aek(ceg)^2
             +(1 - q^2)*afhbfgcdh+(q^3 - q)*afhbfgceg+(q^3 - q)*afhcdhceg-(q^2 - 1)^2*afh(ceg)^2",
        )],
    ),
    (
        "bdkafhceg",
        &[(
            "bdkafhceg",
            "1/q*aekbfgcdh-(1 - q^-2)*afhbfgcdh+(q - q^-1)*afhbfgceg+(q - q^-1)*afhcdhceg
             +(q^2 - 1)^2*afh(ceg)^2-(q^4 - q^2)*bfgcdhceg",
        )],
    ),
];

/// Entries of the order-`m` relations with equation basis `(ceg)^m`, as
/// `(comparing basis, [coefficients])`. Comparing bases are written with
/// `aek` for `(aek)^{m-1}` and `afhbdk` for `(aek)^{m-2}afhbdk`. The
/// coefficient columns are those of `aek(ceg)^{m-1}`, `afh(ceg)^{m-1}`,
/// `bdk(ceg)^{m-1}`, `bfgcdh(ceg)^{m-2}`, `bfg(ceg)^{m-1}`,
/// `cdh(ceg)^{m-1}` and `(ceg)^m`, with the right-hand side moved into the
/// last. Exponents in brackets are affine in `n = m`.
pub const SOURCE_RELATIONS: &[(&str, [&str; 7])] = &[
    (
        "aekceg",
        [
            "q^2(q^[2n]-1)^2/(q^[2n](q^2-1)^2)",
            "-q(q^[2n]-1)^2/(q^[2n](q^2-1))",
            "q^3(1-q^[2n])^3/(q^[4n](q^2-1)^2)",
            "(q^3-q^[2n+1])(q^[2n]-1)^3/(q^[4n](q^2-1)^2)",
            "(q^[2n]-1)^2/q^[2n]",
            "[n](q^[2n]-1)^2/q^[2n]",
            "(q^[2n]-1)([n+1]q^4-2[n]q^2+[n])/(q^[2n+1](q^2-1))",
        ],
    ),
    (
        "aekbfg",
        [
            "0",
            "q^2(q^[2n]-1)^3/(q^[2n](q^2-1)^3)",
            "0",
            "0",
            "-q(q^[2n]-1)^2/(q^[2n](q^2-1))",
            "-[n]q(q^[2n]-1)^2/(q^[2n](q^2-1))",
            "(q^[2n]-1)([n]-[n+1]q^2)/(q^[2n](q^2-1))",
        ],
    ),
    (
        "aekcdh",
        [
            "0",
            "0",
            "q^4(q^[2n]-1)^3/(q^[4n](q^2-1)^3)",
            "(q^[2n]-1)^3(q^[2n+2]-q^4)/(q^[4n](q^2-1)^3)",
            "-q(q^[2n]-1)^2/(q^[2n](q^2-1))",
            "-[n]q(q^[2n]-1)^2/(q^[2n](q^2-1))",
            "(q^[2n]-1)([n]-[n+1]q^2)/(q^[2n](q^2-1))",
        ],
    ),
    (
        "afhbdk",
        [
            "0",
            "0",
            "0",
            "(q^[2n]-1)^3(q^[2n+2]-q^4)/(q^[4n](q^2-1)^4)",
            "(q^[2n]-1)^2(q^[2n-2]+[n-1]q^[2n]-[n-1]q^[2n+2]-1)/(q^[4n-3](q^2-1)^3)",
            "(q^[2n]-1)^2([n]q^[2n-2]-[n-1]q^[2n]-1)/(q^[4n-3](q^2-1)^3)",
            "(q^[2n]-1)(q^[2n+4]-[n](q^4-1)q^[2n]-q^2)/(q^[4n](q^2-1)^2)",
        ],
    ),
    (
        "aekbdk",
        [
            "0",
            "0",
            "0",
            "0",
            "q^2(q^[2n]-1)^2/(q^[2n](q^2-1)^2)",
            "0",
            "q(q^[2n]-1)/(q^[2n](q^2-1))",
        ],
    ),
    (
        "aekafh",
        [
            "0",
            "0",
            "0",
            "0",
            "0",
            "q^2(q^[2n]-1)^2/(q^[2n](q^2-1)^2)",
            "q(q^[2n]-1)/(q^[2n](q^2-1))",
        ],
    ),
];

/// Coefficients of the relation `h((ceg)^{m-1}) = h(D_q (ceg)^{m-1})` in
/// the columns of [`SOURCE_RELATIONS`].
pub const SOURCE_LIFT: [&str; 7] = ["1", "-q", "-q", "0", "q^2", "q^2", "-q^3"];

/// Fills the bracketed exponents of a [`SOURCE_RELATIONS`] entry for
/// order `m` and parses it.
pub fn source_relation_entry(template: &str, m: u32) -> Result<QRational> {
    let n = m as i64;
    let mut s = String::with_capacity(template.len());
    let mut rest = template;
    while let Some(open) = rest.find('[') {
        s.push_str(&rest[..open]);
        let close = rest[open..]
            .find(']')
            .ok_or_else(|| Error::Parse(format!("unclosed bracket in `{template}`")))?
            + open;
        let inner = &rest[open + 1..close];
        let (k, c) = match inner.split_once('n') {
            Some((k, c)) => (k, c),
            None => return Err(Error::Parse(format!("bad exponent `{inner}`"))),
        };
        let k: i64 = if k.is_empty() { 1 } else { k.parse().map_err(|_| Error::Parse(inner.into()))? };
        let c: i64 = if c.is_empty() { 0 } else { c.parse().map_err(|_| Error::Parse(inner.into()))? };
        s.push_str(&format!("({})", k * n + c));
        rest = &rest[close + 1..];
    }
    s.push_str(rest);
    scalar(&s)
}

/// The basis monomials behind the columns of [`SOURCE_RELATIONS`] and the
/// comparing bases behind its rows, for order `m >= 2`.
pub fn source_relation_bases(m: u32) -> ([StdExponents; 7], [StdExponents; 6]) {
    let cols = [
        [1, 0, 0, 0, 0, m - 1],
        [0, 1, 0, 0, 0, m - 1],
        [0, 0, 1, 0, 0, m - 1],
        [0, 0, 0, 1, 1, m - 2],
        [0, 0, 0, 1, 0, m - 1],
        [0, 0, 0, 0, 1, m - 1],
        [0, 0, 0, 0, 0, m],
    ]
    .map(StdExponents);
    let rows = [
        [m - 1, 0, 0, 0, 0, 1],
        [m - 1, 0, 0, 1, 0, 0],
        [m - 1, 0, 0, 0, 1, 0],
        [m - 2, 1, 1, 0, 0, 0],
        [m - 1, 0, 1, 0, 0, 0],
        [m - 1, 1, 0, 0, 0, 0],
    ]
    .map(StdExponents);
    (cols, rows)
}

/// Parses a scalar expression such as `q^2/(1+q^2)`.
pub fn parse_scalar(expr: &str) -> Result<QRational> {
    scalar(expr)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_parse() {
        assert_eq!(golden_table(1).unwrap().iter().map(|e| e.words.len()).sum::<usize>(), 6);
        assert_eq!(golden_table(2).unwrap().iter().map(|e| e.words.len()).sum::<usize>(), 21);
        assert_eq!(golden_table(3).unwrap().iter().map(|e| e.words.len()).sum::<usize>(), 54);
        assert_eq!(REWRITE_IDENTITIES.iter().map(|(_, v)| v.len()).sum::<usize>(), 14);
    }

    #[test]
    fn bracketed_exponents() {
        assert_eq!(
            source_relation_entry("q^[2n+1]-[n-1]", 3).unwrap(),
            scalar("q^7-2").unwrap()
        );
        assert!(source_relation_entry("q^[2m]", 3).is_err());
    }
}
