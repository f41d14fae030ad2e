//! Parser for polynomial expressions with coefficients in Q(q).
//!
//! Grammar, with implicit multiplication between adjacent factors:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/')? unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' exponent)?
//! atom   := integer | 'q' | generator | '(' expr ')' | '{' expr '}'
//! ```
//!
//! Exponents may be negative for scalars, e.g. `q^-2` or `(1-q)^{-1}`.

use num_bigint::BigInt;

use super::{NcPoly, Word, LETTERS};
use crate::error::{Error, Result};
use crate::qfield::QRational;

type Poly = NcPoly<QRational>;

/// Parses an expression such as `(-q)^-1 a h (b f - q c e)` into a
/// polynomial over Q(q) in the generators of O(SL_q(n)).
pub fn parse_expr(text: &str, n: u8) -> Result<Poly> {
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
        n,
    };
    let v = p.expr()?;
    p.ws();
    if p.pos < p.chars.len() {
        return Err(p.err("unexpected character"));
    }
    Ok(v)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    n: u8,
}

fn as_scalar(p: &Poly) -> Option<QRational> {
    match p.len() {
        0 => Some(QRational::zero()),
        1 => {
            let (w, c) = p.terms().next().unwrap();
            w.is_empty().then(|| c.clone())
        }
        _ => None,
    }
}

impl Parser {
    fn err(&self, msg: &str) -> Error {
        Error::ParseAt {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.ws();
        self.chars.get(self.pos).copied()
    }

    fn scalar(&self, c: QRational) -> Poly {
        Poly::scalar(c, self.n)
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                '+' => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                '-' => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn starts_atom(c: char) -> bool {
        c.is_ascii_digit() || c == 'q' || c == 'x' || c == '(' || c == '{' || LETTERS.contains(&c)
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = acc.multiply(&self.unary()?);
                }
                Some('/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let d = self.unary()?;
                    let s = as_scalar(&d).ok_or(Error::ParseAt {
                        pos: at,
                        msg: "only division by scalars is supported".into(),
                    })?;
                    let inv = s.inv().map_err(|_| Error::ParseAt {
                        pos: at,
                        msg: "division by zero".into(),
                    })?;
                    acc = acc.scale(&inv);
                }
                Some(c) if Self::starts_atom(c) => {
                    acc = acc.multiply(&self.unary()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Poly> {
        if self.peek() == Some('-') {
            self.pos += 1;
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    fn exponent(&mut self) -> Result<i64> {
        let close = match self.peek() {
            Some('(') => Some(')'),
            Some('{') => Some('}'),
            _ => None,
        };
        if close.is_some() {
            self.pos += 1;
        }
        let neg = if self.peek() == Some('-') {
            self.pos += 1;
            true
        } else {
            false
        };
        self.ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer exponent"));
        }
        let e: i64 = self.chars[start..self.pos]
            .iter()
            .collect::<String>()
            .parse()
            .map_err(|_| self.err("exponent too large"))?;
        if let Some(cl) = close {
            if self.peek() != Some(cl) {
                return Err(self.err("unclosed exponent"));
            }
            self.pos += 1;
        }
        Ok(if neg { -e } else { e })
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        let at = self.pos;
        let e = self.exponent()?;
        if e >= 0 {
            return Ok(base.pow(e as u32, self.n));
        }
        let s = as_scalar(&base).ok_or(Error::ParseAt {
            pos: at,
            msg: "negative powers need a scalar base".into(),
        })?;
        let v = s.pow(e).map_err(|_| Error::ParseAt {
            pos: at,
            msg: "zero to a negative power".into(),
        })?;
        Ok(self.scalar(v))
    }

    fn atom(&mut self) -> Result<Poly> {
        let c = self.peek().ok_or_else(|| self.err("unexpected end of input"))?;
        match c {
            '(' | '{' => {
                let close = if c == '(' { ')' } else { '}' };
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(close) {
                    return Err(self.err(&format!("expected `{close}`")));
                }
                self.pos += 1;
                Ok(v)
            }
            '0'..='9' => {
                let start = self.pos;
                while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                }
                let s: String = self.chars[start..self.pos].iter().collect();
                Ok(self.scalar(QRational::from_bigint(s.parse::<BigInt>().unwrap())))
            }
            'q' => {
                self.pos += 1;
                Ok(self.scalar(QRational::q()))
            }
            'x' => {
                let start = self.pos;
                let text: String = self.chars[start..(start + 3).min(self.chars.len())].iter().collect();
                let w = Word::parse(&text, self.n).map_err(|e| match e {
                    Error::ParseAt { pos, msg } => Error::ParseAt { pos: start + pos, msg },
                    other => other,
                })?;
                self.pos += 3;
                Ok(Poly::from_word(w))
            }
            'i' | 'j' => Err(self.err("letters i and j are not generators")),
            c if LETTERS.contains(&c) => {
                if self.n != 3 {
                    return Err(self.err("letter names require n = 3"));
                }
                self.pos += 1;
                Ok(Poly::from_word(Word::parse(&c.to_string(), 3)?))
            }
            _ => Err(self.err("unexpected character")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qfield::IntPoly;

    #[test]
    fn scalar_expressions() {
        let v = parse_expr("(1-q^2)^2/((1-q^4)(1-q^6))", 3).unwrap();
        let s = as_scalar(&v).unwrap();
        // (1-q^2)^2/((1-q^4)(1-q^6)) = 1/((1+q^2)(1+q^2+q^4))
        let direct = QRational::new(IntPoly::from_i64s(&[1]), IntPoly::from_i64s(&[1, 0, 2, 0, 2, 0, 1]));
        assert_eq!(s, direct);
        let v = parse_expr("q^{-2} + q^-1", 3).unwrap();
        assert_eq!(as_scalar(&v).unwrap(), QRational::q_pow(-2) + QRational::q_pow(-1));
    }

    #[test]
    fn polynomial_expressions() {
        let v = parse_expr("(-q)^(-1) a h (e k - q f h)", 3).unwrap();
        assert_eq!(v.len(), 2);
        let ahek = Word::parse("ahek", 3).unwrap();
        assert_eq!(v.coeff(&ahek), -QRational::q_pow(-1));
        assert!(parse_expr("a / b", 3).is_err());
        assert!(parse_expr("a i", 3).is_err());
        assert!(parse_expr("x13 x31 - q", 3).is_ok());
    }
}
