//! Exact elements of Q(q).

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{Map, Number, Value};

use super::IntPoly;
use crate::error::{Error, Result};

/// A rational function `num / den` in `q` with rational coefficients,
/// represented with integer polynomials.
///
/// The representation is canonical: the two polynomials are coprime in
/// Q[q], their integer contents are coprime, and the leading coefficient
/// of `den` is positive. Zero is `0 / 1`. Equality is therefore
/// structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QRational {
    num: IntPoly,
    den: IntPoly,
}

impl QRational {
    pub fn zero() -> Self {
        QRational {
            num: IntPoly::zero(),
            den: IntPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(IntPoly::constant(BigInt::from(c)))
    }

    pub fn from_bigint(c: BigInt) -> Self {
        Self::from_poly(IntPoly::constant(c))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Self::new(
            IntPoly::constant(BigInt::from(n)),
            IntPoly::constant(BigInt::from(d)),
        )
    }

    pub fn from_poly(p: IntPoly) -> Self {
        QRational {
            num: p,
            den: IntPoly::one(),
        }
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::q_pow(1)
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(k: i64) -> Self {
        let mono = IntPoly::monomial(BigInt::one(), k.unsigned_abs() as usize);
        if k >= 0 {
            Self::from_poly(mono)
        } else {
            QRational {
                num: IntPoly::one(),
                den: mono,
            }
        }
    }

    /// Builds and canonicalizes `num / den`. Panics if `den` is zero.
    pub fn new(num: IntPoly, den: IntPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let g = IntPoly::gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g), den.div_exact(&g))
        };
        Self::normalize_contents(num, den)
    }

    /// Builds `num / den` assuming the polynomials are already coprime.
    fn normalize_contents(num: IntPoly, den: IntPoly) -> Self {
        let c = num.content().gcd(&den.content());
        let c = if den.leading().unwrap().is_negative() { -c } else { c };
        QRational {
            num: num.div_scalar_exact(&c),
            den: den.div_scalar_exact(&c),
        }
    }

    /// Builds from parts that are claimed to be canonical, checking the
    /// claim.
    pub fn from_canonical_parts(num: IntPoly, den: IntPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Parse("zero denominator".into()));
        }
        let r = Self::new(num.clone(), den.clone());
        if r.num != num || r.den != den {
            return Err(Error::NonCanonical(format!("({num})/({den})")));
        }
        Ok(r)
    }

    pub fn numer(&self) -> &IntPoly {
        &self.num
    }

    pub fn denom(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Size measure used for pivot heuristics.
    pub fn weight(&self) -> usize {
        self.num.term_count() + self.den.term_count()
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize_contents(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, o: &Self) -> Result<Self> {
        Ok(self * &o.inv()?)
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Exact value at a rational point. Removable singularities are
    /// handled because the representation is already reduced.
    pub fn eval_at(&self, x: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::Pole(x.to_string()));
        }
        Ok(self.num.eval(x) / d)
    }

    /// Value modulo `p` at `x`, or `None` at a pole mod `p`.
    pub fn eval_mod(&self, x: u64, p: u64) -> Option<u64> {
        let d = self.den.eval_mod(x, p);
        if d == 0 {
            return None;
        }
        let n = self.num.eval_mod(x, p);
        Some(super::modp::mul(n, super::modp::inv(d, p), p))
    }

    pub fn to_json(&self) -> Value {
        let arr = |p: &IntPoly| {
            Value::Array(
                p.coeffs()
                    .iter()
                    .map(|c| Value::Number(Number::from_str(&c.to_string()).expect("integer")))
                    .collect(),
            )
        };
        let mut m = Map::new();
        m.insert("num".into(), arr(&self.num));
        m.insert("den".into(), arr(&self.den));
        Value::Object(m)
    }

    /// Reads the `{"num": [...], "den": [...]}` form and checks that it
    /// is canonical.
    pub fn from_json(v: &Value) -> Result<Self> {
        let part = |key: &str| -> Result<IntPoly> {
            let arr = v
                .get(key)
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Parse(format!("missing array `{key}`")))?;
            let mut cs = Vec::with_capacity(arr.len());
            for c in arr {
                let n = match c {
                    Value::Number(n) => n.to_string(),
                    _ => return Err(Error::Parse(format!("non-integer coefficient in `{key}`"))),
                };
                let b = BigInt::from_str(&n)
                    .map_err(|_| Error::Parse(format!("non-integer coefficient `{n}`")))?;
                cs.push(b);
            }
            if cs.last().is_some_and(|c| c.is_zero()) {
                return Err(Error::NonCanonical(format!("trailing zero in `{key}`")));
            }
            Ok(IntPoly::from_coeffs(cs))
        };
        Self::from_canonical_parts(part("num")?, part("den")?)
    }

    /// Plain-text rendering, e.g. `(q^2 - 1)/(q^4 + 1)` or `-q^3/(q^2 + 1)`.
    pub fn to_text(&self) -> String {
        if self.den.is_one() {
            return self.num.to_string();
        }
        let wrap = |p: &IntPoly| {
            if p.term_count() > 1 {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        format!("{}/{}", wrap(&self.num), wrap(&self.den))
    }

    pub fn to_latex(&self) -> String {
        let n = self.num.to_string_with("q", true);
        if self.den.is_one() {
            return n;
        }
        format!("\\frac{{{}}}{{{}}}", n, self.den.to_string_with("q", true))
    }

    fn add_impl(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return Self::new(&self.num + &o.num, self.den.clone());
        }
        let g = IntPoly::gcd(&self.den, &o.den);
        if g.is_one() {
            let num = &(&self.num * &o.den) + &(&o.num * &self.den);
            let den = &self.den * &o.den;
            // Coprime denominators: only the content can cancel.
            if num.is_zero() {
                return Self::zero();
            }
            return Self::normalize_contents(num, den);
        }
        let sd = self.den.div_exact(&g);
        let od = o.den.div_exact(&g);
        let num = &(&self.num * &od) + &(&o.num * &sd);
        if num.is_zero() {
            return Self::zero();
        }
        // Only factors of g can cancel against num.
        let g2 = IntPoly::gcd(&num, &g);
        let (num, gg) = if g2.is_one() {
            (num, g)
        } else {
            (num.div_exact(&g2), g.div_exact(&g2))
        };
        let den = &(&sd * &od) * &gg;
        Self::normalize_contents(num, den)
    }

    fn mul_impl(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let g1 = IntPoly::gcd(&self.num, &o.den);
        let g2 = IntPoly::gcd(&o.num, &self.den);
        let (an, bd) = if g1.is_one() {
            (self.num.clone(), o.den.clone())
        } else {
            (self.num.div_exact(&g1), o.den.div_exact(&g1))
        };
        let (bn, ad) = if g2.is_one() {
            (o.num.clone(), self.den.clone())
        } else {
            (o.num.div_exact(&g2), self.den.div_exact(&g2))
        };
        Self::normalize_contents(&an * &bn, &ad * &bd)
    }
}

impl fmt::Display for QRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for QRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QRational({})", self.to_text())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&QRational> for &QRational {
            type Output = QRational;
            fn $m(self, o: &QRational) -> QRational {
                $body(self, o)
            }
        }
        impl $tr<QRational> for QRational {
            type Output = QRational;
            fn $m(self, o: QRational) -> QRational {
                $body(&self, &o)
            }
        }
        impl $tr<&QRational> for QRational {
            type Output = QRational;
            fn $m(self, o: &QRational) -> QRational {
                $body(&self, o)
            }
        }
    };
}

forward_binop!(Add, add, |a: &QRational, b: &QRational| a.add_impl(b));
forward_binop!(Sub, sub, |a: &QRational, b: &QRational| a.add_impl(&-b));
forward_binop!(Mul, mul, |a: &QRational, b: &QRational| a.mul_impl(b));
forward_binop!(Div, div, |a: &QRational, b: &QRational| a
    .checked_div(b)
    .expect("division by zero in Q(q)"));

impl Neg for &QRational {
    type Output = QRational;
    fn neg(self) -> QRational {
        QRational {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for QRational {
    type Output = QRational;
    fn neg(self) -> QRational {
        -&self
    }
}

impl Default for QRational {
    fn default() -> Self {
        Self::zero()
    }
}

impl Zero for QRational {
    fn zero() -> Self {
        QRational::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for QRational {
    fn one() -> Self {
        QRational::one()
    }
}

/// Rational numbers as constant rational functions.
impl From<&BigRational> for QRational {
    fn from(r: &BigRational) -> Self {
        QRational::new(
            IntPoly::constant(r.numer().clone()),
            IntPoly::constant(r.denom().clone()),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> IntPoly {
        IntPoly::from_i64s(cs)
    }

    #[test]
    fn negative_power_of_q() {
        let r = QRational::q_pow(-2);
        assert_eq!(r.numer(), &p(&[1]));
        assert_eq!(r.denom(), &p(&[0, 0, 1]));
    }

    #[test]
    fn sum_cancels_common_factor() {
        let d = p(&[-1, 0, 1]);
        let a = QRational::new(p(&[0, 1]), d.clone());
        let b = QRational::new(p(&[1]), d);
        assert_eq!(&a + &b, QRational::new(p(&[1]), p(&[-1, 1])));
    }

    #[test]
    fn inverse_of_geometric_ratio() {
        let r = QRational::new(p(&[1, 0, -1]), p(&[1, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1]));
        assert_eq!(r.inv().unwrap(), QRational::from_poly(p(&[1, 0, 1, 0, 1, 0, 1, 0, 1])));
    }

    #[test]
    fn removable_singularity_at_one() {
        // -q / ((q^2+1)^2 (q^4+1) (q^4+q^2+1))
        let den = &(&(&p(&[1, 0, 1]) * &p(&[1, 0, 1])) * &p(&[1, 0, 0, 0, 1])) * &p(&[1, 0, 1, 0, 1]);
        let r = QRational::new(p(&[0, -1]), den);
        let v = r.eval_at(&BigRational::one()).unwrap();
        assert_eq!(v, BigRational::new((-1).into(), 24.into()));
    }

    #[test]
    fn canonical_sign_and_content() {
        let r = QRational::new(p(&[2, 2]), p(&[-4, 0, 4]));
        assert_eq!(r.numer(), &p(&[1]));
        assert_eq!(r.denom(), &p(&[-2, 2]));
    }

    #[test]
    fn json_roundtrip_and_rejection() {
        let r = QRational::new(p(&[0, -3]), p(&[1, 0, 1]));
        let v = r.to_json();
        assert_eq!(v.to_string(), r#"{"num":[0,-3],"den":[1,0,1]}"#);
        assert_eq!(QRational::from_json(&v).unwrap(), r);
        let bad: Value = serde_json::from_str(r#"{"num":[2],"den":[4]}"#).unwrap();
        assert!(matches!(QRational::from_json(&bad), Err(Error::NonCanonical(_))));
        let bad: Value = serde_json::from_str(r#"{"num":[1],"den":[-1]}"#).unwrap();
        assert!(QRational::from_json(&bad).is_err());
    }

    #[test]
    fn pole_is_reported() {
        let r = QRational::new(p(&[1]), p(&[-1, 1]));
        assert!(matches!(r.eval_at(&BigRational::one()), Err(Error::Pole(_))));
        assert!(matches!(QRational::zero().inv(), Err(Error::DivisionByZero)));
    }
}
