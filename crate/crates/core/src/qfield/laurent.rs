//! Laurent polynomials over the integers.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;

use super::{modp, IntPoly, QRational};

/// An element of Z[q, q^-1] with machine-integer coefficients.
///
/// All structure constants of the quantum group lie in this ring, so the
/// rewriting layer never needs gcds. Coefficients are `i128` and
/// arithmetic panics on overflow instead of wrapping.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Laurent {
    low: i32,
    coeffs: Vec<i128>,
}

fn ck_add(a: i128, b: i128) -> i128 {
    a.checked_add(b).expect("Laurent coefficient overflow")
}

fn ck_mul(a: i128, b: i128) -> i128 {
    a.checked_mul(b).expect("Laurent coefficient overflow")
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn constant(c: i128) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * q^k`.
    pub fn monomial(c: i128, k: i32) -> Self {
        if c == 0 {
            return Self::zero();
        }
        Laurent {
            low: k,
            coeffs: vec![c],
        }
    }

    pub fn q_pow(k: i32) -> Self {
        Self::monomial(1, k)
    }

    /// `sum c_i q^(low + i)`.
    pub fn from_coeffs(low: i32, coeffs: Vec<i128>) -> Self {
        let mut l = Laurent { low, coeffs };
        l.trim();
        l
    }

    /// Builds from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms(terms: &[(i32, i128)]) -> Self {
        let mut acc = Self::zero();
        for &(k, c) in terms {
            acc += &Self::monomial(c, k);
        }
        acc
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|&&c| c == 0).count();
        if lead == self.coeffs.len() {
            self.coeffs.clear();
            self.low = 0;
            return;
        }
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i32;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs == [1]
    }

    /// Lowest exponent with a nonzero coefficient (0 for zero).
    pub fn low(&self) -> i32 {
        self.low
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn high(&self) -> i32 {
        self.low + self.coeffs.len() as i32 - 1
    }

    /// Iterates `(exponent, coefficient)` over nonzero terms.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i128)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(move |(i, &c)| (self.low + i as i32, c))
    }

    pub fn coeff(&self, k: i32) -> i128 {
        let i = k - self.low;
        if i < 0 {
            return 0;
        }
        self.coeffs.get(i as usize).copied().unwrap_or(0)
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Laurent {
            low: self.low + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: i128) -> Self {
        if c == 0 {
            return Self::zero();
        }
        Laurent {
            low: self.low,
            coeffs: self.coeffs.iter().map(|&x| ck_mul(x, c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Adds `a * b` in place.
    pub fn add_mul(&mut self, a: &Laurent, b: &Laurent) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        if a.coeffs.len() == 1 && b.coeffs.len() == 1 {
            *self += &Laurent::monomial(ck_mul(a.coeffs[0], b.coeffs[0]), a.low + b.low);
            return;
        }
        *self += &(a * b);
    }

    /// Substitutes `q -> q^-1`.
    pub fn bar(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Laurent {
            low: -self.high(),
            coeffs,
        }
    }

    /// Sum of the coefficients, i.e. the value at `q = 1`.
    pub fn at_one(&self) -> i128 {
        self.coeffs.iter().fold(0, |a, &c| ck_add(a, c))
    }

    pub fn eval_mod(&self, x: u64, p: u64) -> u64 {
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = modp::add(modp::mul(acc, x, p), modp::from_i128(c, p), p);
        }
        let s = if self.low >= 0 {
            modp::pow(x, self.low as u64, p)
        } else {
            modp::inv(modp::pow(x, (-self.low) as u64, p), p)
        };
        modp::mul(acc, s, p)
    }

    pub fn to_qrational(&self) -> QRational {
        if self.is_zero() {
            return QRational::zero();
        }
        let body = IntPoly::from_coeffs(self.coeffs.iter().map(|&c| BigInt::from(c)).collect());
        if self.low >= 0 {
            QRational::from_poly(body.shift(self.low as usize))
        } else {
            // The constant term of `body` is nonzero, so this is coprime.
            QRational::new(body, IntPoly::monomial(BigInt::from(1), (-self.low) as usize))
        }
    }

    /// Writes terms highest exponent first, e.g. `q^2 - 1 + q^-1`.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            let neg = c < 0;
            let a = c.unsigned_abs();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = match k {
                0 => String::new(),
                1 => "q".into(),
                _ => format!("q^{k}"),
            };
            match (mono.is_empty(), a) {
                (true, _) => s.push_str(&a.to_string()),
                (false, 1) => s.push_str(&mono),
                (false, _) => s.push_str(&format!("{a}*{mono}")),
            }
        }
        s
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent({})", self.to_text())
    }
}

impl AddAssign<&Laurent> for Laurent {
    fn add_assign(&mut self, o: &Laurent) {
        if o.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = o.clone();
            return;
        }
        if o.low < self.low {
            let pad = (self.low - o.low) as usize;
            self.coeffs.splice(0..0, std::iter::repeat_n(0, pad));
            self.low = o.low;
        }
        let off = (o.low - self.low) as usize;
        if self.coeffs.len() < off + o.coeffs.len() {
            self.coeffs.resize(off + o.coeffs.len(), 0);
        }
        for (i, &c) in o.coeffs.iter().enumerate() {
            self.coeffs[off + i] = ck_add(self.coeffs[off + i], c);
        }
        self.trim();
    }
}

impl Add for &Laurent {
    type Output = Laurent;
    fn add(self, o: &Laurent) -> Laurent {
        let mut r = self.clone();
        r += o;
        r
    }
}

impl Sub for &Laurent {
    type Output = Laurent;
    fn sub(self, o: &Laurent) -> Laurent {
        let mut r = self.clone();
        r += &-o;
        r
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        Laurent {
            low: self.low,
            coeffs: self.coeffs.iter().map(|&c| -c).collect(),
        }
    }
}

impl Mul for &Laurent {
    type Output = Laurent;
    fn mul(self, o: &Laurent) -> Laurent {
        if self.is_zero() || o.is_zero() {
            return Laurent::zero();
        }
        let mut coeffs = vec![0i128; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, &x) in self.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in o.coeffs.iter().enumerate() {
                coeffs[i + j] = ck_add(coeffs[i + j], ck_mul(x, y));
            }
        }
        Laurent::from_coeffs(self.low + o.low, coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_minus_q_inverse_squared() {
        let t = &Laurent::q_pow(1) - &Laurent::q_pow(-1);
        let sq = &t * &t;
        assert_eq!(sq, Laurent::from_terms(&[(2, 1), (0, -2), (-2, 1)]));
        assert_eq!(sq.low(), -2);
        assert_eq!(sq.high(), 2);
        assert_eq!(sq.bar(), sq);
        assert_eq!(sq.at_one(), 0);
    }

    #[test]
    fn cancellation_trims_both_ends() {
        let a = Laurent::from_terms(&[(-3, 1), (0, 2), (4, 1)]);
        let b = Laurent::from_terms(&[(-3, -1), (4, -1)]);
        assert_eq!(&a + &b, Laurent::constant(2));
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn conversion_to_rational_function() {
        let t = Laurent::from_terms(&[(1, 1), (-1, -1)]);
        let r = t.to_qrational();
        assert_eq!(r.numer(), &IntPoly::from_i64s(&[-1, 0, 1]));
        assert_eq!(r.denom(), &IntPoly::from_i64s(&[0, 1]));
    }

    #[test]
    fn text_form() {
        let t = Laurent::from_terms(&[(2, 1), (0, -1), (-1, 3)]);
        assert_eq!(t.to_string(), "q^2 - 1 + 3*q^-1");
    }
}
