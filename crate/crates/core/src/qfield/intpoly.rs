//! Dense univariate polynomials over the integers.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A polynomial in `q` with integer coefficients, stored densely in
/// ascending degree. Trailing zeros are never kept, so the zero
/// polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * q^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPoly { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Self::from_coeffs(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Largest power of `q` dividing the polynomial.
    pub fn q_valuation(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Gcd of the coefficients, always non-negative.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn max_abs_coeff(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).max().unwrap_or_default()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Divides every coefficient by `c`, which must divide all of them.
    pub fn div_scalar_exact(&self, c: &BigInt) -> Self {
        if c.is_one() {
            return self.clone();
        }
        IntPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|x| {
                    let (d, r) = x.div_rem(c);
                    debug_assert!(r.is_zero(), "inexact scalar division");
                    d
                })
                .collect(),
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    /// Divides by `q^k`, which must divide the polynomial.
    pub fn unshift(&self, k: usize) -> Self {
        debug_assert!(self.q_valuation() >= k || self.is_zero());
        IntPoly {
            coeffs: self.coeffs.iter().skip(k).cloned().collect(),
        }
    }

    /// Primitive part with a positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().unwrap().is_negative() {
            c = -c;
        }
        self.div_scalar_exact(&c)
    }

    pub fn eval<T>(&self, x: &T) -> T
    where
        T: Clone + Zero + for<'a> Mul<&'a T, Output = T> + Add<T, Output = T> + From<BigInt>,
    {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + T::from(c.clone());
        }
        acc
    }

    /// Evaluation modulo `p` at `x`, both below 2^63.
    pub fn eval_mod(&self, x: u64, p: u64) -> u64 {
        let pb = BigInt::from(p);
        let mut acc: u64 = 0;
        for c in self.coeffs.iter().rev() {
            let cm = c.mod_floor(&pb);
            let cm: u64 = cm.try_into().expect("residue fits in u64");
            acc = ((acc as u128 * x as u128 + cm as u128) % p as u128) as u64;
        }
        acc
    }

    /// Exact quotient `self / d` in Z[q]. Panics if `d` does not divide
    /// `self`.
    pub fn div_exact(&self, d: &IntPoly) -> IntPoly {
        self.checked_div(d).expect("inexact polynomial division")
    }

    /// Quotient `self / d` when it exists in Z[q].
    pub fn checked_div(&self, d: &IntPoly) -> Option<IntPoly> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let dn = d.degree().unwrap();
        let sn = self.degree().unwrap();
        if sn < dn {
            return None;
        }
        if dn == 0 {
            let c = &d.coeffs[0];
            let mut out = Vec::with_capacity(self.coeffs.len());
            for x in &self.coeffs {
                let (qq, r) = x.div_rem(c);
                if !r.is_zero() {
                    return None;
                }
                out.push(qq);
            }
            return Some(IntPoly::from_coeffs(out));
        }
        let lc = d.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); sn - dn + 1];
        for k in (0..=sn - dn).rev() {
            let top = &rem[k + dn];
            if top.is_zero() {
                continue;
            }
            let (qq, r) = top.div_rem(lc);
            if !r.is_zero() {
                return None;
            }
            for (i, dc) in d.coeffs.iter().enumerate() {
                if !dc.is_zero() {
                    rem[k + i] -= &qq * dc;
                }
            }
            quot[k] = qq;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPoly::from_coeffs(quot))
    }

    /// Pseudo-remainder of `self` by `d`.
    fn pseudo_rem(&self, d: &IntPoly) -> IntPoly {
        let dn = d.degree().expect("nonzero divisor");
        let lc = d.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        while rem.len() > dn && !rem.is_empty() {
            let top = rem.last().unwrap().clone();
            let k = rem.len() - 1 - dn;
            for c in rem.iter_mut() {
                *c *= &lc;
            }
            for (i, dc) in d.coeffs.iter().enumerate() {
                rem[k + i] -= &top * dc;
            }
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        IntPoly::from_coeffs(rem)
    }

    fn gcd_prs(a: &IntPoly, b: &IntPoly) -> IntPoly {
        let (mut a, mut b) = (a.primitive_part(), b.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part()
    }

    /// Heuristic gcd by evaluation at a large integer and reconstruction
    /// of the balanced digits. Returns `None` when it gives up.
    fn gcd_heuristic(a: &IntPoly, b: &IntPoly) -> Option<IntPoly> {
        let bound = a.max_abs_coeff().min(b.max_abs_coeff());
        let mut xi: BigInt = bound * 2u32 + 29u32;
        let deg = a.degree().unwrap().max(b.degree().unwrap()) as u64;
        for _ in 0..6 {
            if xi.bits() * deg > 40_000 {
                return None;
            }
            let ga = a.eval(&xi);
            let gb = b.eval(&xi);
            let g = ga.gcd(&gb);
            let cand = Self::from_balanced_digits(g, &xi).primitive_part();
            if !cand.is_zero() && a.checked_div(&cand).is_some() && b.checked_div(&cand).is_some() {
                return Some(cand);
            }
            xi = xi * 73794u32 / 27011u32;
        }
        None
    }

    fn from_balanced_digits(mut v: BigInt, xi: &BigInt) -> IntPoly {
        let half: BigInt = xi / 2u32;
        let mut out = Vec::new();
        while !v.is_zero() {
            let mut r = v.mod_floor(xi);
            if r > half {
                r -= xi;
            }
            v = (v - &r) / xi;
            out.push(r);
        }
        IntPoly::from_coeffs(out)
    }

    /// Primitive gcd with positive leading coefficient. Contents are
    /// ignored, so `gcd(2, 4) == 1`.
    pub fn gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
        if a.is_zero() {
            return b.primitive_part();
        }
        if b.is_zero() {
            return a.primitive_part();
        }
        if a.degree() == Some(0) || b.degree() == Some(0) {
            return IntPoly::one();
        }
        // Powers of q are split off first; they are common here.
        let va = a.q_valuation();
        let vb = b.q_valuation();
        let v = va.min(vb);
        let a0 = a.unshift(va);
        let b0 = b.unshift(vb);
        let g = if a0.degree() == Some(0) || b0.degree() == Some(0) {
            IntPoly::one()
        } else if a0 == b0 {
            a0.primitive_part()
        } else {
            Self::gcd_heuristic(&a0, &b0).unwrap_or_else(|| Self::gcd_prs(&a0, &b0))
        };
        g.shift(v)
    }

    #[doc(hidden)]
    pub fn gcd_reference(a: &IntPoly, b: &IntPoly) -> IntPoly {
        if a.is_zero() && b.is_zero() {
            return IntPoly::zero();
        }
        Self::gcd_prs(a, b)
    }

    fn add_ref(&self, o: &IntPoly) -> IntPoly {
        let (long, short) = if self.coeffs.len() >= o.coeffs.len() {
            (self, o)
        } else {
            (o, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        IntPoly::from_coeffs(coeffs)
    }

    fn mul_ref(&self, o: &IntPoly) -> IntPoly {
        if self.is_zero() || o.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in o.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    coeffs[i + j] += x * y;
                }
            }
        }
        IntPoly::from_coeffs(coeffs)
    }

    /// Formats with the given variable name, highest degree first.
    pub fn to_string_with(&self, var: &str, latex: bool) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        // LaTeX lists ascending powers, plain text descending.
        let order: Vec<usize> = if latex {
            (0..self.coeffs.len()).collect()
        } else {
            (0..self.coeffs.len()).rev().collect()
        };
        for k in order {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let neg = c.sign() == Sign::Minus;
            let a = c.abs();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ if latex => format!("{var}^{{{k}}}"),
                _ => format!("{var}^{k}"),
            };
            if mono.is_empty() {
                s.push_str(&a.to_string());
            } else if a.is_one() {
                s.push_str(&mono);
            } else if latex {
                s.push_str(&format!("{a}{mono}"));
            } else {
                s.push_str(&format!("{a}*{mono}"));
            }
        }
        s
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Compares two polynomials by degree then coefficients; used only to
    /// give a deterministic order.
    pub fn cmp_structural(&self, o: &IntPoly) -> Ordering {
        self.coeffs
            .len()
            .cmp(&o.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(o.coeffs.iter().rev()))
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with("q", false))
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, o: &IntPoly) -> IntPoly {
        self.add_ref(o)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, o: &IntPoly) -> IntPoly {
        self.add_ref(&-o)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, o: &IntPoly) -> IntPoly {
        self.mul_ref(o)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> IntPoly {
        IntPoly::from_i64s(cs)
    }

    #[test]
    fn trims_and_reports_degree() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[0, 0, 3]).q_valuation(), 2);
    }

    #[test]
    fn multiply_and_divide() {
        let a = p(&[1, -1]);
        let b = p(&[1, 1]);
        let ab = &a * &b;
        assert_eq!(ab, p(&[1, 0, -1]));
        assert_eq!(ab.div_exact(&a), b);
        assert!(p(&[1, 0, 1]).checked_div(&a).is_none());
    }

    #[test]
    fn gcd_of_cyclotomic_products() {
        // (1 - q^10) and (1 - q^6) share 1 - q^2.
        let a = p(&[1, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1]);
        let b = p(&[1, 0, 0, 0, 0, 0, -1]);
        assert_eq!(IntPoly::gcd(&a, &b), p(&[-1, 0, 1]));
        assert_eq!(IntPoly::gcd(&p(&[0, 0, 2, 2]), &p(&[0, 4])), p(&[0, 1]));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, -2, 0, 3]).to_string(), "3*q^3 - 2*q + 1");
        assert_eq!(p(&[0, -1]).to_string(), "-q");
    }
}
