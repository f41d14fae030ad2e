use std::collections::BTreeMap;
use std::fmt;

use super::Word;
use crate::qfield::{Laurent, QRational};

/// Coefficient rings usable in [`NcPoly`].
pub trait Coeff: Clone + PartialEq + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn to_qrational(&self) -> QRational;
}

impl Coeff for Laurent {
    fn zero() -> Self {
        Laurent::zero()
    }
    fn one() -> Self {
        Laurent::one()
    }
    fn is_zero(&self) -> bool {
        Laurent::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn to_qrational(&self) -> QRational {
        Laurent::to_qrational(self)
    }
}

impl Coeff for QRational {
    fn zero() -> Self {
        QRational::zero()
    }
    fn one() -> Self {
        QRational::one()
    }
    fn is_zero(&self) -> bool {
        QRational::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn to_qrational(&self) -> QRational {
        self.clone()
    }
}

/// A finite linear combination of words.
#[derive(Clone, PartialEq)]
pub struct NcPoly<C: Coeff = Laurent> {
    terms: BTreeMap<Word, C>,
}

/// Polynomials with Laurent coefficients, the common case.
pub type NCPoly = NcPoly<Laurent>;

impl<C: Coeff> Default for NcPoly<C> {
    fn default() -> Self {
        NcPoly {
            terms: BTreeMap::new(),
        }
    }
}

impl<C: Coeff> NcPoly<C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_word(w: Word) -> Self {
        Self::term(C::one(), w)
    }

    pub fn term(c: C, w: Word) -> Self {
        let mut p = Self::zero();
        p.add_term(c, w);
        p
    }

    pub fn scalar(c: C, n: u8) -> Self {
        Self::term(c, Word::empty(n))
    }

    pub fn add_term(&mut self, c: C, w: Word) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(x) => {
                *x = x.add(&c);
                if x.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> C {
        self.terms.get(w).cloned().unwrap_or_else(C::zero)
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (w, c) in &o.terms {
            r.add_term(c.clone(), w.clone());
        }
        r
    }

    pub fn neg(&self) -> Self {
        NcPoly {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, s: &C) -> Self {
        let mut r = Self::zero();
        for (w, c) in &self.terms {
            r.add_term(c.mul(s), w.clone());
        }
        r
    }

    /// Product in the free algebra: words are concatenated, nothing is
    /// rewritten.
    pub fn multiply(&self, o: &Self) -> Self {
        let mut r = Self::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &o.terms {
                r.add_term(c1.mul(c2), w1.concat(w2));
            }
        }
        r
    }

    pub fn pow(&self, e: u32, n: u8) -> Self {
        let mut acc = Self::scalar(C::one(), n);
        for _ in 0..e {
            acc = acc.multiply(self);
        }
        acc
    }

    /// Applies a map on words that may rescale each word.
    pub fn map_words(&self, f: impl Fn(&Word) -> (C, Word)) -> Self {
        let mut r = Self::zero();
        for (w, c) in &self.terms {
            let (s, w2) = f(w);
            r.add_term(c.mul(&s), w2);
        }
        r
    }

    pub fn to_qrational_poly(&self) -> NcPoly<QRational> {
        let mut r = NcPoly::zero();
        for (w, c) in &self.terms {
            r.add_term(c.to_qrational(), w.clone());
        }
        r
    }
}

impl<C: Coeff> fmt::Display for NcPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(w, c)| format!("({c})*{w}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

impl<C: Coeff> fmt::Debug for NcPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NcPoly({self})")
    }
}

/// A finite linear combination of pure tensors `z ⊗ y`.
#[derive(Clone, PartialEq, Default)]
pub struct TensorPoly {
    terms: BTreeMap<(Word, Word), Laurent>,
}

impl TensorPoly {
    pub fn add_term(&mut self, c: Laurent, z: Word, y: Word) {
        if c.is_zero() {
            return;
        }
        let key = (z, y);
        let e = self.terms.entry(key.clone()).or_default();
        *e += &c;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Word, Word), &Laurent)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Debug for TensorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((z, y), c)| format!("({c})*{z}⊗{y}"))
            .collect();
        write!(f, "TensorPoly({})", parts.join(" + "))
    }
}
