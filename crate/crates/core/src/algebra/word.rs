use std::fmt;

use crate::error::{Error, Result};

/// Letters used for the generators of O(SL_q(3)), row by row.
pub const LETTERS: [char; 9] = ['a', 'b', 'c', 'd', 'e', 'f', 'g', 'h', 'k'];

/// A generator `x_ij` of O(SL_q(n)), with 1-based indices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Generator {
    pub n: u8,
    pub i: u8,
    pub j: u8,
}

impl Generator {
    pub fn new(n: u8, i: u8, j: u8) -> Result<Self> {
        if n == 0 || i == 0 || j == 0 || i > n || j > n {
            return Err(Error::Parse(format!("generator x{i}{j} out of range for n = {n}")));
        }
        Ok(Generator { n, i, j })
    }

    /// Row-major index `(i-1)*n + (j-1)`.
    pub fn index(self) -> u8 {
        (self.i - 1) * self.n + (self.j - 1)
    }

    pub fn from_index(n: u8, idx: u8) -> Self {
        Generator {
            n,
            i: idx / n + 1,
            j: idx % n + 1,
        }
    }

    pub fn letter(self) -> Option<char> {
        (self.n == 3).then(|| LETTERS[self.index() as usize])
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.letter() {
            Some(c) => write!(f, "{c}"),
            None => write!(f, "x{}{}", self.i, self.j),
        }
    }
}

/// A monomial: a finite sequence of generators of one O(SL_q(n)).
///
/// Letters are stored as row-major indices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    n: u8,
    letters: Vec<u8>,
}

impl Word {
    pub fn empty(n: u8) -> Self {
        Word {
            n,
            letters: Vec::new(),
        }
    }

    pub fn from_indices(n: u8, letters: Vec<u8>) -> Self {
        debug_assert!(letters.iter().all(|&l| l < n * n));
        Word { n, letters }
    }

    pub fn from_generators(n: u8, gens: &[Generator]) -> Self {
        Word {
            n,
            letters: gens.iter().map(|g| g.index()).collect(),
        }
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn indices(&self) -> &[u8] {
        &self.letters
    }

    pub fn generators(&self) -> impl Iterator<Item = Generator> + '_ {
        self.letters.iter().map(move |&l| Generator::from_index(self.n, l))
    }

    pub fn concat(&self, o: &Word) -> Word {
        assert_eq!(self.n, o.n, "words over different n");
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&o.letters);
        Word { n: self.n, letters }
    }

    pub fn pow(&self, e: usize) -> Word {
        Word {
            n: self.n,
            letters: self.letters.repeat(e),
        }
    }

    /// Parses a monomial.
    ///
    /// For `n = 3` the letters `a b c d e f g h k` may be used; `x_ij`
    /// may always be written as `x` followed by two digits. Parentheses
    /// group, `^` raises to a power, and whitespace is ignored, so
    /// `(aek)^2 x13 x31` is accepted.
    pub fn parse(text: &str, n: u8) -> Result<Word> {
        let chars: Vec<char> = text.chars().collect();
        let mut p = WordParser { chars, pos: 0, n };
        let w = p.sequence()?;
        p.skip_ws();
        if p.pos < p.chars.len() {
            return Err(p.err("unexpected character"));
        }
        Ok(Word { n, letters: w })
    }
}

struct WordParser {
    chars: Vec<char>,
    pos: usize,
    n: u8,
}

impl WordParser {
    fn err(&self, msg: &str) -> Error {
        let found = self.chars.get(self.pos).map_or("end of input".to_string(), |c| format!("`{c}`"));
        Error::ParseAt {
            pos: self.pos,
            msg: format!("{msg} ({found})"),
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace() || *c == '*') {
            self.pos += 1;
        }
    }

    fn sequence(&mut self) -> Result<Vec<u8>> {
        let mut out = Vec::new();
        loop {
            self.skip_ws();
            match self.chars.get(self.pos) {
                None | Some(')') => return Ok(out),
                _ => {
                    let f = self.factor()?;
                    out.extend(f);
                }
            }
        }
    }

    fn factor(&mut self) -> Result<Vec<u8>> {
        let base = match self.chars[self.pos] {
            '(' => {
                self.pos += 1;
                let inner = self.sequence()?;
                self.skip_ws();
                if self.chars.get(self.pos) != Some(&')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                inner
            }
            'x' => {
                let start = self.pos;
                self.pos += 1;
                let d: Vec<u32> = (0..2)
                    .map(|k| self.chars.get(self.pos + k).and_then(|c| c.to_digit(10)))
                    .collect::<Option<Vec<_>>>()
                    .ok_or_else(|| self.err("expected two digits after `x`"))?;
                let (i, j) = (d[0] as u8, d[1] as u8);
                if i == 0 || j == 0 || i > self.n || j > self.n {
                    return Err(Error::ParseAt {
                        pos: start,
                        msg: format!("index x{i}{j} out of range for n = {}", self.n),
                    });
                }
                self.pos += 2;
                vec![Generator { n: self.n, i, j }.index()]
            }
            'i' | 'j' => return Err(self.err("letters i and j are not generators")),
            c => match LETTERS.iter().position(|&l| l == c) {
                Some(idx) if self.n == 3 => {
                    self.pos += 1;
                    vec![idx as u8]
                }
                Some(_) => return Err(self.err("letter names require n = 3")),
                None => return Err(self.err("unknown generator")),
            },
        };
        self.skip_ws();
        if self.chars.get(self.pos) == Some(&'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
            }
            if start == self.pos {
                return Err(self.err("expected exponent"));
            }
            let e: usize = self.chars[start..self.pos]
                .iter()
                .collect::<String>()
                .parse()
                .map_err(|_| Error::ParseAt {
                    pos: start,
                    msg: "exponent too large".into(),
                })?;
            return Ok(base.repeat(e));
        }
        Ok(base)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.generators().map(|g| g.to_string()).collect();
        if self.n == 3 {
            f.write_str(&parts.concat())
        } else {
            f.write_str(&parts.join(" "))
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn letters_and_indices_agree() {
        let a = Word::parse("aekceg", 3).unwrap();
        let b = Word::parse("x11 x22 x33 x13x22x31", 3).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "aekceg");
        assert_eq!(Word::parse("(aek)^2 c", 3).unwrap().to_string(), "aekaekc");
    }

    #[test]
    fn rejects_i_and_j_with_position() {
        match Word::parse("aei", 3) {
            Err(Error::ParseAt { pos, .. }) => assert_eq!(pos, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(Word::parse("j", 3), Err(Error::ParseAt { pos: 0, .. })));
    }

    #[test]
    fn rejects_out_of_range_index() {
        match Word::parse("a x14", 3) {
            Err(Error::ParseAt { pos, .. }) => assert_eq!(pos, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(Word::parse("x40", 3).is_err());
        assert!(Word::parse("x12 x21", 2).is_ok());
        assert!(Word::parse("a", 2).is_err());
    }

    #[test]
    fn general_n_display() {
        let w = Word::parse("x12 x21", 2).unwrap();
        assert_eq!(w.to_string(), "x12 x21");
    }
}
