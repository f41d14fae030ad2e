use std::fmt;

use crate::algebra::Word;
use crate::error::{Error, Result};

/// `c[i][j]` counts the occurrences of `x_ij` in a word.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CountingMatrix {
    n: u8,
    cells: Vec<u32>,
}

impl CountingMatrix {
    pub fn zero(n: u8) -> Self {
        CountingMatrix {
            n,
            cells: vec![0; n as usize * n as usize],
        }
    }

    pub fn from_rows(rows: &[&[u32]]) -> Self {
        let n = rows.len() as u8;
        assert!(rows.iter().all(|r| r.len() == n as usize), "matrix must be square");
        CountingMatrix {
            n,
            cells: rows.concat(),
        }
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.cells[i * self.n as usize + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.cells[i * self.n as usize + j] = v;
    }

    pub fn cells(&self) -> &[u32] {
        &self.cells
    }

    pub fn row_sums(&self) -> Vec<u32> {
        self.cells.chunks(self.n as usize).map(|r| r.iter().sum()).collect()
    }

    pub fn col_sums(&self) -> Vec<u32> {
        let n = self.n as usize;
        (0..n).map(|j| (0..n).map(|i| self.get(i, j)).sum()).collect()
    }

    /// The common row and column sum, if every row and column agree.
    pub fn doubly_stochastic_order(&self) -> Option<u32> {
        let rs = self.row_sums();
        let cs = self.col_sums();
        let m = *rs.first()?;
        (rs.iter().chain(cs.iter()).all(|&s| s == m)).then_some(m)
    }

    /// Row-major reading; matrices compare lexicographically by this key.
    /// Every correction term of the commutation relations has a strictly
    /// smaller key than the word it came from.
    pub fn order_key(&self) -> &[u32] {
        &self.cells
    }
}

impl fmt::Display for CountingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .cells
            .chunks(self.n as usize)
            .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "[{}]", rows.join("; "))
    }
}

/// The counting matrix of a word.
pub fn counting_matrix(w: &Word) -> CountingMatrix {
    let mut m = CountingMatrix::zero(w.n());
    for &l in w.indices() {
        m.cells[l as usize] += 1;
    }
    m
}

/// The order `m` if the matrix is doubly stochastic with sum `m`.
pub fn doubly_stochastic_order(m: &CountingMatrix) -> Option<u32> {
    m.doubly_stochastic_order()
}

/// The lexicographic key used to order counting matrices.
pub fn matrix_order_key(m: &CountingMatrix) -> Vec<u32> {
    m.order_key().to_vec()
}

/// Exponents `(c1, ..., c6)` of the standard monomial
/// `(aek)^c1 (afh)^c2 (bdk)^c3 (bfg)^c4 (cdh)^c5 (ceg)^c6`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct StdExponents(pub [u32; 6]);

/// The six segments of a standard monomial, as row-major indices.
pub const SEGMENTS: [[u8; 3]; 6] = [
    [0, 4, 8], // aek
    [0, 5, 7], // afh
    [1, 3, 8], // bdk
    [1, 5, 6], // bfg
    [2, 3, 7], // cdh
    [2, 4, 6], // ceg
];

pub const SEGMENT_NAMES: [&str; 6] = ["aek", "afh", "bdk", "bfg", "cdh", "ceg"];

impl StdExponents {
    pub fn new(c: [u32; 6]) -> Self {
        StdExponents(c)
    }

    pub fn order(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Standard monomials with `c2 * c3 * c6 = 0` form the basis.
    pub fn is_basis(&self) -> bool {
        self.0[1] == 0 || self.0[2] == 0 || self.0[5] == 0
    }

    /// Parses the `c1.c2.c3.c4.c5.c6` key.
    pub fn parse_key(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split('.').collect();
        if parts.len() != 6 {
            return Err(Error::Parse(format!("exponent key `{s}` needs six fields")));
        }
        let mut c = [0u32; 6];
        for (k, p) in parts.iter().enumerate() {
            c[k] = p
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent `{p}` in `{s}`")))?;
        }
        Ok(StdExponents(c))
    }

    pub fn key(&self) -> String {
        self.0.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(".")
    }

    /// Letter form such as `(aek)^2bfg`.
    pub fn monomial_text(&self) -> String {
        let mut s = String::new();
        for (k, &c) in self.0.iter().enumerate() {
            match c {
                0 => {}
                1 => s.push_str(SEGMENT_NAMES[k]),
                _ => s.push_str(&format!("({})^{c}", SEGMENT_NAMES[k])),
            }
        }
        if s.is_empty() {
            s.push('1');
        }
        s
    }

    pub fn counting_matrix(&self) -> CountingMatrix {
        let mut m = CountingMatrix::zero(3);
        for (k, &c) in self.0.iter().enumerate() {
            for &l in &SEGMENTS[k] {
                m.cells[l as usize] += c;
            }
        }
        m
    }

    pub fn c1(&self) -> u32 {
        self.0[0]
    }
}

impl fmt::Display for StdExponents {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.key())
    }
}

/// The word `(aek)^c1 (afh)^c2 (bdk)^c3 (bfg)^c4 (cdh)^c5 (ceg)^c6`.
pub fn std_word(e: &StdExponents) -> Word {
    let mut letters = Vec::with_capacity(3 * e.order() as usize);
    for (k, &c) in e.0.iter().enumerate() {
        for _ in 0..c {
            letters.extend_from_slice(&SEGMENTS[k]);
        }
    }
    Word::from_indices(3, letters)
}

/// The basis monomial sharing the counting matrix `m`.
///
/// With `a` the least entry of `m`, `m - aF` has a zero entry; that zero
/// leaves four permutation matrices whose weights are read off entries
/// they alone cover. The `aF` part is then spread over aek, bfg and cdh.
pub fn std_rep(m: &CountingMatrix) -> Result<StdExponents> {
    if m.n() != 3 {
        return Err(Error::Unsupported("standard monomials exist for n = 3 only".into()));
    }
    if m.doubly_stochastic_order().is_none() {
        return Err(Error::Usage(format!("counting matrix {m} is not doubly stochastic")));
    }
    let a = *m.cells().iter().min().unwrap();
    let mut nmat = m.clone();
    for v in nmat.cells.iter_mut() {
        *v -= a;
    }
    let zero = nmat.cells.iter().position(|&v| v == 0).unwrap();
    let (i0, j0) = (zero / 3, zero % 3);
    // Permutation k sends row r to column SEGMENTS[k][r] % 3.
    let col = |k: usize, r: usize| (SEGMENTS[k][r] % 3) as usize;
    let live: Vec<usize> = (0..6).filter(|&k| col(k, i0) != j0).collect();
    let mut c = [0u32; 6];
    for &k in &live {
        let (r, cc) = (0..3)
            .map(|r| (r, col(k, r)))
            .find(|&(r, cc)| live.iter().filter(|&&k2| col(k2, r) == cc).count() == 1)
            .expect("a cell covered by one permutation");
        c[k] = nmat.get(r, cc);
    }
    let e = StdExponents(c);
    if e.counting_matrix() != nmat {
        return Err(Error::Inconsistent(format!("no decomposition of {m}")));
    }
    c[0] += a;
    c[3] += a;
    c[4] += a;
    let e = StdExponents(c);
    debug_assert!(e.is_basis());
    Ok(e)
}

/// All 3x3 matrices of non-negative integers with row and column sums
/// `m`, in increasing order of [`matrix_order_key`].
pub fn doubly_stochastic_matrices(m: u32) -> Vec<CountingMatrix> {
    let mut out = Vec::new();
    for a11 in 0..=m {
        for a12 in 0..=m - a11 {
            let a13 = m - a11 - a12;
            for a21 in 0..=m - a11 {
                for a22 in 0..=(m - a21).min(m - a12) {
                    let a23 = m - a21 - a22;
                    if a13 + a23 > m {
                        continue;
                    }
                    let (a31, a32, a33) = (m - a11 - a21, m - a12 - a22, m - a13 - a23);
                    out.push(CountingMatrix::from_rows(&[&[a11, a12, a13], &[a21, a22, a23], &[a31, a32, a33]]));
                }
            }
        }
    }
    out.sort_by(|x, y| x.order_key().cmp(y.order_key()));
    out
}

/// The basis of the order-`m` piece, ordered like the counting matrices.
pub fn enumerate_basis(m: u32) -> Vec<StdExponents> {
    doubly_stochastic_matrices(m)
        .iter()
        .map(|x| std_rep(x).expect("doubly stochastic"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_ones_matrix() {
        let f = CountingMatrix::from_rows(&[&[1, 1, 1], &[1, 1, 1], &[1, 1, 1]]);
        assert_eq!(std_rep(&f).unwrap(), StdExponents([1, 0, 0, 1, 1, 0]));
    }

    #[test]
    fn representative_of_afh_bdk_ceg_is_basis() {
        let w = Word::parse("afhbdkceg", 3).unwrap();
        let e = std_rep(&counting_matrix(&w)).unwrap();
        assert!(e.is_basis());
        assert_eq!(e.counting_matrix(), counting_matrix(&w));
    }

    #[test]
    fn basis_sizes() {
        let sizes: Vec<usize> = (1..=6).map(|m| enumerate_basis(m).len()).collect();
        assert_eq!(sizes, vec![6, 21, 55, 120, 231, 406]);
        assert_eq!(enumerate_basis(0), vec![StdExponents::default()]);
    }

    #[test]
    fn keys_roundtrip() {
        let e = StdExponents([1, 0, 2, 0, 0, 3]);
        assert_eq!(e.key(), "1.0.2.0.0.3");
        assert_eq!(StdExponents::parse_key("1.0.2.0.0.3").unwrap(), e);
        assert!(StdExponents::parse_key("1.0.2").is_err());
        assert_eq!(e.monomial_text(), "aek(bdk)^2(ceg)^3");
        assert_eq!(std_word(&StdExponents([0, 0, 0, 1, 0, 1])).to_string(), "bfgceg");
    }

    #[test]
    fn non_stochastic_is_rejected() {
        let w = Word::parse("ab", 3).unwrap();
        assert!(std_rep(&counting_matrix(&w)).is_err());
        assert_eq!(doubly_stochastic_order(&counting_matrix(&w)), None);
    }
}
