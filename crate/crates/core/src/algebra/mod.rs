//! Words, polynomials and the structure maps of O(SL_q(n)).
//!
//! The generators `x_ij` satisfy the FRT relations
//!
//! * `x_ik x_il = q x_il x_ik` for `k < l` (same row),
//! * `x_ik x_jk = q x_jk x_ik` for `i < j` (same column),
//! * `x_il x_jk = x_jk x_il` for `i < j`, `k < l`,
//! * `x_ik x_jl - x_jl x_ik = (q - q^-1) x_il x_jk` for `i < j`, `k < l`,
//!
//! together with `D_q = 1`. Nothing in this module imposes `D_q = 1`;
//! the relations are used only to reorder letters.

mod expr;
mod poly;
mod word;

pub use expr::parse_expr;
pub use poly::{Coeff, NCPoly, NcPoly, TensorPoly};
pub use word::{Generator, Word, LETTERS};

use crate::error::{Error, Result};
use crate::qfield::Laurent;

/// How to commute two adjacent generators:
/// `g1 g2 = q^swap_exp g2 g1 + err_sign (q - q^-1) e1 e2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SwapRule {
    pub swap_exp: i8,
    /// `(sign, e1, e2)` for the correction term, if any.
    pub error: Option<(i8, Generator, Generator)>,
}

/// The commutation rule for the ordered pair `g1 g2`.
pub fn relation_swap(g1: Generator, g2: Generator) -> SwapRule {
    assert_eq!(g1.n, g2.n, "generators of different algebras");
    let n = g1.n;
    let (i, k, j, l) = (g1.i, g1.j, g2.i, g2.j);
    let mk = |r: u8, c: u8| Generator { n, i: r, j: c };
    let (swap_exp, error) = if i == j && k == l {
        (0, None)
    } else if i == j {
        (if k < l { 1 } else { -1 }, None)
    } else if k == l {
        (if i < j { 1 } else { -1 }, None)
    } else if (i < j) != (k < l) {
        (0, None)
    } else if i < j {
        (0, Some((1, mk(i, l), mk(j, k))))
    } else {
        (0, Some((-1, mk(j, k), mk(i, l))))
    };
    SwapRule { swap_exp, error }
}

/// `q - q^-1`.
pub fn q_minus_q_inv() -> Laurent {
    Laurent::from_terms(&[(1, 1), (-1, -1)])
}

/// `g1 g2` rewritten as a polynomial in which `g2` comes first.
pub fn swap_poly(g1: Generator, g2: Generator) -> NCPoly {
    let r = relation_swap(g1, g2);
    let n = g1.n;
    let mut p = NCPoly::term(Laurent::q_pow(r.swap_exp as i32), Word::from_generators(n, &[g2, g1]));
    if let Some((s, e1, e2)) = r.error {
        p.add_term(q_minus_q_inv().scale(s as i128), Word::from_generators(n, &[e1, e2]));
    }
    p
}

/// Product in the free algebra (no rewriting).
pub fn multiply<C: Coeff>(p: &NcPoly<C>, r: &NcPoly<C>) -> NcPoly<C> {
    p.multiply(r)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut v = p.clone();
            v.insert(pos, n - 1);
            out.push(v);
        }
    }
    out.sort();
    out
}

pub(crate) fn inversions(p: &[usize]) -> usize {
    let mut c = 0;
    for a in 0..p.len() {
        for b in a + 1..p.len() {
            if p[a] > p[b] {
                c += 1;
            }
        }
    }
    c
}

/// The quantum determinant `sum (-q)^l(s) x_1s(1) ... x_ns(n)`.
pub fn quantum_determinant(n: u8) -> NCPoly {
    let mut p = NCPoly::zero();
    for perm in permutations(n as usize) {
        let inv = inversions(&perm) as i32;
        let sign = if inv % 2 == 0 { 1 } else { -1 };
        let w = Word::from_indices(n, perm.iter().enumerate().map(|(r, &c)| (r * n as usize + c) as u8).collect());
        p.add_term(Laurent::monomial(sign, inv), w);
    }
    p
}

/// The 2x2 quantum minor of `O(SL_q(3))` on the rows other than `i`
/// and the columns other than `j`: `x_r1c1 x_r2c2 - q x_r1c2 x_r2c1`.
pub fn quantum_minor(i: u8, j: u8) -> Result<NCPoly> {
    if !(1..=3).contains(&i) || !(1..=3).contains(&j) {
        return Err(Error::Usage(format!("minor index ({i},{j}) out of range")));
    }
    let rows: Vec<u8> = (1..=3).filter(|&r| r != i).collect();
    let cols: Vec<u8> = (1..=3).filter(|&c| c != j).collect();
    let g = |r, c| Generator { n: 3, i: r, j: c };
    let mut p = NCPoly::from_word(Word::from_generators(3, &[g(rows[0], cols[0]), g(rows[1], cols[1])]));
    p.add_term(
        Laurent::monomial(-1, 1),
        Word::from_generators(3, &[g(rows[0], cols[1]), g(rows[1], cols[0])]),
    );
    Ok(p)
}

/// Walks the terms `z ⊗ y` of the coproduct of `w`, where
/// `Δ(x_ij) = sum_k x_ik ⊗ x_kj`. `keep` sees each partial left word and
/// may return `false` to cut the branch.
pub fn comultiply_visit(
    w: &Word,
    keep: &mut dyn FnMut(&[u8]) -> bool,
    visit: &mut dyn FnMut(&[u8], &[u8]),
) {
    let n = w.n();
    let letters = w.indices();
    let mut z = Vec::with_capacity(letters.len());
    let mut y = Vec::with_capacity(letters.len());
    fn rec(
        n: u8,
        letters: &[u8],
        z: &mut Vec<u8>,
        y: &mut Vec<u8>,
        keep: &mut dyn FnMut(&[u8]) -> bool,
        visit: &mut dyn FnMut(&[u8], &[u8]),
    ) {
        let pos = z.len();
        if pos == letters.len() {
            visit(z, y);
            return;
        }
        let (i, j) = (letters[pos] / n, letters[pos] % n);
        for k in 0..n {
            z.push(i * n + k);
            if keep(z) {
                y.push(k * n + j);
                rec(n, letters, z, y, keep, visit);
                y.pop();
            }
            z.pop();
        }
    }
    rec(n, letters, &mut z, &mut y, keep, visit);
}

/// The full coproduct of a word.
pub fn comultiply(w: &Word) -> TensorPoly {
    let n = w.n();
    let mut t = TensorPoly::default();
    comultiply_visit(w, &mut |_| true, &mut |z, y| {
        t.add_term(
            Laurent::one(),
            Word::from_indices(n, z.to_vec()),
            Word::from_indices(n, y.to_vec()),
        );
    });
    t
}

/// The modular automorphism on a word: `η(x_ij) = q^(2i+2j-2n-2) x_ij`,
/// extended multiplicatively.
pub fn eta(w: &Word) -> (Laurent, Word) {
    let n = w.n() as i32;
    let e: i32 = w.generators().map(|g| 2 * g.i as i32 + 2 * g.j as i32 - 2 * n - 2).sum();
    (Laurent::q_pow(e), w.clone())
}

/// Transposition `x_ij -> x_ji`, a homomorphism.
pub fn gamma(w: &Word) -> Word {
    let n = w.n();
    Word::from_generators(n, &w.generators().map(|g| Generator { n, i: g.j, j: g.i }).collect::<Vec<_>>())
}

/// `x_ij -> x_(n+1-i)(n+1-j)`, an anti-homomorphism, so the word is
/// also reversed.
pub fn omega(w: &Word) -> Word {
    let n = w.n();
    let gens: Vec<Generator> = w
        .generators()
        .map(|g| Generator {
            n,
            i: n + 1 - g.i,
            j: n + 1 - g.j,
        })
        .collect::<Vec<_>>()
        .into_iter()
        .rev()
        .collect();
    Word::from_generators(n, &gens)
}

/// Rotates the first letter to the end, rescaling by η:
/// `h(x y) = h(y η(x))`.
pub fn modular_rotate(w: &Word) -> (Laurent, Word) {
    if w.is_empty() {
        return (Laurent::one(), w.clone());
    }
    let idx = w.indices();
    let first = Word::from_indices(w.n(), vec![idx[0]]);
    let (c, _) = eta(&first);
    let mut rest = idx[1..].to_vec();
    rest.push(idx[0]);
    (c, Word::from_indices(w.n(), rest))
}
