use std::collections::{BTreeMap, HashMap};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, OnceLock, RwLock};

use super::matrix::{counting_matrix, std_rep, std_word, StdExponents};
use crate::algebra::{q_minus_q_inv, relation_swap, Generator, NCPoly, Word};
use crate::error::{Error, Result};
use crate::qfield::Laurent;

/// A linear combination of basis monomials.
pub type NormalForm = BTreeMap<StdExponents, Laurent>;

/// The order in which misplaced letters are fixed. Both give the same
/// result; having two lets the result be checked against itself.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Fill positions from the left, pulling letters leftward.
    LeftToRight,
    /// Fill positions from the right, pushing letters rightward.
    RightToLeft,
}

static INVARIANT_CHECKS: AtomicU64 = AtomicU64::new(0);

/// How many reductions have had their invariants checked so far in this
/// process.
pub fn invariant_checks() -> u64 {
    INVARIANT_CHECKS.load(Ordering::Relaxed)
}

#[derive(Clone, Copy)]
struct Swap {
    exp: i32,
    err: Option<(i128, u8, u8)>,
}

fn swap_table() -> &'static [[Swap; 9]; 9] {
    static TABLE: OnceLock<[[Swap; 9]; 9]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = [[Swap { exp: 0, err: None }; 9]; 9];
        for u in 0..9u8 {
            for v in 0..9u8 {
                let r = relation_swap(Generator::from_index(3, u), Generator::from_index(3, v));
                t[u as usize][v as usize] = Swap {
                    exp: r.swap_exp as i32,
                    err: r.error.map(|(s, e1, e2)| (s as i128, e1.index(), e2.index())),
                };
            }
        }
        t
    })
}

/// Rewrites words of O(SL_q(3)) in the basis of standard monomials,
/// caching every word it has seen.
pub struct Reducer {
    strategy: Strategy,
    memo: RwLock<HashMap<Box<[u8]>, Arc<NormalForm>>>,
}

impl Reducer {
    pub fn new(strategy: Strategy) -> Self {
        Reducer {
            strategy,
            memo: RwLock::new(HashMap::new()),
        }
    }

    /// The process-wide left-to-right reducer.
    pub fn shared() -> &'static Reducer {
        static SHARED: OnceLock<Reducer> = OnceLock::new();
        SHARED.get_or_init(|| Reducer::new(Strategy::LeftToRight))
    }

    pub fn strategy(&self) -> Strategy {
        self.strategy
    }

    pub fn cache_len(&self) -> usize {
        self.memo.read().unwrap().len()
    }

    pub fn clear(&self) {
        self.memo.write().unwrap().clear();
    }

    pub fn reduce(&self, w: &Word) -> Result<Arc<NormalForm>> {
        if w.n() != 3 {
            return Err(Error::Unsupported("reduction is implemented for n = 3".into()));
        }
        if counting_matrix(w).doubly_stochastic_order().is_none() {
            return Err(Error::Usage(format!(
                "`{w}` has counting matrix {} which is not doubly stochastic",
                counting_matrix(w)
            )));
        }
        self.reduce_letters(w.indices())
    }

    /// Reduces every word of a polynomial and collects the result.
    pub fn reduce_poly(&self, p: &NCPoly) -> Result<NormalForm> {
        let mut out = NormalForm::new();
        for (w, c) in p.terms() {
            for (e, x) in self.reduce(w)?.iter() {
                add_into(&mut out, *e, &(c * x));
            }
        }
        Ok(out)
    }

    fn reduce_letters(&self, w: &[u8]) -> Result<Arc<NormalForm>> {
        if let Some(r) = self.memo.read().unwrap().get(w) {
            return Ok(r.clone());
        }
        let r = Arc::new(self.reduce_uncached(w)?);
        self.memo.write().unwrap().insert(w.into(), r.clone());
        Ok(r)
    }

    fn reduce_uncached(&self, w: &[u8]) -> Result<NormalForm> {
        let word = Word::from_indices(3, w.to_vec());
        let m = counting_matrix(&word);
        let target_exp = std_rep(&m)?;
        let target = std_word(&target_exp);
        let target = target.indices();
        let table = swap_table();
        let row_sums = m.row_sums();
        let col_sums = m.col_sums();

        let mut cur = w.to_vec();
        let mut coeff = Laurent::one();
        let mut out = NormalForm::new();
        let swap_at = |cur: &mut Vec<u8>, s: usize, coeff: &mut Laurent, out: &mut NormalForm| -> Result<()> {
            let sw = table[cur[s] as usize][cur[s + 1] as usize];
            if let Some((sign, e1, e2)) = sw.err {
                let mut ew = cur.clone();
                ew[s] = e1;
                ew[s + 1] = e2;
                let em = counting_matrix(&Word::from_indices(3, ew.clone()));
                if em.row_sums() != row_sums || em.col_sums() != col_sums || em.order_key() >= m.order_key() {
                    return Err(Error::Inconsistent(format!("correction term of `{word}` breaks sums or order")));
                }
                let sub = self.reduce_letters(&ew)?;
                let c = &*coeff * &q_minus_q_inv().scale(sign);
                for (e, x) in sub.iter() {
                    add_into(out, *e, &(&c * x));
                }
            }
            *coeff = coeff.shift(sw.exp);
            cur.swap(s, s + 1);
            Ok(())
        };
        match self.strategy {
            Strategy::LeftToRight => {
                for p in 0..cur.len() {
                    if cur[p] == target[p] {
                        continue;
                    }
                    let r = (p + 1..cur.len()).find(|&r| cur[r] == target[p]).expect("same letters");
                    for s in (p..r).rev() {
                        swap_at(&mut cur, s, &mut coeff, &mut out)?;
                    }
                }
            }
            Strategy::RightToLeft => {
                for p in (0..cur.len()).rev() {
                    if cur[p] == target[p] {
                        continue;
                    }
                    let r = (0..p).rev().find(|&r| cur[r] == target[p]).expect("same letters");
                    for s in r..p {
                        swap_at(&mut cur, s, &mut coeff, &mut out)?;
                    }
                }
            }
        }
        add_into(&mut out, target_exp, &coeff);
        check_monotone(&m, &out, &word)?;
        INVARIANT_CHECKS.fetch_add(1, Ordering::Relaxed);
        Ok(out)
    }
}

pub(crate) fn add_into(out: &mut NormalForm, e: StdExponents, c: &Laurent) {
    if c.is_zero() {
        return;
    }
    let slot = out.entry(e).or_default();
    *slot += c;
    if slot.is_zero() {
        out.remove(&e);
    }
}

/// Only monomials with no more a's or k's, and no fewer c's or g's, than
/// the input may appear.
fn check_monotone(m: &super::CountingMatrix, out: &NormalForm, w: &Word) -> Result<()> {
    for e in out.keys() {
        let em = e.counting_matrix();
        if !e.is_basis()
            || em.get(0, 0) > m.get(0, 0)
            || em.get(2, 2) > m.get(2, 2)
            || em.get(0, 2) < m.get(0, 2)
            || em.get(2, 0) < m.get(2, 0)
        {
            return Err(Error::Inconsistent(format!("reduction of `{w}` produced {}", e.monomial_text())));
        }
    }
    Ok(())
}

/// Reduces a word with the shared reducer.
pub fn reduce(w: &Word) -> Result<NormalForm> {
    Ok((*Reducer::shared().reduce(w)?).clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s, 3).unwrap()
    }

    #[test]
    fn standard_words_are_fixed() {
        let r = reduce(&w("afhceg")).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[&StdExponents([0, 1, 0, 0, 0, 1])], Laurent::one());
        let r = reduce(&Word::empty(3)).unwrap();
        assert_eq!(r[&StdExponents::default()], Laurent::one());
    }

    #[test]
    fn rearranged_segments() {
        // cegafh = q^2 afhceg + (1 - q^2) bfgcdh
        let r = reduce(&w("cegafh")).unwrap();
        assert_eq!(r.len(), 2);
        assert_eq!(r[&StdExponents([0, 1, 0, 0, 0, 1])], Laurent::q_pow(2));
        assert_eq!(r[&StdExponents([0, 0, 0, 1, 1, 0])], Laurent::from_terms(&[(0, 1), (2, -1)]));
    }

    #[test]
    fn strategies_agree_on_small_words() {
        let other = Reducer::new(Strategy::RightToLeft);
        for s in ["kea", "gecafh", "bdkafh", "kgfbdhaec", "cegaek", "afhbdkceg"] {
            assert_eq!(*other.reduce(&w(s)).unwrap(), reduce(&w(s)).unwrap(), "{s}");
        }
    }

    #[test]
    fn rejects_unbalanced_words() {
        assert!(reduce(&w("ab")).is_err());
        assert!(Reducer::shared().reduce(&Word::parse("x11 x22", 2).unwrap()).is_err());
    }
}
