//! Sparse linear systems over Q(q).

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};

use crate::error::{Error, Result};
use crate::qfield::{modp, QRational};

/// One equation `sum coeffs[i] x_i = rhs`.
#[derive(Clone, Debug, PartialEq)]
pub struct Row {
    pub coeffs: BTreeMap<usize, QRational>,
    pub rhs: QRational,
}

impl Row {
    pub fn is_trivial(&self) -> bool {
        self.coeffs.is_empty() && self.rhs.is_zero()
    }

    /// `sum coeffs[i] x_i - rhs` for known values `x`.
    pub fn residual(&self, x: &[QRational]) -> QRational {
        let mut acc = -&self.rhs;
        for (&i, c) in &self.coeffs {
            acc = acc + c * &x[i];
        }
        acc
    }
}

/// Incremental rank of rows evaluated at a random point modulo a prime.
///
/// Rank modulo p at a point never exceeds the rank over Q(q), so rows it
/// accepts are independent over Q(q). A row is wrongly rejected only if
/// the point is a root of some minor, which is unlikely.
pub struct ModRank {
    n: usize,
    point: u64,
    /// Reduced rows keyed by pivot column, pivot entry 1.
    pivots: BTreeMap<usize, Vec<u64>>,
}

impl ModRank {
    pub fn new(n: usize, seed: u64) -> Self {
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        ModRank {
            n,
            point: rng.gen_range(1 << 20..modp::P61 - 1),
            pivots: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn point(&self) -> u64 {
        self.point
    }

    fn eval(&self, row: &Row) -> Option<Vec<u64>> {
        let p = modp::P61;
        let mut v = vec![0u64; self.n];
        for (&i, c) in &row.coeffs {
            v[i] = c.eval_mod(self.point, p)?;
        }
        Some(v)
    }

    /// Adds the row if it raises the rank. Returns whether it did.
    pub fn try_add(&mut self, row: &Row) -> bool {
        let p = modp::P61;
        let Some(mut v) = self.eval(row) else {
            return false;
        };
        for (&c, prow) in &self.pivots {
            let f = v[c];
            if f != 0 {
                for (x, y) in v.iter_mut().zip(prow) {
                    *x = modp::sub(*x, modp::mul(f, *y, p), p);
                }
            }
        }
        let Some(piv) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = modp::inv(v[piv], p);
        for x in v.iter_mut() {
            *x = modp::mul(*x, inv, p);
        }
        for prow in self.pivots.values_mut() {
            let f = prow[piv];
            if f != 0 {
                for (x, y) in prow.iter_mut().zip(&v) {
                    *x = modp::sub(*x, modp::mul(f, *y, p), p);
                }
            }
        }
        self.pivots.insert(piv, v);
        true
    }
}

/// How the exact solver picks its pivot column within a row.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pivot {
    /// The first nonzero column of the row.
    FirstNonzero,
    /// The column whose coefficient is smallest.
    Lightest,
}

/// Solves a nonsingular square-or-overdetermined system exactly by
/// Gauss-Jordan elimination. Rows that reduce to `0 = 0` are skipped;
/// a row reducing to `0 = c` with `c != 0` is an inconsistency.
pub fn solve_exact(n: usize, rows: &[Row], pivot: Pivot) -> Result<Vec<QRational>> {
    let mut done: BTreeMap<usize, Row> = BTreeMap::new();
    for row in rows {
        let mut r = row.clone();
        // Eliminate existing pivots from the incoming row.
        let hits: Vec<usize> = r.coeffs.keys().copied().filter(|c| done.contains_key(c)).collect();
        for c in hits {
            let Some(f) = r.coeffs.remove(&c) else { continue };
            let prow = &done[&c];
            axpy(&mut r, &f, prow);
        }
        let Some(pc) = choose(&r, pivot) else {
            if !r.rhs.is_zero() {
                return Err(Error::Inconsistent(format!("relation reduces to 0 = {}", r.rhs)));
            }
            continue;
        };
        let inv = r.coeffs[&pc].inv()?;
        let mut r = Row {
            coeffs: r.coeffs.iter().map(|(&k, v)| (k, v * &inv)).collect(),
            rhs: &r.rhs * &inv,
        };
        r.coeffs.remove(&pc);
        // Back-substitute into earlier pivot rows.
        for prow in done.values_mut() {
            if let Some(f) = prow.coeffs.remove(&pc) {
                axpy(prow, &f, &r);
            }
        }
        done.insert(pc, r);
        if done.len() == n {
            break;
        }
    }
    if done.len() < n {
        return Err(Error::Underdetermined {
            rank: done.len(),
            needed: n,
        });
    }
    Ok((0..n).map(|c| done[&c].rhs.clone()).collect())
}

/// `r -= f * (x_c + prow)`, where `prow` holds the other entries of a
/// pivot row for column `c` (already removed from `r`).
fn axpy(r: &mut Row, f: &QRational, prow: &Row) {
    for (&k, v) in &prow.coeffs {
        let d = f * v;
        let e = r.coeffs.entry(k).or_insert_with(QRational::zero);
        *e = &*e - &d;
        if e.is_zero() {
            r.coeffs.remove(&k);
        }
    }
    r.rhs = &r.rhs - &(f * &prow.rhs);
}

fn choose(r: &Row, pivot: Pivot) -> Option<usize> {
    match pivot {
        Pivot::FirstNonzero => r.coeffs.keys().next().copied(),
        Pivot::Lightest => r
            .coeffs
            .iter()
            .min_by_key(|(&k, v)| (v.weight(), v.numer().degree().unwrap_or(0) + v.denom().degree().unwrap_or(0), k))
            .map(|(&k, _)| k),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(cs: &[(usize, QRational)], rhs: QRational) -> Row {
        Row {
            coeffs: cs.iter().cloned().collect(),
            rhs,
        }
    }

    #[test]
    fn solves_two_by_two_over_q_of_q() {
        let q = QRational::q();
        let one = QRational::one();
        // x + q y = 1, x - y = 0  =>  x = y = 1/(1+q)
        let rows = vec![
            row(&[(0, one.clone()), (1, q.clone())], one.clone()),
            row(&[(0, one.clone()), (1, -&one)], QRational::zero()),
        ];
        for p in [Pivot::FirstNonzero, Pivot::Lightest] {
            let x = solve_exact(2, &rows, p).unwrap();
            let expect = (&one + &q).inv().unwrap();
            assert_eq!(x, vec![expect.clone(), expect]);
        }
        let mut mr = ModRank::new(2, 7);
        assert!(mr.try_add(&rows[0]));
        assert!(!mr.try_add(&row(&[(0, q.clone()), (1, &q * &q)], q.clone())));
        assert!(mr.try_add(&rows[1]));
    }

    #[test]
    fn detects_inconsistency_and_rank_deficiency() {
        let one = QRational::one();
        let rows = vec![row(&[(0, one.clone())], one.clone()), row(&[(0, one.clone())], QRational::zero())];
        assert!(matches!(solve_exact(1, &rows[..1], Pivot::FirstNonzero), Ok(_)));
        assert!(matches!(solve_exact(2, &rows, Pivot::FirstNonzero), Err(Error::Inconsistent(_))));
        assert!(matches!(
            solve_exact(2, &rows[..1], Pivot::FirstNonzero),
            Err(Error::Underdetermined { rank: 1, needed: 2 })
        ));
    }
}
