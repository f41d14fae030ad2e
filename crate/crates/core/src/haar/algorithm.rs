//! The staged algorithm: each value of an order is found from one
//! relation in which it is the only unknown.
//!
//! Values with no `aek`, `afh` or `bdk` come from the closed forms. The
//! rest are ordered by the number `t` of `aek`, `afh` and `bdk` segments:
//! for each `t`, first `(afh)^t ...`, then `(bdk)^t ...` by symmetry, then
//! monomials with both `afh` and `bdk`, then monomials with `aek`, by
//! increasing `aek` count.

use std::collections::BTreeMap;

use super::closed::closed_values;
use super::relations::{derive_linear_relation, dq_insert_relation};
use super::symmetry::symmetry_orbit;
use super::{order_zero, Haar, HaarTable, Method};
use crate::algebra::{NCPoly, Word};
use crate::error::{Error, Result};
use crate::normalform::{add_into, enumerate_basis, std_word, NormalForm, Reducer, StdExponents};
use crate::qfield::{Laurent, QRational};

/// The basis table of one order, plus values of the non-basis monomials
/// `(afh)^v (bdk)^w (bfg)^s (cdh)^r (ceg)^x` with `v, w, x >= 1` met on
/// the way.
#[derive(Clone, Debug, PartialEq)]
pub struct StagedTable {
    pub table: HaarTable,
    pub non_basis: BTreeMap<StdExponents, QRational>,
}

/// `afhbdkceg` in the basis.
pub fn afh_bdk_ceg_identity() -> NCPoly {
    let w = |s: &str| Word::parse(s, 3).expect("fixed word");
    let one_minus_q2 = Laurent::from_terms(&[(0, 1), (2, -1)]);
    let q3_minus_q = Laurent::from_terms(&[(3, 1), (1, -1)]);
    let mut p = NCPoly::zero();
    p.add_term(Laurent::q_pow(1), w("aekbfgcdh"));
    p.add_term(one_minus_q2.clone(), w("aekbfgceg"));
    p.add_term(one_minus_q2.clone(), w("aekcdhceg"));
    p.add_term(Laurent::from_terms(&[(3, 1), (1, -2), (-1, 1)]), w("aekcegceg"));
    p.add_term(one_minus_q2, w("afhbfgcdh"));
    p.add_term(q3_minus_q.clone(), w("afhbfgceg"));
    p.add_term(q3_minus_q, w("afhcdhceg"));
    p.add_term(Laurent::from_terms(&[(4, -1), (2, 2), (0, -1)]), w("afhcegceg"));
    p
}

struct Stage<'a> {
    known: BTreeMap<StdExponents, QRational>,
    lower: &'a HaarTable,
    reducer: &'a Reducer,
}

impl Stage<'_> {
    fn value(&self, e: &StdExponents) -> Result<&QRational> {
        self.known.get(e).ok_or_else(|| {
            Error::Inconsistent(format!("staged algorithm: {} is still unknown", e.monomial_text()))
        })
    }

    fn eval(&self, nf: &NormalForm) -> Result<QRational> {
        let mut acc = QRational::zero();
        for (e, c) in nf {
            acc = acc + c.to_qrational() * self.value(e)?;
        }
        Ok(acc)
    }

    /// Records a value, checking it against an earlier one.
    fn insert(&mut self, e: StdExponents, v: QRational) -> Result<()> {
        if let Some(old) = self.known.get(&e) {
            if *old != v {
                return Err(Error::Inconsistent(format!(
                    "staged algorithm: two values for {}",
                    e.monomial_text()
                )));
            }
        }
        self.known.insert(e, v);
        Ok(())
    }

    /// Copies the value of a symmetric monomial if one is known.
    fn from_orbit(&mut self, e: &StdExponents) -> bool {
        if self.known.contains_key(e) {
            return true;
        }
        let found = symmetry_orbit(e).iter().find_map(|x| self.known.get(x).cloned());
        match found {
            Some(v) => {
                self.known.insert(*e, v);
                true
            }
            None => false,
        }
    }

    /// Solves `sum nf[e] h(e) = rhs` for `target`.
    fn solve_for(&mut self, target: StdExponents, nf: &NormalForm, rhs: QRational) -> Result<()> {
        let mut acc = rhs;
        let mut lead = None;
        for (e, c) in nf {
            if *e == target {
                lead = Some(c.to_qrational());
            } else {
                acc = acc - c.to_qrational() * self.value(e)?;
            }
        }
        let lead = lead.filter(|c| !c.is_zero()).ok_or_else(|| {
            Error::Inconsistent(format!(
                "staged algorithm: {} does not occur in its relation",
                target.monomial_text()
            ))
        })?;
        let v = acc.checked_div(&lead)?;
        self.insert(target, v)
    }

    /// `(1 - q^{2w}) h((afh)^w Z ceg) = sum_i q^{2i} (1 - q^2) h((afh)^i bfgcdh (afh)^{w-1-i} Z)`
    /// with `Z = (bfg)^s (cdh)^r (ceg)^{x-1}`.
    fn afh_with_ceg(&mut self, target: StdExponents) -> Result<()> {
        let [_, w, _, s, r, x] = target.0;
        let z = std_word(&StdExponents([0, 0, 0, s, r, x - 1]));
        let afh = |k: u32| std_word(&StdExponents([0, k, 0, 0, 0, 0]));
        let bfgcdh = std_word(&StdExponents([0, 0, 0, 1, 1, 0]));
        let mut nf = NormalForm::new();
        for i in 0..w {
            let word = afh(i).concat(&bfgcdh).concat(&afh(w - 1 - i)).concat(&z);
            let c = Laurent::from_terms(&[(2 * i as i32, 1), (2 * i as i32 + 2, -1)]);
            for (e, d) in self.reducer.reduce(&word)?.iter() {
                add_into(&mut nf, *e, &(&c * d));
            }
        }
        let sum = self.eval(&nf)?;
        let den = QRational::one() - QRational::q_pow(2 * w as i64);
        self.insert(target, sum.checked_div(&den)?)
    }

    /// Solves each target from its relation, in whatever order leaves one
    /// unknown at a time.
    fn solve_batch(&mut self, tasks: Vec<(StdExponents, NormalForm)>) -> Result<()> {
        let mut pending = tasks;
        while !pending.is_empty() {
            let before = pending.len();
            let mut rest = Vec::new();
            for (t, nf) in pending {
                if self.from_orbit(&t) {
                    continue;
                }
                let ready = nf.keys().all(|e| *e == t || self.known.contains_key(e));
                if ready {
                    self.solve_for(t, &nf, QRational::zero())?;
                } else {
                    rest.push((t, nf));
                }
            }
            if rest.len() == before {
                let (t, nf) = &rest[0];
                let missing: Vec<String> = nf
                    .keys()
                    .filter(|e| *e != t && !self.known.contains_key(e))
                    .map(|e| e.monomial_text())
                    .collect();
                return Err(Error::Inconsistent(format!(
                    "staged algorithm: the relation for {} has other unknowns: {}",
                    t.monomial_text(),
                    missing.join(", ")
                )));
            }
            pending = rest;
        }
        Ok(())
    }

    /// The value of a non-basis `(afh)^v (bdk)^w (bfg)^s (cdh)^r (ceg)^x`
    /// after rewriting one `afh bdk ceg` into the basis.
    fn afh_bdk_ceg(&self, e: &StdExponents) -> Result<QRational> {
        let [_, v, w, s, r, x] = e.0;
        let head = std_word(&StdExponents([0, v - 1, w - 1, 0, 0, 0]));
        let tail = std_word(&StdExponents([0, 0, 0, s, r, x - 1]));
        let triple = Word::parse("afhbdkceg", 3)?;
        let moved = head.concat(&triple).concat(&tail);
        // The standard word differs from `moved` by terms with fewer
        // high-complexity segments.
        let mut nf = (*self.reducer.reduce(&std_word(e))?).clone();
        for (f, c) in self.reducer.reduce(&moved)?.iter() {
            add_into(&mut nf, *f, &-c);
        }
        let rewritten = NCPoly::from_word(head)
            .multiply(&afh_bdk_ceg_identity())
            .multiply(&NCPoly::from_word(tail));
        for (f, c) in self.reducer.reduce_poly(&rewritten)? {
            add_into(&mut nf, f, &c);
        }
        self.eval(&nf)
    }
}

/// Segments among `aek`, `afh`, `bdk`.
fn high(e: &StdExponents) -> u32 {
    e.0[0] + e.0[1] + e.0[2]
}

/// Order-`m` values by the staged algorithm. Lower orders are computed by
/// the same method through `haar`.
pub fn full_algorithm(haar: &Haar, m: u32) -> Result<StagedTable> {
    if m == 0 {
        return Ok(StagedTable {
            table: order_zero(),
            non_basis: BTreeMap::new(),
        });
    }
    let lower = haar.table_with(m - 1, Method::Algorithm)?;
    let mut st = Stage {
        known: closed_values(m)?,
        lower: &lower,
        reducer: Reducer::shared(),
    };
    let mut non_basis = BTreeMap::new();
    let basis = enumerate_basis(m);
    let cmp_bdk = StdExponents([m - 1, 0, 1, 0, 0, 0]);
    let cmp_afh = StdExponents([m - 1, 1, 0, 0, 0, 0]);

    for t in 1..=m {
        let level: Vec<StdExponents> = basis.iter().filter(|e| high(e) == t).copied().collect();
        // (afh)^t with ceg, then without.
        for e in level.iter().filter(|e| e.0[1] == t && e.0[5] >= 1) {
            st.afh_with_ceg(*e)?;
        }
        let mut tasks = Vec::new();
        for e in level.iter().filter(|e| e.0[1] == t && e.0[5] == 0) {
            let [_, w, _, _, r, _] = e.0;
            let eq = StdExponents([0, w - 1, 0, m - r - w, r + 1, 0]);
            tasks.push((*e, derive_linear_relation(&eq, &cmp_bdk)?.homogeneous_coefficients()));
        }
        st.solve_batch(tasks)?;
        // (bdk)^t by symmetry.
        for e in level.iter().filter(|e| e.0[2] == t) {
            if !st.from_orbit(e) {
                return Err(Error::Inconsistent(format!("no symmetric value for {}", e.monomial_text())));
            }
        }
        // Both afh and bdk: non-basis ones with ceg, then basis ones
        // without ceg.
        for v in 1..t {
            let w = t - v;
            for s in 0..=m - t {
                for r in 0..=m - t - s {
                    let x = m - t - s - r;
                    if x >= 1 {
                        let e = StdExponents([0, v, w, s, r, x]);
                        non_basis.insert(e, st.afh_bdk_ceg(&e)?);
                    }
                }
            }
        }
        let mut tasks = Vec::new();
        for e in level.iter().filter(|e| e.0[0] == 0 && e.0[1] >= 1 && e.0[2] >= 1) {
            let [_, v, w, s, r, _] = e.0;
            let eq = StdExponents([0, v, w - 1, s + 1, r, 0]);
            tasks.push((*e, derive_linear_relation(&eq, &cmp_afh)?.homogeneous_coefficients()));
        }
        st.solve_batch(tasks)?;
        // With aek, by the aek count.
        for u in 1..=t {
            for e in level.iter().filter(|e| e.0[0] == u) {
                if st.from_orbit(e) {
                    continue;
                }
                let mut below = e.0;
                below[0] -= 1;
                let below = StdExponents(below);
                let nf = dq_insert_relation(&std_word(&below), 3 * (u as usize - 1))?;
                let rhs = st.lower.get(&below).cloned().ok_or_else(|| {
                    Error::Inconsistent(format!("no lower value for {}", below.monomial_text()))
                })?;
                st.solve_for(*e, &nf, rhs)?;
            }
        }
    }
    let mut values = BTreeMap::new();
    for e in basis {
        values.insert(e, st.value(&e)?.clone());
    }
    Ok(StagedTable {
        table: HaarTable { order: m, values },
        non_basis,
    })
}
