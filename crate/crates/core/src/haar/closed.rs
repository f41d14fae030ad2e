//! Closed forms: the order-1 formula, the source-matrix values, and the
//! two recursions for monomials built from bfg, cdh and ceg.

use std::collections::BTreeMap;

use crate::algebra::inversions;
use crate::error::{Error, Result};
use crate::normalform::StdExponents;
use crate::qfield::QRational;

fn qp(k: i64) -> QRational {
    QRational::q_pow(k)
}

/// `(-q)^k`.
fn nqp(k: i64) -> QRational {
    if k % 2 == 0 {
        qp(k)
    } else {
        -qp(k)
    }
}

/// `q^k - 1`.
fn qm1(k: i64) -> QRational {
    qp(k) - QRational::one()
}

fn int(c: i64) -> QRational {
    QRational::from_int(c)
}

fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `(q^-1 - q)^k`, for any integer `k`.
fn qinv_minus_q(k: i64) -> QRational {
    (qp(-1) - qp(1)).pow(k).expect("q^-1 - q is invertible")
}

fn div(a: QRational, b: QRational) -> QRational {
    a.checked_div(&b).expect("closed-form denominators are nonzero")
}

/// `h` on `x_{1,p(1)} ... x_{n,p(n)}`: `(-q)^l(p) / [n]_{q^2}!`.
pub fn haar_order1(perm: &[usize]) -> Result<QRational> {
    let n = perm.len();
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || std::mem::replace(&mut seen[p], true) {
            return Err(Error::Usage(format!("{perm:?} is not a permutation of 0..{n}")));
        }
    }
    // [n]_{q^2}! = prod_k (1 - q^{2k}) / (1 - q^2)
    let mut fact = QRational::one();
    for k in 1..=n as i64 {
        fact = fact * div(QRational::one() - qp(2 * k), QRational::one() - qp(2));
    }
    Ok(div(nqp(inversions(perm) as i64), fact))
}

/// The source-matrix values of order `m`, keyed by basis monomial:
/// `aek(ceg)^{m-1}`, `afh(ceg)^{m-1}`, `bdk(ceg)^{m-1}`,
/// `bfgcdh(ceg)^{m-2}` (for `m >= 2`), `bfg(ceg)^{m-1}`,
/// `cdh(ceg)^{m-1}` and `(ceg)^m`.
pub fn source_matrix_solution(m: u32) -> Result<BTreeMap<StdExponents, QRational>> {
    if m == 0 {
        return Err(Error::Usage("the source matrix needs order at least 1".into()));
    }
    let mi = m as i64;
    let t = m - 1;
    let e = |c: [u32; 6]| StdExponents(c);
    let common = qm1(2 * mi + 2).pow(2)? * qm1(2 * mi + 4);
    let aek = div(
        nqp(3 * mi - 2)
            * qm1(2).pow(3)?
            * qm1(4)
            * (QRational::one() + qp(4) - qp(2) - qp(2 * mi + 2)),
        qp(1) * qm1(2 * mi).pow(2)? * common.clone(),
    );
    let mixed = div(
        nqp(3 * mi - 2) * qm1(2).pow(4)? * qm1(4),
        qm1(2 * mi).pow(2)? * common.clone(),
    );
    let single = div(
        nqp(3 * mi - 1) * qm1(2).pow(3)? * qm1(4),
        qm1(2 * mi) * common.clone(),
    );
    let cegs = div(nqp(3 * mi) * qm1(2).pow(2)? * qm1(4), common);
    let mut out = BTreeMap::new();
    out.insert(e([1, 0, 0, 0, 0, t]), aek);
    out.insert(e([0, 1, 0, 0, 0, t]), mixed.clone());
    out.insert(e([0, 0, 1, 0, 0, t]), mixed.clone());
    if m >= 2 {
        out.insert(e([0, 0, 0, 1, 1, m - 2]), mixed);
    }
    out.insert(e([0, 0, 0, 1, 0, t]), single.clone());
    out.insert(e([0, 0, 0, 0, 1, t]), single);
    out.insert(e([0, 0, 0, 0, 0, m]), cegs);
    Ok(out)
}

/// `h((cdh)^i (ceg)^{m-i})` for `i = 0..=m`, indexed by `i`. The same
/// values hold for `(bfg)^i (ceg)^{m-i}`.
pub fn rec_cdh_ceg(m: u32) -> Result<Vec<QRational>> {
    let src = source_matrix_solution(m)?;
    let mi = m as i64;
    let mut h = vec![
        src[&StdExponents([0, 0, 0, 0, 0, m])].clone(),
        src[&StdExponents([0, 0, 0, 0, 1, m - 1])].clone(),
    ];
    for i in 2..=mi {
        let n = mi - i + 1;
        let lead = div(
            qp(2) * (qp(n) - qp(-n)).pow(2)?,
            (QRational::one() - qp(2)).pow(2)?,
        );
        let mut rhs = -div(qp(1), qm1(2)) * &h[(i - 1) as usize];
        for k in 1..i {
            let ck = qinv_minus_q(k - 2) * int(binom(i, k)) * qp(-2 * n)
                + (-qinv_minus_q(1)).pow(k - 2)? * qp(2 * k) * int(binom(i - 1, k)) * qp(2 * n);
            rhs = rhs - ck * &h[(i - k) as usize];
        }
        rhs = rhs - qinv_minus_q(i - 2) * qp(-2 * n) * &h[0];
        h.push(div(rhs, lead));
    }
    h.truncate(m as usize + 1);
    Ok(h)
}

/// `h((bfg)^s (cdh)^r (ceg)^{m-r-s})` for every `r + s <= m`, keyed by
/// basis monomial.
pub fn rec_cdh_bfg_ceg(m: u32) -> Result<BTreeMap<StdExponents, QRational>> {
    let base = rec_cdh_ceg(m)?;
    let mi = m as i64;
    let mut out = BTreeMap::new();
    for r in 0..=m {
        // hs[s] = h((cdh)^r (bfg)^s (ceg)^{m-r-s})
        let mut hs = vec![base[r as usize].clone()];
        if r >= 1 {
            for s in 0..(mi - r as i64) {
                let lead = div(
                    qp(2) * (qp(mi - s) - qp(s - mi)).pow(2)?,
                    (QRational::one() - qp(2)).pow(2)?,
                );
                let mut rhs = -div(qp(1), qm1(2)) * &hs[s as usize];
                for i in 0..s {
                    let ai = qinv_minus_q(i - 1) * int(binom(s + 1, i + 1)) * qp(-2 * mi + 2 * s)
                        + (-qinv_minus_q(1)).pow(i - 1)?
                            * qp(2 * i - 2)
                            * int(binom(s, i + 1))
                            * qp(2 * mi - 2 * s + 4);
                    rhs = rhs - ai * &hs[(s - i) as usize];
                }
                rhs = rhs - qinv_minus_q(s - 1) * qp(-2 * mi + 2 * s) * &hs[0];
                hs.push(div(rhs, lead));
            }
        } else {
            // r = 0: the bfg column is the cdh column by symmetry.
            hs = base.clone();
        }
        for (s, v) in hs.into_iter().enumerate() {
            let s = s as u32;
            out.insert(StdExponents([0, 0, 0, s, r, m - r - s]), v.clone());
            out.insert(StdExponents([0, 0, 0, r, s, m - r - s]), v);
        }
    }
    Ok(out)
}

/// Every value of order `m` given by the closed forms above.
pub fn closed_values(m: u32) -> Result<BTreeMap<StdExponents, QRational>> {
    if m == 0 {
        return Ok(super::order_zero().values);
    }
    let mut out = source_matrix_solution(m)?;
    for (e, v) in rec_cdh_bfg_ceg(m)? {
        if let Some(old) = out.get(&e) {
            if *old != v {
                return Err(Error::Inconsistent(format!(
                    "closed forms disagree on {}",
                    e.monomial_text()
                )));
            }
        }
        out.insert(e, v);
    }
    Ok(out)
}
