//! Haar values of one order from the full system of coproduct relations.

use std::collections::HashMap;

use rayon::prelude::*;

use super::linsolve::{solve_exact, ModRank, Pivot, Row};
use super::relations::{derive_linear_relation, dq_lift_relation, LinearRelation};
use super::{Haar, HaarTable, Method};
use crate::error::{Error, Result};
use crate::normalform::{enumerate_basis, StdExponents};
use crate::qfield::QRational;

/// Statistics of one solve, for reporting.
#[derive(Clone, Debug, Default)]
pub struct SolveStats {
    pub lifted: usize,
    pub pairs_derived: usize,
    pub rows_used: usize,
    pub rows_checked: usize,
}

/// Comparing bases with many a's and k's give short relations; they are
/// tried first.
pub(crate) fn comparing_order(basis: &[StdExponents]) -> Vec<StdExponents> {
    let mut v = basis.to_vec();
    v.sort_by_key(|e| {
        let m = e.counting_matrix();
        (std::cmp::Reverse(m.get(0, 0) + m.get(2, 2)), std::cmp::Reverse(m.order_key().to_vec()))
    });
    v
}

pub(crate) fn relation_row(
    rel: &LinearRelation,
    idx: &HashMap<StdExponents, usize>,
    lower: Option<&HaarTable>,
) -> Result<Row> {
    let coeffs = rel
        .homogeneous_coefficients()
        .iter()
        .map(|(e, c)| (idx[e], c.to_qrational()))
        .collect();
    let rhs = if rel.is_homogeneous() {
        QRational::zero()
    } else {
        let lower = lower.expect("lower table");
        let h = lower
            .get(&rel.source)
            .ok_or_else(|| Error::Inconsistent(format!("no lower value for {}", rel.source)))?;
        &rel.rhs.to_qrational() * h
    };
    Ok(Row { coeffs, rhs })
}

/// Solves order `m` from lifted relations and coproduct relations.
///
/// Relations are generated lazily, comparing basis by comparing basis,
/// and kept only when they raise the rank (checked modulo a prime). The
/// kept system is solved exactly and every discarded relation is then
/// checked against the solution.
pub fn solve_order(haar: &Haar, m: u32) -> Result<(HaarTable, SolveStats)> {
    let basis = enumerate_basis(m);
    if m == 0 {
        return Ok((super::order_zero(), SolveStats::default()));
    }
    let k = basis.len();
    let idx: HashMap<StdExponents, usize> = basis.iter().enumerate().map(|(i, e)| (*e, i)).collect();
    let lower = haar.table_with(m - 1, Method::Solver)?;
    let mut stats = SolveStats::default();
    let mut rank = ModRank::new(k, 0x5eed_0000 + m as u64);
    let mut used = Vec::new();
    let mut spare = Vec::new();

    let lifts: Vec<LinearRelation> = enumerate_basis(m - 1)
        .par_iter()
        .map(dq_lift_relation)
        .collect::<Result<_>>()?;
    for rel in &lifts {
        stats.lifted += 1;
        let row = relation_row(rel, &idx, Some(&lower))?;
        if rank.try_add(&row) {
            used.push(row);
        } else {
            spare.push(row);
        }
    }
    for j in comparing_order(&basis) {
        if rank.rank() == k {
            break;
        }
        let rels: Vec<LinearRelation> = basis
            .par_iter()
            .map(|l| derive_linear_relation(l, &j))
            .collect::<Result<_>>()?;
        for rel in &rels {
            stats.pairs_derived += 1;
            let row = relation_row(rel, &idx, None)?;
            if row.is_trivial() {
                continue;
            }
            if rank.rank() < k && rank.try_add(&row) {
                used.push(row);
            } else {
                spare.push(row);
            }
        }
    }
    if rank.rank() < k {
        return Err(Error::Underdetermined {
            rank: rank.rank(),
            needed: k,
        });
    }
    stats.rows_used = used.len();
    let x = solve_exact(k, &used, Pivot::Lightest)?;
    for row in &spare {
        let r = row.residual(&x);
        if !r.is_zero() {
            return Err(Error::Inconsistent(format!("order {m}: a discarded relation has residual {r}")));
        }
        stats.rows_checked += 1;
    }
    let table = HaarTable {
        order: m,
        values: basis.iter().cloned().zip(x).collect(),
    };
    Ok((table, stats))
}
