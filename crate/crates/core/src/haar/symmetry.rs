//! Symmetries among Haar values of standard monomials.

use std::collections::BTreeSet;

use crate::normalform::StdExponents;

fn swap(e: &StdExponents, i: usize, j: usize) -> StdExponents {
    let mut c = e.0;
    c.swap(i, j);
    StdExponents(c)
}

/// Standard monomials whose Haar value equals that of `e`:
///
/// - with no `aek`, `afh <-> bdk` and `bfg <-> cdh` independently;
/// - `bfg <-> cdh` always;
/// - `afh <-> bdk` when there are no `bfg`, `cdh` or `ceg`.
pub fn symmetry_orbit(e: &StdExponents) -> BTreeSet<StdExponents> {
    let mut seen = BTreeSet::from([*e]);
    let mut todo = vec![*e];
    while let Some(x) = todo.pop() {
        let c = x.0;
        let mut next = vec![swap(&x, 3, 4)];
        if c[0] == 0 || (c[3] == 0 && c[4] == 0 && c[5] == 0) {
            next.push(swap(&x, 1, 2));
        }
        for y in next {
            if seen.insert(y) {
                todo.push(y);
            }
        }
    }
    seen
}

/// Pairs `afh (bfg)^i (cdh)^j (ceg)^{k+1}` and
/// `(bfg)^{i+1} (cdh)^{j+1} (ceg)^k` of order `m`, which share a value.
pub fn eq_re_pairs(m: u32) -> Vec<(StdExponents, StdExponents)> {
    let mut out = Vec::new();
    if m < 2 {
        return out;
    }
    for i in 0..=m - 2 {
        for j in 0..=m - 2 - i {
            let k = m - 2 - i - j;
            out.push((StdExponents([0, 1, 0, i, j, k + 1]), StdExponents([0, 0, 0, i + 1, j + 1, k])));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orbit_examples() {
        let has = |a: [u32; 6], b: [u32; 6]| symmetry_orbit(&StdExponents(a)).contains(&StdExponents(b));
        assert!(has([0, 1, 2, 0, 0, 3], [0, 2, 1, 0, 0, 3]));
        assert!(has([1, 1, 1, 2, 1, 0], [1, 1, 1, 1, 2, 0]));
        assert!(has([2, 3, 1, 0, 0, 0], [2, 1, 3, 0, 0, 0]));
        assert!(!has([1, 2, 0, 1, 0, 0], [1, 0, 2, 1, 0, 0]));
        assert_eq!(symmetry_orbit(&StdExponents([0, 1, 0, 1, 0, 1])).len(), 4);
    }

    #[test]
    fn orbits_stay_in_the_basis() {
        for m in 1..=4 {
            for e in crate::normalform::enumerate_basis(m) {
                assert!(symmetry_orbit(&e).iter().all(|x| x.is_basis()));
            }
        }
        assert_eq!(eq_re_pairs(3).len(), 3);
    }
}
