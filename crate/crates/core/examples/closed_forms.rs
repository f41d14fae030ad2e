//! Closed forms for the low-complexity families and the symmetries that
//! spread values across each table.

use qhaar::haar::closed::{closed_values, haar_order1, source_matrix_solution};
use qhaar::haar::symmetry::{eq_re_pairs, symmetry_orbit};
use qhaar::normalform::enumerate_basis;
use qhaar::{Haar, StdExponents};

fn main() -> qhaar::Result<()> {
    println!("h(ceg) from the permutation formula: {}", haar_order1(&[2, 1, 0])?);

    let haar = Haar::new();
    for m in 1..=4 {
        let closed = closed_values(m)?;
        let table = haar.table(m)?;
        let agree = closed.iter().all(|(e, v)| table.get(e) == Some(v));
        println!("order {m}: {} of {} values in closed form, agree: {agree}", closed.len(), table.len());
    }
    for (e, v) in source_matrix_solution(2)? {
        println!("  h({}) = {v}", e.monomial_text());
    }

    let e = StdExponents::new([0, 0, 0, 1, 0, 2]);
    let orbit: Vec<String> = symmetry_orbit(&e).iter().map(|x| x.monomial_text()).collect();
    println!("orbit of {}: {}", e.monomial_text(), orbit.join(", "));
    for (a, b) in eq_re_pairs(3) {
        println!("h({}) = h({})", a.monomial_text(), b.monomial_text());
    }
    let classes: std::collections::BTreeSet<_> =
        enumerate_basis(3).iter().map(|e| symmetry_orbit(e).into_iter().next()).collect();
    println!("order 3: {} symmetry classes among 55 monomials", classes.len());
    Ok(())
}
