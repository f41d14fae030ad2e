//! Counting matrices and the basis of each order.

use qhaar::normalform::{counting_matrix, doubly_stochastic_matrices, enumerate_basis, std_rep};
use qhaar::Word;

fn main() -> qhaar::Result<()> {
    let w = Word::parse("afhbdkceg", 3)?;
    let m = counting_matrix(&w);
    println!("counting matrix of {w}:\n{m}");
    println!("standard representative: {}", std_rep(&m)?.monomial_text());

    for order in 1..=6 {
        println!("order {order}: {} basis monomials", enumerate_basis(order).len());
    }
    for (x, e) in doubly_stochastic_matrices(1).iter().zip(enumerate_basis(1)) {
        println!("{:?} -> {}", x.cells(), e.monomial_text());
    }
    Ok(())
}
