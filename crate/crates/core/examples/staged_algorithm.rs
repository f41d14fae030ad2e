//! The staged algorithm, which fills a table from closed forms, symmetry
//! and one unknown at a time, including values of non-basis words.

use qhaar::haar::algorithm::{afh_bdk_ceg_identity, full_algorithm};
use qhaar::Haar;

fn main() -> qhaar::Result<()> {
    println!("afhbdkceg = {}", afh_bdk_ceg_identity());
    let haar = Haar::new();
    let staged = full_algorithm(&haar, 3)?;
    println!("order 3: {} basis values", staged.table.len());
    for (e, v) in &staged.non_basis {
        println!("  non-basis h({}) = {v}", e.monomial_text());
    }
    Ok(())
}
