//! The Haar state on single words and on polynomials.

use qhaar::algebra::parse_expr;
use qhaar::{Haar, Word};

fn main() -> qhaar::Result<()> {
    let haar = Haar::new();
    for text in ["aek", "ceg", "aekceg", "cegafh", "(ceg)^3", "ab"] {
        let w = Word::parse(text, 3)?;
        println!("h({text}) = {}", haar.value(&w)?);
    }
    let p = parse_expr("a e k - q a f h - q b d k + q^2 b f g + q^2 c d h - q^3 c e g", 3)?;
    println!("h(D_q) = {}", haar.value_poly(&p)?);
    Ok(())
}
