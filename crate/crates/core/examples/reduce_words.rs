//! Rewriting words of O(SL_q(3)) over the basis of standard monomials.

use qhaar::normalform::{Reducer, Strategy};
use qhaar::{reduce, Word};

fn main() -> qhaar::Result<()> {
    for text in ["cegafh", "kea", "bdkafhceg", "x33 x22 x11"] {
        let w = Word::parse(text, 3)?;
        let nf = reduce(&w)?;
        let terms: Vec<String> = nf.iter().map(|(e, c)| format!("({c}) {}", e.monomial_text())).collect();
        println!("{text} = {}", terms.join(" + "));
    }

    // Both rewriting strategies must land on the same normal form.
    let w = Word::parse("kheafbdgc", 3)?;
    let ltr = Reducer::new(Strategy::LeftToRight).reduce(&w)?;
    let rtl = Reducer::new(Strategy::RightToLeft).reduce(&w)?;
    assert_eq!(ltr, rtl);
    println!("{w}: {} basis terms either way", ltr.len());
    Ok(())
}
