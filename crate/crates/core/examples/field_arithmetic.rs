//! Exact arithmetic in Q(q): canonical forms, evaluation and JSON.

use num_rational::BigRational;
use qhaar::haar::golden::parse_scalar;
use qhaar::qfield::q_pow;
use qhaar::QRational;

fn main() -> qhaar::Result<()> {
    let a = parse_scalar("(1-q^2)^2/((1-q^4)(1-q^6))")?;
    println!("a        = {a}");
    println!("latex    = {}", a.to_latex());

    let b = QRational::one() - q_pow(2);
    let c = &a * &b.inv()?;
    println!("a/(1-q^2) = {c}");
    assert_eq!(&c * &b, a);

    let at_two = a.eval_at(&BigRational::from_integer(2.into()))?;
    println!("a(2)     = {at_two}");

    let json = a.to_json();
    println!("json     = {json}");
    assert_eq!(QRational::from_json(&json)?, a);
    Ok(())
}
