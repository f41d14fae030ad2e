//! Products with quantum minors and their values at q = 1, where they
//! become moments of the unitary group.

use qhaar::algebra::parse_expr;
use qhaar::Haar;

fn main() -> qhaar::Result<()> {
    let haar = Haar::new();
    for expr in [
        "a e (e k - q f h)(a k - q c g)",
        "(-q)^-1 a h (b f - q c e)(d k - q f g)",
        "a a (e k - q f h)(e k - q f h)",
    ] {
        let p = parse_expr(expr, 3)?;
        println!("h({expr}) = {}", haar.value_poly(&p)?);
        println!("  at q = 1: {}", haar.weingarten_limit(&p)?);
    }
    Ok(())
}
