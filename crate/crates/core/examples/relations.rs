//! Linear relations from the coproduct, and the relations with equation
//! basis (ceg)^m written out with symbolic m.

use qhaar::haar::golden::{source_relation_bases, source_relation_entry, SOURCE_RELATIONS};
use qhaar::haar::{derive_linear_relation, dq_lift_relation};
use qhaar::StdExponents;

fn main() -> qhaar::Result<()> {
    let l = StdExponents::new([0, 0, 0, 0, 0, 2]);
    let j = StdExponents::new([1, 0, 0, 0, 0, 1]);
    println!("{}", derive_linear_relation(&l, &j)?);
    println!("{}", dq_lift_relation(&StdExponents::new([0, 0, 0, 0, 0, 1]))?);

    for m in 2..=4 {
        let (cols, rows) = source_relation_bases(m);
        let ceg = StdExponents::new([0, 0, 0, 0, 0, m]);
        let mut agree = 0;
        for ((_, entries), j) in SOURCE_RELATIONS.iter().zip(rows) {
            let got = derive_linear_relation(&ceg, &j)?.homogeneous_coefficients();
            for (col, t) in cols.iter().zip(entries) {
                let have = got.get(col).map(|c| c.to_qrational()).unwrap_or_default();
                agree += (have == source_relation_entry(t, m)?) as usize;
            }
        }
        println!("m = {m}: {agree}/42 symbolic entries reproduced");
    }
    Ok(())
}
