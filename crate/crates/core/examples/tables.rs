//! Whole tables by the linear solver and by the staged algorithm, with
//! a disk cache.

use std::time::Instant;

use qhaar::haar::solve_order;
use qhaar::{Haar, HaarTable, Method};

fn main() -> qhaar::Result<()> {
    let order: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let haar = Haar::new();

    for m in 1..=order {
        let t0 = Instant::now();
        let (table, stats) = solve_order(&haar, m)?;
        let solved = t0.elapsed();
        let t0 = Instant::now();
        let staged = haar.table_with(m, Method::Algorithm)?;
        println!(
            "order {m}: {} values, {} rows used of {} derived, solver {solved:.2?}, staged {:.2?}, equal: {}",
            table.len(),
            stats.rows_used,
            stats.pairs_derived,
            t0.elapsed(),
            staged.values == table.values
        );
    }

    let dir = std::env::temp_dir().join("qhaar-example-cache");
    let cached = Haar::new().with_cache_dir(Some(dir.clone()));
    cached.table(2)?;
    let reloaded = HaarTable::load(&dir, 2)?.expect("written by the first call");
    println!("cached order 2 at {}: {} values", HaarTable::cache_path(&dir, 2).display(), reloaded.len());
    Ok(())
}
