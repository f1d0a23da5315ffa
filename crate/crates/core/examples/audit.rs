//! Integrality audit of the natural class on CP² up to five boxes.

use std::time::Instant;

use index_character::engine::Engine;
use index_character::models::cp2;
use index_character::scalar::fmt_rational;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let start = Instant::now();
    let report = Engine::default().with_parallel(true).integrality_audit(&cp2(), 5)?;
    println!("{:<10} {:>5} {:>8}", "irrep", "dim", "index");
    for row in &report.rows {
        let index = row.index.as_ref().map(fmt_rational).unwrap_or_else(|| "-".into());
        println!("{:<10} {:>5} {:>8}", row.partition.to_string(), row.dim, index);
    }
    println!("∫Â = {}, passed = {}, {:.2?}", fmt_rational(&report.fractional_index), report.passed(), start.elapsed());
    Ok(())
}
