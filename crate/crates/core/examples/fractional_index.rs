//! `∫ Â` for every built-in model. Only CP² is non-spin, and its value
//! `-1/8` is the fractional index of the projective Dirac operator.

use index_character::engine::Engine;
use index_character::models::catalog;
use index_character::scalar::fmt_rational;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let engine = Engine::default();
    for m in catalog() {
        println!("{:<6} {}", m.name, fmt_rational(&engine.fractional_index(&m)?));
    }
    Ok(())
}
