//! Reads a model from the text format, here a flat torus glued to a round
//! sphere, and runs the same computations as on the catalog.

use index_character::engine::Engine;
use index_character::models::{parse_model, product, s2, to_text};
use index_character::scalar::fmt_rational;

const FLAT_T2: &str = "\
# flat torus of area 1
name t2
dim 2
volume 1
euler 0
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let t2 = parse_model(FLAT_T2)?;
    let m = product(&s2(), &t2)?;
    print!("{}", to_text(&m));
    let engine = Engine::default();
    println!("∫Â = {}", fmt_rational(&engine.fractional_index(&m)?));
    println!("signature = {}", fmt_rational(&engine.signature_check(&m)?));
    Ok(())
}
