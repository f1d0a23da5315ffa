//! Central-expectation identity on random quadratic words, plus one worked
//! pairing of the Casimir with a translated character.

use index_character::distributions::{lemma_both_sides, CentralElement, EnvElement, TestFunction};
use index_character::engine::Engine;
use index_character::sun::{Partition, SuBasis};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let engine = Engine::default();
    let basis = SuBasis::standard(4);
    let phi = TestFunction::character(&Partition::new(vec![2, 2, 1])?, 4)?.translate(CentralElement::new(4, 1)?);
    let (lhs, rhs) = lemma_both_sides(&EnvElement::casimir(&basis), &phi, &basis, 5, engine.cache())?;
    println!("Casimir against λ(ω)χ^(2,2,1): {lhs} = {rhs}");

    for n in [2, 4] {
        let r = engine.lemma_check(n, 3, 20, 1)?;
        println!("SU({n}): {} checks, {} failures", r.checks, r.failures.len());
    }
    Ok(())
}
