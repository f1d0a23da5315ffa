//! The index distribution of CP² paired with characters and central bumps,
//! under both central weightings.

use index_character::distributions::{CentralBump, CentralElement, CentralWeights};
use index_character::engine::Engine;
use index_character::models::cp2;
use index_character::scalar::{fmt_rational, GaussRat};
use index_character::sun::Partition;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let m = cp2();
    let nat = Partition::new(vec![1])?;
    for weights in [CentralWeights::Lemma, CentralWeights::AsPrinted] {
        let dist = Engine::default().with_weights(weights).index_distribution(&m)?;
        let spectral: Vec<String> = dist.spectral_data(&nat)?.iter().map(fmt_rational).collect();
        println!("{weights:?}");
        println!("  I_j((1))           {}", spectral.join(", "));
        println!("  ⟨D, χ^(1)⟩·d       {}", fmt_rational(&dist.pair_with_character(&nat)?));
        println!("  unit bump at e     {}", fmt_rational(&dist.pair_with_bump(&CentralBump::unit_at_identity(4))?));
        let bump = CentralBump::new(4, [(CentralElement::new(4, 2)?, GaussRat::one())], true)?;
        println!("  unit bump at ω²    {}", fmt_rational(&dist.pair_with_bump(&bump)?));
    }
    Ok(())
}
