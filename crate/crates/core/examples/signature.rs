//! The natural twist recovers the signature on 4-manifolds.

use index_character::characteristic::l_genus;
use index_character::engine::Engine;
use index_character::models::{catalog, integrate};
use index_character::scalar::fmt_rational;
use index_character::sun::Partition;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let engine = Engine::default();
    let nat = Partition::new(vec![1])?;
    for m in catalog().into_iter().filter(|m| m.n() == 4) {
        let index = engine.index_character(&m, &nat)?;
        let l = integrate(&l_genus(&m.curvature)?, &m)?;
        println!(
            "{:<6} index {:>2}  ∫L {:>2}  checked {}",
            m.name,
            fmt_rational(&index),
            l,
            engine.signature_check(&m).is_ok()
        );
    }
    Ok(())
}
