//! Builds the natural class of SU(4) from Young symmetrizers and prints
//! dimension, Casimir eigenvalue and the weight multiset size.

use index_character::sun::{enumerate_nat_class, weyl_dim, IrrepCache, SuBasis};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cache = IrrepCache::default();
    let basis = SuBasis::standard(4);
    println!("{:<10} {:>4} {:>6} {:>8}", "irrep", "dim", "weyl", "casimir");
    for p in enumerate_nat_class(4, 5) {
        let irrep = cache.get(&p, 4)?;
        let c = irrep.casimir(&basis)?;
        println!("{:<10} {:>4} {:>6} {:>8}", p.to_string(), irrep.dim(), weyl_dim(&p, 4)?, c.get(0, 0).to_string());
        assert_eq!(irrep.weights().len(), irrep.dim());
    }
    Ok(())
}
