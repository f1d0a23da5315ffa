//! Clifford generators in dimension 4 and the spin image of a rotation
//! generator, with the derivation identity `[σ(A), c(v)] = c(Av)`.

use index_character::clifford::build_clifford;
use index_character::scalar::rat;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cliff = build_clifford(4)?;
    println!("spinor dimension {}, relations hold: {}", cliff.spinor_dim(), cliff.check_invariants());
    let mut a = vec![vec![rat(0, 1); 4]; 4];
    a[0][1] = rat(1, 1);
    a[1][0] = rat(-1, 1);
    println!("σ(e12) =\n{:?}", cliff.spin_embed(&a)?);
    let v = vec![rat(1, 1), rat(2, 1), rat(0, 1), rat(-1, 3)];
    println!("derivation identity: {}", cliff.adjoint_action_check(&a, &v)?);
    Ok(())
}
