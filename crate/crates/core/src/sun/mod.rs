//! Representation theory of SU(N): partitions, an su(N) basis, explicit
//! irreps and torus characters.

pub mod basis;
pub mod character;
pub mod irrep;
pub mod partition;

pub use basis::SuBasis;
pub use character::{character_at_torus, ClassFunction};
pub use irrep::{build_irrep, Irrep, IrrepCache, IrrepConfig};
pub use partition::{
    central_character, enumerate_nat_class, partitions_of, semistandard_tableaux, weyl_dim, Partition,
};

use crate::error::{Error, Result};
use crate::scalar::GaussRat;

/// `ω^k` for `ω = e^{2πi/N}`, available when it is a Gaussian rational.
pub fn root_of_unity(n: usize, k: usize) -> Result<GaussRat> {
    match n {
        1 => Ok(GaussRat::one()),
        2 => Ok(GaussRat::from_int(if k.is_multiple_of(2) { 1 } else { -1 })),
        4 => Ok(GaussRat::i_pow(k as i64)),
        _ => Err(Error::NonGaussianCenter(n)),
    }
}
