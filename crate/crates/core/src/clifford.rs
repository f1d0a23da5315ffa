//! Complex Clifford algebra of ℝⁿ (n even) realized on spinors of size
//! `N = 2^{n/2}`, and the spin embedding `so(n) → su(N)`.
//!
//! Convention: `c_i c_j + c_j c_i = −2δ_ij`, `c_i* = −c_i`. The spin image of
//! an antisymmetric `A` is `−¼ Σ A_ij c_i c_j`, the unique traceless choice
//! satisfying `[spin_embed(A), c(v)] = c(Av)`.

use crate::error::{Error, Result};
use crate::matrix::{rank, CMatrix};
use crate::scalar::{rat, GaussRat, Rational};

use num::Zero;

#[derive(Clone, Debug)]
pub struct CliffordModel {
    n: usize,
    spinor_dim: usize,
    generators: Vec<CMatrix>,
    chirality: CMatrix,
}

fn pauli() -> [CMatrix; 3] {
    let g =
        |v: [[(i64, i64); 2]; 2]| CMatrix::from_fn(2, 2, |i, j| GaussRat::new(rat(v[i][j].0, 1), rat(v[i][j].1, 1)));
    [
        g([[(0, 0), (1, 0)], [(1, 0), (0, 0)]]),
        g([[(0, 0), (0, -1)], [(0, 1), (0, 0)]]),
        g([[(1, 0), (0, 0)], [(0, 0), (-1, 0)]]),
    ]
}

/// Build the Clifford model for even `n` in `2..=8`.
pub fn build_clifford(n: usize) -> Result<CliffordModel> {
    if !n.is_multiple_of(2) || !(2..=8).contains(&n) {
        return Err(Error::UnsupportedCliffordDimension(n));
    }
    let k = n / 2;
    let [s1, s2, s3] = pauli();
    let id2 = CMatrix::identity(2);
    // Hermitian gammas: γ_{2j}, γ_{2j+1} = σ3^{⊗j} ⊗ σ{1,2} ⊗ I^{⊗(k−j−1)}.
    let tensor = |j: usize, mid: &CMatrix| {
        let mut m = CMatrix::identity(1);
        for slot in 0..k {
            let f = match slot.cmp(&j) {
                std::cmp::Ordering::Less => &s3,
                std::cmp::Ordering::Equal => mid,
                std::cmp::Ordering::Greater => &id2,
            };
            m = m.kron(f);
        }
        m
    };
    let i = GaussRat::i();
    let mut generators = Vec::with_capacity(n);
    for j in 0..k {
        generators.push(tensor(j, &s1).scale(&i));
        generators.push(tensor(j, &s2).scale(&i));
    }
    let spinor_dim = 1 << k;
    let mut vol = CMatrix::identity(spinor_dim);
    for g in &generators {
        vol = &vol * g;
    }
    let chirality = if &vol * &vol == CMatrix::identity(spinor_dim) { vol } else { vol.scale(&i) };
    Ok(CliffordModel { n, spinor_dim, generators, chirality })
}

impl CliffordModel {
    pub fn n(&self) -> usize {
        self.n
    }

    /// `N = 2^{n/2}`.
    pub fn spinor_dim(&self) -> usize {
        self.spinor_dim
    }

    pub fn generators(&self) -> &[CMatrix] {
        &self.generators
    }

    pub fn chirality(&self) -> &CMatrix {
        &self.chirality
    }

    /// `c(v) = Σ v_i c_i`.
    pub fn clifford_of(&self, v: &[Rational]) -> Result<CMatrix> {
        if v.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: v.len() });
        }
        let mut out = CMatrix::zeros(self.spinor_dim, self.spinor_dim);
        for (c, x) in self.generators.iter().zip(v) {
            if !x.is_zero() {
                out = &out + &c.scale(&GaussRat::real(x.clone()));
            }
        }
        Ok(out)
    }

    /// `−¼ c_i c_j`, the spin image of the elementary matrix `E_ij`.
    pub fn spin_generator(&self, i: usize, j: usize) -> CMatrix {
        (&self.generators[i] * &self.generators[j]).scale(&GaussRat::real(rat(-1, 4)))
    }

    /// Infinitesimal spin embedding of an antisymmetric matrix.
    pub fn spin_embed(&self, a: &[Vec<Rational>]) -> Result<CMatrix> {
        check_antisymmetric(a, self.n)?;
        let mut out = CMatrix::zeros(self.spinor_dim, self.spinor_dim);
        for (i, row) in a.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                if !x.is_zero() {
                    out = &out + &self.spin_generator(i, j).scale(&GaussRat::real(x.clone()));
                }
            }
        }
        Ok(out)
    }

    /// Checks `exp(S) c(v) exp(−S) = c(e^A v)` coefficient by coefficient in
    /// the formal series, i.e. `ad_S^k c(v) = c(A^k v)` for `k ≤ 2n`,
    /// where `S = spin_embed(A)`.
    pub fn adjoint_action_check(&self, a: &[Vec<Rational>], v: &[Rational]) -> Result<bool> {
        let s = self.spin_embed(a)?;
        let mut lhs = self.clifford_of(v)?;
        let mut w: Vec<Rational> = v.to_vec();
        for _ in 0..=2 * self.n {
            if lhs != self.clifford_of(&w)? {
                return Ok(false);
            }
            lhs = s.commutator(&lhs);
            w = mat_vec(a, &w);
        }
        Ok(true)
    }

    /// Anticommutation, skewness, chirality and spanning checks.
    pub fn check_invariants(&self) -> bool {
        let id = CMatrix::identity(self.spinor_dim);
        for (i, ci) in self.generators.iter().enumerate() {
            if ci.adjoint() != -ci {
                return false;
            }
            for (j, cj) in self.generators.iter().enumerate() {
                let ac = &(ci * cj) + &(cj * ci);
                let expect = if i == j {
                    id.scale(&GaussRat::from_int(-2))
                } else {
                    CMatrix::zeros(self.spinor_dim, self.spinor_dim)
                };
                if ac != expect {
                    return false;
                }
            }
            if &self.chirality * ci != -(ci * &self.chirality) {
                return false;
            }
        }
        &self.chirality * &self.chirality == id && self.span_dimension() == self.spinor_dim * self.spinor_dim
    }

    /// Dimension of the linear span of all ordered products of generators.
    pub fn span_dimension(&self) -> usize {
        let mut products = Vec::with_capacity(1 << self.n);
        for subset in 0u32..(1 << self.n) {
            let mut m = CMatrix::identity(self.spinor_dim);
            for (i, c) in self.generators.iter().enumerate() {
                if subset & (1 << i) != 0 {
                    m = &m * c;
                }
            }
            products.push(m.entries().to_vec());
        }
        rank(&products)
    }
}

pub(crate) fn check_antisymmetric(a: &[Vec<Rational>], n: usize) -> Result<()> {
    if a.len() != n || a.iter().any(|r| r.len() != n) {
        return Err(Error::DimensionMismatch { expected: n, found: a.len() });
    }
    for (i, row) in a.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            if *v != -a[j][i].clone() {
                return Err(Error::NotAntisymmetric);
            }
        }
    }
    Ok(())
}

fn mat_vec(a: &[Vec<Rational>], v: &[Rational]) -> Vec<Rational> {
    a.iter().map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum()).collect()
}
