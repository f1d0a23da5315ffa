use std::collections::BTreeMap;

use super::partition::{weyl_dim, Partition};
use crate::error::{Error, Result};
use crate::matrix::CMatrix;
use crate::scalar::{rat, GaussRat};

/// `h_0, …, h_kmax` of the given variables, by the recurrence
/// `h_k(x₁…x_m) = h_k(x₁…x_{m−1}) + x_m h_{k−1}(x₁…x_m)`.
pub fn complete_homogeneous(x: &[GaussRat], kmax: usize) -> Vec<GaussRat> {
    let mut h = vec![GaussRat::zero(); kmax + 1];
    h[0] = GaussRat::one();
    for xi in x {
        for k in 1..=kmax {
            let add = xi * &h[k - 1];
            h[k] += &add;
        }
    }
    h
}

/// Schur polynomial via the Jacobi–Trudi determinant `det(h_{λ_i − i + j})`.
pub fn schur_polynomial(p: &Partition, x: &[GaussRat]) -> GaussRat {
    let l = p.rows();
    if l == 0 {
        return GaussRat::one();
    }
    let kmax = p.parts()[0] + l;
    let h = complete_homogeneous(x, kmax);
    let jt = CMatrix::from_fn(l, l, |i, j| {
        let k = p.parts()[i] as i64 - i as i64 + j as i64;
        if k < 0 {
            GaussRat::zero()
        } else {
            h[k as usize].clone()
        }
    });
    jt.determinant()
}

fn check_torus(n: usize, diag: &[GaussRat]) -> Result<()> {
    if diag.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: diag.len() });
    }
    if let Some(z) = diag.iter().find(|z| z.norm_sqr() != rat(1, 1)) {
        return Err(Error::NotUnimodular { n, reason: format!("|{z}| ≠ 1") });
    }
    let det = diag.iter().fold(GaussRat::one(), |acc, z| &acc * z);
    if det != GaussRat::one() {
        return Err(Error::NotUnimodular { n, reason: format!("determinant {det}") });
    }
    Ok(())
}

/// Normalized character `χ^λ(diag) = s_λ(diag)/d_λ` on the maximal torus.
pub fn character_at_torus(p: &Partition, n: usize, diag: &[GaussRat]) -> Result<GaussRat> {
    check_torus(n, diag)?;
    let p = p.reduce(n)?;
    let d = weyl_dim(&p, n)? as i64;
    Ok(schur_polynomial(&p, diag).scale(&rat(1, d)))
}

/// Finite combination `Σ c_π χ^π` of normalized characters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    n: usize,
    coeffs: BTreeMap<Partition, GaussRat>,
}

impl ClassFunction {
    pub fn zero(n: usize) -> Self {
        ClassFunction { n, coeffs: BTreeMap::new() }
    }

    /// The normalized character of a single irrep.
    pub fn character(p: &Partition, n: usize) -> Result<Self> {
        let mut f = Self::zero(n);
        f.add_term(p, GaussRat::one())?;
        Ok(f)
    }

    pub fn add_term(&mut self, p: &Partition, c: GaussRat) -> Result<()> {
        let p = p.reduce(self.n)?;
        let e = self.coeffs.entry(p.clone()).or_default();
        *e += &c;
        if e.is_zero() {
            self.coeffs.remove(&p);
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &GaussRat)> {
        self.coeffs.iter()
    }

    pub fn coefficient(&self, p: &Partition) -> GaussRat {
        self.coeffs.get(p).cloned().unwrap_or_default()
    }

    pub fn max_boxes(&self) -> usize {
        self.coeffs.keys().map(Partition::boxes).max().unwrap_or(0)
    }

    /// Value at the identity: `Σ c_π` since every `χ^π(e) = 1`.
    pub fn at_identity(&self) -> GaussRat {
        self.coeffs.values().fold(GaussRat::zero(), |acc, c| &acc + c)
    }

    pub fn evaluate(&self, diag: &[GaussRat]) -> Result<GaussRat> {
        let mut acc = GaussRat::zero();
        for (p, c) in &self.coeffs {
            acc += &(c * &character_at_torus(p, self.n, diag)?);
        }
        Ok(acc)
    }
}
