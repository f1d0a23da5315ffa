use crate::error::{Error, Result};
use crate::matrix::{rank, CMatrix};
use crate::scalar::GaussRat;

/// A basis of su(N) together with the inverse Gram matrix of the trace form
/// `Tr(XY)`, which fixes coordinates and the quadratic Casimir.
#[derive(Clone, Debug)]
pub struct SuBasis {
    n: usize,
    elements: Vec<CMatrix>,
    gram_inv: CMatrix,
}

fn unit(n: usize, a: usize, b: usize, v: GaussRat) -> CMatrix {
    let mut m = CMatrix::zeros(n, n);
    m.set(a, b, v);
    m
}

impl SuBasis {
    /// `E_ab − E_ba`, `i(E_ab + E_ba)` for `a < b`, then `i(E_aa − E_{a+1,a+1})`.
    pub fn standard(n: usize) -> Self {
        let i = GaussRat::i();
        let one = GaussRat::one();
        let mut elements = Vec::with_capacity(n * n - 1);
        for a in 0..n {
            for b in a + 1..n {
                elements.push(&unit(n, a, b, one.clone()) - &unit(n, b, a, one.clone()));
                elements.push(&unit(n, a, b, i.clone()) + &unit(n, b, a, i.clone()));
            }
        }
        for a in 0..n.saturating_sub(1) {
            elements.push(&unit(n, a, a, i.clone()) - &unit(n, a + 1, a + 1, i.clone()));
        }
        Self::from_matrices(n, elements).expect("standard basis is a basis")
    }

    /// Accepts any family of `N² − 1` traceless skew-hermitian matrices with
    /// nondegenerate Gram matrix.
    pub fn from_matrices(n: usize, elements: Vec<CMatrix>) -> Result<Self> {
        let d = n * n - 1;
        if elements.len() != d {
            return Err(Error::DimensionMismatch { expected: d, found: elements.len() });
        }
        for x in &elements {
            if x.rows() != n || !x.is_square() {
                return Err(Error::DimensionMismatch { expected: n, found: x.rows() });
            }
            if !x.trace().is_zero() || !x.is_skew_hermitian() {
                return Err(Error::NotInSl("basis element is not traceless skew-hermitian".into()));
            }
        }
        let flat: Vec<Vec<GaussRat>> = elements.iter().map(|x| x.entries().to_vec()).collect();
        if rank(&flat) != d {
            return Err(Error::NotInSl("basis elements are linearly dependent".into()));
        }
        let gram = CMatrix::from_fn(d, d, |k, l| elements[k].trace_product(&elements[l]));
        let gram_inv = gram.inverse().ok_or_else(|| Error::NotInSl("degenerate Gram matrix".into()))?;
        Ok(SuBasis { n, elements, gram_inv })
    }

    /// `X_k ↦ U X_k U⁻¹`.
    pub fn conjugated(&self, u: &CMatrix) -> Result<Self> {
        let u_inv = u.inverse().ok_or_else(|| Error::InvalidArgument("conjugating matrix is singular".into()))?;
        Self::from_matrices(self.n, self.elements.iter().map(|x| &(u * x) * &u_inv).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[CMatrix] {
        &self.elements
    }

    pub fn gram_inverse(&self) -> &CMatrix {
        &self.gram_inv
    }

    /// Coordinates of a traceless `M` (complex coefficients allowed).
    pub fn coordinates(&self, m: &CMatrix) -> Result<Vec<GaussRat>> {
        if m.rows() != self.n || !m.is_square() {
            return Err(Error::DimensionMismatch { expected: self.n, found: m.rows() });
        }
        if !m.trace().is_zero() {
            return Err(Error::NotInSl(format!("trace {}", m.trace())));
        }
        let t: Vec<GaussRat> = self.elements.iter().map(|x| x.trace_product(m)).collect();
        Ok(self.gram_inv.apply(&t))
    }

    pub fn compose(&self, coords: &[GaussRat]) -> CMatrix {
        let mut out = CMatrix::zeros(self.n, self.n);
        for (x, c) in self.elements.iter().zip(coords) {
            if !c.is_zero() {
                out = &out + &x.scale(c);
            }
        }
        out
    }
}
