//! Dense Gaussian-rational matrices and a sparse exact rank routine.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::{GaussRat, Rational};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CMatrix {
    rows: usize,
    cols: usize,
    data: Vec<GaussRat>,
}

impl CMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        CMatrix { rows, cols, data: vec![GaussRat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, GaussRat::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> GaussRat) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        CMatrix { rows, cols, data }
    }

    /// Real rational matrix from nested rows.
    pub fn from_rational_rows(rows: &[Vec<Rational>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        Self::from_fn(r, c, |i, j| GaussRat::real(rows[i][j].clone()))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &GaussRat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: GaussRat) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[GaussRat] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(GaussRat::is_zero)
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().filter(|v| !v.is_zero()).count()
    }

    pub fn scale(&self, c: &GaussRat) -> Self {
        CMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|v| v * c).collect() }
    }

    pub fn trace(&self) -> GaussRat {
        let mut t = GaussRat::zero();
        for i in 0..self.rows.min(self.cols) {
            t += self.get(i, i);
        }
        t
    }

    /// `Tr(self · other)` without forming the product.
    pub fn trace_product(&self, other: &CMatrix) -> GaussRat {
        assert_eq!(self.cols, other.rows);
        assert_eq!(self.rows, other.cols);
        let mut t = GaussRat::zero();
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let b = other.get(k, i);
                if !b.is_zero() {
                    t += &(a * b);
                }
            }
        }
        t
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    pub fn is_skew_hermitian(&self) -> bool {
        self.adjoint() == -self
    }

    pub fn commutator(&self, other: &CMatrix) -> Self {
        &(self * other) - &(other * self)
    }

    pub fn kron(&self, other: &CMatrix) -> Self {
        Self::from_fn(self.rows * other.rows, self.cols * other.cols, |i, j| {
            self.get(i / other.rows, j / other.cols) * other.get(i % other.rows, j % other.cols)
        })
    }

    pub fn apply(&self, v: &[GaussRat]) -> Vec<GaussRat> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = GaussRat::zero();
                for (j, x) in v.iter().enumerate() {
                    let a = self.get(i, j);
                    if !a.is_zero() && !x.is_zero() {
                        acc += &(a * x);
                    }
                }
                acc
            })
            .collect()
    }

    /// Exact inverse by Gauss–Jordan elimination.
    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a.get(r, col).is_zero())?;
            if pivot != col {
                for j in 0..n {
                    a.data.swap(pivot * n + j, col * n + j);
                    inv.data.swap(pivot * n + j, col * n + j);
                }
            }
            let p = a.get(col, col).inv().expect("nonzero pivot");
            for j in 0..n {
                let x = a.get(col, j) * &p;
                a.set(col, j, x);
                let y = inv.get(col, j) * &p;
                inv.set(col, j, y);
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let f = a.get(r, col).clone();
                if f.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let ac = a.get(col, j);
                    if !ac.is_zero() {
                        let x = a.get(r, j) - &(&f * ac);
                        a.set(r, j, x);
                    }
                    let ic = inv.get(col, j);
                    if !ic.is_zero() {
                        let y = inv.get(r, j) - &(&f * ic);
                        inv.set(r, j, y);
                    }
                }
            }
        }
        Some(inv)
    }

    /// Exact determinant by Gaussian elimination.
    pub fn determinant(&self) -> GaussRat {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut det = GaussRat::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !a.get(r, col).is_zero()) else {
                return GaussRat::zero();
            };
            if pivot != col {
                for j in 0..n {
                    a.data.swap(pivot * n + j, col * n + j);
                }
                det = -det;
            }
            let p = a.get(col, col).clone();
            det = &det * &p;
            let p_inv = p.inv().expect("nonzero pivot");
            for r in col + 1..n {
                let f = a.get(r, col) * &p_inv;
                if f.is_zero() {
                    continue;
                }
                for j in col..n {
                    let x = a.get(r, j) - &(&f * a.get(col, j));
                    a.set(r, j, x);
                }
            }
        }
        det
    }

    pub fn try_mul(&self, other: &CMatrix) -> Result<CMatrix> {
        if self.cols != other.rows {
            return Err(Error::SizeMismatch { left: self.cols, right: other.rows });
        }
        Ok(self * other)
    }
}

impl fmt::Debug for CMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  {}", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl<'a> Mul<&'a CMatrix> for &'a CMatrix {
    type Output = CMatrix;
    fn mul(self, o: &CMatrix) -> CMatrix {
        assert_eq!(self.cols, o.rows, "matrix product shape mismatch");
        let mut out = CMatrix::zeros(self.rows, o.cols);
        // Row-sparse product: skip zero entries on both sides.
        let o_rows: Vec<Vec<(usize, &GaussRat)>> = (0..o.rows)
            .map(|k| (0..o.cols).map(|j| (j, o.get(k, j))).filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        for i in 0..self.rows {
            for (k, orow) in o_rows.iter().enumerate() {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for (j, b) in orow {
                    let idx = i * out.cols + j;
                    let p = a * *b;
                    out.data[idx] += &p;
                }
            }
        }
        out
    }
}

impl<'a> Add<&'a CMatrix> for &'a CMatrix {
    type Output = CMatrix;
    fn add(self, o: &CMatrix) -> CMatrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        CMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect() }
    }
}

impl<'a> Sub<&'a CMatrix> for &'a CMatrix {
    type Output = CMatrix;
    fn sub(self, o: &CMatrix) -> CMatrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        CMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for CMatrix {
    type Output = CMatrix;
    fn neg(self) -> CMatrix {
        -&self
    }
}

impl Neg for &CMatrix {
    type Output = CMatrix;
    fn neg(self) -> CMatrix {
        CMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|v| -v).collect() }
    }
}

/// Sparse row vector keyed by column.
pub type SparseRow = BTreeMap<usize, GaussRat>;

/// Exact rank of a family of sparse rows.
pub fn sparse_rank(rows: impl IntoIterator<Item = SparseRow>) -> usize {
    let mut echelon = SparseEchelon::default();
    for r in rows {
        echelon.insert(r);
    }
    echelon.rank()
}

/// Exact rank of dense vectors.
pub fn rank(vectors: &[Vec<GaussRat>]) -> usize {
    sparse_rank(
        vectors
            .iter()
            .map(|v| v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()),
    )
}

/// Incremental row echelon form: each stored row is normalized to have
/// leading coefficient one at its pivot column.
#[derive(Default, Clone)]
pub struct SparseEchelon {
    pivots: BTreeMap<usize, SparseRow>,
}

impl SparseEchelon {
    /// Reduces `row` against the stored rows; keeps it if independent.
    /// Returns the new pivot column, if any.
    pub fn insert(&mut self, mut row: SparseRow) -> Option<usize> {
        loop {
            let (&lead, _) = row.iter().next()?;
            match self.pivots.get(&lead) {
                Some(prow) => {
                    let f = row[&lead].clone();
                    for (c, v) in prow {
                        let e = row.entry(*c).or_default();
                        *e -= &(&f * v);
                        if e.is_zero() {
                            row.remove(c);
                        }
                    }
                }
                None => {
                    let inv = row[&lead].inv().expect("nonzero lead");
                    for v in row.values_mut() {
                        *v = &*v * &inv;
                    }
                    self.pivots.insert(lead, row);
                    return Some(lead);
                }
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        self.pivots.keys().copied().collect()
    }

    /// Back-substitutes to reduced row echelon form: every row vanishes at
    /// the other rows' pivots. Rows are returned in pivot order.
    pub fn into_reduced(self) -> Vec<(usize, SparseRow)> {
        let mut done: BTreeMap<usize, SparseRow> = BTreeMap::new();
        for (p, mut row) in self.pivots.into_iter().rev() {
            let hits: Vec<(usize, GaussRat)> =
                row.iter().filter(|(c, _)| done.contains_key(c)).map(|(c, v)| (*c, v.clone())).collect();
            for (q, f) in hits {
                for (c, v) in &done[&q] {
                    let e = row.entry(*c).or_default();
                    *e -= &(&f * v);
                    if e.is_zero() {
                        row.remove(c);
                    }
                }
            }
            done.insert(p, row);
        }
        done.into_iter().collect()
    }
}
