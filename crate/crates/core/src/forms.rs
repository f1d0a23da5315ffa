//! Constant-coefficient exterior algebra on ℝⁿ and matrices of even forms.
//!
//! A [`FormPoly`] stores one coefficient per basis monomial `e^{i1}∧…∧e^{ik}`
//! with `i1 < … < ik`, encoded as a bitmask. Indices are zero-based in the
//! API and printed one-based (`e1∧e2`). A [`MatForm`] is a square matrix
//! whose entries are even-degree forms; even forms commute, so products,
//! traces, determinants and exponentials behave as over a commutative ring.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::matrix::CMatrix;
use crate::scalar::{GaussRat, QPi, Rational};

/// Largest supported ambient dimension.
pub const MAX_DIM: usize = 8;

type Mask = u16;

fn degree_of(mask: Mask) -> usize {
    mask.count_ones() as usize
}

/// Sign of `e^a ∧ e^b` relative to the sorted monomial `e^{a∪b}`.
fn merge_sign(a: Mask, b: Mask) -> i32 {
    let mut swaps = 0u32;
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        swaps += (a >> (j + 1)).count_ones();
        rest &= rest - 1;
    }
    if swaps.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FormPoly {
    n: usize,
    terms: BTreeMap<Mask, QPi>,
}

impl FormPoly {
    pub fn zero(n: usize) -> Self {
        assert!(n <= MAX_DIM, "ambient dimension {n} exceeds {MAX_DIM}");
        FormPoly { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::scalar(n, QPi::one())
    }

    pub fn scalar(n: usize, c: QPi) -> Self {
        let mut f = Self::zero(n);
        f.accumulate(0, &c);
        f
    }

    /// `c · e^{i1}∧…∧e^{ik}` for arbitrary (zero-based) index order; repeated
    /// indices give zero.
    pub fn monomial(n: usize, indices: &[usize], c: QPi) -> Result<Self> {
        let mut out = Self::scalar(n, c);
        for &i in indices {
            if i >= n {
                return Err(Error::InvalidDegree { degree: i + 1, n });
            }
            let e = FormPoly { n, terms: BTreeMap::from([(1 << i, QPi::one())]) };
            out = out.wedge(&e)?;
        }
        Ok(out)
    }

    /// `q · e^{i1}∧…∧e^{ik}` with a rational coefficient.
    pub fn basis(n: usize, indices: &[usize], q: Rational) -> Result<Self> {
        Self::monomial(n, indices, QPi::rational(q))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(index tuple, coefficient)` pairs, indices zero-based and sorted.
    pub fn terms(&self) -> impl Iterator<Item = (Vec<usize>, &QPi)> {
        self.terms.iter().map(|(m, c)| ((0..self.n).filter(|i| m & (1 << i) != 0).collect(), c))
    }

    #[cfg(test)]
    pub(crate) fn raw_terms(&self) -> impl Iterator<Item = (u16, &QPi)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub(crate) fn from_raw(n: usize, terms: impl IntoIterator<Item = (u16, QPi)>) -> Self {
        let mut f = Self::zero(n);
        for (m, c) in terms {
            f.accumulate(m, &c);
        }
        f
    }

    pub fn coefficient(&self, indices: &[usize]) -> QPi {
        let mask = indices.iter().fold(0 as Mask, |m, &i| m | (1 << i));
        self.terms.get(&mask).cloned().unwrap_or_default()
    }

    fn accumulate(&mut self, mask: Mask, c: &QPi) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(mask).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&mask);
        }
    }

    fn check_dim(&self, other: &FormPoly) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: other.n });
        }
        Ok(())
    }

    /// Graded-commutative exterior product.
    pub fn wedge(&self, other: &FormPoly) -> Result<FormPoly> {
        self.check_dim(other)?;
        let mut out = FormPoly::zero(self.n);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if ma & mb != 0 {
                    continue;
                }
                let prod = ca * cb;
                let prod = if merge_sign(*ma, *mb) < 0 { -prod } else { prod };
                out.accumulate(ma | mb, &prod);
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, other: &FormPoly) -> Result<FormPoly> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.accumulate(*m, c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &QPi) -> FormPoly {
        FormPoly::from_raw(self.n, self.terms.iter().map(|(m, v)| (*m, v * c)))
    }

    pub fn scale_rational(&self, q: &Rational) -> FormPoly {
        self.scale(&QPi::rational(q.clone()))
    }

    pub fn scale_gauss(&self, g: &GaussRat) -> FormPoly {
        FormPoly::from_raw(self.n, self.terms.iter().map(|(m, v)| (*m, v.scale(g))))
    }

    /// Homogeneous part of the given even degree.
    pub fn component(&self, degree: usize) -> Result<FormPoly> {
        if !degree.is_multiple_of(2) || degree > self.n {
            return Err(Error::InvalidDegree { degree, n: self.n });
        }
        Ok(self.component_unchecked(degree))
    }

    pub(crate) fn component_unchecked(&self, degree: usize) -> FormPoly {
        FormPoly::from_raw(
            self.n,
            self.terms.iter().filter(|(m, _)| degree_of(**m) == degree).map(|(m, c)| (*m, c.clone())),
        )
    }

    /// Coefficient of `e^1∧…∧e^n`.
    pub fn top_coefficient(&self) -> QPi {
        let top: Mask = if self.n == 0 { 0 } else { ((1u32 << self.n) - 1) as Mask };
        self.terms.get(&top).cloned().unwrap_or_default()
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.terms.keys().map(|m| degree_of(*m))
    }

    pub fn is_even(&self) -> bool {
        self.degrees().all(|d| d % 2 == 0)
    }

    pub fn is_homogeneous(&self, degree: usize) -> bool {
        self.degrees().all(|d| d == degree)
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.degrees().max()
    }

    /// Degree-0 coefficient.
    pub fn constant_term(&self) -> QPi {
        self.terms.get(&0).cloned().unwrap_or_default()
    }
}

impl fmt::Display for FormPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(idx, c)| {
                if idx.is_empty() {
                    format!("{c}")
                } else {
                    let e: Vec<String> = idx.iter().map(|i| format!("e{}", i + 1)).collect();
                    format!("({c})·{}", e.join("∧"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for FormPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FormPoly[n={}]({self})", self.n)
    }
}

impl<'a> Add<&'a FormPoly> for &'a FormPoly {
    type Output = FormPoly;
    /// Panics on dimension mismatch; use [`FormPoly::try_add`] to recover.
    fn add(self, o: &FormPoly) -> FormPoly {
        self.try_add(o).expect("form dimension mismatch")
    }
}

impl<'a> Sub<&'a FormPoly> for &'a FormPoly {
    type Output = FormPoly;
    fn sub(self, o: &FormPoly) -> FormPoly {
        self.try_add(&-o).expect("form dimension mismatch")
    }
}

impl Neg for &FormPoly {
    type Output = FormPoly;
    fn neg(self) -> FormPoly {
        FormPoly::from_raw(self.n, self.terms.iter().map(|(m, c)| (*m, -c)))
    }
}

/// Square matrix of even-degree forms.
#[derive(Clone, PartialEq, Eq)]
pub struct MatForm {
    size: usize,
    n: usize,
    entries: Vec<FormPoly>,
}

impl MatForm {
    /// Builds a matrix from row-major entries; every entry must be an even
    /// form on ℝⁿ.
    pub fn new(size: usize, n: usize, entries: Vec<FormPoly>) -> Result<Self> {
        if entries.len() != size * size {
            return Err(Error::SizeMismatch { left: size * size, right: entries.len() });
        }
        for e in &entries {
            if e.n() != n {
                return Err(Error::DimensionMismatch { expected: n, found: e.n() });
            }
            if let Some(d) = e.degrees().find(|d| d % 2 != 0) {
                return Err(Error::OddDegreeEntry(d));
            }
        }
        Ok(MatForm { size, n, entries })
    }

    pub fn zero(size: usize, n: usize) -> Self {
        MatForm { size, n, entries: vec![FormPoly::zero(n); size * size] }
    }

    pub fn identity(size: usize, n: usize) -> Self {
        let mut m = Self::zero(size, n);
        for i in 0..size {
            m.entries[i * size + i] = FormPoly::one(n);
        }
        m
    }

    /// Degree-0 matrix with the given numeric entries.
    pub fn from_numeric(a: &CMatrix, n: usize) -> Self {
        assert!(a.is_square());
        let size = a.rows();
        let entries = a.entries().iter().map(|c| FormPoly::scalar(n, QPi::constant(c.clone()))).collect();
        MatForm { size, n, entries }
    }

    /// `Σ_k form_k ⊗ mat_k` for numeric matrices `mat_k` of one common size.
    pub fn from_tensor_terms<'a>(
        size: usize,
        n: usize,
        terms: impl IntoIterator<Item = (&'a FormPoly, &'a CMatrix)>,
    ) -> Result<Self> {
        let mut out = Self::zero(size, n);
        for (form, mat) in terms {
            if mat.rows() != size || mat.cols() != size {
                return Err(Error::SizeMismatch { left: size, right: mat.rows() });
            }
            if form.n() != n {
                return Err(Error::DimensionMismatch { expected: n, found: form.n() });
            }
            if let Some(d) = form.degrees().find(|d| d % 2 != 0) {
                return Err(Error::OddDegreeEntry(d));
            }
            for (idx, c) in mat.entries().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let add = form.scale_gauss(c);
                out.entries[idx] = &out.entries[idx] + &add;
            }
        }
        Ok(out)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &FormPoly {
        &self.entries[i * self.size + j]
    }

    pub fn entries(&self) -> &[FormPoly] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(FormPoly::is_zero)
    }

    fn check_shape(&self, other: &MatForm) -> Result<()> {
        if self.size != other.size {
            return Err(Error::SizeMismatch { left: self.size, right: other.size });
        }
        if self.n != other.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: other.n });
        }
        Ok(())
    }

    pub fn mat_mul(&self, other: &MatForm) -> Result<MatForm> {
        self.check_shape(other)?;
        let s = self.size;
        let mut out = MatForm::zero(s, self.n);
        for i in 0..s {
            for k in 0..s {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..s {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let p = a.wedge(b)?;
                    out.entries[i * s + j] = &out.entries[i * s + j] + &p;
                }
            }
        }
        Ok(out)
    }

    pub fn mat_trace(&self) -> FormPoly {
        let mut t = FormPoly::zero(self.n);
        for i in 0..self.size {
            t = &t + self.get(i, i);
        }
        t
    }

    /// `Tr(self · other)` without forming the product.
    pub fn trace_of_product(&self, other: &MatForm) -> Result<FormPoly> {
        self.check_shape(other)?;
        let mut t = FormPoly::zero(self.n);
        for i in 0..self.size {
            for k in 0..self.size {
                let a = self.get(i, k);
                let b = other.get(k, i);
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                t = &t + &a.wedge(b)?;
            }
        }
        Ok(t)
    }

    pub fn try_add(&self, other: &MatForm) -> Result<MatForm> {
        self.check_shape(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        Ok(MatForm { size: self.size, n: self.n, entries })
    }

    pub fn scale(&self, c: &QPi) -> MatForm {
        MatForm { size: self.size, n: self.n, entries: self.entries.iter().map(|e| e.scale(c)).collect() }
    }

    pub fn neg(&self) -> MatForm {
        MatForm { size: self.size, n: self.n, entries: self.entries.iter().map(|e| -e).collect() }
    }

    fn has_degree_zero(&self) -> bool {
        self.entries.iter().any(|e| !e.constant_term().is_zero())
    }

    /// `[Tr(A⁰), Tr(A¹), …, Tr(A^jmax)]`; the last power is traced without
    /// being formed.
    pub fn trace_powers(&self, jmax: usize) -> Result<Vec<FormPoly>> {
        let mut out = vec![FormPoly::scalar(self.n, QPi::from_int(self.size as i64))];
        if jmax == 0 {
            return Ok(out);
        }
        let mut power = self.clone();
        for j in 1..jmax {
            out.push(power.mat_trace());
            if j + 1 < jmax {
                power = power.mat_mul(self)?;
            }
        }
        let last = if jmax == 1 { self.mat_trace() } else { power.trace_of_product(self)? };
        out.push(last);
        Ok(out)
    }

    /// `Σ_j Aʲ/j!`, exact; the series stops once powers exceed degree n.
    pub fn mat_exp_truncated(&self) -> Result<MatForm> {
        if self.has_degree_zero() {
            return Err(Error::NonNilpotent);
        }
        let mut out = MatForm::identity(self.size, self.n);
        let mut term = MatForm::identity(self.size, self.n);
        for j in 1..=self.n / 2 {
            term = term.mat_mul(self)?.scale(&QPi::rational(Rational::new(1.into(), (j as i64).into())));
            if term.is_zero() {
                break;
            }
            out = out.try_add(&term)?;
        }
        Ok(out)
    }

    /// Coefficients `[e₀, e₁, …, e_size]` of `det(I + tA)`, via Newton's
    /// identities over the commutative even subalgebra.
    pub fn char_poly_even(&self) -> Result<Vec<FormPoly>> {
        let d = self.size;
        let mut power_traces = Vec::with_capacity(d);
        let mut power = self.clone();
        for k in 1..=d {
            power_traces.push(power.mat_trace());
            if k < d {
                power = power.mat_mul(self)?;
            }
        }
        let mut e = vec![FormPoly::one(self.n)];
        for k in 1..=d {
            let mut acc = FormPoly::zero(self.n);
            for i in 1..=k {
                let term = e[k - i].wedge(&power_traces[i - 1])?;
                acc = if i % 2 == 1 { &acc + &term } else { &acc - &term };
            }
            e.push(acc.scale_rational(&Rational::new(1.into(), (k as i64).into())));
        }
        Ok(e)
    }

    /// Splits `A = Σ_{monomial, π^k} (form ⊗ numeric matrix)`; used to push a
    /// matrix of forms through a Lie algebra representation.
    pub fn numeric_components(&self) -> Vec<(FormPoly, CMatrix)> {
        let mut parts: BTreeMap<(Mask, i32), CMatrix> = BTreeMap::new();
        for (idx, entry) in self.entries.iter().enumerate() {
            for (mask, c) in &entry.terms {
                for (k, g) in c.terms() {
                    let m = parts.entry((*mask, k)).or_insert_with(|| CMatrix::zeros(self.size, self.size));
                    m.set(idx / self.size, idx % self.size, g.clone());
                }
            }
        }
        parts.into_iter().map(|((mask, k), m)| (FormPoly::from_raw(self.n, [(mask, QPi::pi_pow(k))]), m)).collect()
    }
}

impl fmt::Debug for MatForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "MatForm {}x{} on R^{} [", self.size, self.size, self.n)?;
        for i in 0..self.size {
            let row: Vec<String> = (0..self.size).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  {}", row.join(" | "))?;
        }
        write!(f, "]")
    }
}
