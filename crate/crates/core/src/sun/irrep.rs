//! Explicit irreducible representations of SU(N) realized inside tensor
//! powers of ℂᴺ as images of Young symmetrizers.
//!
//! The symmetrizer of shape λ is `c = a·b` with `b` the column
//! antisymmetrizer and `a` the row symmetrizer of the row-reading standard
//! tableau. Each factor is applied through the coset decomposition
//! `Σ_{σ∈S_m} sgn(σ)σ = (Σ_{σ∈S_{m−1}} sgn(σ)σ)(1 − Σ_{s<m}(s m))`, so no
//! permutation group is ever enumerated. Basis vectors are weight vectors in
//! reduced row echelon form, which makes every coordinate a lookup at a
//! pivot index.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use super::basis::SuBasis;
use super::partition::{content, semistandard_tableaux, weyl_dim, Partition};
use crate::error::{Error, Result};
use crate::matrix::{sparse_rank, CMatrix, SparseEchelon, SparseRow};
use crate::scalar::GaussRat;

pub const DEFAULT_CUTOFF: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IrrepConfig {
    /// Largest box count for which an irrep is built.
    pub max_boxes: usize,
}

impl Default for IrrepConfig {
    fn default() -> Self {
        IrrepConfig { max_boxes: DEFAULT_CUTOFF }
    }
}

/// Index arithmetic on `(ℂᴺ)^{⊗k}`; position `q` is base-`N` digit `q`.
#[derive(Clone, Debug)]
struct TensorSpace {
    n: usize,
    pow: Vec<usize>,
}

impl TensorSpace {
    fn new(n: usize, k: usize) -> Self {
        TensorSpace { n, pow: (0..k).map(|q| n.pow(q as u32)).collect() }
    }

    fn digit(&self, w: usize, q: usize) -> usize {
        (w / self.pow[q]) % self.n
    }

    fn set_digit(&self, w: usize, q: usize, v: usize) -> usize {
        w - self.digit(w, q) * self.pow[q] + v * self.pow[q]
    }

    fn swap(&self, w: usize, s: usize, t: usize) -> usize {
        let (ds, dt) = (self.digit(w, s), self.digit(w, t));
        self.set_digit(self.set_digit(w, s, dt), t, ds)
    }

    fn index(&self, word: &[usize]) -> usize {
        word.iter().zip(&self.pow).map(|(d, p)| d * p).sum()
    }

    fn word(&self, w: usize) -> Vec<usize> {
        (0..self.pow.len()).map(|q| self.digit(w, q)).collect()
    }
}

/// Sparse integer tensor.
pub type IntTensor = HashMap<usize, i64>;

/// The Young symmetrizer `c_λ = a_λ b_λ` acting on `(ℂᴺ)^{⊗|λ|}`.
#[derive(Clone, Debug)]
pub struct YoungSymmetrizer {
    space: TensorSpace,
    rows: Vec<Vec<usize>>,
    cols: Vec<Vec<usize>>,
}

impl YoungSymmetrizer {
    pub fn new(p: &Partition, n: usize) -> Self {
        let mut rows: Vec<Vec<usize>> = Vec::new();
        let mut pos = 0;
        for &len in p.parts() {
            rows.push((pos..pos + len).collect());
            pos += len;
        }
        let width = p.parts().first().copied().unwrap_or(0);
        let cols = (0..width).map(|c| rows.iter().filter(|r| r.len() > c).map(|r| r[c]).collect()).collect();
        YoungSymmetrizer { space: TensorSpace::new(n, p.boxes()), rows, cols }
    }

    pub fn tensor_dim(&self) -> usize {
        self.space.n.pow(self.space.pow.len() as u32)
    }

    fn apply_group(&self, v: IntTensor, positions: &[usize], sign: i64) -> IntTensor {
        let mut v = v;
        for m in (1..positions.len()).rev() {
            let mut out = v.clone();
            for (&w, &c) in &v {
                for &s in &positions[..m] {
                    *out.entry(self.space.swap(w, s, positions[m])).or_insert(0) += sign * c;
                }
            }
            out.retain(|_, c| *c != 0);
            v = out;
        }
        v
    }

    pub fn apply(&self, v: &IntTensor) -> IntTensor {
        let mut v = v.clone();
        for col in &self.cols {
            v = self.apply_group(v, col, -1);
        }
        for row in &self.rows {
            v = self.apply_group(v, row, 1);
        }
        v
    }

    pub fn apply_word(&self, word: &[usize]) -> IntTensor {
        self.apply(&IntTensor::from([(self.space.index(word), 1)]))
    }
}

/// An irreducible representation with its gl(N) action in a fixed basis.
#[derive(Clone, Debug)]
pub struct Irrep {
    partition: Partition,
    n: usize,
    space: TensorSpace,
    tensor_basis: Vec<SparseRow>,
    pivots: Vec<usize>,
    /// `π(E_ab)` at index `a·N + b`.
    gl_images: Vec<CMatrix>,
}

fn distinct_permutations(sorted: &[usize], mut f: impl FnMut(&[usize]) -> bool) {
    let mut w = sorted.to_vec();
    loop {
        if !f(&w) {
            return;
        }
        let Some(i) = (1..w.len()).rev().find(|&i| w[i - 1] < w[i]) else { return };
        let j = (i..w.len()).rev().find(|&j| w[j] > w[i - 1]).expect("successor exists");
        w.swap(i - 1, j);
        w[i..].reverse();
    }
}

fn to_row(v: &IntTensor) -> SparseRow {
    v.iter().map(|(&w, &c)| (w, GaussRat::from_int(c))).collect()
}

/// Builds the irrep of SU(N) labelled by a reduced partition.
pub fn build_irrep(p: &Partition, n: usize, config: &IrrepConfig) -> Result<Irrep> {
    if n != 2 && n != 4 {
        return Err(Error::UnsupportedGroup(n));
    }
    if !p.is_reduced(n) {
        return Err(Error::NotReduced { partition: p.to_string(), n });
    }
    if p.boxes() > config.max_boxes {
        return Err(Error::CutoffExceeded { partition: p.to_string(), boxes: p.boxes(), cutoff: config.max_boxes });
    }
    let sym = YoungSymmetrizer::new(p, n);
    let space = sym.space.clone();

    let mut spaces: BTreeMap<Vec<usize>, (SparseEchelon, usize)> = BTreeMap::new();
    let tableaux = semistandard_tableaux(p, n);
    for t in &tableaux {
        spaces.entry(content(t, n)).or_default().1 += 1;
    }
    for t in &tableaux {
        let (ech, _) = spaces.get_mut(&content(t, n)).expect("weight present");
        ech.insert(to_row(&sym.apply_word(t)));
    }
    for (weight, (ech, kostka)) in spaces.iter_mut() {
        if ech.rank() >= *kostka {
            continue;
        }
        let sorted: Vec<usize> = weight.iter().enumerate().flat_map(|(a, &m)| std::iter::repeat_n(a, m)).collect();
        distinct_permutations(&sorted, |w| {
            ech.insert(to_row(&sym.apply_word(w)));
            ech.rank() < *kostka
        });
    }

    let mut tensor_basis = Vec::new();
    let mut pivots = Vec::new();
    for (_, (ech, _)) in spaces.into_iter().rev() {
        for (pivot, row) in ech.into_reduced() {
            pivots.push(pivot);
            tensor_basis.push(row);
        }
    }
    let dim = weyl_dim(p, n)?;
    assert_eq!(tensor_basis.len(), dim, "symmetrizer image has the Weyl dimension");

    let slot: HashMap<usize, usize> = pivots.iter().enumerate().map(|(i, &w)| (w, i)).collect();
    let k = p.boxes();
    let mut gl_images = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let mut m = CMatrix::zeros(dim, dim);
            if a == b {
                for (j, &w) in pivots.iter().enumerate() {
                    let count = (0..k).filter(|&q| space.digit(w, q) == a).count();
                    m.set(j, j, GaussRat::from_int(count as i64));
                }
            } else {
                for (j, row) in tensor_basis.iter().enumerate() {
                    for (&w, c) in row {
                        for q in 0..k {
                            if space.digit(w, q) != b {
                                continue;
                            }
                            if let Some(&i) = slot.get(&space.set_digit(w, q, a)) {
                                let v = m.get(i, j) + c;
                                m.set(i, j, v);
                            }
                        }
                    }
                }
            }
            gl_images.push(m);
        }
    }
    Ok(Irrep { partition: p.clone(), n, space, tensor_basis, pivots, gl_images })
}

impl Irrep {
    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn boxes(&self) -> usize {
        self.partition.boxes()
    }

    /// Residue `k` such that `ωI` acts by `ω^k`.
    pub fn central_character(&self) -> usize {
        self.boxes() % self.n
    }

    /// `π(E_ab)` for the gl(N) unit matrix `E_ab`.
    pub fn unit_image(&self, a: usize, b: usize) -> &CMatrix {
        &self.gl_images[a * self.n + b]
    }

    /// Image of a traceless `N × N` matrix.
    pub fn image_of(&self, m: &CMatrix) -> Result<CMatrix> {
        if m.rows() != self.n || !m.is_square() {
            return Err(Error::DimensionMismatch { expected: self.n, found: m.rows() });
        }
        if !m.trace().is_zero() {
            return Err(Error::NotInSl(format!("trace {}", m.trace())));
        }
        let mut out = CMatrix::zeros(self.dim(), self.dim());
        for a in 0..self.n {
            for b in 0..self.n {
                let c = m.get(a, b);
                if !c.is_zero() {
                    out = &out + &self.unit_image(a, b).scale(c);
                }
            }
        }
        Ok(out)
    }

    pub fn lie_images(&self, basis: &SuBasis) -> Result<Vec<CMatrix>> {
        if basis.n() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: basis.n() });
        }
        basis.elements().iter().map(|x| self.image_of(x)).collect()
    }

    /// `Σ (G⁻¹)_kl π(X_k) π(X_l)` for the trace-form Gram matrix `G`.
    pub fn casimir(&self, basis: &SuBasis) -> Result<CMatrix> {
        let imgs = self.lie_images(basis)?;
        let g = basis.gram_inverse();
        let mut out = CMatrix::zeros(self.dim(), self.dim());
        for (k, xk) in imgs.iter().enumerate() {
            for (l, xl) in imgs.iter().enumerate() {
                let c = g.get(k, l);
                if !c.is_zero() {
                    out = &out + &(xk * xl).scale(c);
                }
            }
        }
        Ok(out)
    }

    /// Weight (letter multiplicities) of each basis vector.
    pub fn weights(&self) -> Vec<Vec<usize>> {
        self.pivots.iter().map(|&w| content(&self.space.word(w), self.n)).collect()
    }

    /// Checks that each `E_ab` maps the tensor basis into its span with the
    /// stored coefficients, over every tensor coordinate.
    pub fn verify_invariance(&self) -> bool {
        let k = self.boxes();
        for a in 0..self.n {
            for b in 0..self.n {
                let img = self.unit_image(a, b);
                for (j, row) in self.tensor_basis.iter().enumerate() {
                    let mut acc: SparseRow = SparseRow::new();
                    for (&w, c) in row {
                        for q in 0..k {
                            if self.space.digit(w, q) == b {
                                *acc.entry(self.space.set_digit(w, q, a)).or_default() += c;
                            }
                        }
                    }
                    for (i, bi) in self.tensor_basis.iter().enumerate() {
                        let f = img.get(i, j);
                        if f.is_zero() {
                            continue;
                        }
                        for (&w, c) in bi {
                            *acc.entry(w).or_default() -= &(f * c);
                        }
                    }
                    if acc.values().any(|v| !v.is_zero()) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Dimension of the space of matrices commuting with every `π(E_ab)`.
    pub fn commutant_dimension(&self) -> usize {
        let d = self.dim();
        let mut eqs = Vec::new();
        for g in &self.gl_images {
            for i in 0..d {
                for j in 0..d {
                    // ([A, Y])_ij = Σ_k A_ik Y_kj − Y_ik A_kj
                    let mut row = SparseRow::new();
                    for kk in 0..d {
                        let a = g.get(i, kk);
                        if !a.is_zero() {
                            *row.entry(kk * d + j).or_default() += a;
                        }
                        let b = g.get(kk, j);
                        if !b.is_zero() {
                            *row.entry(i * d + kk).or_default() -= b;
                        }
                    }
                    row.retain(|_, v| !v.is_zero());
                    if !row.is_empty() {
                        eqs.push(row);
                    }
                }
            }
        }
        d * d - sparse_rank(eqs)
    }
}

type ImageKey = (Partition, Vec<CMatrix>);

/// Thread-safe memo of built irreps keyed by `(N, partition)`, and of the
/// images of bases under them keyed by the basis matrices themselves.
#[derive(Debug, Default)]
pub struct IrrepCache {
    config: IrrepConfig,
    built: RwLock<HashMap<(usize, Partition), Arc<Irrep>>>,
    images: RwLock<HashMap<ImageKey, Arc<Vec<CMatrix>>>>,
}

impl IrrepCache {
    pub fn new(config: IrrepConfig) -> Self {
        IrrepCache { config, built: RwLock::default(), images: RwLock::default() }
    }

    /// `π(X_k)` for every element of `basis`.
    pub fn lie_images(&self, p: &Partition, basis: &SuBasis) -> Result<Arc<Vec<CMatrix>>> {
        let key = (p.clone(), basis.elements().to_vec());
        if let Some(hit) = self.images.read().expect("cache lock").get(&key) {
            return Ok(hit.clone());
        }
        let fresh = Arc::new(self.get(p, basis.n())?.lie_images(basis)?);
        Ok(self.images.write().expect("cache lock").entry(key).or_insert(fresh).clone())
    }

    pub fn config(&self) -> &IrrepConfig {
        &self.config
    }

    pub fn get(&self, p: &Partition, n: usize) -> Result<Arc<Irrep>> {
        let key = (n, p.clone());
        if let Some(hit) = self.built.read().expect("cache lock").get(&key) {
            return Ok(hit.clone());
        }
        let fresh = Arc::new(build_irrep(p, n, &self.config)?);
        Ok(self.built.write().expect("cache lock").entry(key).or_insert(fresh).clone())
    }
}
