//! Distributions on SU(N) supported at the center: enveloping-algebra
//! elements paired with class functions, the central-expectation identity,
//! and the index distribution of a model manifold.
//!
//! The central expectation `T` is never built. Every pairing uses only
//! `Tr(σ(T(a))) = Tr(σ(a))`, so `⟨T(a), χ^σ⟩ = Tr(σ(a))/d_σ`.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use log::warn;
use num::{One, Zero};
use serde::Serialize;

use crate::characteristic::{ahat_form, chern_weil_unit, CurvatureData};
use crate::clifford::build_clifford;
use crate::error::{Error, Result};
use crate::forms::FormPoly;
use crate::matrix::CMatrix;
use crate::models::{integrate, ModelManifold};
use crate::scalar::{GaussRat, QPi, Rational};
use crate::sun::{enumerate_nat_class, root_of_unity, ClassFunction, Irrep, IrrepCache, Partition, SuBasis};

/// Longest word accepted in an [`EnvElement`].
pub const WORD_BOUND: usize = 8;

/// Linear combination of words `X_{i1}⋯X_{ik}` in the elements of an su(N)
/// basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnvElement {
    n: usize,
    terms: BTreeMap<Vec<usize>, GaussRat>,
}

impl EnvElement {
    pub fn zero(n: usize) -> Self {
        EnvElement { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::word(n, &[], GaussRat::one()).expect("empty word")
    }

    pub fn word(n: usize, letters: &[usize], c: GaussRat) -> Result<Self> {
        let mut e = Self::zero(n);
        e.add_word(letters.to_vec(), c)?;
        Ok(e)
    }

    pub fn generator(n: usize, k: usize) -> Result<Self> {
        Self::word(n, &[k], GaussRat::one())
    }

    /// Element of su(N) written in `basis`.
    pub fn from_lie(basis: &SuBasis, x: &CMatrix) -> Result<Self> {
        let mut e = Self::zero(basis.n());
        for (k, c) in basis.coordinates(x)?.into_iter().enumerate() {
            e.add_word(vec![k], c)?;
        }
        Ok(e)
    }

    /// The product `x₁ x₂ ⋯` of Lie algebra elements, expanded in `basis`.
    pub fn from_product(basis: &SuBasis, factors: &[CMatrix]) -> Result<Self> {
        factors.iter().try_fold(Self::one(basis.n()), |acc, x| acc.mul(&Self::from_lie(basis, x)?))
    }

    /// `Σ (G⁻¹)_kl X_k X_l` for the trace-form Gram matrix of `basis`.
    pub fn casimir(basis: &SuBasis) -> Self {
        let mut e = Self::zero(basis.n());
        let g = basis.gram_inverse();
        for k in 0..basis.dim() {
            for l in 0..basis.dim() {
                e.add_word(vec![k, l], g.get(k, l).clone()).expect("length two");
            }
        }
        e
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &GaussRat)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_word(&mut self, w: Vec<usize>, c: GaussRat) -> Result<()> {
        if w.len() > WORD_BOUND {
            return Err(Error::WordTooLong { len: w.len(), bound: WORD_BOUND });
        }
        let dim = self.n * self.n - 1;
        if let Some(&bad) = w.iter().find(|&&k| k >= dim) {
            return Err(Error::DimensionMismatch { expected: dim, found: bad + 1 });
        }
        if c.is_zero() {
            return Ok(());
        }
        let e = self.terms.entry(w.clone()).or_default();
        *e += &c;
        if e.is_zero() {
            self.terms.remove(&w);
        }
        Ok(())
    }

    pub fn try_add(&self, other: &EnvElement) -> Result<Self> {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_word(w.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn scale(&self, c: &GaussRat) -> Self {
        let mut out = Self::zero(self.n);
        for (w, v) in &self.terms {
            out.add_word(w.clone(), v * c).expect("same words");
        }
        out
    }

    /// Concatenation product.
    pub fn mul(&self, other: &EnvElement) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: other.n });
        }
        let mut out = Self::zero(self.n);
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                out.add_word(w, c1 * c2)?;
            }
        }
        Ok(out)
    }
}

/// `ω^k I` with `ω = e^{2πi/N}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CentralElement {
    n: usize,
    k: usize,
}

impl CentralElement {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        root_of_unity(n, 0)?;
        Ok(CentralElement { n, k: k % n })
    }

    pub fn identity(n: usize) -> Self {
        CentralElement { n, k: 0 }
    }

    pub fn all(n: usize) -> Result<Vec<Self>> {
        (0..n).map(|k| Self::new(n, k)).collect()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn scalar(&self) -> GaussRat {
        root_of_unity(self.n, self.k).expect("validated on construction")
    }

    pub fn inverse(&self) -> Self {
        CentralElement { n: self.n, k: (self.n - self.k) % self.n }
    }

    /// Torus coordinates `(ω^k, …, ω^k)`.
    pub fn diagonal(&self) -> Vec<GaussRat> {
        vec![self.scalar(); self.n]
    }
}

/// Function supported near the center, recorded by its values there.
/// `flat` asserts that every derivative vanishes at each central point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralBump {
    n: usize,
    values: BTreeMap<usize, GaussRat>,
    flat: bool,
}

impl CentralBump {
    pub fn new(n: usize, values: impl IntoIterator<Item = (CentralElement, GaussRat)>, flat: bool) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (g, v) in values {
            if g.n() != n {
                return Err(Error::DimensionMismatch { expected: n, found: g.n() });
            }
            if !v.is_zero() {
                map.insert(g.k(), v);
            }
        }
        Ok(CentralBump { n, values: map, flat })
    }

    /// Value 1 at `e`, flat, vanishing at the other central points.
    pub fn unit_at_identity(n: usize) -> Self {
        CentralBump { n, values: BTreeMap::from([(0, GaussRat::one())]), flat: true }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_flat(&self) -> bool {
        self.flat
    }

    pub fn value_at(&self, g: &CentralElement) -> GaussRat {
        self.values.get(&g.k()).cloned().unwrap_or_default()
    }

    pub fn support(&self) -> Vec<CentralElement> {
        self.values.keys().map(|&k| CentralElement { n: self.n, k }).collect()
    }
}

/// The test functions the index distribution pairs against.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TestFunction {
    Characters(ClassFunction),
    Bump(CentralBump),
    /// `λ_g φ(x) = φ(g⁻¹x)` for central `g`.
    Translate(CentralElement, Box<TestFunction>),
}

impl TestFunction {
    pub fn character(p: &Partition, n: usize) -> Result<Self> {
        Ok(TestFunction::Characters(ClassFunction::character(p, n)?))
    }

    pub fn translate(self, g: CentralElement) -> Self {
        TestFunction::Translate(g, Box::new(self))
    }

    pub fn n(&self) -> usize {
        match self {
            TestFunction::Characters(f) => f.n(),
            TestFunction::Bump(b) => b.n(),
            TestFunction::Translate(_, inner) => inner.n(),
        }
    }

    /// Pushes translations into the data: `λ_g χ^σ = ω^{−k|σ|} χ^σ` and
    /// `(λ_g φ)(h) = φ(g⁻¹h)`.
    pub fn resolve(&self) -> Result<TestFunction> {
        match self {
            TestFunction::Translate(g, inner) => match inner.resolve()? {
                TestFunction::Characters(f) => {
                    let mut out = ClassFunction::zero(f.n());
                    for (p, c) in f.terms() {
                        let phase = g.inverse().scalar().pow(p.boxes() as u32);
                        out.add_term(p, c * &phase)?;
                    }
                    Ok(TestFunction::Characters(out))
                }
                TestFunction::Bump(b) => {
                    let values =
                        b.values.iter().map(|(&k, v)| (CentralElement { n: b.n, k: (k + g.k()) % b.n }, v.clone()));
                    Ok(TestFunction::Bump(CentralBump::new(b.n, values, b.flat)?))
                }
                TestFunction::Translate(..) => unreachable!("resolve removes translations"),
            },
            other => Ok(other.clone()),
        }
    }

    fn class_function(&self, what: &str) -> Result<ClassFunction> {
        match self.resolve()? {
            TestFunction::Characters(f) => Ok(f),
            _ => Err(Error::UnsupportedTestFunction(format!("{what} needs a class function"))),
        }
    }
}

/// An irrep with the images of a fixed basis, for traces of words.
pub struct RepresentedBasis {
    irrep: Arc<Irrep>,
    images: Arc<Vec<CMatrix>>,
}

impl RepresentedBasis {
    pub fn new(irrep: Arc<Irrep>, basis: &SuBasis) -> Result<Self> {
        let images = Arc::new(irrep.lie_images(basis)?);
        Ok(RepresentedBasis { irrep, images })
    }

    pub fn irrep(&self) -> &Irrep {
        &self.irrep
    }

    pub fn trace_word(&self, w: &[usize]) -> GaussRat {
        match w {
            [] => GaussRat::from_int(self.irrep.dim() as i64),
            [a] => self.images[*a].trace(),
            [init @ .., last] => {
                let mut m = self.images[init[0]].clone();
                for &k in &init[1..] {
                    m = &m * &self.images[k];
                }
                m.trace_product(&self.images[*last])
            }
        }
    }

    /// `Tr(σ(a))`.
    pub fn trace(&self, a: &EnvElement) -> GaussRat {
        let mut acc = GaussRat::zero();
        for (w, c) in a.terms() {
            acc += &(c * &self.trace_word(w));
        }
        acc
    }

    /// `(λ(a)χ^σ)(e) = Σ_w c_w (−1)^k Tr(σ(X_{ik}⋯X_{i1}))/d_σ`.
    pub fn derivative_at_identity(&self, a: &EnvElement) -> GaussRat {
        let mut acc = GaussRat::zero();
        for (w, c) in a.terms() {
            let rev: Vec<usize> = w.iter().rev().copied().collect();
            let t = self.trace_word(&rev);
            let t = if w.len() % 2 == 1 { -t } else { t };
            acc += &(c * &t);
        }
        acc.scale(&Rational::new(1.into(), (self.irrep.dim() as i64).into()))
    }
}

fn represented(cache: &IrrepCache, basis: &SuBasis, p: &Partition) -> Result<RepresentedBasis> {
    Ok(RepresentedBasis { irrep: cache.get(p, basis.n())?, images: cache.lie_images(p, basis)? })
}

fn check_group(a: &EnvElement, basis: &SuBasis, phi: &TestFunction) -> Result<()> {
    if a.n() != basis.n() || phi.n() != basis.n() {
        return Err(Error::DimensionMismatch {
            expected: basis.n(),
            found: if a.n() != basis.n() { a.n() } else { phi.n() },
        });
    }
    Ok(())
}

/// `⟨a, φ⟩ = (λ(a)φ)(e)` with `λ(X)φ(g) = d/dt|₀ φ(exp(−tX)g)`.
pub fn env_pair(a: &EnvElement, phi: &TestFunction, basis: &SuBasis, cache: &IrrepCache) -> Result<GaussRat> {
    check_group(a, basis, phi)?;
    let f = phi.class_function("env_pair")?;
    let mut acc = GaussRat::zero();
    for (p, c) in f.terms() {
        acc += &(c * &represented(cache, basis, p)?.derivative_at_identity(a));
    }
    Ok(acc)
}

/// `⟨T(a), φ⟩ = Σ_σ c_σ Tr(σ(a))/d_σ`.
pub fn central_pair(a: &EnvElement, phi: &TestFunction, basis: &SuBasis, cache: &IrrepCache) -> Result<GaussRat> {
    check_group(a, basis, phi)?;
    let f = phi.class_function("central_pair")?;
    let mut acc = GaussRat::zero();
    for (p, c) in f.terms() {
        let rep = represented(cache, basis, p)?;
        let d = Rational::new(1.into(), (rep.irrep().dim() as i64).into());
        acc += &(c * &rep.trace(a).scale(&d));
    }
    Ok(acc)
}

/// Both sides of
/// `Σ_{π ∈ nat} Tr(π(a)) Tr(π̄(φ)) = (1/N) Σ_g χ^nat(g) ⟨T(a), λ_g φ⟩`,
/// the left sum running over the natural class up to `max_boxes`.
pub fn lemma_both_sides(
    a: &EnvElement,
    phi: &TestFunction,
    basis: &SuBasis,
    max_boxes: usize,
    cache: &IrrepCache,
) -> Result<(GaussRat, GaussRat)> {
    check_group(a, basis, phi)?;
    let n = basis.n();
    let f = phi.class_function("lemma_both_sides")?;
    let cutoff = cache.config().max_boxes.min(max_boxes);
    if f.max_boxes() > cutoff {
        return Err(Error::SupportExceedsCutoff(format!("support reaches {} boxes, cutoff {cutoff}", f.max_boxes())));
    }
    let mut lhs = GaussRat::zero();
    for p in enumerate_nat_class(n, max_boxes) {
        // Tr(π̄(χ^σ)) = δ_πσ / d_π
        let c = f.coefficient(&p);
        if c.is_zero() {
            continue;
        }
        let rep = represented(cache, basis, &p)?;
        let d = Rational::new(1.into(), (rep.irrep().dim() as i64).into());
        lhs += &(&rep.trace(a) * &c.scale(&d));
    }
    let mut rhs = GaussRat::zero();
    for g in CentralElement::all(n)? {
        let translated = phi.clone().translate(g);
        rhs += &(&g.scalar() * &central_pair(a, &translated, basis, cache)?);
    }
    Ok((lhs, rhs.scale(&Rational::new(1.into(), (n as i64).into()))))
}

/// How the central points of SU(N) are weighted in the index distribution.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CentralWeights {
    /// `w(g) = χ^nat(g)/N`, from the central-expectation identity.
    #[default]
    Lemma,
    /// `w(g) = 1` for every central `g`.
    AsPrinted,
}

/// The index distribution of a model manifold, stored through its spectral
/// data: for each `j`, the enveloping-algebra element
/// `E_j = (1/j!) ∫ Â_{n−2j} ∧ Ω̃ʲ` (grouped by power of π), so that
/// `I_j(σ) = Tr(σ(E_j))/d_σ`.
pub struct IndexDistribution {
    model: ModelManifold,
    group: usize,
    basis: SuBasis,
    weights: CentralWeights,
    cache: Arc<IrrepCache>,
    ahat_integral: Rational,
    spectral: Vec<BTreeMap<i32, EnvElement>>,
}

fn omega_terms(r: &CurvatureData, basis: &SuBasis) -> Result<Vec<(FormPoly, EnvElement)>> {
    let n = r.n();
    let cliff = build_clifford(n)?;
    let unit = chern_weil_unit();
    let mut out = Vec::new();
    for k in 0..n {
        for l in k + 1..n {
            let a: Vec<Vec<Rational>> =
                (0..n).map(|i| (0..n).map(|j| r.component(i, j, k, l).clone()).collect()).collect();
            if a.iter().flatten().all(Zero::is_zero) {
                continue;
            }
            let form = FormPoly::monomial(n, &[k, l], unit.clone())?;
            out.push((form, EnvElement::from_lie(basis, &cliff.spin_embed(&a)?)?));
        }
    }
    Ok(out)
}

impl IndexDistribution {
    pub fn new(model: &ModelManifold, cache: Arc<IrrepCache>, weights: CentralWeights) -> Result<Self> {
        let n = model.n();
        if !n.is_multiple_of(2) {
            return Err(Error::UnsupportedCliffordDimension(n));
        }
        let group = 1usize << (n / 2);
        Self::with_basis(model, SuBasis::standard(group), cache, weights)
    }

    pub fn with_basis(
        model: &ModelManifold,
        basis: SuBasis,
        cache: Arc<IrrepCache>,
        weights: CentralWeights,
    ) -> Result<Self> {
        let n = model.n();
        let group = 1usize << (n / 2);
        if basis.n() != group {
            return Err(Error::DimensionMismatch { expected: group, found: basis.n() });
        }
        root_of_unity(group, 0)?;
        let ahat = ahat_form(&model.curvature)?;
        let total = integrate(&ahat, model)?;
        let ahat_integral = total.to_rational().ok_or_else(|| Error::NotReportable(total.to_string()))?;
        let omega = omega_terms(&model.curvature, &basis)?;
        let mut spectral = Vec::with_capacity(n / 2 + 1);
        let mut power: Vec<(FormPoly, EnvElement)> = vec![(FormPoly::one(n), EnvElement::one(group))];
        let mut fact = Rational::one();
        for j in 0..=n / 2 {
            if j > 0 {
                fact *= Rational::from_integer((j as i64).into());
                let mut next = Vec::new();
                for (f1, e1) in &power {
                    for (f2, e2) in &omega {
                        let f = f1.wedge(f2)?;
                        if !f.is_zero() {
                            next.push((f, e1.mul(e2)?));
                        }
                    }
                }
                power = next;
            }
            let weight = ahat.component(n - 2 * j)?;
            let mut by_pi: BTreeMap<i32, EnvElement> = BTreeMap::new();
            for (f, e) in &power {
                let s = integrate(&weight.wedge(f)?, model)?.scale_rational(&fact.recip());
                for (k, c) in s.terms() {
                    let slot = by_pi.entry(k).or_insert_with(|| EnvElement::zero(group));
                    *slot = slot.try_add(&e.scale(c))?;
                }
            }
            by_pi.retain(|_, e| !e.is_zero());
            spectral.push(by_pi);
        }
        Ok(IndexDistribution { model: model.clone(), group, basis, weights, cache, ahat_integral, spectral })
    }

    pub fn model(&self) -> &ModelManifold {
        &self.model
    }

    /// `N = 2^{n/2}`.
    pub fn group_rank(&self) -> usize {
        self.group
    }

    pub fn weights(&self) -> CentralWeights {
        self.weights
    }

    pub fn weight(&self, g: &CentralElement) -> GaussRat {
        match self.weights {
            CentralWeights::Lemma => g.scalar().scale(&Rational::new(1.into(), (self.group as i64).into())),
            CentralWeights::AsPrinted => GaussRat::one(),
        }
    }

    /// `I_j(σ) = ∫ Â_{n−2j} Tr(σ(Ω̃ʲ))/(d_σ j!)` for `j = 0, …, n/2`.
    pub fn spectral_data(&self, p: &Partition) -> Result<Vec<Rational>> {
        let rep = represented(&self.cache, &self.basis, p)?;
        let d = Rational::new(1.into(), (rep.irrep().dim() as i64).into());
        let mut memo: HashMap<Vec<usize>, GaussRat> = HashMap::new();
        self.spectral
            .iter()
            .map(|by_pi| {
                let mut total = QPi::zero();
                for (&k, e) in by_pi {
                    let mut acc = GaussRat::zero();
                    for (w, c) in e.terms() {
                        let t = memo.entry(w.clone()).or_insert_with(|| rep.trace_word(w));
                        acc += &(c * &*t);
                    }
                    total += &QPi::monomial(acc.scale(&d), k);
                }
                total.to_rational().ok_or_else(|| Error::NotReportable(total.to_string()))
            })
            .collect()
    }

    /// `Σ_g w(g) Σ_j (1/j!) ∫ Â_{n−2j} ⟨T(Ω̃ʲ), λ_g φ⟩`.
    pub fn pair(&self, phi: &TestFunction) -> Result<Rational> {
        if phi.n() != self.group {
            return Err(Error::DimensionMismatch { expected: self.group, found: phi.n() });
        }
        let central = CentralElement::all(self.group)?;
        let value = match phi.resolve()? {
            TestFunction::Characters(f) => {
                let mut acc = GaussRat::zero();
                for (p, c) in f.terms() {
                    // ⟨T(a), λ_g χ^σ⟩ = ω^{−k|σ|} Tr(σ(a))/d_σ
                    let mut phase = GaussRat::zero();
                    for g in &central {
                        phase += &(&self.weight(g) * &g.inverse().scalar().pow(p.boxes() as u32));
                    }
                    if phase.is_zero() {
                        continue;
                    }
                    let total: Rational = self.spectral_data(p)?.into_iter().sum();
                    acc += &(&(c * &phase) * &GaussRat::real(total));
                }
                acc
            }
            TestFunction::Bump(b) => {
                if !b.is_flat() {
                    return Err(Error::NonFlatBump);
                }
                // only j = 0 survives: ⟨1, λ_g φ⟩ = φ(g⁻¹)
                let ahat_integral = GaussRat::real(self.fractional_index()?);
                let mut acc = GaussRat::zero();
                for g in &central {
                    acc += &(&self.weight(g) * &b.value_at(&g.inverse()));
                }
                &acc * &ahat_integral
            }
            TestFunction::Translate(..) => unreachable!("resolved"),
        };
        value.to_real().ok_or_else(|| Error::NotReportable(value.to_string()))
    }

    /// `∫ Â`.
    pub fn fractional_index(&self) -> Result<Rational> {
        Ok(self.ahat_integral.clone())
    }

    /// `d_π ⟨D, χ^π⟩`; zero off the natural class.
    pub fn pair_with_character(&self, p: &Partition) -> Result<Rational> {
        let p = p.reduce(self.group)?;
        if p.boxes() % self.group != 1 % self.group {
            warn!(
                "{p} has central character {} ≠ 1 mod {}; its isotypic component is empty",
                p.boxes() % self.group,
                self.group
            );
        }
        let pairing = self.pair(&TestFunction::character(&p, self.group)?)?;
        if pairing.is_zero() {
            return Ok(pairing);
        }
        let d = self.cache.get(&p, self.group)?.dim() as i64;
        Ok(pairing * Rational::from_integer(d.into()))
    }

    /// Pairing with a flat central bump, normalized by `w(e)` so that the
    /// unit bump at the identity returns `∫ Â`.
    pub fn pair_with_bump(&self, bump: &CentralBump) -> Result<Rational> {
        let raw = self.pair(&TestFunction::Bump(bump.clone()))?;
        let we = self.weight(&CentralElement::identity(self.group)).to_real().expect("real weight at e");
        Ok(raw / we)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{cp2, s2, s4, t4};
    use crate::scalar::{int, rat};
    use crate::sun::IrrepConfig;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn cache() -> Arc<IrrepCache> {
        Arc::new(IrrepCache::default())
    }

    #[test]
    fn env_pair_basics() {
        let basis = SuBasis::standard(4);
        let c = cache();
        let chi = TestFunction::character(&p(&[2, 1]), 4).unwrap();
        assert_eq!(env_pair(&EnvElement::one(4), &chi, &basis, &c).unwrap(), GaussRat::one());
        for k in 0..basis.dim() {
            assert!(env_pair(&EnvElement::generator(4, k).unwrap(), &chi, &basis, &c).unwrap().is_zero());
        }
        // Casimir eigenvalue of (2,1) for SU(4): 2·5 + 1·2 − 9/4 = 39/4
        let cas = EnvElement::casimir(&basis);
        assert_eq!(env_pair(&cas, &chi, &basis, &c).unwrap(), GaussRat::real(rat(39, 4)));
        let bump = TestFunction::Bump(CentralBump::unit_at_identity(4));
        assert!(matches!(env_pair(&cas, &bump, &basis, &c), Err(Error::UnsupportedTestFunction(_))));
    }

    #[test]
    fn word_bound_and_indices() {
        assert!(matches!(EnvElement::word(2, &[0; 9], GaussRat::one()), Err(Error::WordTooLong { .. })));
        assert!(EnvElement::generator(2, 3).is_err());
    }

    #[test]
    fn lemma_on_defining_character() {
        let basis = SuBasis::standard(4);
        let c = cache();
        let chi = TestFunction::character(&p(&[1]), 4).unwrap();
        for a in [EnvElement::one(4), EnvElement::casimir(&basis)] {
            let (l, r) = lemma_both_sides(&a, &chi, &basis, 5, &c).unwrap();
            assert_eq!(l, r);
        }
        let (l, _) = lemma_both_sides(&EnvElement::one(4), &chi, &basis, 5, &c).unwrap();
        assert_eq!(l, GaussRat::one());
    }

    #[test]
    fn lemma_with_central_translate() {
        let basis = SuBasis::standard(2);
        let c = cache();
        let a = EnvElement::word(2, &[0, 0], GaussRat::new(rat(1, 3), int(2))).unwrap();
        let g = CentralElement::new(2, 1).unwrap();
        let phi = TestFunction::character(&p(&[3]), 2).unwrap().translate(g);
        let (l, r) = lemma_both_sides(&a, &phi, &basis, 5, &c).unwrap();
        assert_eq!(l, r);
        assert!(!l.is_zero());
    }

    #[test]
    fn lemma_rejects_support_beyond_cutoff() {
        let basis = SuBasis::standard(2);
        let c = cache();
        let phi = TestFunction::character(&p(&[7]), 2).unwrap();
        assert!(matches!(
            lemma_both_sides(&EnvElement::one(2), &phi, &basis, 9, &c),
            Err(Error::SupportExceedsCutoff(_))
        ));
    }

    #[test]
    fn cp2_distribution() {
        let d = IndexDistribution::new(&cp2(), cache(), CentralWeights::Lemma).unwrap();
        assert_eq!(d.fractional_index().unwrap(), rat(-1, 8));
        assert_eq!(d.pair_with_character(&p(&[1])).unwrap(), int(1));
        assert_eq!(d.pair_with_character(&p(&[2])).unwrap(), int(0));
        assert_eq!(d.pair_with_bump(&CentralBump::unit_at_identity(4)).unwrap(), rat(-1, 8));
        let data = d.spectral_data(&p(&[1])).unwrap();
        assert_eq!(data.len(), 3);
        assert_eq!(data[0], rat(-1, 8));
        assert!(data[1].is_zero());
    }

    #[test]
    fn as_printed_weights_lose_the_natural_class() {
        let d = IndexDistribution::new(&cp2(), cache(), CentralWeights::AsPrinted).unwrap();
        assert_eq!(d.pair_with_character(&p(&[1])).unwrap(), int(0));
        assert_eq!(d.pair_with_bump(&CentralBump::unit_at_identity(4)).unwrap(), rat(-1, 8));
    }

    #[test]
    fn bumps() {
        let d = IndexDistribution::new(&s4(), cache(), CentralWeights::Lemma).unwrap();
        assert!(d.pair_with_bump(&CentralBump::unit_at_identity(4)).unwrap().is_zero());
        let t = IndexDistribution::new(&t4(), cache(), CentralWeights::Lemma).unwrap();
        assert!(t.pair_with_bump(&CentralBump::unit_at_identity(4)).unwrap().is_zero());
        let rough = CentralBump::new(4, [(CentralElement::identity(4), GaussRat::one())], false).unwrap();
        assert_eq!(d.pair_with_bump(&rough), Err(Error::NonFlatBump));
        // translating the unit bump to −I moves it off the identity
        let c = IndexDistribution::new(&cp2(), cache(), CentralWeights::Lemma).unwrap();
        let moved = TestFunction::Bump(CentralBump::unit_at_identity(4)).translate(CentralElement::new(4, 2).unwrap());
        // w(−I)/w(e) = −1
        assert_eq!(c.pair(&moved).unwrap() * int(4), rat(1, 8));
    }

    #[test]
    fn sphere_is_trivial() {
        let c = Arc::new(IrrepCache::new(IrrepConfig { max_boxes: 9 }));
        let d = IndexDistribution::new(&s2(), c, CentralWeights::Lemma).unwrap();
        for k in [1, 3, 5] {
            assert!(d.pair_with_character(&p(&[k])).unwrap().is_zero());
        }
    }
}
