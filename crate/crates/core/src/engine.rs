//! Index computations on model manifolds.
//!
//! Two independent routes are kept side by side. The direct route integrates
//! `Â ∧ Σ_j Tr(dπ(Ω̃)ʲ)/j!` with `dπ(Ω̃)` formed as a matrix of forms. The
//! distribution route pairs the index distribution against `χ^π` through
//! enveloping-algebra words. The audit compares them partition by partition.

use std::sync::Arc;

use log::warn;
use num::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::characteristic::{ahat_form, l_genus, rel_chern};
use crate::clifford::build_clifford;
use crate::distributions::{
    lemma_both_sides, CentralBump, CentralElement, CentralWeights, EnvElement, IndexDistribution, TestFunction,
};
use crate::error::{Error, Result};
use crate::models::{integrate, ModelManifold};
use crate::scalar::{fmt_rational, GaussRat, Rational};
use crate::sun::{enumerate_nat_class, partitions_of, IrrepCache, IrrepConfig, Partition, SuBasis};

fn ser_rational<S: Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&fmt_rational(q))
}

fn ser_rationals<S: Serializer>(qs: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(qs.iter().map(fmt_rational))
}

fn ser_opt_rational<S: Serializer>(q: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match q {
        Some(q) => s.serialize_some(&fmt_rational(q)),
        None => s.serialize_none(),
    }
}

fn reportable(q: crate::scalar::QPi) -> Result<Rational> {
    q.to_rational().ok_or_else(|| Error::NotReportable(q.to_string()))
}

/// One audited irrep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditRow {
    pub partition: Partition,
    pub dim: usize,
    /// `I_j(π)` for `j = 0, …, n/2`.
    #[serde(serialize_with = "ser_rationals")]
    pub spectral: Vec<Rational>,
    /// Direct route.
    #[serde(serialize_with = "ser_opt_rational")]
    pub index: Option<Rational>,
    /// Distribution route, `d_π ⟨D, χ^π⟩`.
    #[serde(serialize_with = "ser_opt_rational")]
    pub distribution: Option<Rational>,
    pub integral: bool,
    pub consistent: bool,
    pub error: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AuditFlags {
    pub all_integral: bool,
    pub theorem_matches_corollary: bool,
    pub bump_matches_fractional_index: bool,
    pub all_reportable: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndexReport {
    pub model: String,
    pub group: usize,
    pub max_boxes: usize,
    pub weights: CentralWeights,
    #[serde(serialize_with = "ser_rational")]
    pub fractional_index: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub bump_pairing: Rational,
    pub rows: Vec<AuditRow>,
    pub flags: AuditFlags,
}

impl IndexReport {
    pub fn passed(&self) -> bool {
        let f = &self.flags;
        f.all_integral && f.theorem_matches_corollary && f.bump_matches_fractional_index && f.all_reportable
    }
}

/// Outcome of the central-expectation check over a family of elements and
/// test functions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub group: usize,
    pub max_boxes: usize,
    pub seed: u64,
    pub elements: usize,
    pub test_functions: usize,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// `c · X_a X_b` with `a, b` uniform and `c` a small nonzero Gaussian integer.
pub fn random_quadratic_word(n: usize, rng: &mut impl Rng) -> Result<EnvElement> {
    let dim = n * n - 1;
    let word = [rng.gen_range(0..dim), rng.gen_range(0..dim)];
    let c = loop {
        let re: i64 = rng.gen_range(-3..=3);
        let im: i64 = rng.gen_range(-3..=3);
        let c = GaussRat::new(Rational::from_integer(re.into()), Rational::from_integer(im.into()));
        if !c.is_zero() {
            break c;
        }
    };
    EnvElement::word(n, &word, c)
}

/// Shared irrep cache plus evaluation options.
#[derive(Clone, Debug)]
pub struct Engine {
    cache: Arc<IrrepCache>,
    weights: CentralWeights,
    parallel: bool,
}

impl Default for Engine {
    fn default() -> Self {
        Self::new(IrrepConfig::default())
    }
}

fn group_of(m: &ModelManifold) -> Result<usize> {
    let n = m.n();
    if !n.is_multiple_of(2) || n == 0 {
        return Err(Error::UnsupportedCliffordDimension(n));
    }
    Ok(1 << (n / 2))
}

impl Engine {
    pub fn new(config: IrrepConfig) -> Self {
        Engine { cache: Arc::new(IrrepCache::new(config)), weights: CentralWeights::default(), parallel: false }
    }

    pub fn with_weights(mut self, weights: CentralWeights) -> Self {
        self.weights = weights;
        self
    }

    pub fn with_parallel(mut self, parallel: bool) -> Self {
        self.parallel = parallel;
        self
    }

    pub fn cache(&self) -> &Arc<IrrepCache> {
        &self.cache
    }

    /// `∫ Â ∧ Σ_j Tr(dπ(Ω̃)ʲ)/j!`; zero, with a warning, off the natural class.
    pub fn index_character(&self, m: &ModelManifold, p: &Partition) -> Result<Rational> {
        let group = group_of(m)?;
        let p = p.reduce(group)?;
        if p.boxes() % group != 1 % group {
            warn!("{p} has central character {} ≠ 1 mod {group}; returning 0", p.boxes() % group);
            return Ok(Rational::zero());
        }
        let irrep = self.cache.get(&p, group)?;
        let cliff = build_clifford(m.n())?;
        let ch = rel_chern(&irrep, &m.curvature, &cliff)?;
        reportable(integrate(&ahat_form(&m.curvature)?.wedge(&ch)?, m)?)
    }

    /// `∫ Â`.
    pub fn fractional_index(&self, m: &ModelManifold) -> Result<Rational> {
        group_of(m)?;
        reportable(integrate(&ahat_form(&m.curvature)?, m)?)
    }

    pub fn index_distribution(&self, m: &ModelManifold) -> Result<IndexDistribution> {
        IndexDistribution::new(m, self.cache.clone(), self.weights)
    }

    /// Index of the natural twist on a 4-manifold, checked against `∫ L`
    /// and the model's recorded signature.
    pub fn signature_check(&self, m: &ModelManifold) -> Result<Rational> {
        if m.n() != 4 {
            return Err(Error::DimensionMismatch { expected: 4, found: m.n() });
        }
        let index = self.index_character(m, &Partition::new(vec![1])?)?;
        let l = reportable(integrate(&l_genus(&m.curvature)?, m)?)?;
        let recorded = m.signature.map(|s| Rational::from_integer(s.into()));
        if index != l || recorded.as_ref().is_some_and(|s| *s != index) {
            let expected = recorded.unwrap_or(l);
            return Err(Error::SignatureMismatch {
                model: m.name.clone(),
                index: fmt_rational(&index),
                expected: fmt_rational(&expected),
            });
        }
        Ok(index)
    }

    fn audit_row(&self, m: &ModelManifold, dist: &IndexDistribution, p: &Partition) -> AuditRow {
        let mut row = AuditRow {
            partition: p.clone(),
            dim: 0,
            spectral: Vec::new(),
            index: None,
            distribution: None,
            integral: false,
            consistent: false,
            error: None,
        };
        let outcome = (|| -> Result<()> {
            row.dim = self.cache.get(p, dist.group_rank())?.dim();
            row.spectral = dist.spectral_data(p)?;
            let index = self.index_character(m, p)?;
            let via_dist = dist.pair_with_character(p)?;
            row.integral = index.is_integer();
            row.consistent = index == via_dist;
            row.index = Some(index);
            row.distribution = Some(via_dist);
            Ok(())
        })();
        if let Err(e) = outcome {
            row.error = Some(e.to_string());
        }
        row
    }

    /// Runs both routes over the natural class up to `max_boxes` and flags
    /// non-integral indices, route disagreements and unreportable values.
    pub fn integrality_audit(&self, m: &ModelManifold, max_boxes: usize) -> Result<IndexReport> {
        let group = group_of(m)?;
        let dist = self.index_distribution(m)?;
        let parts = enumerate_nat_class(group, max_boxes);
        let rows: Vec<AuditRow> = if self.parallel {
            parts.par_iter().map(|p| self.audit_row(m, &dist, p)).collect()
        } else {
            parts.iter().map(|p| self.audit_row(m, &dist, p)).collect()
        };
        let fractional_index = self.fractional_index(m)?;
        let bump_pairing = dist.pair_with_bump(&CentralBump::unit_at_identity(group))?;
        let flags = AuditFlags {
            all_integral: rows.iter().all(|r| r.integral),
            theorem_matches_corollary: rows.iter().all(|r| r.consistent),
            bump_matches_fractional_index: bump_pairing == fractional_index,
            all_reportable: rows.iter().all(|r| r.error.is_none()),
        };
        Ok(IndexReport {
            model: m.name.clone(),
            group,
            max_boxes,
            weights: self.weights,
            fractional_index,
            bump_pairing,
            rows,
            flags,
        })
    }
}

impl Engine {
    /// Checks both sides of the central-expectation identity for `1`, every
    /// basis element, the Casimir and `samples` random quadratic words,
    /// against `χ^σ` and all central translates, `σ` over every reduced
    /// partition with at most `max_boxes` boxes.
    pub fn lemma_check(&self, n: usize, max_boxes: usize, samples: usize, seed: u64) -> Result<LemmaReport> {
        let basis = SuBasis::standard(n);
        let mut elements = vec![EnvElement::one(n)];
        for k in 0..basis.dim() {
            elements.push(EnvElement::generator(n, k)?);
        }
        elements.push(EnvElement::casimir(&basis));
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..samples {
            elements.push(random_quadratic_word(n, &mut rng)?);
        }
        let mut phis = Vec::new();
        for k in 0..=max_boxes {
            for p in partitions_of(k, n - 1) {
                let chi = TestFunction::character(&p, n)?;
                phis.push((p.to_string(), chi.clone()));
                for g in CentralElement::all(n)? {
                    if g.k() != 0 {
                        phis.push((format!("λ(ω^{}){p}", g.k()), chi.clone().translate(g)));
                    }
                }
            }
        }
        let pairs: Vec<(usize, usize)> =
            (0..elements.len()).flat_map(|i| (0..phis.len()).map(move |j| (i, j))).collect();
        let check = |&(i, j): &(usize, usize)| -> Result<Option<String>> {
            let (lhs, rhs) = lemma_both_sides(&elements[i], &phis[j].1, &basis, max_boxes, &self.cache)?;
            Ok((lhs != rhs).then(|| format!("element {i} vs {}: {lhs} ≠ {rhs}", phis[j].0)))
        };
        let outcomes: Vec<Result<Option<String>>> =
            if self.parallel { pairs.par_iter().map(check).collect() } else { pairs.iter().map(check).collect() };
        let mut failures = Vec::new();
        for o in outcomes {
            if let Some(f) = o? {
                failures.push(f);
            }
        }
        Ok(LemmaReport {
            group: n,
            max_boxes,
            seed,
            elements: elements.len(),
            test_functions: phis.len(),
            checks: pairs.len(),
            failures,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{cp2, lookup, s2, s4, t4};
    use crate::scalar::{int, rat};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn fractional_indices() {
        let e = Engine::default();
        assert_eq!(e.fractional_index(&cp2()).unwrap(), rat(-1, 8));
        for name in ["s4", "t4", "s2xs2", "s2"] {
            assert!(e.fractional_index(&lookup(name).unwrap()).unwrap().is_zero(), "{name}");
        }
    }

    #[test]
    fn signatures() {
        let e = Engine::default();
        assert_eq!(e.signature_check(&cp2()).unwrap(), int(1));
        for m in [s4(), t4(), lookup("s2xs2").unwrap()] {
            assert_eq!(e.signature_check(&m).unwrap(), int(0), "{}", m.name);
        }
        assert!(matches!(e.signature_check(&s2()), Err(Error::DimensionMismatch { .. })));
        let mut wrong = cp2();
        wrong.signature = Some(-1);
        assert!(matches!(e.signature_check(&wrong), Err(Error::SignatureMismatch { .. })));
    }

    #[test]
    fn wrong_central_character_gives_zero() {
        let e = Engine::default();
        assert!(e.index_character(&cp2(), &p(&[2])).unwrap().is_zero());
        assert!(e.index_character(&cp2(), &p(&[1, 1, 1, 1])).unwrap().is_zero());
    }

    #[test]
    fn small_audit() {
        let e = Engine::default();
        let r = e.integrality_audit(&cp2(), 1).unwrap();
        assert_eq!(r.rows.len(), 1);
        assert_eq!(r.rows[0].index, Some(int(1)));
        assert!(r.passed());
        let printed = Engine::default().with_weights(CentralWeights::AsPrinted);
        let r = printed.integrality_audit(&cp2(), 1).unwrap();
        assert!(!r.flags.theorem_matches_corollary);
        assert!(!r.passed());
    }

    #[test]
    fn enlarging_the_audit_keeps_rows() {
        let e = Engine::new(IrrepConfig { max_boxes: 9 });
        let small = e.integrality_audit(&s2(), 5).unwrap();
        let large = e.integrality_audit(&s2(), 9).unwrap();
        assert_eq!(small.rows[..], large.rows[..small.rows.len()]);
        let small = e.integrality_audit(&cp2(), 1).unwrap();
        let large = e.integrality_audit(&cp2(), 6).unwrap();
        assert_eq!(small.rows[0], large.rows[0]);
    }

    #[test]
    fn lemma_truncation_is_exact() {
        let basis = SuBasis::standard(2);
        let a = EnvElement::casimir(&basis);
        let cache = IrrepCache::new(IrrepConfig { max_boxes: 9 });
        let phi = TestFunction::character(&p(&[3]), 2).unwrap().translate(CentralElement::new(2, 1).unwrap());
        let narrow = lemma_both_sides(&a, &phi, &basis, 3, &cache).unwrap();
        let wide = lemma_both_sides(&a, &phi, &basis, 9, &cache).unwrap();
        assert_eq!(narrow, wide);
        assert_eq!(narrow.0, narrow.1);
    }

    #[test]
    fn lemma_check_su2() {
        let r = Engine::default().lemma_check(2, 3, 4, 7).unwrap();
        assert_eq!(r.elements, 1 + 3 + 1 + 4);
        assert_eq!(r.test_functions, 4 * 2);
        assert!(r.passed(), "{:?}", r.failures);
    }

    #[test]
    fn cutoff_errors_become_rows() {
        let e = Engine::new(IrrepConfig { max_boxes: 1 });
        let r = e.integrality_audit(&cp2(), 5).unwrap();
        assert_eq!(r.rows.len(), 6);
        assert!(r.rows[1].error.is_some());
        assert!(!r.flags.all_reportable);
    }
}
