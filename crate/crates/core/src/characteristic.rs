//! Chern–Weil forms of a constant-coefficient Riemannian curvature.
//!
//! Curvature is stored as the tensor `R_ijkl` in an orthonormal frame, with
//! `R_ij = Σ_{k<l} R_ijkl e^k∧e^l`. Pontryagin forms come from
//! `det(I + tR/2π) = Σ p_k t^{2k}`; the spinor curvature is pushed through
//! the spin embedding and rescaled by the Chern–Weil unit `i/2π`.

use crate::clifford::CliffordModel;
use crate::error::{Error, Result};
use crate::forms::{FormPoly, MatForm, MAX_DIM};
use crate::matrix::CMatrix;
use crate::scalar::{rat, GaussRat, QPi, Rational};
use crate::sun::Irrep;

use num::{One, Zero};

/// Constant-coefficient curvature tensor with its antisymmetries and the
/// first Bianchi identity verified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurvatureData {
    n: usize,
    tensor: Vec<Rational>,
    forms: Vec<FormPoly>,
}

fn idx(n: usize, i: usize, j: usize, k: usize, l: usize) -> usize {
    ((i * n + j) * n + k) * n + l
}

impl CurvatureData {
    pub fn flat(n: usize) -> Result<Self> {
        Self::from_entries(n, std::iter::empty())
    }

    /// Builds the tensor from entries `((i, j, k, l), value)` (zero-based);
    /// the antisymmetries in `(i, j)` and `(k, l)` are filled in. Repeated
    /// entries must agree.
    pub fn from_entries(
        n: usize,
        entries: impl IntoIterator<Item = ((usize, usize, usize, usize), Rational)>,
    ) -> Result<Self> {
        if n == 0 || n > MAX_DIM {
            return Err(Error::InvalidDegree { degree: n, n: MAX_DIM });
        }
        let mut t: Vec<Option<Rational>> = vec![None; n.pow(4)];
        for ((i, j, k, l), v) in entries {
            if [i, j, k, l].iter().any(|&x| x >= n) {
                return Err(Error::DimensionMismatch { expected: n, found: i.max(j).max(k).max(l) + 1 });
            }
            if (i == j || k == l) && !v.is_zero() {
                return Err(Error::CurvatureAntisymmetry { i, j, k, l });
            }
            for (a, b, c, d, s) in [(i, j, k, l, 1), (j, i, k, l, -1), (i, j, l, k, -1), (j, i, l, k, 1)] {
                let val = if s == 1 { v.clone() } else { -v.clone() };
                let slot = &mut t[idx(n, a, b, c, d)];
                match slot {
                    Some(old) if *old != val => return Err(Error::CurvatureAntisymmetry { i, j, k, l }),
                    _ => *slot = Some(val),
                }
            }
        }
        Self::from_dense(n, t.into_iter().map(Option::unwrap_or_default).collect())
    }

    /// Dense row-major `n⁴` tensor; antisymmetry and Bianchi are checked.
    pub fn from_dense(n: usize, tensor: Vec<Rational>) -> Result<Self> {
        if tensor.len() != n.pow(4) {
            return Err(Error::DimensionMismatch { expected: n.pow(4), found: tensor.len() });
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let v = &tensor[idx(n, i, j, k, l)];
                        if *v != -tensor[idx(n, j, i, k, l)].clone() || *v != -tensor[idx(n, i, j, l, k)].clone() {
                            return Err(Error::CurvatureAntisymmetry { i, j, k, l });
                        }
                        let cyc = v + &tensor[idx(n, i, k, l, j)] + &tensor[idx(n, i, l, j, k)];
                        if !cyc.is_zero() {
                            return Err(Error::Bianchi { i, j, k, l });
                        }
                    }
                }
            }
        }
        let mut forms = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut f = FormPoly::zero(n);
                for k in 0..n {
                    for l in k + 1..n {
                        let v = &tensor[idx(n, i, j, k, l)];
                        if !v.is_zero() {
                            f = &f + &FormPoly::basis(n, &[k, l], v.clone())?;
                        }
                    }
                }
                forms.push(f);
            }
        }
        Ok(CurvatureData { n, tensor, forms })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn component(&self, i: usize, j: usize, k: usize, l: usize) -> &Rational {
        &self.tensor[idx(self.n, i, j, k, l)]
    }

    /// The 2-form `R_ij`.
    pub fn form(&self, i: usize, j: usize) -> &FormPoly {
        &self.forms[i * self.n + j]
    }

    pub fn is_flat(&self) -> bool {
        self.tensor.iter().all(Zero::is_zero)
    }

    /// Nonzero entries with `i < j`, `k < l`.
    pub fn nonzero_entries(&self) -> Vec<((usize, usize, usize, usize), Rational)> {
        let n = self.n;
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in 0..n {
                    for l in k + 1..n {
                        let v = self.component(i, j, k, l);
                        if !v.is_zero() {
                            out.push(((i, j, k, l), v.clone()));
                        }
                    }
                }
            }
        }
        out
    }

    pub fn matrix(&self) -> MatForm {
        MatForm::new(self.n, self.n, self.forms.clone()).expect("curvature entries are 2-forms")
    }

    /// Curvature in the rotated frame `e'_a = Σ_i Q_ai e_i`.
    pub fn rotated(&self, q: &[Vec<Rational>]) -> Result<Self> {
        let n = self.n;
        check_orthogonal(q, n)?;
        let mut t = self.tensor.clone();
        // contract one slot at a time
        for slot in 0..4 {
            let mut next = vec![Rational::zero(); t.len()];
            for (pos, out) in next.iter_mut().enumerate() {
                let mut ix = [pos / (n * n * n), (pos / (n * n)) % n, (pos / n) % n, pos % n];
                let a = ix[slot];
                let mut acc = Rational::zero();
                for (i, qa) in q[a].iter().enumerate() {
                    if qa.is_zero() {
                        continue;
                    }
                    ix[slot] = i;
                    let v = &t[idx(n, ix[0], ix[1], ix[2], ix[3])];
                    if !v.is_zero() {
                        acc += qa * v;
                    }
                }
                *out = acc;
            }
            t = next;
        }
        Self::from_dense(n, t)
    }

    /// Block-diagonal curvature of a Riemannian product.
    pub fn block_sum(&self, other: &CurvatureData) -> Result<Self> {
        let off = self.n;
        let entries = self.nonzero_entries().into_iter().chain(
            other.nonzero_entries().into_iter().map(|((i, j, k, l), v)| ((i + off, j + off, k + off, l + off), v)),
        );
        Self::from_entries(self.n + other.n, entries)
    }
}

fn check_orthogonal(q: &[Vec<Rational>], n: usize) -> Result<()> {
    if q.len() != n || q.iter().any(|r| r.len() != n) {
        return Err(Error::DimensionMismatch { expected: n, found: q.len() });
    }
    for a in 0..n {
        for b in 0..n {
            let dot: Rational = q[a].iter().zip(&q[b]).map(|(x, y)| x * y).sum();
            if dot != if a == b { Rational::one() } else { Rational::zero() } {
                return Err(Error::InvalidArgument("frame change is not orthogonal".into()));
            }
        }
    }
    Ok(())
}

/// Rational special orthogonal matrix `(I − A)(I + A)⁻¹` from an
/// antisymmetric `A`.
pub fn cayley_orthogonal(a: &[Vec<Rational>]) -> Result<Vec<Vec<Rational>>> {
    let n = a.len();
    crate::clifford::check_antisymmetric(a, n)?;
    let am = CMatrix::from_rational_rows(a);
    let id = CMatrix::identity(n);
    let inv = (&id + &am).inverse().ok_or(Error::NotAntisymmetric)?;
    let q = &(&id - &am) * &inv;
    Ok((0..n).map(|i| (0..n).map(|j| q.get(i, j).re.clone()).collect()).collect())
}

/// `i/2π`: the factor turning spinor curvature into a real Chern–Weil form.
pub fn chern_weil_unit() -> QPi {
    QPi::monomial(GaussRat::new(Rational::zero(), rat(1, 2)), -1)
}

fn inv_two_pi() -> QPi {
    QPi::monomial(GaussRat::real(rat(1, 2)), -1)
}

/// `[p₀, p₁, …]` with `p_k` of degree `4k ≤ n`.
pub fn pontryagin_forms(r: &CurvatureData) -> Result<Vec<FormPoly>> {
    let e = r.matrix().scale(&inv_two_pi()).char_poly_even()?;
    debug_assert!(e.iter().skip(1).step_by(2).all(FormPoly::is_zero), "odd Chern–Weil coefficients vanish");
    Ok(e.into_iter().step_by(2).take(r.n / 4 + 1).collect())
}

fn p_k(p: &[FormPoly], k: usize, n: usize) -> FormPoly {
    p.get(k).cloned().unwrap_or_else(|| FormPoly::zero(n))
}

/// `1 − p₁/24 + (7p₁² − 4p₂)/5760`.
pub fn ahat_form(r: &CurvatureData) -> Result<FormPoly> {
    let n = r.n;
    let p = pontryagin_forms(r)?;
    let (p1, p2) = (p_k(&p, 1, n), p_k(&p, 2, n));
    let p1sq = p1.wedge(&p1)?;
    let deg8 = &p1sq.scale_rational(&rat(7, 5760)) - &p2.scale_rational(&rat(4, 5760));
    Ok(&(&FormPoly::one(n) - &p1.scale_rational(&rat(1, 24))) + &deg8)
}

/// `1 + p₁/3 + (7p₂ − p₁²)/45`.
pub fn l_genus(r: &CurvatureData) -> Result<FormPoly> {
    let n = r.n;
    let p = pontryagin_forms(r)?;
    let (p1, p2) = (p_k(&p, 1, n), p_k(&p, 2, n));
    let p1sq = p1.wedge(&p1)?;
    let deg8 = &p2.scale_rational(&rat(7, 45)) - &p1sq.scale_rational(&rat(1, 45));
    Ok(&(&FormPoly::one(n) + &p1.scale_rational(&rat(1, 3))) + &deg8)
}

/// Pfaffian of `R/2π` in dimensions 2 and 4.
pub fn euler_form(r: &CurvatureData) -> Result<FormPoly> {
    let s = |i: usize, j: usize| r.form(i, j).scale(&inv_two_pi());
    match r.n {
        2 => Ok(s(0, 1)),
        4 => {
            let a = s(0, 1).wedge(&s(2, 3))?;
            let b = s(0, 2).wedge(&s(1, 3))?;
            let c = s(0, 3).wedge(&s(1, 2))?;
            Ok(&(&a - &b) + &c)
        }
        n => Err(Error::UnsupportedEuler(n)),
    }
}

/// Spin image of the curvature, `Ω = Σ_{k<l} e^{kl} ⊗ σ(R_{··kl})` with
/// `σ(A) = −¼ Σ A_ij c_i c_j`.
pub fn omega_form(r: &CurvatureData, cliff: &CliffordModel) -> Result<MatForm> {
    let n = r.n;
    if cliff.n() != n {
        return Err(Error::DimensionMismatch { expected: n, found: cliff.n() });
    }
    let mut terms = Vec::new();
    for k in 0..n {
        for l in k + 1..n {
            let a: Vec<Vec<Rational>> =
                (0..n).map(|i| (0..n).map(|j| r.component(i, j, k, l).clone()).collect()).collect();
            if a.iter().flatten().all(Zero::is_zero) {
                continue;
            }
            terms.push((FormPoly::basis(n, &[k, l], Rational::one())?, cliff.spin_embed(&a)?));
        }
    }
    MatForm::from_tensor_terms(cliff.spinor_dim(), n, terms.iter().map(|(f, m)| (f, m)))
}

/// `Ω̃ = (i/2π) Ω`.
pub fn omega_tilde(r: &CurvatureData, cliff: &CliffordModel) -> Result<MatForm> {
    Ok(omega_form(r, cliff)?.scale(&chern_weil_unit()))
}

/// `dπ(Ω̃)`: the representation applied coefficientwise.
pub fn represent(omega: &MatForm, irrep: &Irrep) -> Result<MatForm> {
    if omega.size() != irrep.n() {
        return Err(Error::DimensionMismatch { expected: irrep.n(), found: omega.size() });
    }
    let parts = omega.numeric_components();
    let images = parts.iter().map(|(f, m)| Ok((f.clone(), irrep.image_of(m)?))).collect::<Result<Vec<_>>>()?;
    MatForm::from_tensor_terms(irrep.dim(), omega.n(), images.iter().map(|(f, m)| (f, m)))
}

/// `Σ_j Tr(dπ(Ω̃)ʲ)/j!`; the degree-0 part is `d_π`.
pub fn rel_chern(irrep: &Irrep, r: &CurvatureData, cliff: &CliffordModel) -> Result<FormPoly> {
    let rep = represent(&omega_tilde(r, cliff)?, irrep)?;
    let traces = rep.trace_powers(r.n / 2)?;
    let mut out = FormPoly::zero(r.n);
    let mut fact = Rational::one();
    for (j, t) in traces.iter().enumerate() {
        if j > 0 {
            fact *= Rational::from_integer((j as i64).into());
        }
        out = &out + &t.scale_rational(&fact.recip());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::build_clifford;
    use crate::scalar::int;
    use crate::sun::{build_irrep, IrrepConfig, Partition};
    use std::collections::BTreeMap;

    fn sphere(n: usize) -> CurvatureData {
        let mut e = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                e.push(((i, j, i, j), int(1)));
            }
        }
        CurvatureData::from_entries(n, e).unwrap()
    }

    fn cp2() -> CurvatureData {
        let table = [
            (1, 2, 1, 2, 4),
            (1, 2, 3, 4, 2),
            (1, 3, 1, 3, 1),
            (1, 3, 2, 4, 1),
            (1, 4, 1, 4, 1),
            (1, 4, 2, 3, -1),
            (2, 3, 1, 4, -1),
            (2, 3, 2, 3, 1),
            (2, 4, 1, 3, 1),
            (2, 4, 2, 4, 1),
            (3, 4, 1, 2, 2),
            (3, 4, 3, 4, 4),
        ];
        CurvatureData::from_entries(4, table.iter().map(|&(i, j, k, l, v)| ((i - 1, j - 1, k - 1, l - 1), int(v))))
            .unwrap()
    }

    fn top(f: &FormPoly, vol: QPi) -> Rational {
        (&f.top_coefficient() * &vol).to_rational().expect("reportable")
    }

    fn vol_s2() -> QPi {
        QPi::monomial(GaussRat::from_int(4), 1)
    }
    fn vol_s4() -> QPi {
        QPi::monomial(GaussRat::real(rat(8, 3)), 2)
    }
    fn vol_cp2() -> QPi {
        QPi::monomial(GaussRat::real(rat(1, 2)), 2)
    }

    #[test]
    fn bianchi_and_antisymmetry_are_enforced() {
        let bad = CurvatureData::from_entries(4, [((0, 1, 2, 3), int(1))]);
        assert!(matches!(bad, Err(Error::Bianchi { .. })));
        let clash = CurvatureData::from_entries(2, [((0, 1, 0, 1), int(1)), ((1, 0, 0, 1), int(1))]);
        assert!(matches!(clash, Err(Error::CurvatureAntisymmetry { .. })));
        assert!(CurvatureData::from_entries(2, [((0, 0, 0, 1), int(1))]).is_err());
    }

    #[test]
    fn pontryagin_oracles() {
        let p = pontryagin_forms(&cp2()).unwrap();
        assert_eq!(top(&p[1], vol_cp2()), int(3));
        assert!(pontryagin_forms(&sphere(4)).unwrap()[1].is_zero());
        let flat = pontryagin_forms(&CurvatureData::flat(4).unwrap()).unwrap();
        assert!(flat[1].is_zero());
    }

    #[test]
    fn euler_characteristics() {
        assert_eq!(top(&euler_form(&sphere(2)).unwrap(), vol_s2()), int(2));
        assert_eq!(top(&euler_form(&sphere(4)).unwrap(), vol_s4()), int(2));
        assert_eq!(top(&euler_form(&cp2()).unwrap(), vol_cp2()), int(3));
        assert!(matches!(euler_form(&sphere(6)), Err(Error::UnsupportedEuler(6))));
    }

    #[test]
    fn genera_on_cp2() {
        let a = ahat_form(&cp2()).unwrap();
        assert!(a.component(2).unwrap().is_zero());
        assert_eq!(top(&a, vol_cp2()), rat(-1, 8));
        assert_eq!(top(&l_genus(&cp2()).unwrap(), vol_cp2()), int(1));
        assert_eq!(ahat_form(&CurvatureData::flat(4).unwrap()).unwrap(), FormPoly::one(4));
    }

    /// Coefficients of `f(y) = Π (√y/2)/sinh(√y/2)` (or `√y/tanh √y`) in `y`,
    /// expanded over four variables and compared with the stored genus
    /// polynomials in `p₁ = Σy_i`, `p₂ = Σ_{i<j} y_i y_j`.
    fn series_inverse(a: &[Rational]) -> Vec<Rational> {
        let mut b = vec![Rational::zero(); a.len()];
        b[0] = a[0].recip();
        for k in 1..a.len() {
            let s: Rational = (1..=k).map(|i| &a[i] * &b[k - i]).sum();
            b[k] = -s * &b[0];
        }
        b
    }

    fn factorial(k: usize) -> Rational {
        (1..=k as i64).fold(Rational::one(), |acc, x| acc * int(x))
    }

    type Poly = BTreeMap<Vec<u32>, Rational>;

    fn product_series(one_var: &[Rational], vars: usize, max_deg: u32) -> Poly {
        let mut acc: Poly = BTreeMap::from([(vec![0; vars], Rational::one())]);
        for v in 0..vars {
            let mut next = Poly::new();
            for (mono, c) in &acc {
                let deg: u32 = mono.iter().sum();
                for (k, a) in one_var.iter().enumerate() {
                    if deg + k as u32 > max_deg || a.is_zero() {
                        continue;
                    }
                    let mut m = mono.clone();
                    m[v] += k as u32;
                    *next.entry(m).or_insert_with(Rational::zero) += c * a;
                }
            }
            acc = next;
        }
        acc.retain(|_, c| !c.is_zero());
        acc
    }

    fn genus_poly(c1: Rational, c11: Rational, c2: Rational, vars: usize) -> Poly {
        // c1·p1 + c11·p1² + c2·p2 + 1 expanded in the y_i
        let mut out = Poly::new();
        let mut add = |m: Vec<u32>, c: Rational| {
            *out.entry(m).or_insert_with(Rational::zero) += c;
        };
        add(vec![0; vars], Rational::one());
        for i in 0..vars {
            let mut m = vec![0; vars];
            m[i] = 1;
            add(m, c1.clone());
            for j in 0..vars {
                let mut m = vec![0; vars];
                m[i] += 1;
                m[j] += 1;
                add(m.clone(), c11.clone());
                if i < j {
                    add(m, c2.clone());
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    #[test]
    fn ahat_coefficients_match_sinh_expansion() {
        // sinh(z)/z at z = √y/2: Σ y^k / (4^k (2k+1)!)
        let sinh_ratio: Vec<Rational> =
            (0..3).map(|k| (factorial(2 * k + 1) * int(4i64.pow(k as u32))).recip()).collect();
        let f = series_inverse(&sinh_ratio);
        assert_eq!(f[1], rat(-1, 24));
        assert_eq!(product_series(&f, 4, 2), genus_poly(rat(-1, 24), rat(7, 5760), rat(-4, 5760), 4));
    }

    #[test]
    fn l_coefficients_match_tanh_expansion() {
        // tanh(x)/x = sinh(x)/x · (cosh x)⁻¹ with y = x²
        let sinh_x: Vec<Rational> = (0..3).map(|k| factorial(2 * k + 1).recip()).collect();
        let cosh_x: Vec<Rational> = (0..3).map(|k| factorial(2 * k).recip()).collect();
        let cosh_over_sinh = {
            let inv = series_inverse(&sinh_x);
            (0..3).map(|k| (0..=k).map(|i| &cosh_x[i] * &inv[k - i]).sum()).collect::<Vec<Rational>>()
        };
        assert_eq!(product_series(&cosh_over_sinh, 4, 2), genus_poly(rat(1, 3), rat(-1, 45), rat(7, 45), 4));
    }

    #[test]
    fn sphere_spinor_curvature() {
        let r = sphere(2);
        let cliff = build_clifford(2).unwrap();
        let om = omega_form(&r, &cliff).unwrap();
        assert!(om.mat_trace().is_zero());
        let (form, m) = &om.numeric_components()[0];
        assert_eq!(form, &FormPoly::basis(2, &[0, 1], int(1)).unwrap());
        let c = cliff.generators();
        assert_eq!(m, &(&c[0] * &c[1]).scale(&GaussRat::real(rat(-1, 2))));
        // eigenvalues ±i/2: m² = −¼
        assert_eq!(m * m, CMatrix::identity(2).scale(&GaussRat::real(rat(-1, 4))));
    }

    #[test]
    fn signature_from_twisted_ahat() {
        let r = cp2();
        let cliff = build_clifford(4).unwrap();
        let nat = build_irrep(&Partition::new(vec![1]).unwrap(), 4, &IrrepConfig::default()).unwrap();
        let ch = rel_chern(&nat, &r, &cliff).unwrap();
        assert_eq!(ch.constant_term(), QPi::from_int(4));
        assert!(ch.component(2).unwrap().is_zero());
        let top_form = ahat_form(&r).unwrap().wedge(&ch).unwrap();
        assert_eq!(top(&top_form, vol_cp2()), int(1));
    }

    #[test]
    fn frame_rotation_preserves_integrals() {
        let a: Vec<Vec<Rational>> = vec![
            vec![int(0), rat(1, 2), int(0), rat(-1, 3)],
            vec![rat(-1, 2), int(0), int(2), int(0)],
            vec![int(0), int(-2), int(0), rat(1, 5)],
            vec![rat(1, 3), int(0), rat(-1, 5), int(0)],
        ];
        let q = cayley_orthogonal(&a).unwrap();
        let r = cp2();
        let rr = r.rotated(&q).unwrap();
        assert_ne!(r, rr);
        for f in [ahat_form, l_genus, euler_form] {
            assert_eq!(top(&f(&r).unwrap(), vol_cp2()), top(&f(&rr).unwrap(), vol_cp2()));
        }
    }

    #[test]
    fn product_multiplicativity() {
        let s2 = sphere(2);
        let prod = s2.block_sum(&s2).unwrap();
        let a = ahat_form(&prod).unwrap();
        let lifted =
            |f: &FormPoly, off: usize| FormPoly::from_raw(4, f.raw_terms().map(|(m, c)| (m << off, c.clone())));
        let fa = ahat_form(&s2).unwrap();
        assert_eq!(a, lifted(&fa, 0).wedge(&lifted(&fa, 2)).unwrap());
        assert!(pontryagin_forms(&prod).unwrap()[1].is_zero());
    }
}
