//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any
//! failure.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use index_character::characteristic::{
    ahat_form, cayley_orthogonal, euler_form, l_genus, omega_tilde, pontryagin_forms, represent, CurvatureData,
};
use index_character::cli;
use index_character::clifford::build_clifford;
use index_character::distributions::{central_pair, env_pair, EnvElement, TestFunction};
use index_character::engine::{Engine, IndexReport};
use index_character::forms::FormPoly;
use index_character::matrix::CMatrix;
use index_character::models::{catalog, cp2, integrate, lookup, product, s2, s4, ModelManifold};
use index_character::scalar::{fmt_rational, int, rat, GaussRat, Rational};
use index_character::sun::{enumerate_nat_class, weyl_dim, IrrepConfig, Partition, SuBasis};
use num::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<(), String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Check + 'a>);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn q(v: Result<index_character::scalar::QPi, index_character::error::Error>) -> Result<Rational, String> {
    let v = v.map_err(|e| e.to_string())?;
    v.to_rational().ok_or_else(|| format!("{v} is not a real rational"))
}

fn integral(form: &FormPoly, m: &ModelManifold) -> Result<Rational, String> {
    q(integrate(form, m))
}

fn audit_engine() -> Engine {
    Engine::new(IrrepConfig { max_boxes: 9 })
}

fn audit_boxes(m: &ModelManifold) -> usize {
    if m.n() == 2 {
        9
    } else {
        5
    }
}

fn audit(engine: &Engine, m: &ModelManifold) -> Result<IndexReport, String> {
    engine.integrality_audit(m, audit_boxes(m)).map_err(|e| e.to_string())
}

fn fractional_index() -> Check {
    for (name, want) in [("cp2", "-1/8"), ("s4", "0"), ("t4", "0"), ("s2xs2", "0")] {
        let start = Instant::now();
        let (code, out) = cli::run(["index-character", "frac-index", name]);
        let took = start.elapsed();
        ensure!(code == 0 && out.trim() == want, "frac-index {name}: exit {code}, got {out:?}, want {want}");
        ensure!(took < Duration::from_secs(1), "frac-index {name} took {took:?}");
    }
    Ok(())
}

fn signature_recovery() -> Check {
    let start = Instant::now();
    let engine = Engine::default();
    let nat = Partition::new(vec![1]).unwrap();
    for (name, want) in [("cp2", 1), ("s4", 0), ("t4", 0), ("s2xs2", 0)] {
        let m = lookup(name).unwrap();
        let index = engine.index_character(&m, &nat).map_err(|e| e.to_string())?;
        let l = integral(&l_genus(&m.curvature).unwrap(), &m)?;
        ensure!(index == int(want) && l == int(want), "{name}: index {index}, ∫L {l}, want {want}");
        engine.signature_check(&m).map_err(|e| e.to_string())?;
    }
    let took = start.elapsed();
    ensure!(took < Duration::from_secs(5), "took {took:?}");
    Ok(())
}

fn theorem_corollary(engine: &Engine) -> Check {
    for m in catalog() {
        let report = audit(engine, &m)?;
        for row in &report.rows {
            ensure!(row.error.is_none(), "{} {}: {}", m.name, row.partition, row.error.as_deref().unwrap_or(""));
            ensure!(
                row.consistent,
                "{} {}: pairing {:?} vs index {:?}",
                m.name,
                row.partition,
                row.distribution,
                row.index
            );
        }
        ensure!(
            report.flags.bump_matches_fractional_index,
            "{}: bump {} vs ∫Â {}",
            m.name,
            fmt_rational(&report.bump_pairing),
            fmt_rational(&report.fractional_index)
        );
    }
    Ok(())
}

fn integrality(engine: &Engine) -> Check {
    let start = Instant::now();
    let m = cp2();
    let report = audit(engine, &m)?;
    ensure!(report.rows.len() == 6, "expected 6 partitions, got {}", report.rows.len());
    let ahat = rat(-1, 8);
    for row in &report.rows {
        let index = row.index.clone().ok_or_else(|| format!("{}: no index", row.partition))?;
        ensure!(index.is_integer(), "{}: {index} not integral", row.partition);
        let oracle = common::index_oracle(&m, &ahat, &row.partition);
        ensure!(index == oracle, "{}: {index} vs weight oracle {oracle}", row.partition);
    }
    let report = audit(engine, &s2())?;
    ensure!(report.rows.len() == 5, "expected 5 SU(2) partitions, got {}", report.rows.len());
    for row in &report.rows {
        ensure!(row.index == Some(Rational::zero()), "S² {}: {:?}", row.partition, row.index);
    }
    let took = start.elapsed();
    ensure!(took < Duration::from_secs(600), "took {took:?}");
    Ok(())
}

fn lemma_suite(engine: &Engine) -> Check {
    for (n, boxes, seed) in [(2, 9, 11), (4, 5, 13)] {
        let r = engine.lemma_check(n, boxes, 20, seed).map_err(|e| e.to_string())?;
        ensure!(r.elements == 1 + (n * n - 1) + 1 + 20, "SU({n}): {} elements", r.elements);
        ensure!(r.passed(), "SU({n}): {} failures, first {}", r.failures.len(), r.failures[0]);
    }
    Ok(())
}

/// Inverse of a power series with non-zero constant term.
fn series_inverse(a: &[Rational]) -> Vec<Rational> {
    let mut b = vec![Rational::zero(); a.len()];
    b[0] = a[0].recip();
    for k in 1..a.len() {
        let s: Rational = (1..=k).map(|i| &a[i] * &b[k - i]).sum();
        b[k] = -s * &b[0];
    }
    b
}

fn oracle_suite(engine: &Engine) -> Check {
    for (m, want) in [(s2(), 2), (s4(), 2), (cp2(), 3)] {
        let e = integral(&euler_form(&m.curvature).unwrap(), &m)?;
        ensure!(e == int(want), "∫e({}) = {e}", m.name);
    }
    let c = cp2();
    let p1 = pontryagin_forms(&c.curvature).unwrap()[1].clone();
    ensure!(integral(&p1, &c)? == int(3), "∫p₁(CP²) ≠ 3");

    // (x/2)/sinh(x/2) = f(x²) with f = 1 + a₁y + a₂y² + …; on Pontryagin
    // classes Π f(y_i) = 1 + a₁p₁ + a₂p₁² + (a₁² − 2a₂)p₂.
    let fact = |k: i64| (1..=k).fold(Rational::one(), |acc, x| acc * int(x));
    let sinh_ratio: Vec<Rational> = (0..3).map(|k| (fact(2 * k + 1) * int(4i64.pow(k as u32))).recip()).collect();
    let f = series_inverse(&sinh_ratio);
    let (a1, a2) = (f[1].clone(), f[2].clone());
    let cc = product(&c, &c).unwrap();
    for m in [c.clone(), cc.clone()] {
        let p = pontryagin_forms(&m.curvature).unwrap();
        let p1 = &p[1];
        let p2 = p.get(2).cloned().unwrap_or_else(|| FormPoly::zero(m.n()));
        let predicted = &(&p1.scale_rational(&a1) + &p1.wedge(p1).unwrap().scale_rational(&a2))
            + &p2.scale_rational(&(&a1 * &a1 - &a2 * int(2)));
        let top = m.n();
        let want = integral(&predicted.component(top).unwrap(), &m)?;
        let got = integral(&ahat_form(&m.curvature).unwrap(), &m)?;
        ensure!(got == want, "∫Â({}) = {got}, series gives {want}", m.name);
    }
    ensure!(integral(&ahat_form(&cc.curvature).unwrap(), &cc)? == rat(1, 64), "∫Â(CP²×CP²) ≠ (−1/8)²");

    let cliff = build_clifford(4).unwrap();
    let om = omega_tilde(&c.curvature, &cliff).unwrap();
    for p in enumerate_nat_class(4, 5) {
        let irrep = engine.cache().get(&p, 4).map_err(|e| e.to_string())?;
        let got = represent(&om, &irrep).unwrap().trace_powers(2).unwrap();
        ensure!(got == common::trace_powers_oracle(&c, &p), "Tr(dπ(Ω̃)ʲ) mismatch for {p}");
    }
    Ok(())
}

fn casimir_oracle(p: &Partition, n: usize) -> Rational {
    let mut s = Rational::zero();
    for (i, &l) in p.parts().iter().enumerate() {
        let l = l as i64;
        s += int(l * (l - 2 * (i as i64 + 1) + n as i64 + 1));
    }
    let b = p.boxes() as i64;
    s - rat(b * b, n as i64)
}

fn random_su(basis: &SuBasis, rng: &mut impl Rng) -> CMatrix {
    let coords: Vec<GaussRat> = (0..basis.dim()).map(|_| GaussRat::from_int(rng.gen_range(-3..=3))).collect();
    basis.compose(&coords)
}

/// Cayley transform of a random skew-Hermitian Gaussian matrix.
fn random_unitary(n: usize, rng: &mut impl Rng) -> CMatrix {
    let mut k = CMatrix::zeros(n, n);
    for i in 0..n {
        k.set(i, i, GaussRat::new(Rational::zero(), rat(rng.gen_range(-2..=2), 1)));
        for j in i + 1..n {
            let z = GaussRat::new(rat(rng.gen_range(-2..=2), 1), rat(rng.gen_range(-2..=2), 1));
            k.set(j, i, -z.conj());
            k.set(i, j, z);
        }
    }
    let id = CMatrix::identity(n);
    &(&id - &k) * &(&id + &k).inverse().expect("I + K is invertible for skew-Hermitian K")
}

fn structural(engine: &Engine) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for n in [2, 4, 6, 8] {
        ensure!(build_clifford(n).unwrap().check_invariants(), "Clifford relations fail for n = {n}");
    }
    for n in [4, 6] {
        let cliff = build_clifford(n).unwrap();
        for _ in 0..4 {
            let a = common::random_antisymmetric(n, &mut rng);
            let b = common::random_antisymmetric(n, &mut rng);
            let (am, bm) = (CMatrix::from_rational_rows(&a), CMatrix::from_rational_rows(&b));
            let ab = am.commutator(&bm);
            let ab: Vec<Vec<Rational>> = (0..n).map(|i| (0..n).map(|j| ab.get(i, j).re.clone()).collect()).collect();
            let lhs = cliff.spin_embed(&a).unwrap().commutator(&cliff.spin_embed(&b).unwrap());
            ensure!(lhs == cliff.spin_embed(&ab).unwrap(), "spin_embed bracket fails (n = {n})");
            let v: Vec<Rational> = (0..n).map(|_| rat(rng.gen_range(-3..=3), 1)).collect();
            ensure!(cliff.adjoint_action_check(&a, &v).unwrap(), "derivation identity fails (n = {n})");
        }
    }

    for (n, boxes) in [(2, 9), (4, 5)] {
        let basis = SuBasis::standard(n);
        for p in enumerate_nat_class(n, boxes) {
            let irrep = engine.cache().get(&p, n).map_err(|e| e.to_string())?;
            ensure!(irrep.dim() == weyl_dim(&p, n).unwrap(), "dim {p}");
            let imgs = engine.cache().lie_images(&p, &basis).map_err(|e| e.to_string())?;
            for a in 0..basis.dim() {
                for b in a + 1..basis.dim() {
                    let br = basis.elements()[a].commutator(&basis.elements()[b]);
                    ensure!(imgs[a].commutator(&imgs[b]) == irrep.image_of(&br).unwrap(), "bracket {p} ({a},{b})");
                }
            }
            let cas = irrep.casimir(&basis).unwrap();
            let want = CMatrix::identity(irrep.dim()).scale(&GaussRat::real(casimir_oracle(&p, n)));
            ensure!(cas == want, "Casimir of {p} in SU({n})");
        }
    }

    let nat = Partition::new(vec![1]).unwrap();
    let twisted = Partition::new(vec![2, 2, 1]).unwrap();
    for m in [cp2(), lookup("s2xs2").unwrap()] {
        let rot = m.rotated(&cayley_orthogonal(&common::random_antisymmetric(4, &mut rng)).unwrap()).unwrap();
        type Genus = fn(&CurvatureData) -> index_character::error::Result<FormPoly>;
        for (label, f) in [("Â", ahat_form as Genus), ("L", l_genus), ("e", euler_form)] {
            let a = integral(&f(&m.curvature).unwrap(), &m)?;
            let b = integral(&f(&rot.curvature).unwrap(), &rot)?;
            ensure!(a == b, "∫{label}({}) changes under rotation: {a} vs {b}", m.name);
        }
        for p in [&nat, &twisted] {
            let a = engine.index_character(&m, p).map_err(|e| e.to_string())?;
            let b = engine.index_character(&rot, p).map_err(|e| e.to_string())?;
            ensure!(a == b, "index {p} on {} changes under rotation", m.name);
        }
    }

    for m in catalog() {
        let report = audit(engine, &m)?;
        ensure!(report.flags.all_reportable, "{}: unreportable values", m.name);
    }

    for (n, parts) in [(2, vec![vec![1], vec![3]]), (4, vec![vec![1], vec![2, 1], vec![3, 1, 1]])] {
        let basis = SuBasis::standard(n);
        let other = basis.conjugated(&random_unitary(n, &mut rng)).map_err(|e| e.to_string())?;
        for _ in 0..3 {
            let (x, y) = (random_su(&basis, &mut rng), random_su(&basis, &mut rng));
            for p in &parts {
                let phi = TestFunction::character(&Partition::new(p.clone()).unwrap(), n).unwrap();
                let a = EnvElement::from_product(&basis, &[x.clone(), y.clone()]).unwrap();
                let b = EnvElement::from_product(&other, &[x.clone(), y.clone()]).unwrap();
                let lhs = env_pair(&a, &phi, &basis, engine.cache()).map_err(|e| e.to_string())?;
                let rhs = env_pair(&b, &phi, &other, engine.cache()).map_err(|e| e.to_string())?;
                ensure!(lhs == rhs, "env_pair depends on the basis: {lhs} vs {rhs}");
                let lhs = central_pair(&a, &phi, &basis, engine.cache()).map_err(|e| e.to_string())?;
                let rhs = central_pair(&b, &phi, &other, engine.cache()).map_err(|e| e.to_string())?;
                ensure!(lhs == rhs, "central_pair depends on the basis: {lhs} vs {rhs}");
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let engine = audit_engine();
    let criteria: Vec<Criterion> = vec![
        ("fractional index", Box::new(fractional_index)),
        ("signature recovery", Box::new(signature_recovery)),
        ("theorem/corollary consistency", Box::new(|| theorem_corollary(&engine))),
        ("integrality audit", Box::new(|| integrality(&engine))),
        ("lemma suite", Box::new(|| lemma_suite(&engine))),
        ("oracle suite", Box::new(|| oracle_suite(&engine))),
        ("structural invariants", Box::new(|| structural(&engine))),
    ];
    let mut failed = 0;
    for (name, check) in &criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        match outcome {
            Ok(()) => println!("PASS {name} ({:.2?})", start.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL {name}: {why}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
