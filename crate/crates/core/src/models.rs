//! Homogeneous model manifolds with constant curvature tables, and the
//! plain-text model format.
//!
//! ```text
//! # comment
//! name cp2
//! dim 4
//! volume pi^2/2
//! signature 1        (optional)
//! euler 3            (optional)
//! R 1 2 1 2 4        (one-based i j k l, rational value)
//! ```
//!
//! Only entries with `i < j` and `k < l` need to be listed; the remaining
//! antisymmetric entries are filled in and the first Bianchi identity is
//! checked.

use std::fmt::Write as _;

use num::{One, Zero};

use crate::characteristic::CurvatureData;
use crate::error::{Error, Result};
use crate::forms::FormPoly;
use crate::scalar::{int, rat, GaussRat, QPi, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelManifold {
    pub name: String,
    pub curvature: CurvatureData,
    pub volume: QPi,
    pub signature: Option<i64>,
    pub euler: Option<i64>,
}

impl ModelManifold {
    pub fn n(&self) -> usize {
        self.curvature.n()
    }

    /// Same model in a rotated orthonormal frame.
    pub fn rotated(&self, q: &[Vec<Rational>]) -> Result<Self> {
        Ok(ModelManifold { curvature: self.curvature.rotated(q)?, ..self.clone() })
    }

    fn signature_or_trivial(&self) -> Option<i64> {
        if !self.n().is_multiple_of(4) {
            Some(0)
        } else {
            self.signature
        }
    }
}

fn round_sphere(n: usize) -> CurvatureData {
    let mut e = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            e.push(((i, j, i, j), Rational::one()));
        }
    }
    CurvatureData::from_entries(n, e).expect("constant curvature satisfies Bianchi")
}

/// Fubini–Study, holomorphic sectional curvature 4, frame `(e₁, Je₁ = e₂, e₃, Je₃ = e₄)`.
const CP2_TABLE: [(usize, usize, usize, usize, i64); 12] = [
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

fn pi_volume(c: Rational, k: i32) -> QPi {
    QPi::monomial(GaussRat::real(c), k)
}

pub fn s2() -> ModelManifold {
    ModelManifold {
        name: "s2".into(),
        curvature: round_sphere(2),
        volume: pi_volume(int(4), 1),
        signature: None,
        euler: Some(2),
    }
}

pub fn s4() -> ModelManifold {
    ModelManifold {
        name: "s4".into(),
        curvature: round_sphere(4),
        volume: pi_volume(rat(8, 3), 2),
        signature: Some(0),
        euler: Some(2),
    }
}

pub fn cp2() -> ModelManifold {
    let curvature =
        CurvatureData::from_entries(4, CP2_TABLE.iter().map(|&(i, j, k, l, v)| ((i - 1, j - 1, k - 1, l - 1), int(v))))
            .expect("Fubini–Study table satisfies Bianchi");
    ModelManifold { name: "cp2".into(), curvature, volume: pi_volume(rat(1, 2), 2), signature: Some(1), euler: Some(3) }
}

pub fn t4() -> ModelManifold {
    ModelManifold {
        name: "t4".into(),
        curvature: CurvatureData::flat(4).expect("flat"),
        volume: QPi::one(),
        signature: Some(0),
        euler: Some(0),
    }
}

/// Riemannian product with block-diagonal curvature.
pub fn product(a: &ModelManifold, b: &ModelManifold) -> Result<ModelManifold> {
    let mul = |x: Option<i64>, y: Option<i64>| x.zip(y).map(|(x, y)| x * y);
    Ok(ModelManifold {
        name: format!("{}x{}", a.name, b.name),
        curvature: a.curvature.block_sum(&b.curvature)?,
        volume: &a.volume * &b.volume,
        signature: mul(a.signature_or_trivial(), b.signature_or_trivial()),
        euler: mul(a.euler, b.euler),
    })
}

/// `s2`, `s4`, `cp2`, `t4`, `s2xs2`.
pub fn catalog() -> Vec<ModelManifold> {
    let s2 = s2();
    let s2xs2 = product(&s2, &s2).expect("product of catalog models");
    vec![s2, s4(), cp2(), t4(), s2xs2]
}

pub fn lookup(name: &str) -> Result<ModelManifold> {
    catalog().into_iter().find(|m| m.name == name).ok_or_else(|| Error::UnknownModel(name.to_string()))
}

/// `top_coefficient(form) · volume`.
pub fn integrate(form: &FormPoly, m: &ModelManifold) -> Result<QPi> {
    if form.n() != m.n() {
        return Err(Error::DimensionMismatch { expected: m.n(), found: form.n() });
    }
    Ok(&form.top_coefficient() * &m.volume)
}

/// Parses `[-]rational`, `pi`, `pi^k`, joined by `*`, optionally followed by
/// `/d` (e.g. `pi^2/2`, `8*pi^2/3`, `1/2*pi^2`).
pub fn parse_volume(s: &str) -> Result<QPi> {
    let bad = || Error::InvalidArgument(format!("bad volume '{s}'"));
    let s = s.trim();
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let mut coeff = Rational::one();
    let mut power = 0i32;
    for factor in body.split('*') {
        let factor = factor.trim();
        if let Some(rest) = factor.strip_prefix("pi") {
            let (exp, div) = match rest.split_once('/') {
                Some((e, d)) => (e, Some(d)),
                None => (rest, None),
            };
            power += match exp.strip_prefix('^') {
                Some(e) => e.parse::<i32>().map_err(|_| bad())?,
                None if exp.is_empty() => 1,
                None => return Err(bad()),
            };
            if let Some(d) = div {
                let d: Rational = d.parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                coeff /= d;
            }
        } else {
            let q: Rational = factor.parse().map_err(|_| bad())?;
            coeff *= q;
        }
    }
    if neg {
        coeff = -coeff;
    }
    Ok(pi_volume(coeff, power))
}

pub fn parse_model(text: &str) -> Result<ModelManifold> {
    let mut name = None;
    let mut dim = None;
    let mut volume = None;
    let mut signature = None;
    let mut euler = None;
    let mut entries = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: &str| Error::ModelParse { line: lineno + 1, msg: msg.to_string() };
        let (key, rest) = line.split_once(char::is_whitespace).ok_or_else(|| err("expected 'key value'"))?;
        let rest = rest.trim();
        match key {
            "name" => name = Some(rest.to_string()),
            "dim" => dim = Some(rest.parse::<usize>().map_err(|_| err("dim must be a positive integer"))?),
            "volume" => volume = Some(parse_volume(rest).map_err(|e| err(&e.to_string()))?),
            "signature" => signature = Some(rest.parse::<i64>().map_err(|_| err("signature must be an integer"))?),
            "euler" => euler = Some(rest.parse::<i64>().map_err(|_| err("euler must be an integer"))?),
            "R" => {
                let f: Vec<&str> = rest.split_whitespace().collect();
                if f.len() != 5 {
                    return Err(err("R needs four indices and a value"));
                }
                let mut ix = [0usize; 4];
                for (slot, t) in ix.iter_mut().zip(&f[..4]) {
                    let v: usize = t.parse().map_err(|_| err("index must be a positive integer"))?;
                    if v == 0 {
                        return Err(err("indices are one-based"));
                    }
                    *slot = v - 1;
                }
                let v: Rational = f[4].parse().map_err(|_| err("value must be a rational p/q"))?;
                entries.push(((ix[0], ix[1], ix[2], ix[3]), v, lineno + 1));
            }
            other => return Err(err(&format!("unknown key '{other}'"))),
        }
    }
    let missing = |what: &str| Error::ModelParse { line: 0, msg: format!("missing '{what}'") };
    let n = dim.ok_or_else(|| missing("dim"))?;
    if let Some((_, _, line)) = entries.iter().find(|(ix, _, _)| [ix.0, ix.1, ix.2, ix.3].iter().any(|&x| x >= n)) {
        return Err(Error::ModelParse { line: *line, msg: format!("index exceeds dim {n}") });
    }
    let curvature = CurvatureData::from_entries(n, entries.into_iter().map(|(ix, v, _)| (ix, v)))?;
    Ok(ModelManifold {
        name: name.ok_or_else(|| missing("name"))?,
        curvature,
        volume: volume.ok_or_else(|| missing("volume"))?,
        signature,
        euler,
    })
}

pub fn to_text(m: &ModelManifold) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "name {}", m.name);
    let _ = writeln!(s, "dim {}", m.n());
    let _ = writeln!(s, "volume {}", m.volume);
    if let Some(sig) = m.signature {
        let _ = writeln!(s, "signature {sig}");
    }
    if let Some(e) = m.euler {
        let _ = writeln!(s, "euler {e}");
    }
    for ((i, j, k, l), v) in m.curvature.nonzero_entries() {
        let _ = writeln!(s, "R {} {} {} {} {}", i + 1, j + 1, k + 1, l + 1, v);
    }
    s
}
