//! Exact coefficient rings.
//!
//! [`GaussRat`] is a Gaussian rational `a + bi` with `a, b ∈ ℚ`. [`QPi`] is a
//! finite Laurent polynomial in `π` with Gaussian-rational coefficients; it is
//! the ring every characteristic form lives over, so the `1/(2π)` factors of
//! Chern–Weil theory cancel exactly against the `π`-powers of model volumes.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num::{BigInt, BigRational, One, Signed, Zero};

/// Shorthand for an exact rational.
pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Formats a rational as `p/q` (or `p` when integral).
pub fn fmt_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Gaussian rational `re + im·i`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussRat {
    pub re: Rational,
    pub im: Rational,
}

impl GaussRat {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussRat { re, im }
    }

    pub fn real(re: Rational) -> Self {
        GaussRat { re, im: Rational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::real(int(n))
    }

    pub fn i() -> Self {
        GaussRat { re: Rational::zero(), im: Rational::one() }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRat { re: self.re.clone(), im: -&self.im }
    }

    /// Squared modulus `re² + im²`.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(GaussRat { re: &self.re / &n, im: -&self.im / &n })
    }

    pub fn scale(&self, q: &Rational) -> Self {
        GaussRat { re: &self.re * q, im: &self.im * q }
    }

    /// `i^k` for any integer `k`.
    pub fn i_pow(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => Self::one(),
            1 => Self::i(),
            2 => Self::from_int(-1),
            _ => -Self::i(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Real rational value, if the imaginary part vanishes.
    pub fn to_real(&self) -> Option<Rational> {
        self.is_real().then(|| self.re.clone())
    }
}

/// `3i`, `1/2*i`.
fn fmt_imaginary(q: &Rational) -> String {
    if q.is_integer() {
        format!("{}i", fmt_rational(q))
    } else {
        format!("{}*i", fmt_rational(q))
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", fmt_rational(&self.re)),
            (true, false) => write!(f, "{}", fmt_imaginary(&self.im)),
            (false, false) => {
                let sign = if self.im.is_negative() { "-" } else { "+" };
                write!(f, "{}{}{}", fmt_rational(&self.re), sign, fmt_imaginary(&self.im.abs()))
            }
        }
    }
}

impl fmt::Debug for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<Rational> for GaussRat {
    fn from(q: Rational) -> Self {
        GaussRat::real(q)
    }
}

impl From<i64> for GaussRat {
    fn from(n: i64) -> Self {
        GaussRat::from_int(n)
    }
}

impl<'a> Add<&'a GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn add(self, o: &GaussRat) -> GaussRat {
        GaussRat { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl<'a> Sub<&'a GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn sub(self, o: &GaussRat) -> GaussRat {
        GaussRat { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}

impl<'a> Mul<&'a GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn mul(self, o: &GaussRat) -> GaussRat {
        if self.im.is_zero() && o.im.is_zero() {
            return GaussRat::real(&self.re * &o.re);
        }
        GaussRat { re: &self.re * &o.re - &self.im * &o.im, im: &self.re * &o.im + &self.im * &o.re }
    }
}

impl<'a> Div<&'a GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: &GaussRat) -> GaussRat {
        self * &o.inv().expect("division by zero Gaussian rational")
    }
}

impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat { re: -self.re, im: -self.im }
    }
}

impl Neg for &GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat { re: -&self.re, im: -&self.im }
    }
}

macro_rules! forward_owned {
    ($t:ty, $($tr:ident $m:ident),*) => {$(
        impl $tr<$t> for $t {
            type Output = $t;
            fn $m(self, o: $t) -> $t { (&self).$m(&o) }
        }
        impl<'a> $tr<&'a $t> for $t {
            type Output = $t;
            fn $m(self, o: &'a $t) -> $t { (&self).$m(o) }
        }
    )*};
}

forward_owned!(GaussRat, Add add, Sub sub, Mul mul, Div div);

impl AddAssign<&GaussRat> for GaussRat {
    fn add_assign(&mut self, o: &GaussRat) {
        self.re += &o.re;
        self.im += &o.im;
    }
}

impl SubAssign<&GaussRat> for GaussRat {
    fn sub_assign(&mut self, o: &GaussRat) {
        self.re -= &o.re;
        self.im -= &o.im;
    }
}

/// Finite sum `Σ_k c_k π^k` with Gaussian-rational `c_k` and `k ∈ ℤ`.
///
/// Zero coefficients are never stored, so structural equality is value
/// equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPi {
    terms: BTreeMap<i32, GaussRat>,
}

impl QPi {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(GaussRat::one())
    }

    pub fn constant(c: GaussRat) -> Self {
        Self::monomial(c, 0)
    }

    pub fn rational(q: Rational) -> Self {
        Self::constant(GaussRat::real(q))
    }

    pub fn from_int(n: i64) -> Self {
        Self::rational(int(n))
    }

    /// `c · π^k`.
    pub fn monomial(c: GaussRat, k: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        QPi { terms }
    }

    pub fn pi_pow(k: i32) -> Self {
        Self::monomial(GaussRat::one(), k)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &GaussRat)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn coefficient(&self, k: i32) -> GaussRat {
        self.terms.get(&k).cloned().unwrap_or_default()
    }

    /// A scalar is reportable iff it is a real rational with no `π` content.
    pub fn is_reportable(&self) -> bool {
        self.to_rational().is_some()
    }

    pub fn to_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&0).and_then(GaussRat::to_real),
            _ => None,
        }
    }

    /// The single `π`-degree of a nonzero monomial scalar.
    pub fn pi_degree(&self) -> Option<i32> {
        if self.terms.len() == 1 {
            self.terms.keys().next().copied()
        } else {
            None
        }
    }

    pub fn scale(&self, c: &GaussRat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QPi { terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect() }
    }

    pub fn scale_rational(&self, q: &Rational) -> Self {
        self.scale(&GaussRat::real(q.clone()))
    }

    pub fn conj(&self) -> Self {
        QPi { terms: self.terms.iter().map(|(k, v)| (*k, v.conj())).collect() }
    }

    fn accumulate(&mut self, k: i32, c: &GaussRat) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(k).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&k);
        }
    }
}

impl fmt::Display for QPi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}", fmt_pi_term(c, *k))?;
        }
        Ok(())
    }
}

impl fmt::Debug for QPi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `c·π^k` in the compact form used by reports: `pi^2/2`, `4*pi`, `-1/8`.
fn fmt_pi_term(c: &GaussRat, k: i32) -> String {
    if k == 0 {
        return c.to_string();
    }
    let pi = if k == 1 { "pi".to_string() } else { format!("pi^{k}") };
    match c.to_real() {
        Some(q) => {
            let sign = if q.is_negative() { "-" } else { "" };
            let q = q.abs();
            let num = q.numer();
            let den = q.denom();
            let head = if num.is_one() { pi } else { format!("{num}*{pi}") };
            if den.is_one() {
                format!("{sign}{head}")
            } else {
                format!("{sign}{head}/{den}")
            }
        }
        None => format!("({c})*{pi}"),
    }
}

impl<'a> Add<&'a QPi> for &'a QPi {
    type Output = QPi;
    fn add(self, o: &QPi) -> QPi {
        let mut out = self.clone();
        for (k, c) in &o.terms {
            out.accumulate(*k, c);
        }
        out
    }
}

impl<'a> Sub<&'a QPi> for &'a QPi {
    type Output = QPi;
    fn sub(self, o: &QPi) -> QPi {
        let mut out = self.clone();
        for (k, c) in &o.terms {
            out.accumulate(*k, &-c);
        }
        out
    }
}

impl<'a> Mul<&'a QPi> for &'a QPi {
    type Output = QPi;
    fn mul(self, o: &QPi) -> QPi {
        let mut out = QPi::zero();
        for (k1, c1) in &self.terms {
            for (k2, c2) in &o.terms {
                out.accumulate(k1 + k2, &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for &QPi {
    type Output = QPi;
    fn neg(self) -> QPi {
        QPi { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }
}

impl Neg for QPi {
    type Output = QPi;
    fn neg(self) -> QPi {
        -&self
    }
}

forward_owned!(QPi, Add add, Sub sub, Mul mul);

impl AddAssign<&QPi> for QPi {
    fn add_assign(&mut self, o: &QPi) {
        for (k, c) in &o.terms {
            self.accumulate(*k, c);
        }
    }
}

impl From<GaussRat> for QPi {
    fn from(c: GaussRat) -> Self {
        QPi::constant(c)
    }
}
