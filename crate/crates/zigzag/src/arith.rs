//! Exact scalars and group-graded Laurent polynomials.
//!
//! [`Rational`] keeps a machine-word fast path and falls back to arbitrary
//! precision transparently; [`GaussRational`] is `ℚ(i)`. Both implement
//! [`Field`], the only interface the linear algebra needs.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    // denominator > 0, gcd = 1
    Small(i64, i64),
    // never representable as `Small`
    Big(BigRational),
}

/// Exact rational number in lowest terms with positive denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational(Repr);

impl Rational {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_i128(num as i128, den as i128)
    }

    pub fn from_int(v: i64) -> Self {
        Rational(Repr::Small(v, 1))
    }

    fn from_i128(num: i128, den: i128) -> Self {
        let g = num.gcd(&den);
        let (mut n, mut d) = (num / g, den / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) => Rational(Repr::Small(n, d)),
            _ => Rational(Repr::Big(BigRational::new(n.into(), d.into()))),
        }
    }

    pub fn from_big(r: BigRational) -> Self {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) => Rational(Repr::Small(n, d)),
            _ => Rational(Repr::Big(r)),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(r) => r.clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, _) => BigInt::from(*n),
            Repr::Big(r) => r.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(_, d) => BigInt::from(*d),
            Repr::Big(r) => r.denom().clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small(1, 1))
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(_, d) => *d == 1,
            Repr::Big(r) => r.is_integer(),
        }
    }

    /// Integer value, if this is an integer that fits in `i64`.
    pub fn to_i64(&self) -> Option<i64> {
        match &self.0 {
            Repr::Small(n, 1) => Some(*n),
            _ => None,
        }
    }

    pub fn signum(&self) -> i32 {
        match &self.0 {
            Repr::Small(n, _) => n.signum() as i32,
            Repr::Big(r) => {
                if r.is_negative() {
                    -1
                } else {
                    1
                }
            }
        }
    }

    pub fn recip(&self) -> Option<Self> {
        match &self.0 {
            Repr::Small(0, _) => None,
            Repr::Small(n, d) => Some(Self::from_i128(*d as i128, *n as i128)),
            Repr::Big(r) => Some(Self::from_big(r.recip())),
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("invalid rational `{s}`"));
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        Ok(Self::from_big(BigRational::new(n, d)))
    }
}

impl Add for &Rational {
    type Output = Rational;
    fn add(self, o: &Rational) -> Rational {
        match (&self.0, &o.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                if *b == 1 && *d == 1 {
                    if let Some(s) = a.checked_add(*c) {
                        return Rational(Repr::Small(s, 1));
                    }
                }
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                Rational::from_i128(a * d + c * b, b * d)
            }
            _ => Rational::from_big(self.to_big() + o.to_big()),
        }
    }
}

impl Sub for &Rational {
    type Output = Rational;
    fn sub(self, o: &Rational) -> Rational {
        self + &(-o)
    }
}

impl Mul for &Rational {
    type Output = Rational;
    fn mul(self, o: &Rational) -> Rational {
        match (&self.0, &o.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                if *b == 1 && *d == 1 {
                    if let Some(p) = a.checked_mul(*c) {
                        return Rational(Repr::Small(p, 1));
                    }
                }
                Rational::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => Rational::from_big(self.to_big() * o.to_big()),
        }
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        match &self.0 {
            Repr::Small(n, d) => match n.checked_neg() {
                Some(m) => Rational(Repr::Small(m, *d)),
                None => Rational::from_big(-self.to_big()),
            },
            Repr::Big(r) => Rational::from_big(-r.clone()),
        }
    }
}

macro_rules! owned_ops {
    ($t:ty) => {
        impl Add for $t {
            type Output = $t;
            fn add(self, o: $t) -> $t {
                &self + &o
            }
        }
        impl Sub for $t {
            type Output = $t;
            fn sub(self, o: $t) -> $t {
                &self - &o
            }
        }
        impl Mul for $t {
            type Output = $t;
            fn mul(self, o: $t) -> $t {
                &self * &o
            }
        }
        impl Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                -&self
            }
        }
    };
}
owned_ops!(Rational);

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128)),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(r) => write!(f, "{r}"),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational::from_int(v)
    }
}

/// Element `re + im·i` of `ℚ(i)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussRational { re, im }
    }

    pub fn i() -> Self {
        GaussRational::new(Rational::from_int(0), Rational::from_int(1))
    }

    pub fn conj(&self) -> Self {
        GaussRational::new(self.re.clone(), -&self.im)
    }

    pub fn norm(&self) -> Rational {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }
}

impl Add for &GaussRational {
    type Output = GaussRational;
    fn add(self, o: &GaussRational) -> GaussRational {
        GaussRational::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl Sub for &GaussRational {
    type Output = GaussRational;
    fn sub(self, o: &GaussRational) -> GaussRational {
        GaussRational::new(&self.re - &o.re, &self.im - &o.im)
    }
}

impl Mul for &GaussRational {
    type Output = GaussRational;
    fn mul(self, o: &GaussRational) -> GaussRational {
        if self.im.is_zero() && o.im.is_zero() {
            return GaussRational::new(&self.re * &o.re, Rational::from_int(0));
        }
        GaussRational::new(&(&self.re * &o.re) - &(&self.im * &o.im), &(&self.re * &o.im) + &(&self.im * &o.re))
    }
}

impl Neg for &GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        GaussRational::new(-&self.re, -&self.im)
    }
}
owned_ops!(GaussRational);

impl fmt::Display for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write_imag(f, &self.im),
            (false, false) => {
                write!(f, "{}", self.re)?;
                if self.im.signum() > 0 {
                    write!(f, "+")?;
                }
                write_imag(f, &self.im)
            }
        }
    }
}

fn write_imag(f: &mut fmt::Formatter<'_>, im: &Rational) -> fmt::Result {
    if im.is_one() {
        write!(f, "i")
    } else if (-im).is_one() {
        write!(f, "-i")
    } else {
        write!(f, "{im}i")
    }
}

impl fmt::Debug for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Scalar field interface used by the algebra and linear-algebra layers.
pub trait Field: Clone + PartialEq + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static {
    /// Whether `i` is a scalar (otherwise it lives in the algebra as a basis path).
    const HAS_I: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(v: i64) -> Self;
    fn from_rational(r: Rational) -> Self;
    /// `a + b·i`; `None` when `b ≠ 0` and the field lacks `i`.
    fn from_parts(re: Rational, im: Rational) -> Option<Self>;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;
    fn re(&self) -> Rational;
    fn im(&self) -> Rational;
    fn parse(s: &str) -> Result<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

impl Field for Rational {
    const HAS_I: bool = false;

    fn zero() -> Self {
        Rational::from_int(0)
    }
    fn one() -> Self {
        Rational::from_int(1)
    }
    fn from_int(v: i64) -> Self {
        Rational::from_int(v)
    }
    fn from_rational(r: Rational) -> Self {
        r
    }
    fn from_parts(re: Rational, im: Rational) -> Option<Self> {
        im.is_zero().then_some(re)
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        self.recip()
    }
    fn re(&self) -> Rational {
        self.clone()
    }
    fn im(&self) -> Rational {
        Rational::from_int(0)
    }
    fn parse(s: &str) -> Result<Self> {
        Rational::parse(s)
    }
}

impl Field for GaussRational {
    const HAS_I: bool = true;

    fn zero() -> Self {
        GaussRational::new(Rational::from_int(0), Rational::from_int(0))
    }
    fn one() -> Self {
        GaussRational::new(Rational::from_int(1), Rational::from_int(0))
    }
    fn from_int(v: i64) -> Self {
        GaussRational::new(Rational::from_int(v), Rational::from_int(0))
    }
    fn from_rational(r: Rational) -> Self {
        GaussRational::new(r, Rational::from_int(0))
    }
    fn from_parts(re: Rational, im: Rational) -> Option<Self> {
        Some(GaussRational::new(re, im))
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        let n = self.norm().recip()?;
        let c = self.conj();
        Some(GaussRational::new(&c.re * &n, &c.im * &n))
    }
    fn re(&self) -> Rational {
        self.re.clone()
    }
    fn im(&self) -> Rational {
        self.im.clone()
    }
    /// Accepts `a`, `bi`, `a+bi`, `a-bi`, `i`, `-i` with rational `a`, `b`.
    fn parse(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Parse(format!("invalid Gaussian rational `{s}`"));
        if t.is_empty() {
            return Err(bad());
        }
        let Some(body) = t.strip_suffix('i') else {
            return Ok(GaussRational::from_rational(Rational::parse(&t)?));
        };
        // split real and imaginary parts at the last sign not in leading position
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(k, c)| (c == '+' || c == '-') && !body[..k].ends_with('/'))
            .map(|(k, _)| k)
            .last();
        let (re, im) = match split {
            Some(k) => (&body[..k], &body[k..]),
            None => ("0", body),
        };
        let im = match im {
            "" | "+" => Rational::from_int(1),
            "-" => Rational::from_int(-1),
            other => Rational::parse(other.strip_prefix('+').unwrap_or(other))?,
        };
        Ok(GaussRational::new(Rational::parse(re).map_err(|_| bad())?, im))
    }
}

/// Grading group of a [`GradedLaurent`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GradingTag {
    /// `ℤ×ℤ×ℤ/2`, variables `q1, q2, q3` with `q3² = 1`.
    Tri,
    /// `ℤ×ℤ`, variables `q1, q2`.
    Bi,
    /// `ℤ×ℤ/2`, variables `q, s` with `s² = 1`.
    Kb,
    /// `ℤ`, variable `q`.
    Ka,
}

impl GradingTag {
    pub fn arity(self) -> usize {
        match self {
            GradingTag::Tri => 3,
            GradingTag::Bi | GradingTag::Kb => 2,
            GradingTag::Ka => 1,
        }
    }

    pub fn variables(self) -> &'static [&'static str] {
        match self {
            GradingTag::Tri => &["q1", "q2", "q3"],
            GradingTag::Bi => &["q1", "q2"],
            GradingTag::Kb => &["q", "s"],
            GradingTag::Ka => &["q"],
        }
    }

    /// Index of the order-two variable, if any.
    fn torsion(self) -> Option<usize> {
        match self {
            GradingTag::Tri => Some(2),
            GradingTag::Kb => Some(1),
            _ => None,
        }
    }
}

/// Exponent tuple; unused trailing slots are zero.
pub type Exponent = [i32; 3];

/// Laurent polynomial with integer coefficients over one of the grading groups.
///
/// Rendering lists terms by total absolute degree, ties broken lexicographically
/// on the exponent tuple, e.g. `1 + q3 + q1^-1*q2 + q1^-1*q2*q3`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GradedLaurent {
    tag: GradingTag,
    terms: BTreeMap<Exponent, i64>,
}

impl GradedLaurent {
    pub fn zero(tag: GradingTag) -> Self {
        GradedLaurent { tag, terms: BTreeMap::new() }
    }

    pub fn one(tag: GradingTag) -> Self {
        Self::monomial(tag, &[], 1)
    }

    pub fn constant(tag: GradingTag, c: i64) -> Self {
        Self::monomial(tag, &[], c)
    }

    /// `coeff · q^exps`; missing exponents are zero.
    pub fn monomial(tag: GradingTag, exps: &[i32], coeff: i64) -> Self {
        let mut p = Self::zero(tag);
        p.add_term(Self::pad(tag, exps), coeff);
        p
    }

    /// The single variable with the given index.
    pub fn var(tag: GradingTag, idx: usize) -> Self {
        let mut e = [0; 3];
        e[idx] = 1;
        Self::monomial(tag, &e[..tag.arity()], 1)
    }

    fn pad(tag: GradingTag, exps: &[i32]) -> Exponent {
        assert!(exps.len() <= tag.arity(), "too many exponents for {tag:?}");
        let mut e = [0; 3];
        e[..exps.len()].copy_from_slice(exps);
        e
    }

    fn reduce(tag: GradingTag, mut e: Exponent) -> Exponent {
        if let Some(t) = tag.torsion() {
            e[t] = e[t].rem_euclid(2);
        }
        e
    }

    pub fn tag(&self) -> GradingTag {
        self.tag
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &i64)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[i32]) -> i64 {
        let e = Self::reduce(self.tag, Self::pad(self.tag, exps));
        self.terms.get(&e).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, exps: Exponent, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let e = Self::reduce(self.tag, exps);
        let slot = self.terms.entry(e).or_insert(0);
        *slot += coeff;
        if *slot == 0 {
            self.terms.remove(&e);
        }
    }

    fn check(&self, o: &Self) -> Result<()> {
        if self.tag != o.tag {
            return Err(Error::GradingMismatch);
        }
        Ok(())
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, *c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let mut out = Self::zero(self.tag);
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                out.add_term([a[0] + b[0], a[1] + b[1], a[2] + b[2]], x * y);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: i64) -> Self {
        let mut out = Self::zero(self.tag);
        for (e, x) in &self.terms {
            out.add_term(*e, x * c);
        }
        out
    }

    /// Multiply by the monomial `q^exps`.
    pub fn shift(&self, exps: &[i32]) -> Self {
        let d = Self::pad(self.tag, exps);
        let mut out = Self::zero(self.tag);
        for (e, x) in &self.terms {
            out.add_term([e[0] + d[0], e[1] + d[1], e[2] + d[2]], *x);
        }
        out
    }

    /// Image under a ring map that sends each variable to `±` a monomial of the
    /// target ring (see [`Substitution`]).
    pub fn specialize(&self, target: GradingTag, images: &[Substitution]) -> Result<Self> {
        if images.len() != self.tag.arity() {
            return Err(Error::Invalid(format!(
                "specialization needs {} images, got {}",
                self.tag.arity(),
                images.len()
            )));
        }
        for Substitution::Monomial { exps, .. } in images {
            if exps.len() > target.arity() {
                return Err(Error::Invalid("image exponent too long".into()));
            }
        }
        let mut out = Self::zero(target);
        for (e, c) in &self.terms {
            let mut coeff = *c;
            let mut exp = [0i32; 3];
            for (k, img) in images.iter().enumerate() {
                match img {
                    Substitution::Monomial { sign, exps } => {
                        if *sign < 0 && e[k].rem_euclid(2) == 1 {
                            coeff = -coeff;
                        }
                        for (slot, x) in exps.iter().enumerate() {
                            exp[slot] += x * e[k];
                        }
                    }
                }
            }
            out.add_term(exp, coeff);
        }
        Ok(out)
    }

    /// Sum of coefficients (every variable sent to 1).
    pub fn evaluate_at_one(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn parse(tag: GradingTag, s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("invalid polynomial `{s}`"));
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut out = Self::zero(tag);
        if t == "0" {
            return Ok(out);
        }
        // split into signed terms, ignoring '-' that follows '^'
        let mut pieces = Vec::new();
        let mut cur = String::new();
        for ch in t.chars() {
            if (ch == '+' || ch == '-') && !cur.is_empty() && !cur.ends_with('^') {
                pieces.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
        }
        pieces.push(cur);
        for piece in pieces {
            let (sign, body) = match piece.strip_prefix('-') {
                Some(b) => (-1, b),
                None => (1, piece.strip_prefix('+').unwrap_or(&piece)),
            };
            if body.is_empty() {
                return Err(bad());
            }
            let mut coeff = sign;
            let mut exp = [0i32; 3];
            for factor in body.split('*') {
                if let Ok(c) = factor.parse::<i64>() {
                    coeff *= c;
                    continue;
                }
                let (name, power) = match factor.split_once('^') {
                    Some((n, p)) => (n, p.parse::<i32>().map_err(|_| bad())?),
                    None => (factor, 1),
                };
                let idx = tag.variables().iter().position(|v| *v == name).ok_or_else(bad)?;
                exp[idx] += power;
            }
            out.add_term(exp, coeff);
        }
        Ok(out)
    }
}

/// Image of one variable under [`GradedLaurent::specialize`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Substitution {
    /// `sign · q^exps` in the target ring (`exps` empty means the constant `sign`).
    Monomial { sign: i8, exps: Vec<i32> },
}

impl Substitution {
    pub fn one() -> Self {
        Substitution::Monomial { sign: 1, exps: vec![] }
    }
    pub fn minus_one() -> Self {
        Substitution::Monomial { sign: -1, exps: vec![] }
    }
    pub fn var(idx: usize) -> Self {
        let mut exps = vec![0; idx + 1];
        exps[idx] = 1;
        Substitution::Monomial { sign: 1, exps }
    }
    pub fn monomial(sign: i8, exps: &[i32]) -> Self {
        Substitution::Monomial { sign, exps: exps.to_vec() }
    }
}

impl Add for &GradedLaurent {
    type Output = GradedLaurent;
    fn add(self, o: &GradedLaurent) -> GradedLaurent {
        self.try_add(o).expect("incompatible grading groups")
    }
}

impl Sub for &GradedLaurent {
    type Output = GradedLaurent;
    fn sub(self, o: &GradedLaurent) -> GradedLaurent {
        self.try_add(&o.scale(-1)).expect("incompatible grading groups")
    }
}

impl Mul for &GradedLaurent {
    type Output = GradedLaurent;
    fn mul(self, o: &GradedLaurent) -> GradedLaurent {
        self.try_mul(o).expect("incompatible grading groups")
    }
}

impl Neg for &GradedLaurent {
    type Output = GradedLaurent;
    fn neg(self) -> GradedLaurent {
        self.scale(-1)
    }
}
owned_ops!(GradedLaurent);

impl fmt::Display for GradedLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let vars = self.tag.variables();
        // total absolute degree first, then lexicographic
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by_key(|(e, _)| (e.iter().map(|x| x.abs()).sum::<i32>(), **e));
        for (k, (e, c)) in terms.into_iter().enumerate() {
            let mono: Vec<String> = vars
                .iter()
                .enumerate()
                .filter(|&(i, _)| e[i] != 0)
                .map(|(i, v)| if e[i] == 1 { v.to_string() } else { format!("{v}^{}", e[i]) })
                .collect();
            let mag = c.unsigned_abs();
            let body = match (mono.is_empty(), mag) {
                (true, m) => m.to_string(),
                (false, 1) => mono.join("*"),
                (false, m) => format!("{m}*{}", mono.join("*")),
            };
            match (k, *c < 0) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => write!(f, "{body}")?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GradedLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}[{}]", self.tag, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn tri(s: &str) -> GradedLaurent {
        GradedLaurent::parse(GradingTag::Tri, s).unwrap()
    }

    #[test]
    fn rational_normalizes() {
        let r = Rational::new(6, -4);
        assert_eq!(r.to_string(), "-3/2");
        assert_eq!(r.denom(), BigInt::from(2));
    }

    #[test]
    fn rational_overflow_promotes() {
        let big = Rational::from_int(i64::MAX);
        let sq = &big * &big;
        assert_eq!(sq.numer(), BigInt::from(i64::MAX) * BigInt::from(i64::MAX));
        let back = &sq * &big.recip().unwrap();
        assert_eq!(back, big);
        assert_eq!((&sq - &sq), Rational::from_int(0));
    }

    #[test]
    fn gauss_parse_and_display() {
        for s in ["i", "-i", "3/2", "1+i", "1/2-3/4i", "-2i"] {
            let g = GaussRational::parse(s).unwrap();
            assert_eq!(GaussRational::parse(&g.to_string()).unwrap(), g);
        }
        assert_eq!(GaussRational::parse("i").unwrap() * GaussRational::i(), GaussRational::from_int(-1));
    }

    #[test]
    fn torsion_variable_squares_to_one() {
        assert_eq!(tri("1+q3") * tri("1+q3"), tri("2+2*q3"));
    }

    #[test]
    fn basic_product_renders_canonically() {
        let p = tri("1+q3") * tri("1+q1^-1*q2");
        assert_eq!(p.to_string(), "1 + q3 + q1^-1*q2 + q1^-1*q2*q3");
    }

    #[test]
    fn mixing_tags_is_an_error() {
        let a = GradedLaurent::one(GradingTag::Tri);
        let b = GradedLaurent::one(GradingTag::Bi);
        let err = a.try_mul(&b).unwrap_err();
        assert_eq!(err.to_string(), "incompatible grading groups");
    }

    #[test]
    fn specialize_q3_to_one() {
        let p = tri("1+q3") * tri("1+q1^-1*q2");
        let img =
            p.specialize(GradingTag::Bi, &[Substitution::var(0), Substitution::var(1), Substitution::one()]).unwrap();
        assert_eq!(img, GradedLaurent::parse(GradingTag::Bi, "2+2*q1^-1*q2").unwrap());
    }

    fn arb_poly(tag: GradingTag) -> impl Strategy<Value = GradedLaurent> {
        prop::collection::vec(((-3i32..4, -3i32..4, 0i32..2), -3i64..4), 0..5).prop_map(move |ts| {
            let mut p = GradedLaurent::zero(tag);
            for ((a, b, c), k) in ts {
                let e = [a, b, c];
                let mut ex = [0; 3];
                ex[..tag.arity()].copy_from_slice(&e[..tag.arity()]);
                p.add_term(ex, k);
            }
            p
        })
    }

    fn arb_tag() -> impl Strategy<Value = GradingTag> {
        prop_oneof![Just(GradingTag::Tri), Just(GradingTag::Bi), Just(GradingTag::Kb), Just(GradingTag::Ka)]
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-50i64..50, 1i64..20).prop_map(|(n, d)| Rational::new(n, d))
    }

    fn arb_gauss() -> impl Strategy<Value = GaussRational> {
        (arb_rational(), arb_rational()).prop_map(|(a, b)| GaussRational::new(a, b))
    }

    proptest! {
        #[test]
        fn ring_axioms(triple in arb_tag().prop_flat_map(|t| (arb_poly(t), arb_poly(t), arb_poly(t)))) {
            let (a, b, c) = triple;
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &GradedLaurent::one(a.tag()), a.clone());
        }

        #[test]
        fn specialization_is_multiplicative(a in arb_poly(GradingTag::Tri), b in arb_poly(GradingTag::Tri)) {
            let imgs = [Substitution::one(), Substitution::var(0), Substitution::one()];
            let f = |p: &GradedLaurent| p.specialize(GradingTag::Ka, &imgs).unwrap();
            prop_assert_eq!(f(&(&a * &b)), &f(&a) * &f(&b));
            let signs = [Substitution::minus_one(), Substitution::var(0), Substitution::var(1)];
            let g = |p: &GradedLaurent| p.specialize(GradingTag::Kb, &signs).unwrap();
            prop_assert_eq!(g(&(&a * &b)), &g(&a) * &g(&b));
        }

        #[test]
        fn render_parse_roundtrip(p in arb_tag().prop_flat_map(arb_poly)) {
            prop_assert_eq!(GradedLaurent::parse(p.tag(), &p.to_string()).unwrap(), p);
        }

        #[test]
        fn norm_of_product_is_real(a in arb_gauss(), b in arb_gauss()) {
            let p = &a * &b;
            prop_assert!((&p * &p.conj()).im.is_zero());
            prop_assert_eq!(p.conj().conj(), p);
        }

        #[test]
        fn field_inverse(a in arb_gauss()) {
            if let Some(inv) = Field::inv(&a) {
                prop_assert!((&a * &inv).is_one());
            } else {
                prop_assert!(Field::is_zero(&a));
            }
        }
    }
}
