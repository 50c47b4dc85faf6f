//! The zigzag algebras of type A (over `ℚ(i)`) and type B (over `ℚ`, with the
//! imaginary unit at vertices `j ≥ 2` realised as the basis path `ie_j`).
//!
//! Every product of two basis paths is zero or `±` a basis path, so the whole
//! multiplication is precomputed into a lookup table at build time.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::marker::PhantomData;
use std::sync::Arc;

use crate::arith::{Field, GaussRational, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgebraType {
    A,
    B,
}

impl AlgebraType {
    pub fn label(self) -> &'static str {
        match self {
            AlgebraType::A => "a",
            AlgebraType::B => "b",
        }
    }
}

impl std::str::FromStr for AlgebraType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "a" => Ok(AlgebraType::A),
            "b" => Ok(AlgebraType::B),
            other => Err(Error::Parse(format!("unknown algebra type `{other}` (expected a or b)"))),
        }
    }
}

impl fmt::Display for AlgebraType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Which internal grading the `degree` of a basis path reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GradingMode {
    /// The bigrading used for braid actions.
    Standard,
    /// Path length, with `ie_j` of length zero (Temperley–Lieb checks only).
    PathLength,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct PathKey {
    source: usize,
    target: usize,
    length: u8,
    imaginary: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisPath {
    pub name: String,
    pub source: usize,
    pub target: usize,
    pub degree: i32,
    pub z2: u8,
    pub length: u8,
    /// Carries a factor `ie` (type B only).
    pub imaginary: bool,
}

/// Sparse linear combination of basis paths; terms sorted by basis index.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraElement<F> {
    terms: Vec<(usize, F)>,
}

impl<F: Field> Default for AlgebraElement<F> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<F: Field> AlgebraElement<F> {
    pub fn zero() -> Self {
        AlgebraElement { terms: Vec::new() }
    }

    pub fn basis(idx: usize) -> Self {
        Self::term(idx, F::one())
    }

    pub fn term(idx: usize, c: F) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            AlgebraElement { terms: vec![(idx, c)] }
        }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (usize, F)>) -> Self {
        let mut acc: BTreeMap<usize, F> = BTreeMap::new();
        for (i, c) in terms {
            let slot = acc.entry(i).or_insert_with(F::zero);
            *slot = slot.add(&c);
        }
        AlgebraElement { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(usize, F)] {
        &self.terms
    }

    pub fn coeff(&self, idx: usize) -> F {
        match self.terms.binary_search_by_key(&idx, |t| t.0) {
            Ok(p) => self.terms[p].1.clone(),
            Err(_) => F::zero(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut a, mut b) = (0, 0);
        while a < self.terms.len() || b < o.terms.len() {
            let next = match (self.terms.get(a), o.terms.get(b)) {
                (Some(x), Some(y)) if x.0 == y.0 => {
                    a += 1;
                    b += 1;
                    (x.0, x.1.add(&y.1))
                }
                (Some(x), Some(y)) if x.0 < y.0 => {
                    a += 1;
                    x.clone()
                }
                (Some(x), None) => {
                    a += 1;
                    x.clone()
                }
                (_, Some(y)) => {
                    b += 1;
                    y.clone()
                }
                (None, None) => unreachable!(),
            };
            if !next.1.is_zero() {
                out.push(next);
            }
        }
        AlgebraElement { terms: out }
    }

    pub fn neg(&self) -> Self {
        AlgebraElement { terms: self.terms.iter().map(|(i, c)| (*i, c.neg())).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        AlgebraElement { terms: self.terms.iter().map(|(i, x)| (*i, x.mul(c))).collect() }
    }
}

/// A zigzag algebra with its precomputed multiplication table.
#[derive(Debug)]
pub struct ZigzagAlgebra<F> {
    kind: AlgebraType,
    vertices: usize,
    mode: GradingMode,
    basis: Vec<BasisPath>,
    table: Vec<Option<(usize, bool)>>,
    names: HashMap<String, usize>,
    hom: Vec<Vec<Vec<usize>>>,
    idempotents: Vec<usize>,
    imaginary_units: Vec<Option<usize>>,
    _field: PhantomData<F>,
}

pub type AlgebraB = ZigzagAlgebra<Rational>;
pub type AlgebraA = ZigzagAlgebra<GaussRational>;

/// Type B algebra with `n` vertices, in the standard grading.
pub fn build_type_b(n: usize) -> Result<Arc<AlgebraB>> {
    build_type_b_with(n, GradingMode::Standard)
}

pub fn build_type_b_with(n: usize, mode: GradingMode) -> Result<Arc<AlgebraB>> {
    if n < 2 {
        return Err(Error::Rank(n));
    }
    Ok(Arc::new(ZigzagAlgebra::build(AlgebraType::B, n, mode)))
}

/// Type A algebra with `m` vertices (`m = 2n − 1` when paired with type B rank `n`).
pub fn build_type_a(m: usize) -> Result<Arc<AlgebraA>> {
    if m < 2 {
        return Err(Error::Rank(m));
    }
    Ok(Arc::new(ZigzagAlgebra::build(AlgebraType::A, m, GradingMode::Standard)))
}

impl<F: Field> ZigzagAlgebra<F> {
    fn build(kind: AlgebraType, vertices: usize, mode: GradingMode) -> Self {
        let with_i = |v: usize| kind == AlgebraType::B && v >= 2;
        let mut keys = Vec::new();
        for v in 1..=vertices {
            for length in [0u8, 2] {
                keys.push(PathKey { source: v, target: v, length, imaginary: false });
                if with_i(v) {
                    keys.push(PathKey { source: v, target: v, length, imaginary: true });
                }
            }
            for w in [v.wrapping_sub(1), v + 1] {
                if (1..=vertices).contains(&w) {
                    keys.push(PathKey { source: v, target: w, length: 1, imaginary: false });
                    if kind == AlgebraType::B {
                        keys.push(PathKey { source: v, target: w, length: 1, imaginary: true });
                    }
                }
            }
        }
        keys.sort();
        let index: HashMap<PathKey, usize> = keys.iter().enumerate().map(|(i, k)| (*k, i)).collect();
        let center = vertices.div_ceil(2);
        let basis: Vec<BasisPath> = keys
            .iter()
            .map(|k| {
                let degree = match mode {
                    GradingMode::PathLength => k.length as i32,
                    GradingMode::Standard => match (kind, k.length) {
                        (_, 0) => 0,
                        (_, 2) => 1,
                        (AlgebraType::B, _) => (k.source > k.target) as i32,
                        (AlgebraType::A, _) => {
                            if k.target > k.source {
                                (k.source < center) as i32
                            } else {
                                (k.source > center) as i32
                            }
                        }
                    },
                };
                BasisPath {
                    name: path_name(k),
                    source: k.source,
                    target: k.target,
                    degree,
                    z2: k.imaginary as u8,
                    length: k.length,
                    imaginary: k.imaginary,
                }
            })
            .collect();

        let dim = keys.len();
        let mut table = vec![None; dim * dim];
        for (a, x) in keys.iter().enumerate() {
            for (b, y) in keys.iter().enumerate() {
                table[a * dim + b] = multiply_keys(x, y).map(|(k, neg)| (index[&k], neg));
            }
        }

        let mut names = HashMap::new();
        for (i, k) in keys.iter().enumerate() {
            names.insert(path_name(k), i);
            for alias in path_aliases(k) {
                names.insert(alias, i);
            }
        }
        let mut hom = vec![vec![Vec::new(); vertices + 1]; vertices + 1];
        for (i, k) in keys.iter().enumerate() {
            hom[k.source][k.target].push(i);
        }
        let mut idempotents = vec![usize::MAX; vertices + 1];
        let mut imaginary_units = vec![None; vertices + 1];
        for v in 1..=vertices {
            idempotents[v] = index[&PathKey { source: v, target: v, length: 0, imaginary: false }];
            imaginary_units[v] = index.get(&PathKey { source: v, target: v, length: 0, imaginary: true }).copied();
        }
        ZigzagAlgebra {
            kind,
            vertices,
            mode,
            basis,
            table,
            names,
            hom,
            idempotents,
            imaginary_units,
            _field: PhantomData,
        }
    }

    pub fn kind(&self) -> AlgebraType {
        self.kind
    }

    /// Number of vertices of the quiver (`n` for type B, `2n − 1` for the matching type A).
    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn mode(&self) -> GradingMode {
        self.mode
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisPath] {
        &self.basis
    }

    pub fn path(&self, idx: usize) -> &BasisPath {
        &self.basis[idx]
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if (1..=self.vertices).contains(&v) {
            Ok(())
        } else {
            Err(Error::Vertex { vertex: v, max: self.vertices })
        }
    }

    pub fn idempotent(&self, v: usize) -> usize {
        self.idempotents[v]
    }

    /// Index of `ie_v`, present for type B with `v ≥ 2`.
    pub fn imaginary_unit(&self, v: usize) -> Option<usize> {
        self.imaginary_units[v]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.get(name).copied()
    }

    pub fn element(&self, name: &str) -> Result<AlgebraElement<F>> {
        self.index_of(name)
            .map(AlgebraElement::basis)
            .ok_or_else(|| Error::Parse(format!("unknown basis path `{name}`")))
    }

    /// Basis paths spanning `e_j · alg · e_k`.
    pub fn hom_basis(&self, j: usize, k: usize) -> &[usize] {
        if j > self.vertices || k > self.vertices {
            return &[];
        }
        &self.hom[j][k]
    }

    /// Product of two basis paths: `None` for zero, otherwise `(index, negated)`.
    pub fn mul_basis(&self, a: usize, b: usize) -> Option<(usize, bool)> {
        self.table[a * self.basis.len() + b]
    }

    pub fn mul(&self, x: &AlgebraElement<F>, y: &AlgebraElement<F>) -> AlgebraElement<F> {
        if x.is_zero() || y.is_zero() {
            return AlgebraElement::zero();
        }
        let mut acc = Vec::new();
        for (a, c) in x.terms() {
            for (b, d) in y.terms() {
                if let Some((p, neg)) = self.mul_basis(*a, *b) {
                    let v = c.mul(d);
                    acc.push((p, if neg { v.neg() } else { v }));
                }
            }
        }
        AlgebraElement::from_terms(acc)
    }

    /// `(degree, z2)` of a homogeneous nonzero element.
    pub fn bidegree(&self, x: &AlgebraElement<F>) -> Option<(i32, u8)> {
        let mut it = x.terms().iter().map(|(i, _)| (self.basis[*i].degree, self.basis[*i].z2));
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// Whether every term runs from `j` to `k`.
    pub fn lies_in(&self, x: &AlgebraElement<F>, j: usize, k: usize) -> bool {
        x.terms().iter().all(|(i, _)| self.basis[*i].source == j && self.basis[*i].target == k)
    }

    /// Inverse of an invertible element of `e_j · alg · e_j` of degree zero,
    /// i.e. `a·e_j + b·ie_j` with `(a, b) ≠ 0`.
    pub fn invert_local(&self, x: &AlgebraElement<F>) -> Option<AlgebraElement<F>> {
        let (first, _) = x.terms().first()?;
        let v = self.basis[*first].source;
        let e = self.idempotents[v];
        let a = x.coeff(e);
        let (b, iu) = match self.imaginary_units[v] {
            Some(iu) => (x.coeff(iu), Some(iu)),
            None => (F::zero(), None),
        };
        if x.terms().iter().any(|(i, _)| *i != e && Some(*i) != iu) {
            return None;
        }
        let norm = a.mul(&a).add(&b.mul(&b));
        let inv = norm.inv()?;
        let mut terms = vec![(e, a.mul(&inv))];
        if let Some(iu) = iu {
            terms.push((iu, b.neg().mul(&inv)));
        }
        Some(AlgebraElement::from_terms(terms))
    }

    pub fn render(&self, x: &AlgebraElement<F>) -> String {
        if x.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (i, c)) in x.terms().iter().enumerate() {
            let name = &self.basis[*i].name;
            let (neg, mag) = split_sign(c);
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if mag.is_one() {
                out.push_str(name);
            } else {
                let s = mag.to_string();
                if s.contains(['+', '-']) {
                    out.push_str(&format!("({s})*{name}"));
                } else {
                    out.push_str(&format!("{s}*{name}"));
                }
            }
        }
        out
    }

    /// Parses the rendering produced by [`ZigzagAlgebra::render`].
    pub fn parse_element(&self, s: &str) -> Result<AlgebraElement<F>> {
        let s = s.trim();
        if s == "0" || s.is_empty() {
            return Ok(AlgebraElement::zero());
        }
        let mut terms = Vec::new();
        for (neg, body) in split_top_level(s) {
            let (coeff, name) = match body.rsplit_once('*') {
                Some((c, n)) => {
                    let c = c.trim();
                    let c = c.strip_prefix('(').and_then(|c| c.strip_suffix(')')).unwrap_or(c);
                    (F::parse(c)?, n.trim())
                }
                None => (F::one(), body.trim()),
            };
            let idx = self.index_of(name).ok_or_else(|| Error::Parse(format!("unknown basis path `{name}`")))?;
            terms.push((idx, if neg { coeff.neg() } else { coeff }));
        }
        Ok(AlgebraElement::from_terms(terms))
    }
}

fn split_sign<F: Field>(c: &F) -> (bool, F) {
    let re = c.re();
    let im = c.im();
    let neg = if re.is_zero() { im.signum() < 0 } else { re.signum() < 0 && im.signum() <= 0 };
    if neg {
        (true, c.neg())
    } else {
        (false, c.clone())
    }
}

fn split_top_level(s: &str) -> Vec<(bool, String)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut neg = false;
    let mut cur = String::new();
    let chars: Vec<char> = s.chars().collect();
    for (k, &ch) in chars.iter().enumerate() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        let boundary = depth == 0
            && (ch == '+' || ch == '-')
            && (cur.trim().is_empty() || chars.get(k.wrapping_sub(1)) == Some(&' '));
        if boundary {
            if !cur.trim().is_empty() {
                out.push((neg, std::mem::take(&mut cur)));
            }
            cur.clear();
            neg = ch == '-';
            continue;
        }
        cur.push(ch);
    }
    if !cur.trim().is_empty() {
        out.push((neg, cur));
    }
    out
}

fn path_name(k: &PathKey) -> String {
    let (s, t) = (k.source, k.target);
    match (k.length, k.imaginary) {
        (0, false) => format!("e{s}"),
        (0, true) => format!("ie{s}"),
        (2, false) => format!("X{s}"),
        (2, true) => format!("X{s}(ie{s})"),
        (_, false) => format!("({s}|{t})"),
        (_, true) if t >= 2 => format!("({s}|{t})(ie{t})"),
        (_, true) => format!("(ie{s})({s}|{t})"),
    }
}

fn path_aliases(k: &PathKey) -> Vec<String> {
    let (s, t) = (k.source, k.target);
    match (k.length, k.imaginary) {
        (2, true) => vec![format!("(ie{s})X{s}")],
        (1, true) if s >= 2 && t >= 2 => vec![format!("(ie{s})({s}|{t})")],
        _ => vec![],
    }
}

/// Product of two basis paths as `(path, negated)`, or `None` for zero.
fn multiply_keys(x: &PathKey, y: &PathKey) -> Option<(PathKey, bool)> {
    if x.target != y.source || x.length + y.length > 2 {
        return None;
    }
    let toggle = |p: &PathKey, by: bool| -> (PathKey, bool) {
        if !by {
            return (*p, false);
        }
        // multiplying by ie: i·i = −1
        (PathKey { imaginary: !p.imaginary, ..*p }, p.imaginary)
    };
    if x.length == 0 {
        return Some(toggle(y, x.imaginary));
    }
    if y.length == 0 {
        return Some(toggle(x, y.imaginary));
    }
    // two arrows
    if y.target != x.source {
        return None;
    }
    let a = x.source;
    let loop_at = |imaginary| PathKey { source: a, target: a, length: 2, imaginary };
    match (x.imaginary as u8 + y.imaginary as u8, a >= 2) {
        (0, _) => Some((loop_at(false), false)),
        (1, true) => Some((loop_at(true), false)),
        (1, false) => None,
        (_, _) => Some((loop_at(false), true)),
    }
}

/// The algebra isomorphism from the complexified type B algebra of rank `n`
/// onto the type A algebra with `2n − 1` vertices, tabulated on basis paths.
#[derive(Debug)]
pub struct Complexification {
    pub rank: usize,
    pub source: Arc<AlgebraB>,
    pub target: Arc<AlgebraA>,
    images: Vec<AlgebraElement<GaussRational>>,
}

impl Complexification {
    pub fn new(rank: usize) -> Result<Self> {
        let source = build_type_b(rank)?;
        let target = build_type_a(2 * rank - 1)?;
        let n = rank;
        let a = &target;
        let ai = |name: String| a.element(&name).expect("type A path");
        let mut images = vec![AlgebraElement::zero(); source.dim()];
        // generators first
        for (idx, p) in source.basis().iter().enumerate() {
            let (s, t) = (p.source, p.target);
            let img = match (p.length, p.imaginary) {
                (0, false) if s == 1 => ai(format!("e{n}")),
                (0, false) => ai(format!("e{}", n - s + 1)).add(&ai(format!("e{}", n + s - 1))),
                (0, true) => ai(format!("e{}", n - s + 1))
                    .scale(&GaussRational::i().neg())
                    .add(&ai(format!("e{}", n + s - 1)).scale(&GaussRational::i())),
                (1, false) if t == s + 1 => {
                    // (j−1|j) with j = t
                    ai(format!("({}|{})", n - t + 2, n - t + 1)).add(&ai(format!("({}|{})", n + t - 2, n + t - 1)))
                }
                (1, false) => {
                    // (j|j−1) with j = s
                    ai(format!("({}|{})", n - s + 1, n - s + 2)).add(&ai(format!("({}|{})", n + s - 1, n + s - 2)))
                }
                _ => continue,
            };
            images[idx] = img;
        }
        // composites: loops and imaginary arrows
        let lookup = |name: &str| source.index_of(name).expect("type B path");
        for (idx, p) in source.basis().iter().enumerate() {
            let (s, t) = (p.source, p.target);
            let img = match (p.length, p.imaginary) {
                (2, im) => {
                    let nb = if s < n { s + 1 } else { s - 1 };
                    let out = lookup(&format!("({s}|{nb})"));
                    let back = lookup(&format!("({nb}|{s})"));
                    let x = a.mul(&images[out], &images[back]);
                    if im {
                        a.mul(&x, &images[lookup(&format!("ie{s}"))])
                    } else {
                        x
                    }
                }
                (1, true) => {
                    let plain = lookup(&format!("({s}|{t})"));
                    if t >= 2 {
                        a.mul(&images[plain], &images[lookup(&format!("ie{t}"))])
                    } else {
                        a.mul(&images[lookup(&format!("ie{s}"))], &images[plain])
                    }
                }
                _ => continue,
            };
            images[idx] = img;
        }
        Ok(Complexification { rank, source, target, images })
    }

    pub fn image_of_basis(&self, idx: usize) -> &AlgebraElement<GaussRational> {
        &self.images[idx]
    }

    /// `Φ(c ⊗ b)`.
    pub fn apply(&self, c: &GaussRational, b: &AlgebraElement<Rational>) -> AlgebraElement<GaussRational> {
        let mut acc = AlgebraElement::zero();
        for (idx, x) in b.terms() {
            let k = c.mul(&GaussRational::from_rational(x.clone()));
            acc = acc.add(&self.images[*idx].scale(&k));
        }
        acc
    }

    /// Type A vertices that a type B vertex splits into: `[n]` or `[n−j+1, n+j−1]`.
    pub fn vertex_image(&self, j: usize) -> Vec<usize> {
        let n = self.rank;
        if j == 1 {
            vec![n]
        } else {
            vec![n - j + 1, n + j - 1]
        }
    }
}
