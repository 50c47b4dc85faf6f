//! Bounded complexes of graded projective modules `P_j[r]{s}⟨t⟩`.
//!
//! Conventions:
//! * a generator sits in cohomological degree `r`; the differential raises `r` by one;
//! * an entry `g → h` is an element of `e_{g.vertex} · A · e_{h.vertex}` acting by
//!   right multiplication, of degree `g.s − h.s` and parity `g.t − h.t`;
//! * maps compose left to right, so `g → g' → g''` is the product `d(g,g')·d(g',g'')`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{AlgebraElement, AlgebraType, ZigzagAlgebra};
use crate::arith::{Field, Rational};
use crate::error::{Error, Result};
use crate::linalg::{self, Echelon, SparseRow};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjGenerator {
    pub vertex: usize,
    pub r: i32,
    pub s: i32,
    pub t: u8,
}

impl ProjGenerator {
    pub fn new(vertex: usize, r: i32, s: i32, t: u8) -> Self {
        ProjGenerator { vertex, r, s, t: t % 2 }
    }
}

#[derive(Clone, Debug)]
pub struct ProjComplex<F: Field> {
    alg: Arc<ZigzagAlgebra<F>>,
    gens: Vec<ProjGenerator>,
    diff: BTreeMap<(usize, usize), AlgebraElement<F>>,
}

impl<F: Field> ProjComplex<F> {
    pub fn new(alg: Arc<ZigzagAlgebra<F>>) -> Self {
        ProjComplex { alg, gens: Vec::new(), diff: BTreeMap::new() }
    }

    /// The single projective `P_v` in degree zero.
    pub fn projective(alg: Arc<ZigzagAlgebra<F>>, v: usize) -> Self {
        let mut c = Self::new(alg);
        c.add_generator(ProjGenerator::new(v, 0, 0, 0));
        c
    }

    /// `⊕_j P_j` in degree zero.
    pub fn all_projectives(alg: Arc<ZigzagAlgebra<F>>) -> Self {
        let mut c = Self::new(alg.clone());
        for v in 1..=alg.vertices() {
            c.add_generator(ProjGenerator::new(v, 0, 0, 0));
        }
        c
    }

    pub fn algebra(&self) -> &Arc<ZigzagAlgebra<F>> {
        &self.alg
    }

    pub fn generators(&self) -> &[ProjGenerator] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &AlgebraElement<F>)> {
        self.diff.iter()
    }

    pub fn entry(&self, from: usize, to: usize) -> Option<&AlgebraElement<F>> {
        self.diff.get(&(from, to))
    }

    pub fn add_generator(&mut self, g: ProjGenerator) -> usize {
        self.gens.push(g);
        self.gens.len() - 1
    }

    /// Adds `x` to the entry `from → to`.
    pub fn add_entry(&mut self, from: usize, to: usize, x: AlgebraElement<F>) {
        if x.is_zero() {
            return;
        }
        let slot = self.diff.entry((from, to)).or_default();
        *slot = slot.add(&x);
        if slot.is_zero() {
            self.diff.remove(&(from, to));
        }
    }

    /// `C[r]{s}⟨t⟩`: cohomological degrees drop by `r`.
    pub fn shift(&self, r: i32, s: i32, t: u8) -> Self {
        let mut out = self.clone();
        for g in &mut out.gens {
            g.r -= r;
            g.s += s;
            g.t = (g.t + t) % 2;
        }
        out
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut out = self.clone();
        let off = out.gens.len();
        out.gens.extend(other.gens.iter().copied());
        for ((a, b), x) in &other.diff {
            out.diff.insert((a + off, b + off), x.clone());
        }
        out
    }

    /// Structural violations: degree, vertex and homogeneity of entries, and `d∘d = 0`.
    pub fn check(&self) -> Vec<String> {
        let mut bad = Vec::new();
        for (&(a, b), x) in &self.diff {
            let (g, h) = (self.gens[a], self.gens[b]);
            if h.r != g.r + 1 {
                bad.push(format!("entry {a}->{b} does not raise degree by one"));
            }
            if !self.alg.lies_in(x, g.vertex, h.vertex) {
                bad.push(format!("entry {a}->{b} not in e{}Ae{}", g.vertex, h.vertex));
            }
            match self.alg.bidegree(x) {
                Some((d, z)) => {
                    if d != g.s - h.s || (z as i32 - g.t as i32 + h.t as i32).rem_euclid(2) != 0 {
                        bad.push(format!("entry {a}->{b} has the wrong bidegree"));
                    }
                }
                None => bad.push(format!("entry {a}->{b} is not homogeneous")),
            }
        }
        let sq = compose_entries(&self.alg, &self.diff, &self.diff);
        for (a, b) in sq.keys() {
            bad.push(format!("d∘d nonzero on {a}->{b}"));
        }
        bad
    }

    pub fn is_valid(&self) -> bool {
        self.check().is_empty()
    }

    /// Gaussian elimination along invertible entries, to the unique minimal
    /// representative of the homotopy class.
    pub fn minimize(&self) -> Self {
        let n = self.gens.len();
        let mut out: Vec<BTreeMap<usize, AlgebraElement<F>>> = vec![BTreeMap::new(); n];
        let mut inc: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
        for (&(a, b), x) in &self.diff {
            out[a].insert(b, x.clone());
            inc[b].insert(a);
        }
        let mut alive = vec![true; n];
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| (self.gens[i].r, i));
        let mut changed = true;
        while changed {
            changed = false;
            for &b1 in &order {
                if !alive[b1] {
                    continue;
                }
                let g = self.gens[b1];
                let found = out[b1].iter().find_map(|(&b2, x)| {
                    let h = self.gens[b2];
                    if h.vertex != g.vertex || h.s != g.s {
                        return None;
                    }
                    self.alg.invert_local(x).map(|inv| (b2, inv))
                });
                let Some((b2, pivot_inv)) = found else { continue };
                let sources: Vec<(usize, AlgebraElement<F>)> = inc[b2]
                    .iter()
                    .filter(|&&x| x != b1)
                    .map(|&x| (x, self.alg.mul(&out[x][&b2], &pivot_inv)))
                    .collect();
                let targets: Vec<(usize, AlgebraElement<F>)> =
                    out[b1].iter().filter(|(&y, _)| y != b2).map(|(&y, z)| (y, z.clone())).collect();
                for (x, left) in &sources {
                    for (y, right) in &targets {
                        let delta = self.alg.mul(left, right);
                        if delta.is_zero() {
                            continue;
                        }
                        let cur = out[*x].remove(y).unwrap_or_default();
                        let new = cur.sub(&delta);
                        if new.is_zero() {
                            inc[*y].remove(x);
                        } else {
                            out[*x].insert(*y, new);
                            inc[*y].insert(*x);
                        }
                    }
                }
                for dead in [b1, b2] {
                    for y in std::mem::take(&mut out[dead]).into_keys() {
                        inc[y].remove(&dead);
                    }
                    for x in std::mem::take(&mut inc[dead]) {
                        out[x].remove(&dead);
                    }
                    alive[dead] = false;
                }
                changed = true;
            }
        }
        let mut index = vec![usize::MAX; n];
        let mut res = Self::new(self.alg.clone());
        for i in 0..n {
            if alive[i] {
                index[i] = res.add_generator(self.gens[i]);
            }
        }
        for (a, row) in out.into_iter().enumerate() {
            for (b, x) in row {
                res.diff.insert((index[a], index[b]), x);
            }
        }
        res
    }

    /// Multiset of generators up to isomorphism of the underlying module:
    /// the parity shift is invisible at vertices carrying `ie`.
    pub fn signature(&self) -> Vec<ProjGenerator> {
        let mut sig: Vec<ProjGenerator> = self
            .gens
            .iter()
            .map(|g| ProjGenerator { t: if self.parity_matters(g.vertex) { g.t } else { 0 }, ..*g })
            .collect();
        sig.sort();
        sig
    }

    fn parity_matters(&self, v: usize) -> bool {
        self.alg.kind() == AlgebraType::B && self.alg.imaginary_unit(v).is_none()
    }

    /// Orders generators by `(r, vertex, s, t)`, keeping the relative order of ties.
    pub fn sorted(&self) -> Self {
        let mut order: Vec<usize> = (0..self.gens.len()).collect();
        order.sort_by_key(|&i| (self.gens[i].r, self.gens[i].vertex, self.gens[i].s, self.gens[i].t, i));
        let mut index = vec![0; self.gens.len()];
        let mut res = Self::new(self.alg.clone());
        for &i in &order {
            index[i] = res.add_generator(self.gens[i]);
        }
        for (&(a, b), x) in &self.diff {
            res.diff.insert((index[a], index[b]), x.clone());
        }
        res
    }
}

fn compose_entries<F: Field>(
    alg: &ZigzagAlgebra<F>,
    f: &BTreeMap<(usize, usize), AlgebraElement<F>>,
    g: &BTreeMap<(usize, usize), AlgebraElement<F>>,
) -> BTreeMap<(usize, usize), AlgebraElement<F>> {
    let mut by_source: HashMap<usize, Vec<(usize, &AlgebraElement<F>)>> = HashMap::new();
    for (&(b, c), y) in g {
        by_source.entry(b).or_default().push((c, y));
    }
    let mut out: BTreeMap<(usize, usize), AlgebraElement<F>> = BTreeMap::new();
    for (&(a, b), x) in f {
        if let Some(next) = by_source.get(&b) {
            for (c, y) in next {
                let p = alg.mul(x, y);
                if p.is_zero() {
                    continue;
                }
                let slot = out.entry((a, *c)).or_default();
                *slot = slot.add(&p);
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// A morphism of complexes of a given degree; entries compose left to right.
#[derive(Clone, Debug)]
pub struct ChainMap<F: Field> {
    pub degree: (i32, i32, u8),
    pub entries: BTreeMap<(usize, usize), AlgebraElement<F>>,
}

impl<F: Field> ChainMap<F> {
    pub fn identity(c: &ProjComplex<F>) -> Self {
        let entries =
            (0..c.len()).map(|i| ((i, i), AlgebraElement::basis(c.alg.idempotent(c.gens[i].vertex)))).collect();
        ChainMap { degree: (0, 0, 0), entries }
    }

    /// `self` followed by `other`.
    pub fn then(&self, alg: &ZigzagAlgebra<F>, other: &Self) -> Self {
        let (a, b, c) = self.degree;
        let (x, y, z) = other.degree;
        ChainMap { degree: (a + x, b + y, (c + z) % 2), entries: compose_entries(alg, &self.entries, &other.entries) }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Whether `∂_D ∘ f = (−1)^{r} f ∘ ∂_C` and every entry has the right shape.
    pub fn is_chain_map(&self, c: &ProjComplex<F>, d: &ProjComplex<F>) -> bool {
        let (r0, s0, t0) = self.degree;
        for (&(g, h), x) in &self.entries {
            let (gg, hh) = (c.gens[g], d.gens[h]);
            if hh.r != gg.r + r0 || !c.alg.lies_in(x, gg.vertex, hh.vertex) {
                return false;
            }
            match c.alg.bidegree(x) {
                Some((deg, z))
                    if deg == s0 + gg.s - hh.s
                        && (z as i32 - t0 as i32 - gg.t as i32 + hh.t as i32).rem_euclid(2) == 0 => {}
                _ => return false,
            }
        }
        let after = compose_entries(&c.alg, &self.entries, &d.diff);
        let before = compose_entries(&c.alg, &c.diff, &self.entries);
        let sign = if r0 % 2 == 0 { F::one() } else { F::one().neg() };
        let keys: BTreeSet<_> = after.keys().chain(before.keys()).copied().collect();
        keys.into_iter().all(|k| {
            let a = after.get(&k).cloned().unwrap_or_default();
            let b = before.get(&k).cloned().unwrap_or_default().scale(&sign);
            a == b
        })
    }
}

/// Unknown coefficients of a homogeneous module map `C → D`: one per
/// `(source generator, target generator, basis path)` of matching shape.
pub struct MapSlots {
    pub slots: Vec<(usize, usize, usize)>,
    pub by_source: Vec<Vec<usize>>,
}

impl MapSlots {
    pub fn new<F: Field>(c: &ProjComplex<F>, d: &ProjComplex<F>, degree: (i32, i32, u8)) -> Self {
        let (r0, s0, t0) = degree;
        let alg = &c.alg;
        let mut slots = Vec::new();
        let mut by_source = vec![Vec::new(); c.len()];
        for (gi, g) in c.gens.iter().enumerate() {
            for (hi, h) in d.gens.iter().enumerate() {
                if h.r != g.r + r0 {
                    continue;
                }
                for &u in alg.hom_basis(g.vertex, h.vertex) {
                    let p = alg.path(u);
                    if p.degree == s0 + g.s - h.s
                        && (p.z2 as i32 - t0 as i32 - g.t as i32 + h.t as i32).rem_euclid(2) == 0
                    {
                        by_source[gi].push(slots.len());
                        slots.push((gi, hi, u));
                    }
                }
            }
        }
        MapSlots { slots, by_source }
    }

    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    pub fn to_map<F: Field>(&self, degree: (i32, i32, u8), values: &[F]) -> ChainMap<F> {
        let mut entries: BTreeMap<(usize, usize), AlgebraElement<F>> = BTreeMap::new();
        for (k, &(g, h, u)) in self.slots.iter().enumerate() {
            if values[k].is_zero() {
                continue;
            }
            let slot = entries.entry((g, h)).or_default();
            *slot = slot.add(&AlgebraElement::term(u, values[k].clone()));
        }
        entries.retain(|_, v| !v.is_zero());
        ChainMap { degree, entries }
    }
}

/// Linear equations (one per output coefficient) cutting out chain maps among
/// all module maps enumerated by `slots`.
fn chain_equations<F: Field>(c: &ProjComplex<F>, d: &ProjComplex<F>, slots: &MapSlots, r0: i32) -> Vec<SparseRow<F>> {
    let alg = &c.alg;
    let sign = if r0 % 2 == 0 { F::one() } else { F::one().neg() };
    let mut d_out: Vec<Vec<(usize, &AlgebraElement<F>)>> = vec![Vec::new(); d.len()];
    for (&(h, h2), y) in &d.diff {
        d_out[h].push((h2, y));
    }
    let mut c_out: Vec<Vec<(usize, &AlgebraElement<F>)>> = vec![Vec::new(); c.len()];
    for (&(g, g2), x) in &c.diff {
        c_out[g].push((g2, x));
    }
    // key: (source g, target h', basis path)
    let mut eqs: BTreeMap<(usize, usize, usize), Vec<(usize, F)>> = BTreeMap::new();
    for (var, &(g, h, u)) in slots.slots.iter().enumerate() {
        let ue = AlgebraElement::<F>::basis(u);
        // f then ∂_D
        for &(h2, y) in &d_out[h] {
            for (w, coef) in alg.mul(&ue, y).terms() {
                eqs.entry((g, h2, *w)).or_default().push((var, coef.clone()));
            }
        }
    }
    // −(−1)^{r0} · (∂_C then f)
    for (g0, outs) in c_out.iter().enumerate() {
        for &(g, x) in outs {
            for &var in &slots.by_source[g] {
                let (_, h, u) = slots.slots[var];
                for (w, coef) in alg.mul(x, &AlgebraElement::basis(u)).terms() {
                    eqs.entry((g0, h, *w)).or_default().push((var, coef.mul(&sign).neg()));
                }
            }
        }
    }
    eqs.into_values().map(linalg::collect_row).filter(|r| !r.is_empty()).collect()
}

/// Mapping cone of a degree-zero chain map `f: X → Y`: the generators of `X`
/// move down one degree, its differential changes sign, and `f` joins the two.
pub fn cone<F: Field>(f: &ChainMap<F>, x: &ProjComplex<F>, y: &ProjComplex<F>) -> Result<ProjComplex<F>> {
    if !same_algebra(x.algebra(), y.algebra()) {
        return Err(Error::AlgebraMismatch("cone of complexes over different algebras".into()));
    }
    if f.degree != (0, 0, 0) || !f.is_chain_map(x, y) {
        return Err(Error::NotChainMap("cone needs a degree-zero chain map".into()));
    }
    let mut out = x.shift(1, 0, 0);
    for v in out.diff.values_mut() {
        *v = v.neg();
    }
    let off = out.len();
    out = out.direct_sum(y);
    for (&(a, b), v) in &f.entries {
        out.add_entry(a, off + b, v.clone());
    }
    Ok(out)
}

/// Basis of the space of chain maps `C → D` of the given degree (not modulo homotopy).
pub fn chain_map_space<F: Field>(c: &ProjComplex<F>, d: &ProjComplex<F>, degree: (i32, i32, u8)) -> Vec<ChainMap<F>> {
    let slots = MapSlots::new(c, d, degree);
    let mut ech = Echelon::new(slots.len());
    for row in chain_equations(c, d, &slots, degree.0) {
        ech.insert(row);
    }
    ech.kernel_basis().into_iter().map(|x| slots.to_map(degree, &x)).collect()
}

/// Outcome of an isomorphism test between (minimised) complexes.
#[derive(Clone, Debug)]
pub enum Isomorphism<F: Field> {
    /// Mutually inverse chain maps between the minimised complexes.
    Yes {
        minimal_source: ProjComplex<F>,
        minimal_target: ProjComplex<F>,
        forward: ChainMap<F>,
        backward: ChainMap<F>,
    },
    No(String),
    Inconclusive,
}

impl<F: Field> Isomorphism<F> {
    pub fn is_yes(&self) -> bool {
        matches!(self, Isomorphism::Yes { .. })
    }
    pub fn is_no(&self) -> bool {
        matches!(self, Isomorphism::No(_))
    }
}

const ISO_ATTEMPTS: usize = 6;
const ISO_SEED: u64 = 0x5eed_2a6b;

/// Decides `C ≅ D` in the homotopy category, with an exact certificate.
///
/// Both sides are minimised; minimal complexes are homotopy equivalent iff
/// isomorphic, so differing generator multisets prove non-isomorphism. Otherwise
/// random degree-zero chain maps are tried until one has an exact inverse.
pub fn is_isomorphic<F: Field>(c: &ProjComplex<F>, d: &ProjComplex<F>) -> Result<Isomorphism<F>> {
    if !same_algebra(c.algebra(), d.algebra()) {
        return Err(Error::AlgebraMismatch("complexes over different algebras".into()));
    }
    let c = c.minimize().sorted();
    let d = d.minimize().sorted();
    if c.signature() != d.signature() {
        return Ok(Isomorphism::No("minimal complexes have different generators".into()));
    }
    let degree = (0, 0, 0);
    let slots = MapSlots::new(&c, &d, degree);
    let mut ech = Echelon::new(slots.len());
    for row in chain_equations(&c, &d, &slots, 0) {
        ech.insert(row);
    }
    if c.is_empty() {
        let empty = ChainMap { degree, entries: BTreeMap::new() };
        return Ok(Isomorphism::Yes { minimal_source: c, minimal_target: d, forward: empty.clone(), backward: empty });
    }
    if ech.kernel_dim() == 0 {
        return Ok(Isomorphism::No("no nonzero chain maps of degree zero".into()));
    }
    let back_slots = MapSlots::new(&d, &c, degree);
    let mut rng = ChaCha8Rng::seed_from_u64(ISO_SEED);
    for attempt in 0..ISO_ATTEMPTS {
        let bound = 3 + 20 * attempt as i64;
        let x = ech.kernel_element(|| random_scalar(&mut rng, bound));
        let f = slots.to_map(degree, &x);
        let Some(g) = solve_inverse(&c, &f, &back_slots) else { continue };
        let id_c = ChainMap::identity(&c);
        let id_d = ChainMap::identity(&d);
        let fg = f.then(&c.alg, &g);
        let gf = g.then(&c.alg, &f);
        if fg.entries == id_c.entries && gf.entries == id_d.entries && f.is_chain_map(&c, &d) && g.is_chain_map(&d, &c)
        {
            return Ok(Isomorphism::Yes { minimal_source: c, minimal_target: d, forward: f, backward: g });
        }
    }
    Ok(Isomorphism::Inconclusive)
}

pub(crate) fn same_algebra<F: Field>(a: &ZigzagAlgebra<F>, b: &ZigzagAlgebra<F>) -> bool {
    a.kind() == b.kind() && a.vertices() == b.vertices() && a.mode() == b.mode()
}

fn random_scalar<F: Field>(rng: &mut ChaCha8Rng, bound: i64) -> F {
    let re = Rational::from_int(rng.random_range(-bound..=bound));
    let im = if F::HAS_I { Rational::from_int(rng.random_range(-bound..=bound)) } else { Rational::from_int(0) };
    F::from_parts(re, im).expect("scalar in field")
}

/// Solves `f then g = id_C` for a module map `g: D → C` of degree zero.
fn solve_inverse<F: Field>(c: &ProjComplex<F>, f: &ChainMap<F>, back: &MapSlots) -> Option<ChainMap<F>> {
    let alg = &c.alg;
    let mut f_out: Vec<Vec<(usize, &AlgebraElement<F>)>> = vec![Vec::new(); c.len()];
    for (&(a, b), x) in &f.entries {
        f_out[a].push((b, x));
    }
    let mut eqs: BTreeMap<(usize, usize, usize), Vec<(usize, F)>> = BTreeMap::new();
    for (a, outs) in f_out.iter().enumerate() {
        for &(b, x) in outs {
            for &var in &back.by_source[b] {
                let (_, c2, u) = back.slots[var];
                for (w, coef) in alg.mul(x, &AlgebraElement::basis(u)).terms() {
                    eqs.entry((a, c2, *w)).or_default().push((var, coef.clone()));
                }
            }
        }
    }
    for (a, g) in c.gens.iter().enumerate() {
        eqs.entry((a, a, alg.idempotent(g.vertex))).or_default();
    }
    let system: Vec<(SparseRow<F>, F)> = eqs
        .into_iter()
        .map(|((a, c2, w), row)| {
            let rhs = if a == c2 && w == alg.idempotent(c.gens[a].vertex) { F::one() } else { F::zero() };
            (linalg::collect_row(row), rhs)
        })
        .collect();
    let x = linalg::solve(back.len(), system)?;
    Some(back.to_map((0, 0, 0), &x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build_type_b, AlgebraB};

    fn alg() -> Arc<AlgebraB> {
        build_type_b(2).unwrap()
    }

    #[test]
    fn single_generator_is_valid() {
        assert!(ProjComplex::projective(alg(), 1).is_valid());
    }

    #[test]
    fn two_term_complex_with_loop() {
        let a = alg();
        let mut c = ProjComplex::new(a.clone());
        let g = c.add_generator(ProjGenerator::new(1, 0, 1, 0));
        let h = c.add_generator(ProjGenerator::new(1, 1, 0, 0));
        c.add_entry(g, h, a.element("X1").unwrap());
        assert!(c.is_valid(), "{:?}", c.check());
        let mut wrong = c.clone();
        wrong.gens[g].s = 0;
        assert!(!wrong.is_valid());
    }

    #[test]
    fn minimize_cancels_identity_part() {
        // P1 ⊕ P1{1} --[e1, X1]--> P1 reduces to P1{1}
        let a = alg();
        let mut c = ProjComplex::new(a.clone());
        let g0 = c.add_generator(ProjGenerator::new(1, -1, 0, 0));
        let g1 = c.add_generator(ProjGenerator::new(1, -1, 1, 0));
        let h = c.add_generator(ProjGenerator::new(1, 0, 0, 0));
        c.add_entry(g0, h, a.element("e1").unwrap());
        c.add_entry(g1, h, a.element("X1").unwrap());
        assert!(c.is_valid());
        let m = c.minimize();
        assert_eq!(m.generators(), &[ProjGenerator::new(1, -1, 1, 0)]);
        assert_eq!(m.entries().count(), 0);
        assert_eq!(m.minimize().generators(), m.generators());
    }

    #[test]
    fn shifts_invert() {
        let c = ProjComplex::projective(alg(), 2).shift(1, 0, 0).shift(-1, 0, 0);
        assert_eq!(c.generators(), ProjComplex::projective(alg(), 2).generators());
    }

    #[test]
    fn endomorphisms_of_projective() {
        let p = ProjComplex::projective(alg(), 2);
        assert_eq!(chain_map_space(&p, &p, (0, 0, 0)).len(), 1);
        assert_eq!(chain_map_space(&p, &p, (0, 0, 1)).len(), 1); // ie2
        let p1 = ProjComplex::projective(alg(), 1);
        assert_eq!(chain_map_space(&p1, &p1, (0, 0, 0)).len(), 1);
        assert_eq!(chain_map_space(&p1, &p1, (0, 1, 0)).len(), 1);
        let b3 = build_type_b(3).unwrap();
        let (x, y) = (ProjComplex::projective(b3.clone(), 1), ProjComplex::projective(b3, 3));
        for s in -2..=2 {
            assert!(chain_map_space(&x, &y, (0, s, 0)).is_empty());
        }
    }

    #[test]
    fn cone_of_identity_is_contractible() {
        let p = ProjComplex::projective(alg(), 1);
        let c = cone(&ChainMap::identity(&p), &p, &p).unwrap();
        assert!(c.is_valid());
        assert!(c.minimize().is_empty());
        let zero = ChainMap { degree: (0, 0, 0), entries: BTreeMap::new() };
        let q = ProjComplex::projective(alg(), 2);
        let c = cone(&zero, &p, &q).unwrap();
        assert_eq!(c.generators(), &[ProjGenerator::new(1, -1, 0, 0), ProjGenerator::new(2, 0, 0, 0)]);
        let wrong = ChainMap { degree: (0, 1, 0), entries: BTreeMap::new() };
        assert!(cone(&wrong, &p, &q).is_err());
    }

    #[test]
    fn parity_shift_invisible_away_from_vertex_one() {
        let p2 = ProjComplex::projective(alg(), 2);
        assert!(is_isomorphic(&p2, &p2.shift(0, 0, 1)).unwrap().is_yes());
        let p1 = ProjComplex::projective(alg(), 1);
        assert!(is_isomorphic(&p1, &p1.shift(0, 0, 1)).unwrap().is_no());
        assert!(is_isomorphic(&p1, &p1).unwrap().is_yes());
    }
}
