//! Named verification suites: bounded, exact checks of the structural claims
//! the library rests on. Each suite returns a report with one line per case;
//! the CLI prints them and the acceptance tests assert on them.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{
    build_type_a, build_type_b, build_type_b_with, AlgebraType, Complexification, GradingMode, ZigzagAlgebra,
};
use crate::arith::{Field, GaussRational, GradedLaurent, GradingTag, Substitution};
use crate::complex::{is_isomorphic, ChainMap, Isomorphism, ProjComplex};
use crate::curve::{
    bigraded_intersect, curve_complex, intersect, intersect_basic, intersect_wall, lift, multicurve_complex, sgn,
    Curve, GradingShift,
};
use crate::error::{Error, Result};
use crate::extend::extend;
use crate::functor::{apply_cone_functor, apply_generator, apply_tl, apply_word, type_a_word, BraidWord};
use crate::hom::poincare;
use crate::k0::{check_decat_square, rep_matrix, word_matrix, RepMatrix};
use crate::linalg::{self, SparseRow};

#[derive(Clone, Debug, Serialize)]
pub struct Case {
    pub name: String,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    /// The statement being checked.
    pub claim: String,
    pub ok: bool,
    pub cases: Vec<Case>,
}

impl SuiteReport {
    fn new(suite: &str) -> Self {
        let claim = SUITES.iter().find(|s| s.0 == suite).map(|s| s.1).unwrap_or_default();
        SuiteReport { suite: suite.into(), claim: claim.into(), ok: true, cases: Vec::new() }
    }

    fn push(&mut self, name: impl Into<String>, ok: bool, detail: Option<String>) {
        self.ok &= ok;
        self.cases.push(Case { name: name.into(), ok, detail });
    }

    fn check(&mut self, name: impl Into<String>, ok: bool) {
        self.push(name, ok, None);
    }

    pub fn failures(&self) -> impl Iterator<Item = &Case> {
        self.cases.iter().filter(|c| !c.ok)
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Type B rank `n`; for type A braid relations, the number of vertices.
    pub rank: usize,
    pub side: AlgebraType,
    /// Number of random samples for sampled suites.
    pub samples: usize,
    pub seed: u64,
}

impl VerifyOptions {
    pub fn new(rank: usize) -> Self {
        VerifyOptions { rank, side: AlgebraType::B, samples: 60, seed: 2024 }
    }
}

/// Suite names with the claim each one checks.
pub const SUITES: &[(&str, &str)] = &[
    (
        "algebra",
        "both zigzag algebras have dimension 8n-6, satisfy their defining relations and are associative and graded",
    ),
    (
        "complexification",
        "the complexified type B algebra maps isomorphically and gradedly onto the type A algebra with 2n-1 vertices",
    ),
    ("braid-relations", "the generator functors satisfy the braid relations and invert each other up to homotopy"),
    ("type-b-relation", "the cone functors send P1 through R2 R1 R2 to P1{1}<1> up to a cohomological shift"),
    (
        "tensor-equivariance",
        "extension of scalars intertwines each type B braid with its image in the type A braid group",
    ),
    ("diagram-commutes", "extending the complex of a trigraded curve gives the complex of its lift"),
    ("curve-complex-equivariance", "the complex of a twisted basic curve is the twisted projective"),
    (
        "poincare-intersection",
        "the trigraded intersection number equals the Poincare polynomial of the morphism complex",
    ),
    (
        "k0",
        "Grothendieck group matrices satisfy the braid relations, match the listed blocks and commute with extension",
    ),
    ("tl-relations", "the Temperley-Lieb functors satisfy their four bimodule relations in the path-length grading"),
    ("faithfulness", "no nontrivial reduced word of length at most 3 in rank 2 fixes the sum of projectives"),
    (
        "curve-calculus",
        "shift law, symmetry, forgetting q3 on lifts, and parity of the first vertex for curves through 0",
    ),
];

pub fn run(name: &str, opts: &VerifyOptions) -> Result<SuiteReport> {
    if opts.rank < 2 {
        return Err(Error::Rank(opts.rank));
    }
    match name {
        "algebra" => algebra_suite(opts.rank),
        "complexification" => complexification_suite(opts.rank),
        "braid-relations" => braid_suite(opts.side, opts.rank),
        "type-b-relation" => type_b_relation_suite(opts.rank),
        "tensor-equivariance" => tensor_suite(opts),
        "diagram-commutes" => diagram_suite(opts.rank, 3),
        "curve-complex-equivariance" => curve_complex_suite(opts),
        "poincare-intersection" => poincare_suite(opts),
        "k0" => k0_suite(opts.rank),
        "tl-relations" => tl_suite(opts.rank),
        "faithfulness" => faithfulness_suite(opts.rank),
        "curve-calculus" => curve_suite(opts),
        other => Err(Error::Invalid(format!("unknown suite `{other}`"))),
    }
}

/// Runs every suite at the given rank.
pub fn run_all(opts: &VerifyOptions) -> Result<Vec<SuiteReport>> {
    SUITES.iter().map(|(name, _)| run(name, opts)).collect()
}

// ---------------------------------------------------------------------------
// words

fn word_text(letters: &[i32]) -> String {
    if letters.is_empty() {
        return "e".into();
    }
    letters.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ")
}

/// Every word of length at most `max_len` in the generators `±1..=±gens`.
pub fn all_words(gens: usize, max_len: usize) -> Vec<Vec<i32>> {
    let letters: Vec<i32> = (1..=gens as i32).flat_map(|g| [g, -g]).collect();
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w: &Vec<i32>| {
                letters.iter().map(move |&l| {
                    let mut v = w.clone();
                    v.push(l);
                    v
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

fn random_word(rng: &mut ChaCha8Rng, gens: usize, max_len: usize) -> Vec<i32> {
    let len = rng.random_range(1..=max_len);
    (0..len)
        .map(|_| {
            let g = rng.random_range(1..=gens as i32);
            if rng.random_bool(0.5) {
                g
            } else {
                -g
            }
        })
        .collect()
}

fn is_freely_reduced(w: &[i32]) -> bool {
    w.windows(2).all(|p| p[0] != -p[1])
}

// ---------------------------------------------------------------------------
// isomorphism with an independently re-checked certificate

fn certified<F: Field>(c: &ProjComplex<F>, d: &ProjComplex<F>) -> Result<(bool, Option<String>)> {
    match is_isomorphic(c, d)? {
        Isomorphism::Yes { minimal_source, minimal_target, forward, backward } => {
            let alg = minimal_source.algebra().clone();
            let ok = forward.is_chain_map(&minimal_source, &minimal_target)
                && backward.is_chain_map(&minimal_target, &minimal_source)
                && forward.then(&alg, &backward).entries == ChainMap::identity(&minimal_source).entries
                && backward.then(&alg, &forward).entries == ChainMap::identity(&minimal_target).entries;
            Ok((ok, (!ok).then(|| "certificate does not check".to_string())))
        }
        Isomorphism::No(why) => Ok((false, Some(why))),
        Isomorphism::Inconclusive => Ok((false, Some("no certificate found".into()))),
    }
}

// ---------------------------------------------------------------------------
// 1. algebras

fn relation_checks<F: Field>(alg: &ZigzagAlgebra<F>, rep: &mut SuiteReport) -> Result<()> {
    let label = format!("{}{}", alg.kind().label(), alg.vertices());
    let m = alg.vertices();
    let el = |s: &str| alg.parse_element(s);
    let mul = |a: &str, b: &str| -> Result<_> { Ok(alg.mul(&el(a)?, &el(b)?)) };
    let mul3 = |a: &str, b: &str, c: &str| -> Result<_> { Ok(alg.mul(&alg.mul(&el(a)?, &el(b)?), &el(c)?)) };
    let mut rels: Vec<(String, bool)> = Vec::new();
    for j in 1..=m {
        for k in 1..=m {
            let ok = if j == k {
                mul(&format!("e{j}"), &format!("e{j}"))? == el(&format!("e{j}"))?
            } else {
                mul(&format!("e{j}"), &format!("e{k}"))?.is_zero()
            };
            rels.push((format!("e{j} e{k}"), ok));
        }
    }
    for j in 2..m {
        let (down, up) = (
            mul(&format!("({j}|{})", j - 1), &format!("({}|{j})", j - 1))?,
            mul(&format!("({j}|{})", j + 1), &format!("({}|{j})", j + 1))?,
        );
        rels.push((format!("loops at {j} agree"), down == up && !down.is_zero()));
        rels.push((
            format!("({}|{j}|{}) = 0", j - 1, j + 1),
            mul(&format!("({}|{j})", j - 1), &format!("({j}|{})", j + 1))?.is_zero(),
        ));
        rels.push((
            format!("({}|{j}|{}) = 0", j + 1, j - 1),
            mul(&format!("({}|{j})", j + 1), &format!("({j}|{})", j - 1))?.is_zero(),
        ));
    }
    rels.push(("(1|2|1|2) = 0".into(), mul3("(1|2)", "(2|1)", "(1|2)")?.is_zero()));
    rels.push((
        format!("({m}|{}|{m}|{}) = 0", m - 1, m - 1),
        mul3(&format!("({m}|{})", m - 1), &format!("({}|{m})", m - 1), &format!("({m}|{})", m - 1))?.is_zero(),
    ));
    if alg.kind() == AlgebraType::B {
        for j in 2..=m {
            rels.push((
                format!("ie{j} ie{j} = -e{j}"),
                mul(&format!("ie{j}"), &format!("ie{j}"))? == el(&format!("-e{j}"))?,
            ));
        }
        for j in 3..=m {
            let i = j - 1;
            rels.push((
                format!("ie{i} ({i}|{j}) = ({i}|{j}) ie{j}"),
                mul(&format!("ie{i}"), &format!("({i}|{j})"))? == mul(&format!("({i}|{j})"), &format!("ie{j}"))?,
            ));
            rels.push((
                format!("ie{j} ({j}|{i}) = ({j}|{i}) ie{i}"),
                mul(&format!("ie{j}"), &format!("({j}|{i})"))? == mul(&format!("({j}|{i})"), &format!("ie{i}"))?,
            ));
        }
        rels.push(("(1|2) ie2 (2|1) = 0".into(), mul3("(1|2)", "ie2", "(2|1)")?.is_zero()));
        rels.push(("ie2 X2 = X2 ie2".into(), mul("ie2", "X2")? == mul("X2", "ie2")?));
    }
    for (name, ok) in rels {
        rep.check(format!("{label}: {name}"), ok);
    }
    Ok(())
}

fn structure_checks<F: Field>(alg: &ZigzagAlgebra<F>, rep: &mut SuiteReport) {
    use crate::algebra::AlgebraElement;
    let label = format!("{}{}", alg.kind().label(), alg.vertices());
    let d = alg.dim();
    let mut assoc = true;
    let mut graded = true;
    for x in 0..d {
        for y in 0..d {
            if let Some((p, _)) = alg.mul_basis(x, y) {
                let (px, py, pp) = (alg.path(x), alg.path(y), alg.path(p));
                graded &= pp.degree == px.degree + py.degree && pp.z2 == (px.z2 + py.z2) % 2;
            }
            let xy = alg.mul(&AlgebraElement::basis(x), &AlgebraElement::basis(y));
            for z in 0..d {
                let yz = alg.mul(&AlgebraElement::basis(y), &AlgebraElement::basis(z));
                assoc &= alg.mul(&xy, &AlgebraElement::basis(z)) == alg.mul(&AlgebraElement::basis(x), &yz);
            }
        }
    }
    rep.check(format!("{label}: associative on all {} basis triples", d * d * d), assoc);
    rep.check(format!("{label}: products of basis paths are homogeneous"), graded);
}

fn algebra_suite(n: usize) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("algebra");
    let b = build_type_b(n)?;
    let a = build_type_a(2 * n - 1)?;
    rep.check(format!("dim b{n} = {}", 8 * n - 6), b.dim() == 8 * n - 6);
    rep.check(format!("dim a{} = {}", 2 * n - 1, 8 * n - 6), a.dim() == 8 * n - 6);
    relation_checks(&b, &mut rep)?;
    relation_checks(&a, &mut rep)?;
    structure_checks(&b, &mut rep);
    structure_checks(&a, &mut rep);
    Ok(rep)
}

// ---------------------------------------------------------------------------
// 2. the algebra isomorphism

fn complexification_suite(n: usize) -> Result<SuiteReport> {
    use crate::algebra::AlgebraElement;
    let mut rep = SuiteReport::new("complexification");
    let complexify = Complexification::new(n)?;
    let (src, dst) = (&complexify.source, &complexify.target);
    let scalars = [GaussRational::one(), GaussRational::i()];
    // spanning set {1 ⊗ b, i ⊗ b} over the reals
    let span: Vec<(GaussRational, usize)> =
        scalars.iter().flat_map(|c| (0..src.dim()).map(move |b| (c.clone(), b))).collect();
    let mut multiplicative = true;
    for (c1, b1) in &span {
        for (c2, b2) in &span {
            let prod = src.mul(&AlgebraElement::basis(*b1), &AlgebraElement::basis(*b2));
            let lhs = complexify.apply(&c1.mul(c2), &prod);
            let rhs = dst.mul(
                &complexify.apply(c1, &AlgebraElement::basis(*b1)),
                &complexify.apply(c2, &AlgebraElement::basis(*b2)),
            );
            multiplicative &= lhs == rhs;
        }
    }
    rep.check(format!("n={n}: multiplicative on {} pairs", span.len() * span.len()), multiplicative);
    let graded = (0..src.dim()).all(|b| {
        let img = complexify.image_of_basis(b);
        !img.is_zero() && dst.bidegree(img).map(|(deg, _)| deg) == Some(src.path(b).degree)
    });
    rep.check(format!("n={n}: basis images are nonzero and homogeneous of the same degree"), graded);
    let rows: Vec<SparseRow<GaussRational>> =
        (0..src.dim()).map(|b| complexify.image_of_basis(b).terms().to_vec()).collect();
    let rank = linalg::rank(dst.dim(), rows);
    rep.push(
        format!("n={n}: bijective (complex rank {rank} of {})", dst.dim()),
        rank == dst.dim() && src.dim() == dst.dim(),
        None,
    );
    let unit_src = (1..=n).fold(AlgebraElement::zero(), |acc: AlgebraElement<crate::arith::Rational>, j| {
        acc.add(&AlgebraElement::basis(src.idempotent(j)))
    });
    let unit_dst = (1..2 * n).fold(AlgebraElement::zero(), |acc: AlgebraElement<GaussRational>, j| {
        acc.add(&AlgebraElement::basis(dst.idempotent(j)))
    });
    rep.check(format!("n={n}: unital"), complexify.apply(&GaussRational::one(), &unit_src) == unit_dst);
    Ok(rep)
}

// ---------------------------------------------------------------------------
// 3. braid relations

fn relation_words(kind: AlgebraType, gens: usize) -> Vec<(Vec<i32>, Vec<i32>)> {
    let g = gens as i32;
    let mut out = Vec::new();
    for j in 1..=g {
        for k in j + 2..=g {
            out.push((vec![j, k], vec![k, j]));
        }
    }
    let first_long = if kind == AlgebraType::B { 2 } else { 1 };
    for j in first_long..g {
        out.push((vec![j, j + 1, j], vec![j + 1, j, j + 1]));
    }
    if kind == AlgebraType::B {
        out.push((vec![1, 2, 1, 2], vec![2, 1, 2, 1]));
    }
    for j in 1..=g {
        out.push((vec![j, -j], vec![]));
        out.push((vec![-j, j], vec![]));
    }
    out
}

fn braid_relations_on<F: Field>(alg: Arc<ZigzagAlgebra<F>>, rep: &mut SuiteReport) -> Result<()> {
    let kind = alg.kind();
    let gens = alg.vertices();
    let all = ProjComplex::all_projectives(alg);
    for (lhs, rhs) in relation_words(kind, gens) {
        let l = apply_word(&BraidWord::new(kind, gens, lhs.clone())?, &all)?;
        let r = apply_word(&BraidWord::new(kind, gens, rhs.clone())?, &all)?;
        let (ok, detail) = certified(&l, &r)?;
        rep.push(format!("{}{gens}: {} ~ {}", kind.label(), word_text(&lhs), word_text(&rhs)), ok, detail);
    }
    Ok(())
}

fn braid_suite(side: AlgebraType, rank: usize) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("braid-relations");
    match side {
        AlgebraType::B => braid_relations_on(build_type_b(rank)?, &mut rep)?,
        AlgebraType::A => braid_relations_on(build_type_a(rank)?, &mut rep)?,
    }
    Ok(rep)
}

// ---------------------------------------------------------------------------
// 4. the length-four relation computed by hand

fn type_b_relation_suite(n: usize) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("type-b-relation");
    let b = build_type_b(n)?;
    let mut c = ProjComplex::projective(b.clone(), 1);
    for l in [2, 1, 2] {
        c = apply_cone_functor(&c, l, false)?;
    }
    let c = c.minimize();
    let gens = c.generators();
    let shape = gens.len() == 1 && gens[0].vertex == 1 && gens[0].s == 1 && gens[0].t == 1;
    rep.push(format!("n={n}: R2 R1 R2 (P1) is a single P1{{1}}<1>"), shape, Some(format!("{gens:?}")));
    if let Some(g) = gens.first() {
        let target = ProjComplex::projective(b, 1).shift(-g.r, 1, 1);
        let (ok, detail) = certified(&c, &target)?;
        rep.push(format!("n={n}: isomorphic to P1[{}]{{1}}<1>", -g.r), ok, detail);
    }
    Ok(rep)
}

// ---------------------------------------------------------------------------
// 5. extension of scalars

fn tensor_suite(opts: &VerifyOptions) -> Result<SuiteReport> {
    let n = opts.rank;
    let mut rep = SuiteReport::new("tensor-equivariance");
    let complexify = Complexification::new(n)?;
    let b = build_type_b(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for _ in 0..opts.samples {
        let w = BraidWord::new(AlgebraType::B, n, random_word(&mut rng, n, 4))?;
        let image = type_a_word(&w)?;
        let mut ok = true;
        let mut detail = None;
        for j in 1..=n {
            let p = ProjComplex::projective(b.clone(), j);
            let lhs = extend(&complexify, &apply_word(&w, &p)?)?;
            let rhs = apply_word(&image, &extend(&complexify, &p)?)?;
            let (good, why) = certified(&lhs, &rhs)?;
            if !good {
                ok = false;
                detail = why.map(|d| format!("P{j}: {d}"));
                break;
            }
        }
        rep.push(format!("n={n}: w = {}", word_text(&w.letters)), ok, detail);
    }
    Ok(rep)
}

// ---------------------------------------------------------------------------
// 6. curves and their lifts

fn diagram_suite(n: usize, max_len: usize) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("diagram-commutes");
    let complexify = Complexification::new(n)?;
    let mut failures = 0;
    let mut total = 0;
    for letters in all_words(n, max_len) {
        let w = BraidWord::new(AlgebraType::B, n, letters.clone())?;
        for j in 1..=n {
            let c = Curve::basic(n, j)?.act_word(&w)?;
            let lhs = extend(&complexify, &curve_complex(&c)?)?;
            let rhs = multicurve_complex(&lift(&c)?)?;
            let (ok, why) = certified(&lhs, &rhs)?;
            total += 1;
            if !ok {
                failures += 1;
                rep.push(format!("n={n}: w = {}, b{j}", word_text(&letters)), false, why);
            }
        }
    }
    rep.check(format!("n={n}: {total} curves from words of length <= {max_len}, {failures} failures"), failures == 0);
    Ok(rep)
}

// ---------------------------------------------------------------------------
// 7. equivariance of the curve complexes

fn curve_complex_suite(opts: &VerifyOptions) -> Result<SuiteReport> {
    let n = opts.rank;
    let mut rep = SuiteReport::new("curve-complex-equivariance");
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 7);
    for _ in 0..opts.samples {
        let w = BraidWord::new(AlgebraType::B, n, random_word(&mut rng, n, 3))?;
        let mut ok = true;
        let mut detail = None;
        for j in 1..=n {
            let cc = curve_complex(&Curve::basic(n, j)?.act_word(&w)?)?;
            let base = curve_complex(&Curve::basic(n, j)?)?;
            let (good, why) = if cc.is_valid() {
                certified(&cc, &apply_word(&w, &base)?)?
            } else {
                (false, Some(cc.check().join("; ")))
            };
            if !good {
                ok = false;
                detail = why.map(|d| format!("b{j}: {d}"));
                break;
            }
        }
        rep.push(format!("n={n}: w = {}", word_text(&w.letters)), ok, detail);
    }
    Ok(rep)
}

// ---------------------------------------------------------------------------
// 8. intersection numbers

fn tri(s: &str) -> GradedLaurent {
    GradedLaurent::parse(GradingTag::Tri, s).expect("literal polynomial")
}

fn poincare_suite(opts: &VerifyOptions) -> Result<SuiteReport> {
    let n = opts.rank;
    let mut rep = SuiteReport::new("poincare-intersection");
    let b = build_type_b(n)?;
    let both = tri("1 + q2 + q3 + q2*q3");
    for j in 1..=n {
        let bj = Curve::basic(n, j)?;
        if j >= 2 {
            let got = intersect_basic(j, &bj)?;
            rep.push(format!("n={n}: I(b{j}, b{j}) = (1+q2)(1+q3)"), got == both, Some(got.to_string()));
        }
        if j < n {
            let got = intersect_basic(j, &Curve::basic(n, j + 1)?)?;
            rep.push(format!("n={n}: I(b{j}, b{}) = 1+q3", j + 1), got == tri("1 + q3"), Some(got.to_string()));
        }
        let got = intersect_wall(j, &bj)?;
        rep.push(
            format!("n={n}: I(d{j}, b{j}) = (1+q3)(1+q1^-1*q2)"),
            got == tri("1 + q3 + q1^-1*q2 + q1^-1*q2*q3"),
            Some(got.to_string()),
        );
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 8);
    for _ in 0..opts.samples.max(1) * 2 {
        let w0 = BraidWord::new(AlgebraType::B, n, random_word(&mut rng, n, 3))?;
        let w1 = BraidWord::new(AlgebraType::B, n, random_word(&mut rng, n, 3))?;
        let j = rng.random_range(1..=n);
        let k = rng.random_range(1..=n);
        let curve_side = intersect(n, &w0, j, &w1, k)?;
        let alg_side = poincare(
            &apply_word(&w0, &ProjComplex::projective(b.clone(), j))?,
            &apply_word(&w1, &ProjComplex::projective(b.clone(), k))?,
        )?;
        let ok = curve_side == alg_side;
        rep.push(
            format!("n={n}: ({}) b{j} vs ({}) b{k}", word_text(&w0.letters), word_text(&w1.letters)),
            ok,
            (!ok).then(|| format!("curves {curve_side}, algebra {alg_side}")),
        );
    }
    Ok(rep)
}

// ---------------------------------------------------------------------------
// 9. Grothendieck group

fn matrix_relations(kind: AlgebraType, gens: usize, rep: &mut SuiteReport) -> Result<()> {
    let word = |l: &[i32]| -> Result<RepMatrix> { word_matrix(&BraidWord::new(kind, gens, l.to_vec())?) };
    for (lhs, rhs) in relation_words(kind, gens) {
        let ok = word(&lhs)?.rows == word(&rhs)?.rows;
        rep.check(format!("{}{gens}: matrices of {} and {} agree", kind.label(), word_text(&lhs), word_text(&rhs)), ok);
    }
    Ok(())
}

fn k0_suite(n: usize) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("k0");
    matrix_relations(AlgebraType::B, n, &mut rep)?;
    matrix_relations(AlgebraType::A, 2 * n - 1, &mut rep)?;
    let kb = |s: &str| GradedLaurent::parse(GradingTag::Kb, s).expect("literal polynomial");
    let first = rep_matrix(AlgebraType::B, n, 1)?.block(0, 2);
    rep.push(
        format!("n={n}: first generator block is [[-sq, -(1+s)], [0, 1]]"),
        first == vec![vec![kb("-q*s"), kb("-1 - s")], vec![kb("0"), kb("1")]],
        Some(format!("{first:?}")),
    );
    let last = rep_matrix(AlgebraType::B, n, n as i32)?.block(n - 2, 2);
    rep.push(
        format!("n={n}: last generator block is [[1, 0], [-q, -q]]"),
        last == vec![vec![kb("1"), kb("0")], vec![kb("-q"), kb("-q")]],
        Some(format!("{last:?}")),
    );
    let square = check_decat_square(n)?;
    for (j, holds) in &square.generators {
        rep.check(format!("n={n}: square commutes for generator {j}"), *holds);
    }
    rep.check(format!("n={n}: tensor matrix equals the homology matrix"), square.tensor_matches_homology);
    Ok(rep)
}

// ---------------------------------------------------------------------------
// 10. Temperley–Lieb functors

fn tl_word<F: Field>(word: &[usize], c: &ProjComplex<F>) -> Result<ProjComplex<F>> {
    // rightmost acts first
    word.iter().rev().try_fold(c.clone(), |acc, &j| apply_tl(j, &acc))
}

fn tl_suite(n: usize) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("tl-relations");
    let alg = build_type_b_with(n, GradingMode::PathLength)?;
    let all = ProjComplex::all_projectives(alg);
    let check = |rep: &mut SuiteReport, name: String, lhs: ProjComplex<_>, rhs: ProjComplex<_>| -> Result<()> {
        let (ok, why) = certified(&lhs, &rhs)?;
        rep.push(name, ok, why);
        Ok(())
    };
    for j in 1..=n {
        let u = tl_word(&[j], &all)?;
        let uu = tl_word(&[j, j], &all)?;
        check(
            &mut rep,
            format!("n={n}: U{j}U{j} ~ U{j}(1) + U{j}(-1)"),
            uu,
            u.shift(0, 1, 0).direct_sum(&u.shift(0, -1, 0)),
        )?;
    }
    for i in 1..=n {
        for j in 1..=n {
            if i.abs_diff(j) > 1 {
                let c = tl_word(&[i, j], &all)?.minimize();
                rep.check(format!("n={n}: U{i}U{j} ~ 0"), c.is_empty());
            }
            if i.abs_diff(j) == 1 && i > 1 && j > 1 {
                check(
                    &mut rep,
                    format!("n={n}: U{i}U{j}U{i} ~ U{i}"),
                    tl_word(&[i, j, i], &all)?,
                    tl_word(&[i], &all)?,
                )?;
            }
        }
    }
    for (i, j) in [(1, 2), (2, 1)] {
        let uv = tl_word(&[i, j], &all)?;
        check(
            &mut rep,
            format!("n={n}: U{i}U{j}U{i}U{j} ~ U{i}U{j} + U{i}U{j}"),
            tl_word(&[i, j, i, j], &all)?,
            uv.direct_sum(&uv),
        )?;
    }
    Ok(rep)
}

// ---------------------------------------------------------------------------
// 11. faithfulness on short words

fn faithfulness_suite(n: usize) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("faithfulness");
    let all = ProjComplex::all_projectives(build_type_b(n)?);
    for letters in all_words(n, 3).into_iter().filter(|w| !w.is_empty() && is_freely_reduced(w)) {
        let c = apply_word(&BraidWord::new(AlgebraType::B, n, letters.clone())?, &all)?;
        let verdict = is_isomorphic(&c, &all)?;
        rep.push(format!("n={n}: {} moves the projectives", word_text(&letters)), verdict.is_no(), None);
    }
    Ok(rep)
}

// ---------------------------------------------------------------------------
// 12. curve calculus

fn forget_q3(p: &GradedLaurent) -> Result<GradedLaurent> {
    p.specialize(
        GradingTag::Bi,
        &[
            Substitution::Monomial { sign: 1, exps: vec![1, 0] },
            Substitution::Monomial { sign: 1, exps: vec![0, 1] },
            Substitution::one(),
        ],
    )
}

fn curve_suite(opts: &VerifyOptions) -> Result<SuiteReport> {
    let n = opts.rank;
    let mut rep = SuiteReport::new("curve-calculus");
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 12);
    let e = BraidWord::identity(AlgebraType::B, n);
    let mut counts = [0usize; 4];
    let mut bad = [0usize; 4];
    let mut first_failure: [Option<String>; 4] = Default::default();
    let mut note = |slot: usize, ok: bool, what: String, bad: &mut [usize; 4], counts: &mut [usize; 4]| {
        counts[slot] += 1;
        if !ok {
            bad[slot] += 1;
            first_failure[slot].get_or_insert(what);
        }
    };
    for _ in 0..opts.samples.max(1) * 2 {
        let letters = random_word(&mut rng, n, 4);
        let w = BraidWord::new(AlgebraType::B, n, letters.clone())?;
        let j = rng.random_range(1..=n);
        let k = rng.random_range(1..=n);
        let c = Curve::basic(n, k)?.act_word(&w)?;
        let label = format!("({}) b{k}, j={j}", word_text(&letters));

        let g = GradingShift::new(rng.random_range(-2..=2), rng.random_range(-2..=2), rng.random_range(0..=1));
        let shifted = intersect_basic(j, &c.shifted(g))?;
        let expected = intersect_basic(j, &c)?.shift(&[g.r1, g.r2, g.r3 as i32]);
        note(0, shifted == expected, format!("{label}, shift {g}"), &mut bad, &mut counts);

        if j >= 2 && c.endpoints().0 != 0 {
            let fwd = intersect(n, &e, j, &w, k)?;
            let back = intersect(n, &w, k, &e, j)?;
            let mut mirrored = GradedLaurent::zero(GradingTag::Tri);
            for (x, coeff) in fwd.terms() {
                mirrored.add_term([-x[0], 1 - x[1], x[2]], *coeff);
            }
            note(1, mirrored == back, label.clone(), &mut bad, &mut counts);
        }

        let left = lift(&Curve::basic(n, j)?)?;
        let bi = bigraded_intersect(&left, &lift(&c)?)?;
        note(2, forget_q3(&intersect_basic(j, &c)?)? == bi, label.clone(), &mut bad, &mut counts);

        if c.endpoints().0 == 0 {
            let cc = curve_complex(&c)?;
            let algebraic = sgn(&apply_generator(&cc, 1)?);
            let geometric = sgn(&curve_complex(&c.act(1)?)?);
            note(3, algebraic == geometric, label, &mut bad, &mut counts);
        }
    }
    let names = ["shift law", "symmetry away from 0", "q3 = 1 on lifts", "parity at vertex 1 for curves through 0"];
    for i in 0..4 {
        rep.push(
            format!("n={n}: {} ({} samples, {} failures)", names[i], counts[i], bad[i]),
            bad[i] == 0 && counts[i] > 0,
            first_failure[i].clone(),
        );
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_enumeration() {
        assert_eq!(all_words(2, 2).len(), 1 + 4 + 16);
        assert!(is_freely_reduced(&[1, 2, -1]));
        assert!(!is_freely_reduced(&[1, -1]));
    }

    #[test]
    fn small_suites_pass() {
        let opts = VerifyOptions { samples: 5, ..VerifyOptions::new(2) };
        for name in ["algebra", "complexification", "type-b-relation", "k0"] {
            let r = run(name, &opts).unwrap();
            assert!(r.ok, "{name}: {:?}", r.failures().collect::<Vec<_>>());
        }
        assert!(run("nope", &opts).is_err());
    }
}
