//! Braid group actions on complexes: the cone functors for each generator and
//! their inverses, braid words, the type B → type A word map, and the
//! Temperley–Lieb functors.
//!
//! Every functor is evaluated object by object. Tensoring a projective `P_k`
//! with the bimodule `P_j ⊗ e_j A` over the endomorphism field `F_j` of `P_j`
//! gives one copy of `P_j` per `F_j`-basis element `v` of `e_j A e_k`; a
//! differential entry `b` becomes the matrix of `F_j`-coefficients of `v·b`.

use std::fmt;

use crate::algebra::{AlgebraElement, AlgebraType, GradingMode, ZigzagAlgebra};
use crate::arith::Field;
use crate::complex::{ProjComplex, ProjGenerator};
use crate::error::{Error, Result};

/// A word in the generators of the Artin group of type A (`rank` vertices) or
/// type B (`rank` = n). Positive letters are generators, negative their inverses.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    pub kind: AlgebraType,
    pub rank: usize,
    pub letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(kind: AlgebraType, rank: usize, letters: Vec<i32>) -> Result<Self> {
        if rank < 2 {
            return Err(Error::Rank(rank));
        }
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize > rank {
                return Err(Error::Invalid(format!("letter {l} out of range for rank {rank}")));
            }
        }
        Ok(BraidWord { kind, rank, letters })
    }

    pub fn identity(kind: AlgebraType, rank: usize) -> Self {
        BraidWord { kind, rank, letters: Vec::new() }
    }

    /// Space-separated signed integers, e.g. `"2 -1 2"`.
    pub fn parse(kind: AlgebraType, rank: usize, s: &str) -> Result<Self> {
        let letters = s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<i32>().map_err(|_| Error::Parse(format!("invalid braid letter `{t}`"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(kind, rank, letters)
    }

    pub fn inverse(&self) -> Self {
        BraidWord { letters: self.letters.iter().rev().map(|l| -l).collect(), ..self.clone() }
    }

    /// `self · other` (as group elements; `other` acts first).
    pub fn concat(&self, other: &Self) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord { letters, ..self.clone() }
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_freely_reduced(&self) -> bool {
        self.letters.windows(2).all(|w| w[0] != -w[1])
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Image of a type B word of rank `n` in the type A group on `2n − 1` vertices:
/// `σ_1 ↦ σ_n`, `σ_j ↦ σ_{n−j+1} σ_{n+j−1}`.
pub fn type_a_word(w: &BraidWord) -> Result<BraidWord> {
    if w.kind != AlgebraType::B {
        return Err(Error::Invalid("type_a_word expects a type B word".into()));
    }
    let n = w.rank as i32;
    let mut letters = Vec::new();
    for &l in &w.letters {
        let (j, sign) = (l.abs(), l.signum());
        if j == 1 {
            letters.push(sign * n);
        } else {
            letters.push(sign * (n - j + 1));
            letters.push(sign * (n + j - 1));
        }
    }
    BraidWord::new(AlgebraType::A, 2 * w.rank - 1, letters)
}

/// `F_j`-basis of `e_j A e_k`: all paths when `F_j` is the ground field
/// (vertex 1 of type B, or type A), otherwise the paths without `ie`.
pub fn tensor_basis<F: Field>(alg: &ZigzagAlgebra<F>, j: usize, k: usize) -> Vec<usize> {
    let real_only = alg.kind() == AlgebraType::B && alg.imaginary_unit(j).is_none();
    alg.hom_basis(j, k).iter().copied().filter(|&u| real_only || !alg.path(u).imaginary).collect()
}

/// Writes `x ∈ e_j A e_l` as `Σ c_w · w` over the tensor basis of `(j, l)`,
/// with coefficients `c_w ∈ F_j ⊂ e_j A e_j`.
pub fn decompose<F: Field>(alg: &ZigzagAlgebra<F>, j: usize, x: &AlgebraElement<F>) -> Vec<(usize, AlgebraElement<F>)> {
    let mut out: Vec<(usize, AlgebraElement<F>)> = Vec::new();
    let e = alg.idempotent(j);
    let iu = alg.imaginary_unit(j);
    for (u, c) in x.terms() {
        let p = alg.path(*u);
        let (w, coeff) = match (p.imaginary, iu) {
            (true, Some(iu)) => {
                let plain = alg
                    .hom_basis(p.source, p.target)
                    .iter()
                    .copied()
                    .find(|&v| {
                        let q = alg.path(v);
                        !q.imaginary && q.length == p.length
                    })
                    .expect("real companion path");
                (plain, AlgebraElement::term(iu, c.clone()))
            }
            _ => (*u, AlgebraElement::term(e, c.clone())),
        };
        match out.iter_mut().find(|(v, _)| *v == w) {
            Some(slot) => slot.1 = slot.1.add(&coeff),
            None => out.push((w, coeff)),
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    out
}

/// The summands of `P_j ⊗ (e_j A ⊗ C)`: for each old generator, the new
/// generators with their tensor basis paths, plus the induced differential.
struct Expansion<F: Field> {
    complex: ProjComplex<F>,
    /// for each new generator: (old generator, tensor basis path)
    origin: Vec<(usize, usize)>,
    /// for each old generator: new generators sprouted from it
    sprouts: Vec<Vec<usize>>,
}

fn expand<F: Field>(c: &ProjComplex<F>, j: usize, dr: i32, ds: i32, sign: bool) -> Expansion<F> {
    let alg = c.algebra();
    let mut complex = ProjComplex::new(alg.clone());
    let mut origin = Vec::new();
    let mut sprouts = vec![Vec::new(); c.len()];
    for (gi, g) in c.generators().iter().enumerate() {
        for v in tensor_basis(alg, j, g.vertex) {
            let p = alg.path(v);
            let idx = complex.add_generator(ProjGenerator::new(j, g.r + dr, g.s + p.degree + ds, g.t + p.z2));
            origin.push((gi, v));
            sprouts[gi].push(idx);
        }
    }
    for (&(g, h), b) in c.entries() {
        for &a in &sprouts[g] {
            let v = AlgebraElement::basis(origin[a].1);
            let vb = alg.mul(&v, b);
            for (w, coeff) in decompose(alg, j, &vb) {
                let target = sprouts[h].iter().copied().find(|&t| origin[t].1 == w).expect("tensor basis path");
                complex.add_entry(a, target, if sign { coeff.neg() } else { coeff });
            }
        }
    }
    Expansion { complex, origin, sprouts }
}

/// Terms `x ⊗ y` of the unit of the adjunction, `x ∈ A e_j`, `y ∈ e_j A`.
fn coevaluation_terms<F: Field>(alg: &ZigzagAlgebra<F>, j: usize) -> Vec<(AlgebraElement<F>, AlgebraElement<F>)> {
    let el = |name: String| alg.element(&name).expect("basis path");
    let mut terms = vec![(el(format!("X{j}")), el(format!("e{j}"))), (el(format!("e{j}")), el(format!("X{j}")))];
    if j > 1 {
        terms.push((el(format!("({}|{j})", j - 1)), el(format!("({j}|{})", j - 1))));
    }
    if j < alg.vertices() {
        terms.push((el(format!("({}|{j})", j + 1)), el(format!("({j}|{})", j + 1))));
    }
    if alg.kind() == AlgebraType::B && j == 1 {
        terms.push((el("(ie2)(2|1)".into()).neg(), el("(1|2)(ie2)".into())));
    }
    terms
}

fn check_generator<F: Field>(alg: &ZigzagAlgebra<F>, letter: i32) -> Result<usize> {
    let j = letter.unsigned_abs() as usize;
    if letter == 0 || j > alg.vertices() {
        return Err(Error::Invalid(format!("generator {letter} out of range")));
    }
    Ok(j)
}

/// Applies `σ_j` (positive letter) or `σ_j⁻¹` (negative letter) and minimises.
/// For type B the first generator carries an extra parity shift `⟨1⟩`.
pub fn apply_generator<F: Field>(c: &ProjComplex<F>, letter: i32) -> Result<ProjComplex<F>> {
    let twist = c.algebra().kind() == AlgebraType::B && letter.abs() == 1;
    apply_cone_functor(c, letter, twist)
}

/// The bare cone functor (positive letter) or cocone functor (negative letter)
/// of generator `|letter|`, optionally followed by `⟨1⟩`, then minimised.
pub fn apply_cone_functor<F: Field>(c: &ProjComplex<F>, letter: i32, parity_twist: bool) -> Result<ProjComplex<F>> {
    let alg = c.algebra().clone();
    let j = check_generator(&alg, letter)?;
    let n_old = c.len();
    let mut out = c.clone();
    if letter > 0 {
        // cone of P_j ⊗ e_jA ⊗ C → C
        let ex = expand(c, j, -1, 0, true);
        let base = append(&mut out, &ex.complex);
        for (a, &(g, v)) in ex.origin.iter().enumerate() {
            out.add_entry(base + a, g, AlgebraElement::basis(v));
        }
    } else {
        // cocone of C → P_j ⊗ e_jA ⊗ C {−1}
        let ex = expand(c, j, 1, -1, true);
        let base = append(&mut out, &ex.complex);
        for (g, gen) in c.generators().iter().enumerate() {
            for (x, y) in coevaluation_terms(&alg, j) {
                let x = alg.mul(&AlgebraElement::basis(alg.idempotent(gen.vertex)), &x);
                if x.is_zero() {
                    continue;
                }
                let y = alg.mul(&y, &AlgebraElement::basis(alg.idempotent(gen.vertex)));
                for (v, coeff) in decompose(&alg, j, &y) {
                    let target = ex.sprouts[g].iter().copied().find(|&t| ex.origin[t].1 == v).expect("sprout");
                    out.add_entry(g, base + target, alg.mul(&x, &coeff));
                }
            }
        }
    }
    debug_assert!(out.len() >= n_old);
    if parity_twist {
        out = out.shift(0, 0, 1);
    }
    debug_assert!(out.is_valid(), "{:?}", out.check());
    Ok(out.minimize())
}

fn append<F: Field>(out: &mut ProjComplex<F>, part: &ProjComplex<F>) -> usize {
    let base = out.len();
    for g in part.generators() {
        out.add_generator(*g);
    }
    for (&(a, b), x) in part.entries() {
        out.add_entry(base + a, base + b, x.clone());
    }
    base
}

/// `σ_{w_1}(σ_{w_2}(⋯ σ_{w_k}(C)))`: the rightmost letter acts first.
pub fn apply_word<F: Field>(w: &BraidWord, c: &ProjComplex<F>) -> Result<ProjComplex<F>> {
    let alg = c.algebra();
    if w.kind != alg.kind() || w.rank != alg.vertices() {
        return Err(Error::AlgebraMismatch(format!(
            "word of type {} rank {} on complex of type {} with {} vertices",
            w.kind,
            w.rank,
            alg.kind(),
            alg.vertices()
        )));
    }
    let mut out = c.minimize();
    for &l in w.letters.iter().rev() {
        out = apply_generator(&out, l)?;
    }
    Ok(out)
}

/// Temperley–Lieb functor `U_j = P_j ⊗ e_jA (−1)` in the path-length grading.
pub fn apply_tl<F: Field>(j: usize, c: &ProjComplex<F>) -> Result<ProjComplex<F>> {
    let alg = c.algebra();
    if alg.mode() != GradingMode::PathLength {
        return Err(Error::Invalid("Temperley–Lieb functors need the path-length grading".into()));
    }
    check_generator(alg, j as i32)?;
    Ok(expand(c, j, 0, -1, false).complex)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build_type_a, build_type_b};
    use crate::complex::is_isomorphic;

    #[test]
    fn psi_on_letters() {
        let w = BraidWord::parse(AlgebraType::B, 3, "1").unwrap();
        assert_eq!(type_a_word(&w).unwrap().letters, vec![3]);
        let w = BraidWord::parse(AlgebraType::B, 3, "2").unwrap();
        assert_eq!(type_a_word(&w).unwrap().letters, vec![2, 4]);
        let w = BraidWord::parse(AlgebraType::B, 3, "-2").unwrap();
        assert_eq!(type_a_word(&w).unwrap().letters, vec![-2, -4]);
    }

    #[test]
    fn word_validation() {
        assert!(BraidWord::parse(AlgebraType::B, 2, "3").is_err());
        assert!(BraidWord::parse(AlgebraType::B, 2, "0").is_err());
        assert!(BraidWord::parse(AlgebraType::B, 2, "x").is_err());
        assert_eq!(BraidWord::parse(AlgebraType::B, 2, "2 -1").unwrap().inverse().letters, vec![1, -2]);
    }

    #[test]
    fn generator_on_its_own_projective() {
        // type A: σ_j P_j = P_j[1]{1}
        let a = build_type_a(3).unwrap();
        for j in 1..=3 {
            let c = apply_generator(&ProjComplex::projective(a.clone(), j), j as i32).unwrap();
            assert_eq!(c.generators(), &[ProjGenerator::new(j, -1, 1, 0)]);
            let d = apply_generator(&ProjComplex::projective(a.clone(), j), -(j as i32)).unwrap();
            assert_eq!(d.generators(), &[ProjGenerator::new(j, 1, -1, 0)]);
        }
        // type B: σ_1 P_1 = P_1[1]{1}⟨1⟩
        let b = build_type_b(2).unwrap();
        let c = apply_generator(&ProjComplex::projective(b.clone(), 1), 1).unwrap();
        assert_eq!(c.generators(), &[ProjGenerator::new(1, -1, 1, 1)]);
    }

    #[test]
    fn distant_generator_fixes_projective() {
        let b = build_type_b(3).unwrap();
        let p = ProjComplex::projective(b, 1);
        let c = apply_generator(&p, 3).unwrap();
        assert_eq!(c.generators(), p.generators());
    }

    #[test]
    fn generator_then_inverse_is_identity() {
        for n in 2..=3 {
            let b = build_type_b(n).unwrap();
            let all = ProjComplex::all_projectives(b);
            for j in 1..=n as i32 {
                for w in [vec![j, -j], vec![-j, j]] {
                    let word = BraidWord::new(AlgebraType::B, n, w).unwrap();
                    let c = apply_word(&word, &all).unwrap();
                    assert!(c.is_valid());
                    assert!(is_isomorphic(&c, &all).unwrap().is_yes(), "n={n} j={j}");
                }
            }
        }
    }

    #[test]
    fn type_b_relation_on_first_projective() {
        // with the bare cone functors: P1{1}<1>
        let b = build_type_b(2).unwrap();
        let mut c = ProjComplex::projective(b.clone(), 1);
        for l in [2, 1, 2] {
            c = apply_cone_functor(&c, l, false).unwrap();
        }
        assert_eq!(c.len(), 1);
        let g = c.generators()[0];
        assert_eq!((g.vertex, g.s, g.t), (1, 1, 1));
        // the braid generator carries one more parity shift
        let w = BraidWord::parse(AlgebraType::B, 2, "2 1 2").unwrap();
        let d = apply_word(&w, &ProjComplex::projective(b, 1)).unwrap();
        let h = d.generators()[0];
        assert_eq!((d.len(), h.vertex, h.s, h.t), (1, 1, 1, 0));
    }
}
