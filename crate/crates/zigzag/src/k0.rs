//! Grothendieck group classes and the induced braid representations.
//!
//! `[C[1]] = −[C]`, `[C{1}] = q[C]`, `[C⟨1⟩] = s[C]`; in type B the parity
//! variable is trivial at vertices `j ≥ 2`, so those coordinates are reduced
//! at `s = 1`.

use std::fmt;

use crate::algebra::{build_type_a, build_type_b, AlgebraType, Complexification, ZigzagAlgebra};
use crate::arith::{Field, GradedLaurent, GradingTag, Substitution};
use crate::complex::ProjComplex;
use crate::error::Result;
use crate::functor::{apply_generator, type_a_word, BraidWord};

fn tag_of(kind: AlgebraType) -> GradingTag {
    match kind {
        AlgebraType::A => GradingTag::Ka,
        AlgebraType::B => GradingTag::Kb,
    }
}

/// `s ↦ 1` on a type B coordinate.
pub fn drop_parity(p: &GradedLaurent) -> GradedLaurent {
    match p.tag() {
        GradingTag::Kb => {
            p.specialize(GradingTag::Kb, &[Substitution::var(0), Substitution::one()]).expect("valid substitution")
        }
        _ => p.clone(),
    }
}

/// Same polynomial, read in the type A ring (requires no `s`).
fn to_type_a(p: &GradedLaurent) -> GradedLaurent {
    p.specialize(GradingTag::Ka, &[Substitution::var(0), Substitution::one()]).expect("valid substitution")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct K0Vector {
    pub kind: AlgebraType,
    /// coordinate of `[P_j]` at index `j − 1`
    pub coords: Vec<GradedLaurent>,
}

impl K0Vector {
    fn normalize(mut self) -> Self {
        if self.kind == AlgebraType::B {
            for c in self.coords.iter_mut().skip(1) {
                *c = drop_parity(c);
            }
        }
        self
    }
}

impl fmt::Display for K0Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

pub fn k0_class<F: Field>(c: &ProjComplex<F>) -> K0Vector {
    let alg = c.algebra();
    let tag = tag_of(alg.kind());
    let mut coords = vec![GradedLaurent::zero(tag); alg.vertices()];
    for g in c.generators() {
        let sign = if g.r.rem_euclid(2) == 0 { 1 } else { -1 };
        let exps: Vec<i32> = match tag {
            GradingTag::Kb => vec![g.s, g.t as i32],
            _ => vec![g.s],
        };
        coords[g.vertex - 1] = &coords[g.vertex - 1] + &GradedLaurent::monomial(tag, &exps, sign);
    }
    K0Vector { kind: alg.kind(), coords }.normalize()
}

/// Square matrix over the K₀ coefficient ring; `rows[i][k]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepMatrix {
    pub kind: AlgebraType,
    pub label: String,
    pub rows: Vec<Vec<GradedLaurent>>,
}

impl RepMatrix {
    pub fn identity(kind: AlgebraType, dim: usize) -> Self {
        let tag = tag_of(kind);
        let rows =
            (0..dim).map(|i| (0..dim).map(|k| GradedLaurent::constant(tag, (i == k) as i64)).collect()).collect();
        RepMatrix { kind, label: "id".into(), rows }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Matrix product with the type B rows `≥ 2` reduced at `s = 1`.
    pub fn mul(&self, o: &Self) -> Self {
        let n = self.dim();
        let tag = tag_of(self.kind);
        let mut rows = vec![vec![GradedLaurent::zero(tag); n]; n];
        for (i, row) in rows.iter_mut().enumerate() {
            for (k, slot) in row.iter_mut().enumerate() {
                let mut acc = GradedLaurent::zero(tag);
                for j in 0..n {
                    acc = &acc + &(&self.rows[i][j] * &o.rows[j][k]);
                }
                *slot = if self.kind == AlgebraType::B && i > 0 { drop_parity(&acc) } else { acc };
            }
        }
        RepMatrix { kind: self.kind, label: format!("{}·{}", self.label, o.label), rows }
    }

    /// `s ↦ 1`, as a type A matrix.
    pub fn forget_parity(&self) -> Self {
        RepMatrix {
            kind: AlgebraType::A,
            label: self.label.clone(),
            rows: self.rows.iter().map(|r| r.iter().map(|p| to_type_a(&drop_parity(p))).collect()).collect(),
        }
    }

    /// The `size × size` block starting at row and column `start` (0-based).
    pub fn block(&self, start: usize, size: usize) -> Vec<Vec<GradedLaurent>> {
        self.rows[start..start + size].iter().map(|r| r[start..start + size].to_vec()).collect()
    }
}

impl fmt::Display for RepMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let parts: Vec<String> = row.iter().map(|c| c.to_string()).collect();
            writeln!(f, "[{}]", parts.join(", "))?;
        }
        Ok(())
    }
}

/// Matrix of one generator (or inverse): column `k` is the class of `σ(P_k)`.
pub fn rep_matrix_on<F: Field>(alg: &std::sync::Arc<ZigzagAlgebra<F>>, letter: i32) -> Result<RepMatrix> {
    let n = alg.vertices();
    let tag = tag_of(alg.kind());
    let mut rows = vec![vec![GradedLaurent::zero(tag); n]; n];
    for k in 1..=n {
        let img = apply_generator(&ProjComplex::projective(alg.clone(), k), letter)?;
        for (i, c) in k0_class(&img).coords.into_iter().enumerate() {
            rows[i][k - 1] = c;
        }
    }
    Ok(RepMatrix { kind: alg.kind(), label: format!("σ{letter}"), rows })
}

/// Matrix of a generator of the given type and rank (type A rank = vertex count).
pub fn rep_matrix(kind: AlgebraType, rank: usize, letter: i32) -> Result<RepMatrix> {
    match kind {
        AlgebraType::B => rep_matrix_on(&build_type_b(rank)?, letter),
        AlgebraType::A => rep_matrix_on(&build_type_a(rank)?, letter),
    }
}

/// Product of generator matrices along a word (rightmost letter acts first).
pub fn word_matrix(w: &BraidWord) -> Result<RepMatrix> {
    let dim = w.rank;
    let mut m = RepMatrix::identity(w.kind, dim);
    for &l in &w.letters {
        m = m.mul(&rep_matrix(w.kind, w.rank, l)?);
    }
    m.label = format!("[{w}]");
    Ok(m)
}

/// The K₀ matrix of extension of scalars, `(2n−1) × n`, entries 0/1, read off
/// from the extension of each projective.
pub fn tensor_matrix(n: usize) -> Result<Vec<Vec<i64>>> {
    let complexify = Complexification::new(n)?;
    let mut t = vec![vec![0i64; n]; 2 * n - 1];
    for j in 1..=n {
        let ext = crate::extend::extend(&complexify, &ProjComplex::projective(complexify.source.clone(), j))?;
        for (i, c) in k0_class(&ext).coords.iter().enumerate() {
            t[i][j - 1] = c.evaluate_at_one();
        }
    }
    Ok(t)
}

/// The same matrix written down from the covering-space description
/// `[ξ_j] ↦ [γ_{n−(j−1)}] + [γ_{n+(j−1)}]` (with `[ξ_1] ↦ [γ_n]`).
pub fn homology_tensor_matrix(n: usize) -> Vec<Vec<i64>> {
    let mut t = vec![vec![0i64; n]; 2 * n - 1];
    for j in 1..=n {
        t[n - j][j - 1] = 1;
        t[n + j - 2][j - 1] = 1;
    }
    t
}

#[derive(Clone, Debug)]
pub struct SquareReport {
    pub rank: usize,
    /// `(generator, holds)` for each type B generator
    pub generators: Vec<(i32, bool)>,
    pub tensor_matches_homology: bool,
}

impl SquareReport {
    pub fn ok(&self) -> bool {
        self.tensor_matches_homology && self.generators.iter().all(|g| g.1)
    }
}

fn apply_int(t: &[Vec<i64>], m: &RepMatrix, left: bool) -> Vec<Vec<GradedLaurent>> {
    // left: T·M (T is (2n−1)×n, M is n×n); otherwise M·T (M is (2n−1)²)
    let rows = t.len();
    let cols = t[0].len();
    let tag = GradingTag::Ka;
    let mut out = vec![vec![GradedLaurent::zero(tag); cols]; rows];
    for i in 0..rows {
        for k in 0..cols {
            let mut acc = GradedLaurent::zero(tag);
            if left {
                for j in 0..cols {
                    acc = &acc + &m.rows[j][k].scale(t[i][j]);
                }
            } else {
                for j in 0..rows {
                    acc = &acc + &m.rows[i][j].scale(t[j][k]);
                }
            }
            out[i][k] = acc;
        }
    }
    out
}

/// Checks `T · ρ_B(σ)|_{s=1} = ρ_A(type_a_word(σ)) · T` for every generator.
pub fn check_decat_square(n: usize) -> Result<SquareReport> {
    let t = tensor_matrix(n)?;
    let mut generators = Vec::new();
    for j in 1..=n as i32 {
        let b = rep_matrix(AlgebraType::B, n, j)?.forget_parity();
        let w = BraidWord::new(AlgebraType::B, n, vec![j])?;
        let a = word_matrix(&type_a_word(&w)?)?;
        generators.push((j, apply_int(&t, &b, true) == apply_int(&t, &a, false)));
    }
    Ok(SquareReport { rank: n, generators, tensor_matches_homology: t == homology_tensor_matrix(n) })
}
