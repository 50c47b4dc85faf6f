//! Internal HOM complexes between projective complexes and their Poincaré
//! polynomials.

use std::collections::{BTreeMap, HashMap};

use crate::algebra::{AlgebraElement, AlgebraType};
use crate::arith::{Field, GradedLaurent, GradingTag};
use crate::complex::{same_algebra, ProjComplex};
use crate::error::{Error, Result};
use crate::linalg::{self, SparseRow};

/// A homogeneous basis morphism: `path` from source generator `from` to
/// target generator `to`, of tridegree `(s1, s2, s3)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HomCell {
    pub from: usize,
    pub to: usize,
    pub path: usize,
    pub s1: i32,
    pub s2: i32,
    pub s3: u8,
}

/// `HOM(C, D)` with differential `d(f) = ∂_D ∘ f − (−1)^{s1} f ∘ ∂_C`.
#[derive(Clone, Debug)]
pub struct HomComplex<F: Field> {
    pub cells: Vec<HomCell>,
    /// `differential[k]` is the image of cell `k` as a combination of cells.
    pub differential: Vec<SparseRow<F>>,
    kind: AlgebraType,
}

pub fn hom_complex<F: Field>(c: &ProjComplex<F>, d: &ProjComplex<F>) -> Result<HomComplex<F>> {
    if !same_algebra(c.algebra(), d.algebra()) {
        return Err(Error::AlgebraMismatch("HOM between complexes over different algebras".into()));
    }
    let alg = c.algebra();
    let mut cells = Vec::new();
    let mut index: HashMap<(usize, usize, usize), usize> = HashMap::new();
    for (gi, g) in c.generators().iter().enumerate() {
        for (hi, h) in d.generators().iter().enumerate() {
            for &u in alg.hom_basis(g.vertex, h.vertex) {
                let p = alg.path(u);
                index.insert((gi, hi, u), cells.len());
                cells.push(HomCell {
                    from: gi,
                    to: hi,
                    path: u,
                    s1: h.r - g.r,
                    s2: p.degree + h.s - g.s,
                    s3: ((p.z2 as i32 + h.t as i32 - g.t as i32).rem_euclid(2)) as u8,
                });
            }
        }
    }
    let mut d_out: Vec<Vec<(usize, &AlgebraElement<F>)>> = vec![Vec::new(); d.len()];
    for (&(h, h2), y) in d.entries() {
        d_out[h].push((h2, y));
    }
    let mut c_in: Vec<Vec<(usize, &AlgebraElement<F>)>> = vec![Vec::new(); c.len()];
    for (&(g0, g), x) in c.entries() {
        c_in[g].push((g0, x));
    }
    let differential = cells
        .iter()
        .map(|cell| {
            let u = AlgebraElement::<F>::basis(cell.path);
            let mut row = Vec::new();
            for &(h2, y) in &d_out[cell.to] {
                for (w, a) in alg.mul(&u, y).terms() {
                    row.push((index[&(cell.from, h2, *w)], a.clone()));
                }
            }
            // −(−1)^{s1}
            let neg = cell.s1.rem_euclid(2) == 0;
            for &(g0, x) in &c_in[cell.from] {
                for (w, a) in alg.mul(x, &u).terms() {
                    row.push((index[&(g0, cell.to, *w)], if neg { a.neg() } else { a.clone() }));
                }
            }
            linalg::collect_row(row)
        })
        .collect();
    Ok(HomComplex { cells, differential, kind: alg.kind() })
}

impl<F: Field> HomComplex<F> {
    /// Whether `d∘d = 0`.
    pub fn squares_to_zero(&self) -> bool {
        self.differential.iter().all(|row| {
            let mut acc: SparseRow<F> = Vec::new();
            for (k, a) in row {
                acc = linalg::axpy(&acc, a, &self.differential[*k]);
            }
            acc.is_empty()
        })
    }

    /// `Σ q1^{s1} q2^{s2} q3^{s3} dim H^{s1,s2,s3}`; type A drops `q3`.
    pub fn poincare(&self) -> GradedLaurent {
        let tag = self.tag();
        // block by internal degree; the differential preserves (s2, s3)
        let mut blocks: BTreeMap<(i32, u8), BTreeMap<i32, Vec<usize>>> = BTreeMap::new();
        for (k, cell) in self.cells.iter().enumerate() {
            blocks.entry((cell.s2, cell.s3)).or_default().entry(cell.s1).or_default().push(k);
        }
        let mut out = GradedLaurent::zero(tag);
        for ((s2, s3), by_s1) in blocks {
            let ranks: BTreeMap<i32, usize> = by_s1
                .iter()
                .map(|(&s1, cells)| {
                    let rows = cells.iter().map(|&k| self.differential[k].clone());
                    (s1, linalg::rank(self.cells.len(), rows))
                })
                .collect();
            for (&s1, cells) in &by_s1 {
                let dim = cells.len() - ranks[&s1] - ranks.get(&(s1 - 1)).copied().unwrap_or(0);
                if dim > 0 {
                    let exps = match tag {
                        GradingTag::Tri => vec![s1, s2, s3 as i32],
                        _ => vec![s1, s2],
                    };
                    out.add_term(pad(&exps), dim as i64);
                }
            }
        }
        out
    }

    /// `Σ (−1)^{s1} q2^{s2} q3^{s3}` over the cells: the Euler characteristic,
    /// computed without the differential.
    pub fn euler_characteristic(&self) -> GradedLaurent {
        let tag = self.tag();
        let mut out = GradedLaurent::zero(tag);
        for cell in &self.cells {
            let sign = if cell.s1.rem_euclid(2) == 0 { 1 } else { -1 };
            let exps = match tag {
                GradingTag::Tri => vec![0, cell.s2, cell.s3 as i32],
                _ => vec![0, cell.s2],
            };
            out.add_term(pad(&exps), sign);
        }
        out
    }

    fn tag(&self) -> GradingTag {
        match self.kind {
            AlgebraType::B => GradingTag::Tri,
            AlgebraType::A => GradingTag::Bi,
        }
    }
}

fn pad(e: &[i32]) -> [i32; 3] {
    let mut out = [0; 3];
    out[..e.len()].copy_from_slice(e);
    out
}

/// Poincaré polynomial of `HOM(C, D)`.
pub fn poincare<F: Field>(c: &ProjComplex<F>, d: &ProjComplex<F>) -> Result<GradedLaurent> {
    Ok(hom_complex(c, d)?.poincare())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build_type_a, build_type_b};
    use crate::arith::Substitution;
    use crate::functor::apply_generator;

    fn tri(s: &str) -> GradedLaurent {
        GradedLaurent::parse(GradingTag::Tri, s).unwrap()
    }

    #[test]
    fn projective_endomorphisms() {
        let b = build_type_b(3).unwrap();
        let p = |j| ProjComplex::projective(b.clone(), j);
        assert_eq!(poincare(&p(1), &p(1)).unwrap(), tri("1+q2"));
        for j in 2..=3 {
            assert_eq!(poincare(&p(j), &p(j)).unwrap(), tri("1+q2+q3+q2*q3"));
        }
        assert!(poincare(&p(1), &p(3)).unwrap().is_zero());
        // at q1 = q2 = q3 = 1 this counts the basis of e2 B e2
        let n2 = build_type_b(2).unwrap();
        let p2 = ProjComplex::projective(n2.clone(), 2);
        let total = poincare(&p2, &p2).unwrap();
        let one = [Substitution::one(), Substitution::one(), Substitution::one()];
        let at_one = total.specialize(GradingTag::Ka, &one).unwrap();
        assert_eq!(at_one, GradedLaurent::constant(GradingTag::Ka, n2.hom_basis(2, 2).len() as i64));
    }

    #[test]
    fn generator_shifts_type_a() {
        // σ_j P_j = P_j[1]{1}: one step down in q1, one up in q2
        let a = build_type_a(3).unwrap();
        for j in 1..=3 {
            let p = ProjComplex::projective(a.clone(), j);
            let s = apply_generator(&p, j as i32).unwrap();
            let expect = GradedLaurent::parse(GradingTag::Bi, "q1^-1*q2 + q1^-1*q2^2").unwrap();
            assert_eq!(poincare(&p, &s).unwrap(), expect);
        }
    }

    #[test]
    fn hom_differential_squares_to_zero() {
        let b = build_type_b(2).unwrap();
        let p = ProjComplex::all_projectives(b);
        let c = apply_generator(&apply_generator(&p, 1).unwrap(), 2).unwrap();
        let h = hom_complex(&c, &c).unwrap();
        assert!(h.squares_to_zero());
    }
}
