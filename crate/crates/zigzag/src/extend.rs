//! Extension of scalars from type B complexes (rank `n`) to type A complexes
//! (`2n − 1` vertices) through the algebra isomorphism tabulated in
//! [`Complexification`]: `P_1 ↦ P_n` and `P_j ↦ P_{n−j+1} ⊕ P_{n+j−1}`.

use crate::algebra::{AlgebraElement, Complexification};
use crate::arith::{Field, GaussRational, Rational};
use crate::complex::{ProjComplex, ProjGenerator};
use crate::error::{Error, Result};

/// Applies `A ⊗_B −`. Parity shifts are forgotten; each entry `b` becomes the
/// block matrix `e_α · Φ(b) · e_β`.
pub fn extend(complexify: &Complexification, c: &ProjComplex<Rational>) -> Result<ProjComplex<GaussRational>> {
    if c.algebra().vertices() != complexify.rank {
        return Err(Error::AlgebraMismatch(format!(
            "complex of rank {} extended with a table of rank {}",
            c.algebra().vertices(),
            complexify.rank
        )));
    }
    let a = &complexify.target;
    let mut out = ProjComplex::new(a.clone());
    let mut blocks: Vec<Vec<(usize, usize)>> = Vec::with_capacity(c.len());
    for g in c.generators() {
        blocks.push(
            complexify
                .vertex_image(g.vertex)
                .into_iter()
                .map(|v| (v, out.add_generator(ProjGenerator::new(v, g.r, g.s, 0))))
                .collect(),
        );
    }
    let one = GaussRational::one();
    for (&(g, h), b) in c.entries() {
        let image = complexify.apply(&one, b);
        for &(va, ia) in &blocks[g] {
            for &(vb, ib) in &blocks[h] {
                let left = AlgebraElement::basis(a.idempotent(va));
                let right = AlgebraElement::basis(a.idempotent(vb));
                out.add_entry(ia, ib, a.mul(&a.mul(&left, &image), &right));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projectives_split() {
        for n in 2..=4 {
            let complexify = Complexification::new(n).unwrap();
            let p1 = extend(&complexify, &ProjComplex::projective(complexify.source.clone(), 1)).unwrap();
            assert_eq!(p1.generators(), &[ProjGenerator::new(n, 0, 0, 0)]);
            for j in 2..=n {
                let pj = extend(&complexify, &ProjComplex::projective(complexify.source.clone(), j)).unwrap();
                let v: Vec<usize> = pj.generators().iter().map(|g| g.vertex).collect();
                assert_eq!(v, vec![n - j + 1, n + j - 1]);
            }
        }
    }
}
