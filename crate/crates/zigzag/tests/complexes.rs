//! Property tests for complexes, functors, morphism complexes, extension of
//! scalars and Grothendieck group classes on randomly twisted projectives.

use std::sync::Arc;

use proptest::prelude::*;

use zigzag::algebra::{build_type_b, AlgebraB};
use zigzag::arith::Substitution;
use zigzag::k0::tensor_matrix;
use zigzag::{
    apply_generator, apply_word, cone, extend, hom_complex, is_isomorphic, k0_class, poincare, type_a_word,
    AlgebraType, BraidWord, ChainMap, Complexification, GradedLaurent, GradingTag, ProjComplex, Rational,
};

fn letters(n: usize, max_len: usize) -> impl Strategy<Value = Vec<i32>> {
    prop::collection::vec((1..=n as i32, any::<bool>()).prop_map(|(g, inv)| if inv { -g } else { g }), 0..=max_len)
}

/// A shifted projective `P_j[r]{s}<t>` as `(j, r, s, t)`.
type Summand = (usize, i32, i32, u8);

/// A rank, a word and a shifted sum of one or two projectives to apply it to.
fn twisted() -> impl Strategy<Value = (usize, Vec<i32>, Vec<Summand>)> {
    (2usize..=3).prop_flat_map(|n| {
        let gen = (1..=n, -1i32..=1, -2i32..=2, 0u8..=1);
        (Just(n), letters(n, 3), prop::collection::vec(gen, 1..=2))
    })
}

fn build(alg: &Arc<AlgebraB>, n: usize, word: &[i32], summands: &[Summand]) -> ProjComplex<Rational> {
    let mut c = ProjComplex::new(alg.clone());
    for &(j, r, s, t) in summands {
        c = c.direct_sum(&ProjComplex::projective(alg.clone(), j).shift(r, s, t));
    }
    apply_word(&BraidWord::new(AlgebraType::B, n, word.to_vec()).unwrap(), &c).unwrap()
}

fn q1_to_minus_one(p: &GradedLaurent) -> GradedLaurent {
    p.specialize(GradingTag::Tri, &[Substitution::minus_one(), Substitution::var(1), Substitution::var(2)]).unwrap()
}

fn forget_parity(p: &GradedLaurent) -> GradedLaurent {
    p.specialize(GradingTag::Ka, &[Substitution::var(0), Substitution::one()]).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn constructed_complexes_are_valid((n, w, summands) in twisted()) {
        let alg = build_type_b(n).unwrap();
        let c = build(&alg, n, &w, &summands);
        prop_assert!(c.is_valid(), "{:?}", c.check());
        prop_assert!(c.minimize().is_valid());
        prop_assert!(hom_complex(&c, &c).unwrap().squares_to_zero());
    }

    #[test]
    fn minimize_preserves_classes_and_euler_characteristics((n, w, summands) in twisted(), k in 1usize..=3) {
        let alg = build_type_b(n).unwrap();
        let c = build(&alg, n, &w, &summands);
        let m = c.minimize();
        prop_assert_eq!(k0_class(&c).coords, k0_class(&m).coords);
        let p = ProjComplex::projective(alg.clone(), k.min(n));
        prop_assert_eq!(hom_complex(&p, &c).unwrap().euler_characteristic(), hom_complex(&p, &m).unwrap().euler_characteristic());
        prop_assert_eq!(poincare(&c, &p).unwrap(), poincare(&m, &p).unwrap());
    }

    #[test]
    fn poincare_specializes_to_euler_characteristic((n, w, summands) in twisted(), (w2, k) in (letters(3, 2), 1usize..=3)) {
        let alg = build_type_b(n).unwrap();
        let c = build(&alg, n, &w, &summands);
        let w2: Vec<i32> = w2.into_iter().filter(|l| l.unsigned_abs() as usize <= n).collect();
        let d = build(&alg, n, &w2, &[(k.min(n), 0, 0, 0)]);
        let h = hom_complex(&c, &d).unwrap();
        prop_assert_eq!(q1_to_minus_one(&h.poincare()), h.euler_characteristic());
    }

    #[test]
    fn poincare_is_braid_invariant((n, w, summands) in twisted(), g in 1i32..=3, inv in any::<bool>(), k in 1usize..=3) {
        let alg = build_type_b(n).unwrap();
        let g = g.min(n as i32) * if inv { -1 } else { 1 };
        let c = build(&alg, n, &w, &summands);
        let d = ProjComplex::projective(alg.clone(), k.min(n));
        let before = poincare(&c, &d).unwrap();
        let after = poincare(&apply_generator(&c, g).unwrap(), &apply_generator(&d, g).unwrap()).unwrap();
        prop_assert_eq!(before, after);
    }

    #[test]
    fn cone_class_is_target_minus_source((n, w, summands) in twisted(), (w2, k) in (letters(3, 2), 1usize..=3)) {
        let alg = build_type_b(n).unwrap();
        let c = build(&alg, n, &w, &summands);
        let w2: Vec<i32> = w2.into_iter().filter(|l| l.unsigned_abs() as usize <= n).collect();
        let d = build(&alg, n, &w2, &[(k.min(n), 0, 0, 0)]);
        let zero = ChainMap { degree: (0, 0, 0), entries: Default::default() };
        let k = cone(&zero, &c, &d).unwrap();
        prop_assert!(k.is_valid());
        let expected: Vec<GradedLaurent> = k0_class(&d).coords.iter().zip(&k0_class(&c).coords).map(|(y, x)| y - x).collect();
        prop_assert_eq!(k0_class(&k).coords, expected);
        let id = cone(&ChainMap::identity(&c), &c, &c).unwrap();
        prop_assert!(id.is_valid() && id.minimize().is_empty());
    }

    #[test]
    fn isomorphism_is_an_equivalence((n, w, summands) in twisted(), g in 1i32..=3) {
        let alg = build_type_b(n).unwrap();
        let g = g.min(n as i32);
        let c1 = build(&alg, n, &w, &summands);
        let c2 = build(&alg, n, &[w.clone(), vec![g, -g]].concat(), &summands);
        let c3 = build(&alg, n, &[w.clone(), vec![-g, g]].concat(), &summands);
        prop_assert!(is_isomorphic(&c1, &c1).unwrap().is_yes());
        prop_assert!(is_isomorphic(&c1, &c2).unwrap().is_yes());
        prop_assert!(is_isomorphic(&c2, &c1).unwrap().is_yes());
        prop_assert!(is_isomorphic(&c2, &c3).unwrap().is_yes());
        prop_assert!(is_isomorphic(&c1, &c3).unwrap().is_yes());
        prop_assert!(is_isomorphic(&c1, &c1.shift(0, 1, 0)).unwrap().is_no());
    }

    #[test]
    fn psi_is_a_homomorphism(n in 2usize..=3, (a, b) in (letters(3, 2), letters(3, 2))) {
        let keep = |w: Vec<i32>| -> Vec<i32> { w.into_iter().filter(|l| l.unsigned_abs() as usize <= n).collect() };
        let wa = BraidWord::new(AlgebraType::B, n, keep(a)).unwrap();
        let wb = BraidWord::new(AlgebraType::B, n, keep(b)).unwrap();
        let whole = type_a_word(&wa.concat(&wb)).unwrap();
        prop_assert_eq!(&whole.letters, &type_a_word(&wa).unwrap().concat(&type_a_word(&wb).unwrap()).letters);
        let all = ProjComplex::all_projectives(Complexification::new(n).unwrap().target.clone());
        let lhs = apply_word(&whole, &all).unwrap();
        let rhs = apply_word(&type_a_word(&wa).unwrap(), &apply_word(&type_a_word(&wb).unwrap(), &all).unwrap()).unwrap();
        prop_assert!(is_isomorphic(&lhs, &rhs).unwrap().is_yes());
    }

    #[test]
    fn extend_commutes_with_minimize((n, w, summands) in twisted()) {
        let complexify = Complexification::new(n).unwrap();
        let c = build(&complexify.source, n, &w, &summands);
        let a = extend(&complexify, &c.minimize()).unwrap();
        let b = extend(&complexify, &c).unwrap();
        prop_assert!(a.is_valid() && b.is_valid());
        prop_assert!(is_isomorphic(&a, &b.minimize()).unwrap().is_yes());
    }

    #[test]
    fn extension_acts_on_classes_by_the_tensor_matrix((n, w, summands) in twisted()) {
        let complexify = Complexification::new(n).unwrap();
        let c = build(&complexify.source, n, &w, &summands);
        let t = tensor_matrix(n).unwrap();
        let class_b: Vec<GradedLaurent> = k0_class(&c).coords.iter().map(forget_parity).collect();
        let expected: Vec<GradedLaurent> = t
            .iter()
            .map(|row| row.iter().zip(&class_b).fold(GradedLaurent::zero(GradingTag::Ka), |acc, (&m, x)| &acc + &x.scale(m)))
            .collect();
        prop_assert_eq!(k0_class(&extend(&complexify, &c).unwrap()).coords, expected);
    }

    #[test]
    fn extension_reflects_isomorphism((n, w, summands) in twisted(), (w2, summands2) in (letters(3, 3), prop::collection::vec((1usize..=3, -1i32..=1, -2i32..=2, 0u8..=1), 1..=2))) {
        let complexify = Complexification::new(n).unwrap();
        let keep: Vec<i32> = w2.into_iter().filter(|l| l.unsigned_abs() as usize <= n).collect();
        let summands2: Vec<_> = summands2.into_iter().map(|(j, r, s, t)| (j.min(n), r, s, t)).collect();
        let c = build(&complexify.source, n, &w, &summands).minimize();
        let d = build(&complexify.source, n, &keep, &summands2).minimize();
        let ext = is_isomorphic(&extend(&complexify, &c).unwrap(), &extend(&complexify, &d).unwrap()).unwrap();
        if ext.is_yes() {
            // generator multisets agree up to the parity grading, which extension forgets
            let strip = |x: &ProjComplex<Rational>| {
                let mut g: Vec<_> = x.generators().iter().map(|g| (g.vertex, g.r, g.s)).collect();
                g.sort();
                g
            };
            prop_assert_eq!(strip(&c), strip(&d));
        }
    }
}

#[test]
fn generator_relations_on_sums_of_projectives() {
    // the defining relations hold exactly on the full sum at rank 3
    let alg = build_type_b(3).unwrap();
    let all = ProjComplex::all_projectives(alg);
    let word = |l: &[i32]| apply_word(&BraidWord::new(AlgebraType::B, 3, l.to_vec()).unwrap(), &all).unwrap();
    assert!(is_isomorphic(&word(&[1, 3]), &word(&[3, 1])).unwrap().is_yes());
    assert!(is_isomorphic(&word(&[2, 3, 2]), &word(&[3, 2, 3])).unwrap().is_yes());
    assert!(is_isomorphic(&word(&[1, 2, 1, 2]), &word(&[2, 1, 2, 1])).unwrap().is_yes());
    assert!(is_isomorphic(&word(&[1, 2, 1]), &word(&[2, 1, 2])).unwrap().is_no());
}
