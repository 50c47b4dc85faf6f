//! Graded pieces of the type B algebra, and associativity of both algebras.

use zigzag::algebra::{build_type_a, build_type_b};
use zigzag::{AlgebraElement, Field, ZigzagAlgebra};

/// Degrees of the basis paths in `e_j · alg · e_k`, sorted.
fn degrees<F: Field>(alg: &ZigzagAlgebra<F>, j: usize, k: usize) -> Vec<i32> {
    let mut d: Vec<i32> = alg.hom_basis(j, k).iter().map(|&u| alg.path(u).degree).collect();
    d.sort();
    d
}

/// Real dimensions and degrees of `e_j B e_k`, read off from its description as
/// a bimodule over the real or complex numbers at each end.
fn expected(j: usize, k: usize) -> Vec<i32> {
    match (j, k) {
        (1, 1) => vec![0, 1],
        (1, 2) => vec![0, 0],
        (2, 1) => vec![1, 1],
        _ if j == k => vec![0, 0, 1, 1],
        _ if k == j + 1 => vec![0, 0],
        _ if j == k + 1 => vec![1, 1],
        _ => vec![],
    }
}

#[test]
fn graded_pieces_of_type_b() {
    for n in 2..=4 {
        let alg = build_type_b(n).unwrap();
        for j in 1..=n {
            for k in 1..=n {
                assert_eq!(degrees(&alg, j, k), expected(j, k), "n={n}, e{j} B e{k}");
            }
        }
        let total: usize = (1..=n).flat_map(|j| (1..=n).map(move |k| expected(j, k).len())).sum();
        assert_eq!(total, alg.dim());
    }
}

fn associative<F: Field>(alg: &ZigzagAlgebra<F>) -> bool {
    let d = alg.dim();
    let basis = |x| AlgebraElement::<F>::basis(x);
    (0..d).all(|x| {
        (0..d).all(|y| {
            let xy = alg.mul(&basis(x), &basis(y));
            (0..d).all(|z| alg.mul(&xy, &basis(z)) == alg.mul(&basis(x), &alg.mul(&basis(y), &basis(z))))
        })
    })
}

#[test]
fn both_families_are_associative_up_to_rank_four() {
    for n in 2..=4 {
        assert!(associative(&build_type_b(n).unwrap()));
        assert!(associative(&build_type_a(2 * n - 1).unwrap()));
    }
}
