use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use zigzag::algebra::build_type_b;
use zigzag::{
    apply_word, curve_complex, extend, intersect, is_isomorphic, poincare, AlgebraType, BraidWord, Complexification,
    Curve, ProjComplex,
};

fn word(n: usize, letters: &[i32]) -> BraidWord {
    BraidWord::new(AlgebraType::B, n, letters.to_vec()).unwrap()
}

fn braid_action(c: &mut Criterion) {
    let mut group = c.benchmark_group("apply_word");
    for n in [2, 3, 4] {
        let all = ProjComplex::all_projectives(build_type_b(n).unwrap());
        let w = word(n, &[1, 2, -1, 2, 1, -2]);
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, _| {
            b.iter(|| apply_word(black_box(&w), &all).unwrap())
        });
    }
    group.finish();
}

fn isomorphism(c: &mut Criterion) {
    let all = ProjComplex::all_projectives(build_type_b(3).unwrap());
    let lhs = apply_word(&word(3, &[1, 2, 1, 2]), &all).unwrap();
    let rhs = apply_word(&word(3, &[2, 1, 2, 1]), &all).unwrap();
    c.bench_function("is_isomorphic/length-four relation", |b| {
        b.iter(|| is_isomorphic(black_box(&lhs), &rhs).unwrap())
    });
}

fn hom_polynomials(c: &mut Criterion) {
    let alg = build_type_b(3).unwrap();
    let source = apply_word(&word(3, &[1, 2, -3]), &ProjComplex::projective(alg.clone(), 2)).unwrap();
    let target = apply_word(&word(3, &[-2, 1, 3]), &ProjComplex::projective(alg, 1)).unwrap();
    c.bench_function("poincare/rank 3", |b| b.iter(|| poincare(black_box(&source), &target).unwrap()));
}

fn curves(c: &mut Criterion) {
    let w0 = word(3, &[1, 2, -3]);
    let w1 = word(3, &[-2, 1, 3]);
    c.bench_function("intersect/rank 3", |b| b.iter(|| intersect(3, black_box(&w0), 2, &w1, 1).unwrap()));
    let curve = Curve::basic(3, 2).unwrap().act_word(&word(3, &[1, 2, 1, -3, 2])).unwrap();
    c.bench_function("curve_complex/rank 3", |b| b.iter(|| curve_complex(black_box(&curve)).unwrap()));
}

fn extension(c: &mut Criterion) {
    let complexify = Complexification::new(3).unwrap();
    let cx = apply_word(&word(3, &[1, 2, 3, -1]), &ProjComplex::all_projectives(complexify.source.clone())).unwrap();
    c.bench_function("extend/rank 3", |b| b.iter(|| extend(&complexify, black_box(&cx)).unwrap()));
}

criterion_group!(benches, braid_action, isomorphism, hom_polynomials, curves, extension);
criterion_main!(benches);
