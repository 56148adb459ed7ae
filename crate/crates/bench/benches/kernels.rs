use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use forge_bench::{basis, deficient, okubo_11, para_cayley};
use forge_core::algebra::{subalgebra_generated, verify_lie, JacobiPolicy};
use forge_core::compose::s1;
use forge_core::linalg::{minimal_polynomial, Echelon};
use forge_core::magic::{magic_g, toral_operator, tri};
use forge_core::Scalar;

fn linear_algebra(c: &mut Criterion) {
    let m = deficient(40);
    c.bench_function("dense rank 40x40", |b| b.iter(|| black_box(&m).rank()));
    c.bench_function("echelon insert 40x40", |b| {
        b.iter(|| {
            let mut e = Echelon::new(40);
            for i in 0..40 {
                e.insert(&m.row_sparse(i));
            }
            e.rank()
        })
    });
    let one = Scalar::one();
    let t = toral_operator(&one, &one, &one, &one, &one).unwrap();
    c.bench_function("minimal polynomial 8x8", |b| b.iter(|| minimal_polynomial(black_box(&t))));
}

fn constructions(c: &mut Criterion) {
    let o = okubo_11();
    c.bench_function("subalgebra generated okubo", |b| b.iter(|| subalgebra_generated(&o, &basis(1))));
    c.bench_function("triality okubo", |b| b.iter(|| tri(black_box(&o)).unwrap()));
    let pc = para_cayley();
    let mut g = c.benchmark_group("magic");
    g.sample_size(10);
    g.bench_function("build f4", |b| b.iter(|| magic_g(&s1(), &pc).unwrap()));
    g.bench_function("build e8", |b| b.iter(|| magic_g(&pc, &pc).unwrap()));
    let e8 = magic_g(&pc, &pc).unwrap();
    g.bench_function("jacobi e8 full", |b| b.iter(|| verify_lie(&e8.lie, JacobiPolicy::Full).passed));
    g.finish();
}

criterion_group!(benches, linear_algebra, constructions);
criterion_main!(benches);
