use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use dchain_bench::{alpha, even_structure, hankel_hermite, odd_structure, staircase};
use dchain_core::{
    build_even_chain, build_odd_chain, det_poly_matrix, hermite_wronskian, int, verify_chain,
};

fn determinants(c: &mut Criterion) {
    let mut g = c.benchmark_group("det_poly_matrix");
    for n in [4, 6, 8] {
        let m = hankel_hermite(n);
        g.bench_with_input(BenchmarkId::from_parameter(n), &m, |b, m| b.iter(|| det_poly_matrix(black_box(m))));
    }
    g.finish();
}

fn wronskians(c: &mut Criterion) {
    let mut g = c.benchmark_group("hermite_wronskian");
    for m in [3, 5, 7] {
        let d = staircase(m);
        g.bench_with_input(BenchmarkId::from_parameter(m), &d, |b, d| b.iter(|| hermite_wronskian(black_box(d))));
    }
    g.finish();
}

fn chains(c: &mut Criterion) {
    let omega = int(2);
    let cs = odd_structure();
    let odd = build_odd_chain(&cs, None, &omega).unwrap();
    c.bench_function("build_odd_chain/p5", |b| b.iter(|| build_odd_chain(black_box(&cs), None, &omega)));
    c.bench_function("verify_chain/p5", |b| b.iter(|| verify_chain(black_box(&odd))));
    let (cs1, cs2) = even_structure();
    let a = alpha();
    let even = build_even_chain(&cs1, &cs2, None, &a, &omega).unwrap();
    c.bench_function("verify_chain/p4", |b| b.iter(|| verify_chain(black_box(&even))));
}

criterion_group!(benches, determinants, wronskians, chains);
criterion_main!(benches);
