use criterion::{black_box, criterion_group, criterion_main, Criterion};
use diamondlab_bench::star19;
use diamondlab_core::{
    count_diamonds_oracle, count_diamonds_spectral, paley, search_max, CharPoly, SearchOptions,
    SeidelMatrix,
};

fn bench_counters(c: &mut Criterion) {
    let t = star19();
    let mut group = c.benchmark_group("counters_n20");
    group.bench_function("diamonds_oracle", |b| {
        b.iter(|| count_diamonds_oracle(black_box(&t)))
    });
    group.bench_function("diamonds_spectral", |b| {
        b.iter(|| count_diamonds_spectral(black_box(&t)))
    });
    group.finish();
}

fn bench_charpoly(c: &mut Criterion) {
    let s20 = SeidelMatrix::of(&star19());
    let s11 = SeidelMatrix::of(&paley(11).unwrap());
    let mut group = c.benchmark_group("charpoly");
    group.bench_function("seidel_n11", |b| {
        b.iter(|| CharPoly::of_seidel(black_box(&s11)))
    });
    group.bench_function("seidel_n20", |b| {
        b.iter(|| CharPoly::of_seidel(black_box(&s20)))
    });
    group.finish();
}

fn bench_search(c: &mut Criterion) {
    let opts = SearchOptions::default();
    let mut group = c.benchmark_group("search");
    group.sample_size(20);
    group.bench_function("exhaustive_n6", |b| {
        b.iter(|| search_max(black_box(6), &opts).unwrap())
    });
    group.sample_size(10);
    group.bench_function("exhaustive_n7", |b| {
        b.iter(|| search_max(black_box(7), &opts).unwrap())
    });
    group.finish();
}

criterion_group!(benches, bench_counters, bench_charpoly, bench_search);
criterion_main!(benches);
