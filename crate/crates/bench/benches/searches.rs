use affdim::search::{
    exhaustive_search, saturated_exhaustive, saturated_local_search, LocalSearchConfig,
    OptimalityCriterion,
};
use affdim::{e_value, Design};
use criterion::{black_box, criterion_group, criterion_main, Criterion};
use num_bigint::BigInt;

fn bench_exhaustive(c: &mut Criterion) {
    let mut group = c.benchmark_group("exhaustive_d");
    group.sample_size(20);
    group.bench_function("s4_r7", |b| {
        b.iter(|| exhaustive_search(4, 7, OptimalityCriterion::D, None, 1).unwrap())
    });
    group.bench_function("s5_r6", |b| {
        b.iter(|| exhaustive_search(5, 6, OptimalityCriterion::D, None, 1).unwrap())
    });
    group.finish();
}

fn bench_saturated(c: &mut Criterion) {
    let mut group = c.benchmark_group("saturated");
    group.sample_size(10);
    group.bench_function("exhaustive_r5", |b| {
        b.iter(|| saturated_exhaustive(5).unwrap())
    });
    group.bench_function("local_r9_to_target", |b| {
        let config = LocalSearchConfig {
            target: Some(BigInt::from(14_336)),
            ..LocalSearchConfig::default()
        };
        b.iter(|| saturated_local_search(9, &config).unwrap())
    });
    group.finish();
}

fn bench_e_value(c: &mut Criterion) {
    let design = Design::parse(
        "1 1 1 1 1\n1 1 1 -1 -1\n1 1 -1 1 -1\n1 -1 -1 -1 1\n-1 1 -1 -1 1\n-1 -1 1 1 -1",
    )
    .unwrap();
    c.bench_function("e_value_s5_r6", |b| b.iter(|| e_value(black_box(&design))));
}

criterion_group!(benches, bench_exhaustive, bench_saturated, bench_e_value);
criterion_main!(benches);
