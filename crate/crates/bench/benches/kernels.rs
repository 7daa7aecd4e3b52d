use affdim::linalg::{char_poly, det_i64, exact_det, gram_matrix};
use affdim::{indicator_coefficients, BinaryMatrix, Design};
use criterion::{black_box, criterion_group, criterion_main, Criterion};

fn random_design(s: usize, r: usize, seed: u64) -> Design {
    // Small xorshift; benchmarks only need stable inputs.
    let mut state = seed | 1;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    let mut masks: Vec<u32> = (0..1u32 << s).collect();
    for i in (1..masks.len()).rev() {
        let j = (next() as usize) % (i + 1);
        masks.swap(i, j);
    }
    masks.truncate(r);
    masks.sort_unstable();
    Design::from_masks(s, &masks).unwrap()
}

fn bench_gf2_rank(c: &mut Criterion) {
    let design = random_design(16, 400, 42);
    let binary = design.to_binary();
    c.bench_function("gf2_rank_400x17", |b| b.iter(|| black_box(&binary).rank()));
    let rows: Vec<u64> = (0..64u64)
        .map(|i| i.wrapping_mul(0x9e3779b97f4a7c15))
        .collect();
    let wide = BinaryMatrix::from_rows(rows, 64);
    c.bench_function("gf2_rank_64x64", |b| b.iter(|| black_box(&wide).rank()));
}

fn bench_determinants(c: &mut Criterion) {
    let design = random_design(5, 10, 7);
    let gram = gram_matrix(&design.to_design_matrix());
    c.bench_function("exact_det_gram_6x6", |b| {
        b.iter(|| exact_det(black_box(&gram)))
    });
    let flat = gram.entries().to_vec();
    c.bench_function("det_i64_gram_6x6", |b| {
        b.iter(|| {
            let mut buf = flat.clone();
            det_i64(black_box(&mut buf), 6)
        })
    });
}

fn bench_char_poly(c: &mut Criterion) {
    let design = random_design(5, 10, 11);
    let gram = gram_matrix(&design.to_design_matrix());
    c.bench_function("char_poly_6x6", |b| b.iter(|| char_poly(black_box(&gram))));
}

fn bench_indicator(c: &mut Criterion) {
    let design = random_design(10, 300, 3);
    c.bench_function("indicator_transform_s10", |b| {
        b.iter(|| indicator_coefficients(black_box(&design)).unwrap())
    });
}

fn bench_classify(c: &mut Criterion) {
    let design = random_design(8, 60, 23);
    c.bench_function("classify_s8_r60", |b| {
        b.iter(|| affdim::classify(black_box(&design)))
    });
}

criterion_group!(
    benches,
    bench_gf2_rank,
    bench_determinants,
    bench_char_poly,
    bench_indicator,
    bench_classify
);
criterion_main!(benches);
