use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use tangle_core::corpus::{random_epsilon_word, rng};
use tangle_core::detector::{detect_infinity_tangle, make_dense};
use tangle_core::mapping::{apply_word, reduce_waves_by_twists};
use tangle_core::{straight_bridge_arcs, ArcSystem};

fn inputs(len: usize) -> Vec<ArcSystem> {
    let mut r = rng(len as u64);
    (0..8)
        .map(|_| apply_word(&straight_bridge_arcs(), &random_epsilon_word(&mut r, len)))
        .collect()
}

fn detect(c: &mut Criterion) {
    let mut g = c.benchmark_group("detect");
    for len in [6, 12, 18, 24] {
        let xs = inputs(len);
        g.bench_with_input(BenchmarkId::from_parameter(len), &xs, |b, xs| {
            b.iter(|| {
                for s in xs {
                    black_box(detect_infinity_tangle(s, 10_000).unwrap());
                }
            })
        });
    }
    g.finish();
}

fn stages(c: &mut Criterion) {
    let xs = inputs(12);
    c.bench_function("make_dense/12", |b| {
        b.iter(|| {
            for s in &xs {
                black_box(make_dense(s, 10_000).unwrap());
            }
        })
    });
    let xs = inputs(8);
    c.bench_function("reduce_waves/8", |b| {
        b.iter(|| {
            for s in &xs {
                black_box(reduce_waves_by_twists(s, 10_000).unwrap());
            }
        })
    });
    let s = inputs(24).remove(0);
    c.bench_function("canonical_form/24", |b| b.iter(|| black_box(s.canonical_form())));
}

criterion_group!(benches, detect, stages);
criterion_main!(benches);
