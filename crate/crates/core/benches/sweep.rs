//! Compares the parallel sweep against the sequential fallback on a large
//! synthetic grid.

use criterion::{criterion_group, criterion_main, Criterion};
use heli_feas::{sweep, sweep_sequential, DimsPreset, EvalContext, Grid};

fn big_grid() -> Grid {
    Grid {
        helicopters: vec![
            ("CH47".into(), "new".into()),
            ("CH47".into(), "used-new".into()),
            ("CH47".into(), "used-old".into()),
            ("CH53".into(), "new".into()),
            ("MI26".into(), "new".into()),
        ],
        species: vec!["cedar".into(), "ipe".into(), "jatoba".into()],
        dims: vec![DimsPreset::Scenario1, DimsPreset::Scenario2],
        distances_km: (1..=200).map(|d| d as f64).collect(),
    }
}

fn bench_sweep(c: &mut Criterion) {
    let ctx = EvalContext::default();
    let grid = big_grid();
    let rows = grid.scenarios().len();

    let mut group = c.benchmark_group("sweep");
    group.sample_size(20);
    group.throughput(criterion::Throughput::Elements(rows as u64));
    group.bench_function("sequential", |b| b.iter(|| sweep_sequential(&ctx, &grid)));
    #[cfg(feature = "parallel")]
    group.bench_function("parallel", |b| b.iter(|| sweep(&ctx, &grid)));
    #[cfg(not(feature = "parallel"))]
    let _ = sweep; // silence the unused import without the feature
    group.finish();
}

criterion_group!(benches, bench_sweep);
criterion_main!(benches);
