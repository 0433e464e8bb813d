use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use ohmcurve::enumerate::{enumerate_labeled, GraphFilter};
use ohmcurve::parallel::{map_items, Execution};
use ohmcurve::resistance::resistance_matrix;
use ohmcurve::verify::{verify_eccentricity_bound, Population};
use ohmcurve::VerifyOptions;

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn eccentricity_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("eccentricity_sweep_n6");
    group.sample_size(10);
    for (name, execution) in MODES {
        for exact_only in [false, true] {
            let opts = VerifyOptions {
                exact_only,
                execution,
                ..VerifyOptions::default()
            };
            let label = if exact_only { "exact" } else { "screened" };
            group.bench_with_input(BenchmarkId::new(name, label), &opts, |b, opts| {
                b.iter(|| verify_eccentricity_bound(Population::Enumerate(6), black_box(opts)).unwrap())
            });
        }
    }
    group.finish();
}

fn exact_resistance(c: &mut Criterion) {
    let graphs: Vec<_> = enumerate_labeled(6, GraphFilter::two_connected()).unwrap().collect();
    let mut group = c.benchmark_group("resistance_matrix_two_connected_n6");
    group.sample_size(10);
    for (name, execution) in MODES {
        group.bench_function(name, |b| {
            b.iter(|| map_items(execution, black_box(&graphs), |g| resistance_matrix(g).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, eccentricity_sweep, exact_resistance);
criterion_main!(benches);
