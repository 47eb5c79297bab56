use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use irregmix::eml::{sweep_verify, SweepConfig};
use irregmix::graph::parse_family;
use irregmix::{Graph, SpectralData};

fn graph(spec: &str) -> Graph {
    parse_family(spec).and_then(|f| f.build()).expect("valid family")
}

fn spectral_data(c: &mut Criterion) {
    let mut group = c.benchmark_group("spectral_data");
    for spec in ["petersen", "kite:10,20", "complete_minus_edge:50", "join:cocktail_party:20,complete:5"] {
        let g = graph(spec);
        group.bench_with_input(BenchmarkId::from_parameter(spec), &g, |b, g| b.iter(|| SpectralData::new(g).unwrap()));
    }
    group.finish();
}

fn sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    let exhaustive = graph("kite:3,5");
    group.bench_function("exhaustive_kite_3_5", |b| {
        b.iter(|| sweep_verify(&exhaustive, &SweepConfig::default()).unwrap())
    });
    let sampled = graph("petersen");
    let config = SweepConfig { samples: 2_000, ..SweepConfig::default() };
    group.bench_function("sampled_petersen_2000", |b| b.iter(|| sweep_verify(&sampled, &config).unwrap()));
    group.finish();
}

criterion_group!(benches, spectral_data, sweep);
criterion_main!(benches);
