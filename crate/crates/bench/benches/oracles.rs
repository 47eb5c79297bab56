use criterion::{criterion_group, criterion_main, Criterion};
use irregmix::graph::parse_family;
use irregmix::oracles;
use irregmix::Graph;

fn graph(spec: &str) -> Graph {
    parse_family(spec).and_then(|f| f.build()).expect("valid family")
}

fn exact(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracles");
    group.sample_size(10);
    let petersen = graph("petersen");
    group.bench_function("zero_forcing_petersen", |b| b.iter(|| oracles::zero_forcing_exact(&petersen).unwrap()));
    let join = graph("join:cocktail_party:3,complete:2");
    group.bench_function("zero_forcing_join", |b| b.iter(|| oracles::zero_forcing_exact(&join).unwrap()));
    group.bench_function("integrity_petersen", |b| b.iter(|| oracles::vertex_integrity_exact(&petersen).unwrap()));
    group.bench_function("grundy_petersen", |b| b.iter(|| oracles::grundy_domination_exact(&petersen).unwrap()));
    let cycle = graph("cycle:6");
    group.bench_function("routing_cycle_6", |b| b.iter(|| oracles::routing_number_exact(&cycle).unwrap()));
    group.finish();
}

criterion_group!(benches, exact);
criterion_main!(benches);
