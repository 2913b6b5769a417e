//! Benchmarks for the hot paths: stabilizer chains, coset enumeration,
//! double cosets, and coset-graph construction.

use criterion::{criterion_group, criterion_main, Criterion};

use halfarc::coset::double_coset_size;
use halfarc::fp::{parse_presentation, todd_coxeter};
use halfarc::presets::preset_text;
use halfarc::suite::{build_d8_example_graph, natural_alt};
use halfarc::{PermGroup, Permutation};

fn bsgs_alternating(c: &mut Criterion) {
    c.bench_function("bsgs_a10", |b| {
        b.iter(|| natural_alt(10).unwrap().order_u64().unwrap())
    });
    let mut group = c.benchmark_group("bsgs_large");
    group.sample_size(10);
    group.bench_function("bsgs_a256", |b| {
        b.iter(|| {
            let g = natural_alt(256).unwrap();
            assert!(g.order_u64().is_none());
        })
    });
    group.finish();
}

fn coset_enumeration(c: &mut Criterion) {
    let text = preset_text("H7").unwrap();
    let presentation = parse_presentation(text).unwrap();
    c.bench_function("todd_coxeter_order_128", |b| {
        b.iter(|| {
            let table = todd_coxeter(&presentation, &[], 1 << 16).unwrap();
            assert_eq!(table.coset_count(), 128);
        })
    });
}

fn double_cosets(c: &mut Criterion) {
    let degree = 9;
    let y = PermGroup::from_generators(
        degree,
        &[Permutation::from_cycles(&[(0..degree as u32).collect()], degree).unwrap()],
    )
    .unwrap();
    let s = Permutation::from_cycles(&[vec![0, 1]], degree).unwrap();
    c.bench_function("double_coset_size_s9", |b| {
        b.iter(|| double_coset_size(&y, &s).unwrap())
    });
}

fn graph_build(c: &mut Criterion) {
    let mut group = c.benchmark_group("coset_graph");
    group.sample_size(10);
    group.bench_function("build_226800_vertices", |b| {
        b.iter(|| {
            let g = build_d8_example_graph(5_000_000).unwrap();
            assert_eq!(g.vertex_count(), 226_800);
        })
    });
    group.finish();
}

criterion_group!(
    benches,
    bsgs_alternating,
    coset_enumeration,
    double_cosets,
    graph_build
);
criterion_main!(benches);
