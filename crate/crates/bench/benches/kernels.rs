//! Measurements for the hot kernels: the nine-parameter solvers, the
//! induced-subgraph matcher, and the exhaustive searches. Inputs are
//! named family members so runs stay comparable.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use domchain_core::{
    bipartite_ramsey_search, chain_audit_exhaustive, compute, contains_bistar_variant,
    contains_induced, full_report, generate, matching_number, ramsey_witness_search, FamilySpec,
    Parameter,
};

fn family(spec: &str) -> domchain_core::Graph {
    generate(&spec.parse::<FamilySpec>().expect("spec parses")).expect("family builds")
}

fn solver_benches(c: &mut Criterion) {
    let p12 = family("P12");
    let k66 = family("K6,6");
    let bs44 = family("BS4^4");
    let ck8 = family("CK8");
    c.bench_function("full_report/P12", |b| b.iter(|| full_report(black_box(&p12))));
    c.bench_function("full_report/K6,6", |b| b.iter(|| full_report(black_box(&k66))));
    c.bench_function("full_report/BS4^4", |b| b.iter(|| full_report(black_box(&bs44))));
    c.bench_function("IR/CK8", |b| {
        b.iter(|| compute(black_box(&ck8), Parameter::UpperIrredundance))
    });
    c.bench_function("ir/CK8", |b| {
        b.iter(|| compute(black_box(&ck8), Parameter::LowerIrredundance))
    });
    c.bench_function("matching/K8,8", |b| {
        let k88 = family("K8,8");
        b.iter(|| matching_number(black_box(&k88)))
    });
}

fn matcher_benches(c: &mut Criterion) {
    let p16 = family("P16");
    let ck8 = family("CK8");
    let p7 = family("P7");
    let bs52 = family("BS5^2");
    c.bench_function("contains_induced/P7-in-P16", |b| {
        b.iter(|| contains_induced(black_box(&p16), black_box(&p7)))
    });
    // CK8 has no induced P7, so this is the exhausted-search case.
    c.bench_function("contains_induced/P7-in-CK8", |b| {
        b.iter(|| contains_induced(black_box(&ck8), black_box(&p7)))
    });
    c.bench_function("bistar_variants/BS5^2-host", |b| {
        b.iter(|| contains_bistar_variant(black_box(&bs52), 5, 2))
    });
}

fn search_benches(c: &mut Criterion) {
    let mut group = c.benchmark_group("searches");
    group.sample_size(10);
    group.bench_function("two_colour/3-3-cap6", |b| {
        b.iter(|| ramsey_witness_search(3, 3, 6))
    });
    group.bench_function("block/2-cap4", |b| {
        b.iter(|| bipartite_ramsey_search(2, 4))
    });
    group.bench_function("chain_audit/order5", |b| {
        b.iter(|| chain_audit_exhaustive(5))
    });
    group.finish();
}

criterion_group!(benches, solver_benches, matcher_benches, search_benches);
criterion_main!(benches);
