use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qserre_bench::fixtures;
use qserre_core::analyze;
use qserre_core::aqbridge::{aq_irreducibility, build_aq_pair, equitable_operators};
use qserre_core::linalg::{generated_algebra_dim, generated_algebra_dim_exact};
use qserre_core::tdpair::verify_tdpair;
use qserre_core::uqrep::from_spec;
use qserre_core::words::{spanning_check, word_count};

fn full_analysis(c: &mut Criterion) {
    let mut group = c.benchmark_group("analyze");
    group.sample_size(10);
    for (name, spec) in fixtures() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &spec, |b, spec| {
            b.iter(|| analyze(black_box(spec)).unwrap())
        });
    }
    group.finish();
}

fn stages(c: &mut Criterion) {
    let (_, spec) = fixtures().pop().expect("largest fixture");
    let rep = from_spec(&spec).unwrap();
    let pair = build_aq_pair(&rep).unwrap();
    let gens = [pair.a.clone(), pair.astar.clone()];
    let mut group = c.benchmark_group("stages_12x12");
    group.sample_size(10);
    group.bench_function("build_pair", |b| b.iter(|| build_aq_pair(black_box(&rep)).unwrap()));
    group.bench_function("verdict", |b| b.iter(|| aq_irreducibility(&pair, &rep).unwrap()));
    group.bench_function("burnside_modular", |b| b.iter(|| generated_algebra_dim(pair.dim, black_box(&gens))));
    group.bench_function("equitable", |b| b.iter(|| equitable_operators(&pair, &rep).unwrap()));
    group.bench_function("tdpair", |b| b.iter(|| verify_tdpair(&pair.a, &pair.astar).unwrap()));
    group.finish();
}

fn six_dim(c: &mut Criterion) {
    let (_, spec) = fixtures().swap_remove(2);
    let pair = build_aq_pair(&from_spec(&spec).unwrap()).unwrap();
    let gens = [pair.a.clone(), pair.astar.clone()];
    c.bench_function("burnside_exact_6x6", |b| b.iter(|| generated_algebra_dim_exact(pair.dim, black_box(&gens))));
    c.bench_function("word_count_14", |b| b.iter(|| word_count(black_box(14)).unwrap()));
    c.bench_function("spanning_6", |b| b.iter(|| spanning_check(&pair.a, &pair.astar, black_box(6)).unwrap()));
}

criterion_group!(benches, full_analysis, stages, six_dim);
criterion_main!(benches);
