use std::hint::black_box;

use bnloci::certify::{maxrank_m2_certificate, petri_certificate};
use bnloci::construct::staircase_filling;
use bnloci::series::{filling_to_series, series_to_filling};
use bnloci::tableau::{
    count_fillings, enumerate_fillings, max_distance_sum_exhaustive, minimal_torsion_chain,
};
use bnloci::{BnParams, ChainSpec};
use bnloci_bench::{COUNT_SHAPES, ENUMERATION_SHAPES, SEPARATION_CASES, STAIRCASE_CASES};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_generic");
    for &(alpha, beta) in ENUMERATION_SHAPES {
        let chain = ChainSpec::generic(alpha * beta);
        group.bench_with_input(
            BenchmarkId::from_parameter(format!("{alpha}x{beta}")),
            &chain,
            |b, chain| b.iter(|| enumerate_fillings(alpha, beta, chain, 30).unwrap().count()),
        );
    }
    group.finish();

    let mut group = c.benchmark_group("count_generic");
    for &(alpha, beta) in COUNT_SHAPES {
        let chain = ChainSpec::generic(alpha * beta);
        group.bench_with_input(
            BenchmarkId::from_parameter(format!("{alpha}x{beta}")),
            &chain,
            |b, chain| b.iter(|| count_fillings(alpha, beta, black_box(chain))),
        );
    }
    group.finish();
}

fn separation_oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("max_distance_exhaustive");
    for &(alpha, beta, e) in SEPARATION_CASES {
        group.bench_function(format!("{alpha}x{beta}_e{e}"), |b| {
            b.iter(|| max_distance_sum_exhaustive(black_box(alpha), beta, e))
        });
    }
    group.finish();
}

fn construction_and_certificates(c: &mut Criterion) {
    let mut group = c.benchmark_group("staircase");
    for &(alpha, beta, g) in STAIRCASE_CASES {
        group.bench_function(format!("{alpha}x{beta}_g{g}"), |b| {
            b.iter(|| staircase_filling(black_box(alpha), beta, g).unwrap())
        });
    }
    group.finish();

    let mut group = c.benchmark_group("petri");
    for &(alpha, beta, g) in STAIRCASE_CASES {
        let f = staircase_filling(alpha, beta, g).unwrap();
        let p = BnParams::from_shape(alpha as i64, beta as i64, g as i64).unwrap();
        let chain = minimal_torsion_chain(&f).unwrap();
        group.bench_function(format!("{alpha}x{beta}_g{g}"), |b| {
            b.iter(|| petri_certificate(black_box(&f), &p, &chain).unwrap())
        });
    }
    group.finish();

    let mut group = c.benchmark_group("series_round_trip");
    for &(alpha, beta, g) in STAIRCASE_CASES {
        let f = staircase_filling(alpha, beta, g).unwrap();
        let p = BnParams::from_shape(alpha as i64, beta as i64, g as i64).unwrap();
        let chain = minimal_torsion_chain(&f).unwrap();
        group.bench_function(format!("{alpha}x{beta}_g{g}"), |b| {
            b.iter(|| {
                series_to_filling(&filling_to_series(black_box(&f), &p, &chain).unwrap()).unwrap()
            })
        });
    }
    group.finish();

    let mut group = c.benchmark_group("maxrank_m2");
    for r in [2usize, 4, 8] {
        group.bench_function(format!("r{r}"), |b| {
            b.iter(|| maxrank_m2_certificate(black_box(r)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    enumeration,
    separation_oracle,
    construction_and_certificates
);
criterion_main!(benches);
