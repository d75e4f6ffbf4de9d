use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use principal_trace::fock::SeriesEngine;
use principal_trace::hardy::{helton_howe_check, LaurentSymbol};
use principal_trace::poisson::{integrate_unit_square, parse_polynomial, poisson_bracket};
use principal_trace::trace::{commutator_trace, word_power_trace, TruncationScheme};
use principal_trace::{build_toeplitz, Axis, PlanarSymbol, SeriesConfig, SwitchFunction};

fn series_block(c: &mut Criterion) {
    let mut group = c.benchmark_group("series block");
    group.sample_size(10);
    let ramp = SwitchFunction::linear_ramp(-1.0, 1.0).unwrap();
    for size in [32usize, 64] {
        for validate in [false, true] {
            let config = SeriesConfig { validate, ..SeriesConfig::default() };
            let id = BenchmarkId::new(if validate { "validated" } else { "plain" }, size);
            group.bench_with_input(id, &size, |b, &size| {
                b.iter(|| {
                    // a fresh engine each time, so nothing is cached
                    let engine = SeriesEngine::new(&ramp, 2 * size, config);
                    let mut acc = 0.0;
                    for m in 0..size {
                        for n in m..size {
                            acc += engine.entry(m, n).unwrap();
                        }
                    }
                    black_box(acc)
                });
            });
        }
    }
    group.finish();
}

fn traces(c: &mut Criterion) {
    let h = SwitchFunction::heaviside(0.0).unwrap();
    let a = build_toeplitz(&PlanarSymbol::new(h, Axis::First), 256).unwrap();
    let b = build_toeplitz(&PlanarSymbol::new(h, Axis::Second), 256).unwrap();
    let mut group = c.benchmark_group("windowed trace");
    group.sample_size(20);
    for size in [64usize, 128, 256] {
        let (a, b) = (a.leading(size).unwrap(), b.leading(size).unwrap());
        let s = TruncationScheme::half_window(size).unwrap();
        group.bench_with_input(BenchmarkId::new("commutator", size), &size, |bench, _| {
            bench.iter(|| black_box(commutator_trace(&a, &b, &s).unwrap().value));
        });
        group.bench_with_input(BenchmarkId::new("word n=3", size), &size, |bench, _| {
            bench.iter(|| black_box(word_power_trace(3, &a, &b, &s).unwrap().value));
        });
    }
    group.finish();
}

fn exact(c: &mut Criterion) {
    let p = parse_polynomial("x^5*y^4 + 3/7*x^2*y - i*x*y^3").unwrap();
    let q = parse_polynomial("y^2 + 2*x^3*y").unwrap();
    c.bench_function("bracket and square integral", |b| {
        b.iter(|| black_box(integrate_unit_square(&poisson_bracket(black_box(&p), black_box(&q)))));
    });
    let f = LaurentSymbol::parse("3:1, 1:1/2, -2:2/3i").unwrap();
    let g = LaurentSymbol::parse("-3:1, 2:5, -1:-1").unwrap();
    c.bench_function("hardy trace formula", |b| {
        b.iter(|| black_box(helton_howe_check(black_box(&f), black_box(&g)).equal));
    });
}

criterion_group!(benches, series_block, traces, exact);
criterion_main!(benches);
