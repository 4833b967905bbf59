//! Benchmarks for the series kernels and the quadrature layer.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use zetaforge_core::hassekernel::{self, PrecisionPolicy};
use zetaforge_core::identityreg::{register_builtin, Group};
use zetaforge_core::quadrature;
use zetaforge_core::specialfn::{self, HurwitzPoint};

fn bench_series(c: &mut Criterion) {
    let p = PrecisionPolicy::default();

    c.bench_function("hasse_sum_zeta2_tail", |b| {
        b.iter(|| hassekernel::hasse_sum(|t| 1.0 / black_box(t), 32.0, &p).unwrap())
    });
    c.bench_function("sondow_sum_log2", |b| {
        b.iter(|| hassekernel::sondow_sum(|k| 1.0 / (black_box(k) + 1.0), 0.5, &p).unwrap())
    });
    c.bench_function("digamma_small_arg", |b| {
        b.iter(|| specialfn::digamma(black_box(0.3), &p).unwrap())
    });
    c.bench_function("hasse_log_sum_p2", |b| {
        b.iter(|| specialfn::hasse_log_sum(2, black_box(1.0), &p).unwrap())
    });
    c.bench_function("hurwitz_zeta_deriv_neg1", |b| {
        b.iter(|| specialfn::hurwitz_zeta_deriv(HurwitzPoint::new(-1.0, black_box(0.25)), &p).unwrap())
    });
    c.bench_function("stieltjes_gamma1", |b| {
        b.iter(|| specialfn::stieltjes(1, black_box(1.0), &p).unwrap())
    });
}

fn bench_quadrature(c: &mut Criterion) {
    c.bench_function("cot_moment_order2", |b| {
        b.iter(|| quadrature::cot_moment(2, black_box(0.25)).unwrap())
    });
    c.bench_function("log_sine_integral", |b| {
        b.iter(|| quadrature::log_sine_integral(black_box(0.3)).unwrap())
    });
}

fn bench_suite(c: &mut Criterion) {
    let cat = register_builtin();
    let p = PrecisionPolicy::default();
    c.bench_function("suite_finite_group", |b| {
        b.iter(|| cat.run_suite(Some(Group::Finite), None, &p))
    });
    c.bench_function("check_lerch_record", |b| {
        b.iter(|| cat.check(black_box("E4.3.116A"), &p).unwrap())
    });
}

criterion_group!(benches, bench_series, bench_quadrature, bench_suite);
criterion_main!(benches);
