//! Acceptance suite: the twelve end-to-end guarantees the library makes,
//! each pinned to an explicit tolerance. Expected values were produced with an independent high-precision oracle (mpmath).

use std::f64::consts::PI;
use std::time::Instant;

use zetaforge_core::eulersums::{self, EulerSumKey};
use zetaforge_core::hassekernel::{self, NeumaierSum, PrecisionPolicy};
use zetaforge_core::identityreg::{register_builtin, Cost, Group, Status};
use zetaforge_core::quadrature;
use zetaforge_core::specialfn::{self, ConstantsCache, HurwitzPoint};

fn policy() -> PrecisionPolicy {
    PrecisionPolicy::default()
}

fn zd(s: f64, u: f64) -> f64 {
    specialfn::hurwitz_zeta_deriv(HurwitzPoint::new(s, u), &policy())
        .unwrap()
        .value
}

/// 1. Hasse double sum reproduces zeta(2) = pi^2/6 within 1e-10 in at
/// most 60 difference orders, in under 0.1 s.
#[test]
fn a01_hasse_zeta2() {
    let start = Instant::now();
    let mut head = NeumaierSum::new();
    for j in 1..32u32 {
        head += 1.0 / f64::from(j * j);
    }
    let tail = hassekernel::hasse_sum(|t| 1.0 / t, 32.0, &policy()).unwrap();
    let value = head.sum() + tail.value;
    let elapsed = start.elapsed();
    assert!((value - PI * PI / 6.0).abs() < 1e-10, "residual too large");
    assert!(tail.terms_used <= 60, "used {} orders", tail.terms_used);
    assert!(elapsed.as_secs_f64() < 0.1, "took {:?}", elapsed);
}

/// 2. Sondow's geometric-weight sum gives log 2, and the harmonic
/// variant gives pi^2/12, each within 1e-12 in under 0.1 s.
#[test]
fn a02_sondow_log2_and_harmonic() {
    let start = Instant::now();
    let log2 = hassekernel::sondow_sum(|k| 1.0 / (k + 1.0), 0.5, &policy()).unwrap();
    assert!((log2.value - std::f64::consts::LN_2).abs() < 1e-12);
    assert!(start.elapsed().as_secs_f64() < 0.1);

    let start = Instant::now();
    let za2 = eulersums::zeta_a_harmonic(2, &policy()).unwrap();
    assert!((za2.value - PI * PI / 12.0).abs() < 1e-12);
    assert!(start.elapsed().as_secs_f64() < 0.1);
}

/// 3. Finite exact group: every identity in the rational bank holds for
/// all n <= 30 with residual exactly zero, in under 10 s total; the
/// registry's FINITE records report residual exactly 0.0 as well.
#[test]
fn a03_finite_exact_group() {
    let start = Instant::now();
    for check in eulersums::finite_identity_bank() {
        assert!(check.holds, "finite identity {} failed", check.name);
        assert_eq!(check.n_max, 30, "{}", check.name);
    }
    let report = register_builtin().run_suite(Some(Group::Finite), None, &policy());
    assert!(report.outcomes.len() >= 15);
    for o in &report.outcomes {
        assert_eq!(o.status, Status::Pass, "{}", o.id);
        assert_eq!(o.residual, 0.0, "{}", o.id);
    }
    assert!(start.elapsed().as_secs_f64() < 10.0);
}

/// 4. Euler-sum closed forms: the weight-3/4/5 sums agree with their
/// closed forms via 1e5 terms plus tail correction within the reported
/// bound, and the simultaneous-equation combinations are consistent to
/// 1e-12 in the closed forms themselves.
#[test]
fn a04_euler_sum_closed_forms() {
    let keys = [
        EulerSumKey::Linear(1, 2),
        EulerSumKey::Square(2),
        EulerSumKey::Linear(2, 2),
        EulerSumKey::Linear(1, 4),
        EulerSumKey::Linear(2, 3),
        EulerSumKey::Linear(3, 2),
        EulerSumKey::Mixed12(2),
        EulerSumKey::Cube(2),
        EulerSumKey::Square(3),
    ];
    for key in keys {
        let est = eulersums::euler_sum_numeric(key, 100_000, &policy()).unwrap();
        let closed = eulersums::euler_sum_closed(key).unwrap();
        let residual = (est.value() - closed).abs();
        assert!(
            residual <= est.bound.max(1e-10),
            "{:?}: residual {:e} bound {:e}",
            key,
            residual,
            est.bound
        );
    }
    // simultaneous-equation consistency of the closed forms
    let z4 = PI.powi(4) / 90.0;
    let z5 = specialfn::zeta(5.0);
    let z2 = PI * PI / 6.0;
    let z3 = ConstantsCache::standard().zeta3;
    let sq2 = eulersums::euler_sum_closed(EulerSumKey::Square(2)).unwrap();
    let l22 = eulersums::euler_sum_closed(EulerSumKey::Linear(2, 2)).unwrap();
    assert!((sq2 + l22 - 6.0 * z4).abs() < 1e-12);
    let cube = eulersums::euler_sum_closed(EulerSumKey::Cube(2)).unwrap();
    let mix = eulersums::euler_sum_closed(EulerSumKey::Mixed12(2)).unwrap();
    let l32 = eulersums::euler_sum_closed(EulerSumKey::Linear(3, 2)).unwrap();
    assert!(((cube + 3.0 * mix + 2.0 * l32) / 24.0 - z5).abs() < 1e-12);
    let sq3 = eulersums::euler_sum_closed(EulerSumKey::Square(3)).unwrap();
    assert!((sq3 - (3.5 * z5 - z2 * z3)).abs() < 1e-12);
}

/// 5. Lerch's identity log Gamma(u) = zeta'(0, u) + (1/2) log(2 pi)
/// within 1e-8 at five points spanning (0, 3].
#[test]
fn a05_lerch_identity() {
    let half_l2p = 0.5 * ConstantsCache::standard().log_2pi;
    for u in [0.25, 0.5, 1.0, 1.5, 3.0] {
        let lg = specialfn::log_gamma(u, &policy()).unwrap().value;
        let residual = (lg - zd(0.0, u) - half_l2p).abs();
        assert!(residual < 1e-8, "u = {}: residual {:e}", u, residual);
    }
}

/// 6. Gosper's integral: quadrature of log Gamma over [0, x] matches
/// x(1-x)/2 + (x/2) log(2 pi) + zeta'(-1, x) - zeta'(-1) within 1e-7.
#[test]
fn a06_gosper_integral() {
    let c = ConstantsCache::standard();
    let lg = |u: f64| specialfn::log_gamma(u, &policy()).unwrap().value;
    for x in [0.25, 0.5, 1.5] {
        let quad = quadrature::adaptive_integrate(lg, 0.0, x, 1e-11, true, false)
            .unwrap()
            .value;
        let closed = 0.5 * x * (1.0 - x) + 0.5 * x * c.log_2pi + zd(-1.0, x) - c.zeta_prime_neg1;
        assert!((quad - closed).abs() < 1e-7, "x = {}", x);
    }
}

/// 7. Kinkelin's 1860 formula at u = 1/4 and u = 1/2: cot-moment
/// quadrature against the Barnes-G assembly within 1e-8.
#[test]
fn a07_kinkelin() {
    let l2p = ConstantsCache::standard().log_2pi;
    for u in [0.25, 0.5] {
        let lhs = u * l2p - quadrature::cot_moment(1, u).unwrap().value;
        let rhs = specialfn::barnes_g_log(u, &policy()).unwrap()
            - specialfn::barnes_g_log(1.0 - u, &policy()).unwrap()
            + specialfn::log_gamma(1.0 - u, &policy()).unwrap().value;
        assert!((lhs - rhs).abs() < 1e-8, "u = {}", u);
    }
}

/// 8. Hurwitz-derivative closed forms, by two independent routes: the
/// derivative series within 1e-7, and cot-moment quadrature within 1e-8.
#[test]
fn a08_hurwitz_derivative_closed_forms() {
    let c = ConstantsCache::standard();
    let (g, z3, zp1) = (c.catalan, c.zeta3, c.zeta_prime_neg1);
    let ln2 = std::f64::consts::LN_2;
    let pi2 = PI * PI;

    // series route
    let zp_half = -ln2 / 24.0 - 0.5 * zp1;
    assert!((zd(-1.0, 0.5) - zp_half).abs() < 1e-7);
    let zpp_half = 3.0 * z3 / (16.0 * pi2);
    assert!((zd(-2.0, 0.5) - zpp_half).abs() < 1e-7);
    assert!((zd(-1.0, 0.25) - zd(-1.0, 0.75) - g / (2.0 * PI)).abs() < 1e-7);
    let quarter_sum = 3.0 * z3 / (64.0 * pi2);
    assert!((zd(-2.0, 0.25) + zd(-2.0, 0.75) - quarter_sum).abs() < 1e-7);

    // quadrature route
    let lg = |u: f64| specialfn::log_gamma(u, &policy()).unwrap().value;
    let q = quadrature::adaptive_integrate(
        move |u| lg(u) - 0.5 * ConstantsCache::standard().log_2pi,
        0.0,
        0.5,
        1e-11,
        true,
        false,
    )
    .unwrap()
    .value;
    assert!((q - 0.125 + zp1 - zp_half).abs() < 1e-8, "zeta'(-1,1/2)");

    let m2h = quadrature::cot_moment(2, 0.5).unwrap().value;
    let zpp_half_quad = 0.5 * (0.25 * ln2 - z3 / (2.0 * pi2) - m2h);
    assert!((zpp_half_quad - zpp_half).abs() < 1e-8, "zeta'(-2,1/2)");

    let m1q = quadrature::cot_moment(1, 0.25).unwrap().value;
    assert!((m1q - ln2 / 8.0 - g / (2.0 * PI)).abs() < 1e-8, "catalan difference");

    let m2q = quadrature::cot_moment(2, 0.25).unwrap().value;
    let quarter_sum_quad = -m2q + g / (4.0 * PI) + ln2 / 32.0 - z3 / (2.0 * pi2);
    assert!((quarter_sum_quad - quarter_sum).abs() < 1e-8, "quarter sum");
}

/// 9. Glaisher-Kinkelin: the slow binomial series reproduces
/// zeta'(-1) = 1/12 - log A within 1e-6, and A itself matches
/// 1.282427130 (oracle value) to nine significant figures.
#[test]
fn a09_glaisher() {
    let c = ConstantsCache::standard();
    let p = PrecisionPolicy {
        n_max: 60.max(policy().n_max),
        ..policy()
    };
    let series = specialfn::hasse_log_sum(2, 1.0, &p).unwrap().value;
    let zp1_series = -1.0 / 24.0 + 0.5 * series;
    assert!((zp1_series - (1.0 / 12.0 - c.log_glaisher)).abs() < 1e-6);
    let a = c.log_glaisher.exp();
    assert!((a - 1.282427130).abs() < 1e-9, "A = {:.10}", a);
}

/// 10. Integral identities at their pinned tolerances: Glasser's cosine
/// moment (1e-9), the triple-gamma moment (1e-7), the digamma moments
/// (1e-8), and the dilogarithm moment 2 zeta(3) (1e-8).
#[test]
fn a10_integral_identities() {
    let cat = register_builtin();
    for (id, bound) in [
        ("E4.3.182", 1e-9),
        ("E4.3.184", 1e-7),
        ("E4.3.183", 1e-8),
        ("E4.3.183A", 1e-8),
        ("E4.3.66FVIII", 1e-8),
    ] {
        let o = cat.check(id, &policy()).unwrap();
        assert_eq!(o.status, Status::Pass, "{}", id);
        assert!(o.residual < bound, "{}: residual {:e}", id, o.residual);
    }
}

/// 11. Slow series with documented convergence trend: zeta(3) from the
/// cubic log series and zeta(3), zeta(4) from Shen's Stirling-number
/// series, each within 1e-5 at the accessible truncation, with the
/// truncation error shrinking as terms are added.
#[test]
fn a11_slow_series_trend() {
    let c = ConstantsCache::standard();
    let z3 = c.zeta3;
    let z4 = PI.powi(4) / 90.0;

    let series = specialfn::hasse_log_sum(3, 1.0, &policy()).unwrap().value;
    assert!((-4.0 * PI * PI / 3.0 * series - z3).abs() < 1e-5);

    let mut prev = f64::INFINITY;
    for k_max in [20, 40, 60] {
        let err = (eulersums::shen_zeta(2, k_max).unwrap() - z3).abs();
        assert!(err < prev, "zeta(3) trend broke at k_max = {}", k_max);
        prev = err;
    }
    assert!(prev < 1e-5);
    assert!((eulersums::shen_zeta(3, 60).unwrap() - z4).abs() < 1e-5);
}

/// 12. Property suites: vanishing Hurwitz moments and the duplication
/// law hold at their stated tolerances, and the full FAST suite runs
/// clean in under 60 s of wall clock.
#[test]
fn a12_property_suites_and_fast_budget() {
    // vanishing moments, computed directly at quadrature tolerance 1e-9
    let p = policy();
    let zeta_half = move |u: f64| {
        specialfn::hurwitz_zeta(HurwitzPoint::new(-0.5, u), &p)
            .map(|r| r.value)
            .unwrap_or(f64::NAN)
    };
    let v0 = quadrature::adaptive_integrate(zeta_half, 0.0, 1.0, 1e-9, false, false)
        .unwrap()
        .value;
    assert!(v0.abs() < 1e-7, "int_0^1 zeta(-1/2, u) du = {:e}", v0);
    let v1 = quadrature::adaptive_integrate(zeta_half, 1.0, 2.0, 1e-9, false, false)
        .unwrap()
        .value;
    assert!((v1 + 2.0 / 3.0).abs() < 1e-7);
    let deriv = move |u: f64| {
        specialfn::hurwitz_zeta_deriv(HurwitzPoint::new(-1.0, u), &p)
            .map(|r| r.value)
            .unwrap_or(f64::NAN)
    };
    let v2 = quadrature::adaptive_integrate(deriv, 0.0, 1.0, 1e-9, false, false)
        .unwrap()
        .value;
    assert!(v2.abs() < 1e-7);

    // duplication law for the Hurwitz zeta at s = 3, a = 0.7
    let hz = |u: f64| {
        specialfn::hurwitz_zeta(HurwitzPoint::new(3.0, u), &policy())
            .unwrap()
            .value
    };
    assert!((8.0 * hz(1.4) - hz(0.7) - hz(1.2)).abs() < 1e-9);

    // full FAST suite: clean and inside the wall-clock budget
    let start = Instant::now();
    let report = register_builtin().run_suite(None, Some(Cost::Fast), &policy());
    let elapsed = start.elapsed().as_secs_f64();
    assert!(report.outcomes.len() >= 50);
    for o in &report.outcomes {
        assert_eq!(o.status, Status::Pass, "{} residual {:e}", o.id, o.residual);
    }
    assert!(elapsed < 60.0, "FAST suite took {:.1} s", elapsed);
}
