//! Adaptive Gauss–Kronrod quadrature plus the specific integral shapes the
//! identity suite needs: cotangent moments int_0^x pi u^n cot(pi u) du and
//! the log-sine integral int_0^x log(2 sin pi u) du.
//!
//! Panels use the 15-point Kronrod rule with the embedded 7-point Gauss
//! estimate; endpoint log singularities are tamed by the quadratic
//! substitution t = a + (b-a) sigma^2 (and its mirror), after which the
//! integrand is smooth enough for plain bisection.

use crate::error::{Error, Result};
use crate::exactmath::{bernoulli_number, rational_to_f64};
use once_cell::sync::Lazy;
use std::f64::consts::PI;

/// Outcome of a quadrature evaluation.
#[derive(Debug, Clone, Copy)]
pub struct QuadResult {
    pub value: f64,
    pub est_error: f64,
    pub evaluations: usize,
}

// 15-point Kronrod nodes (positive half) with the embedded 7-point Gauss
// subset at indices 1, 3, 5, 7.
const XK: [f64; 8] = [
    0.991455371120813,
    0.949107912342759,
    0.864864423359769,
    0.741531185599394,
    0.586087235467691,
    0.405845151377397,
    0.207784955007898,
    0.0,
];
const WK: [f64; 8] = [
    0.022935322010529,
    0.063092092629979,
    0.104790010322250,
    0.140653259715525,
    0.169004726639267,
    0.190350578064785,
    0.204432940075298,
    0.209482141084728,
];
const WG: [f64; 4] = [
    0.129484966168870,
    0.279705391489277,
    0.381830050505119,
    0.417959183673469,
];

/// One Kronrod panel over [a, b]: returns (K15 value, |K15 - G7|, evals).
fn kronrod_panel(f: &dyn Fn(f64) -> f64, a: f64, b: f64) -> (f64, f64, usize) {
    let h = 0.5 * (b - a);
    let c = 0.5 * (a + b);
    let fc = f(c);
    let mut k = WK[7] * fc;
    let mut g = WG[3] * fc;
    for j in 0..7 {
        let fp = f(c + h * XK[j]);
        let fm = f(c - h * XK[j]);
        k += WK[j] * (fp + fm);
        if j % 2 == 1 {
            g += WG[j / 2] * (fp + fm);
        }
    }
    (k * h, ((k - g) * h).abs(), 15)
}

const MAX_PANELS: usize = 10_000;

fn adapt(
    f: &dyn Fn(f64) -> f64,
    a: f64,
    b: f64,
    tol: f64,
    panels: &mut usize,
    evals: &mut usize,
) -> Result<(f64, f64)> {
    let (v, e, n) = kronrod_panel(f, a, b);
    *panels += 1;
    *evals += n;
    if e <= tol || (b - a) < 1e-14 {
        return Ok((v, e));
    }
    if *panels >= MAX_PANELS {
        return Err(Error::ToleranceNotReached {
            panels: *panels,
            est_error: e,
        });
    }
    let m = 0.5 * (a + b);
    let (v1, e1) = adapt(f, a, m, 0.5 * tol, panels, evals)?;
    let (v2, e2) = adapt(f, m, b, 0.5 * tol, panels, evals)?;
    Ok((v1 + v2, e1 + e2))
}

/// Adaptive integration of f over [a, b] to absolute tolerance `tol`.
/// Endpoints flagged singular are handled with the sigma^2 substitution;
/// the rule never evaluates f at the endpoints themselves.
pub fn adaptive_integrate(
    f: impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    tol: f64,
    singular_left: bool,
    singular_right: bool,
) -> Result<QuadResult> {
    adaptive_integrate_dyn(&f, a, b, tol, singular_left, singular_right)
}

fn adaptive_integrate_dyn(
    f: &dyn Fn(f64) -> f64,
    a: f64,
    b: f64,
    tol: f64,
    singular_left: bool,
    singular_right: bool,
) -> Result<QuadResult> {
    if !(a < b) {
        return Err(Error::OutOfRange(format!("empty interval [{}, {}]", a, b)));
    }
    if singular_left && singular_right {
        let m = 0.5 * (a + b);
        let l = adaptive_integrate_dyn(f, a, m, 0.5 * tol, true, false)?;
        let r = adaptive_integrate_dyn(f, m, b, 0.5 * tol, false, true)?;
        return Ok(QuadResult {
            value: l.value + r.value,
            est_error: l.est_error + r.est_error,
            evaluations: l.evaluations + r.evaluations,
        });
    }
    let mut panels = 0usize;
    let mut evals = 0usize;
    let (value, est_error) = if singular_left {
        let len = b - a;
        let g = |s: f64| f(a + len * s * s) * 2.0 * len * s;
        adapt(&g, 0.0, 1.0, tol, &mut panels, &mut evals)?
    } else if singular_right {
        let len = b - a;
        let g = |s: f64| f(b - len * s * s) * 2.0 * len * s;
        adapt(&g, 0.0, 1.0, tol, &mut panels, &mut evals)?
    } else {
        adapt(&f, a, b, tol, &mut panels, &mut evals)?
    };
    Ok(QuadResult {
        value,
        est_error,
        evaluations: evals,
    })
}

// zeta at even integers 2, 4, ..., 18 from exact Bernoulli numbers:
// zeta(2m) = (2 pi)^(2m) |B_2m| / (2 (2m)!).
static ZETA_EVEN: Lazy<[f64; 9]> = Lazy::new(|| {
    let mut out = [0.0; 9];
    let mut fact = 1.0f64; // (2m)!
    for m in 1..=9usize {
        fact *= ((2 * m - 1) * (2 * m)) as f64;
        let b = rational_to_f64(&bernoulli_number(2 * m)).abs();
        out[m - 1] = (2.0 * PI).powi(2 * m as i32) * b / (2.0 * fact);
    }
    out
});

/// pi * u * cot(pi u), continuously extended through u = 0 by the series
/// 1 - 2 sum_m zeta(2m) u^(2m) for small |u|.
pub fn pi_u_cot_pi_u(u: f64) -> f64 {
    if u.abs() < 1e-3 {
        let u2 = u * u;
        let mut acc = 1.0;
        let mut p = u2;
        for z in ZETA_EVEN.iter() {
            acc -= 2.0 * z * p;
            p *= u2;
        }
        acc
    } else {
        PI * u * (PI * u).cos() / (PI * u).sin()
    }
}

/// int_0^x pi u^n cot(pi u) du for n in {1, 2}, 0 < x < 1.
pub fn cot_moment(n: usize, x: f64) -> Result<QuadResult> {
    if !(n == 1 || n == 2) {
        return Err(Error::OutOfRange(format!("cot moment order {}", n)));
    }
    if !(0.0 < x && x < 1.0) {
        return Err(Error::OutOfRange(format!("cot moment endpoint {}", x)));
    }
    // integrand pi u^n cot(pi u) = u^(n-1) * (pi u cot pi u): smooth on [0, x]
    let f = move |u: f64| u.powi(n as i32 - 1) * pi_u_cot_pi_u(u);
    // cot blows up toward u = 1; flag the right endpoint when x is close.
    adaptive_integrate(f, 0.0, x, 1e-12, false, x > 0.995)
}

/// int_0^x log(2 sin pi u) du, 0 < x <= 1/2 typical; log singular at u = 0.
pub fn log_sine_integral(x: f64) -> Result<QuadResult> {
    if !(0.0 < x && x <= 1.0) {
        return Err(Error::OutOfRange(format!("log-sine endpoint {}", x)));
    }
    let f = |u: f64| (2.0 * (PI * u).sin()).ln();
    adaptive_integrate(f, 0.0, x, 1e-12, true, x > 0.995)
}

#[cfg(test)]
mod tests {
    use super::*;

    const CATALAN: f64 = 0.9159655941772190;

    #[test]
    fn constant_and_log() {
        let r = adaptive_integrate(|_| 1.0, 0.0, 1.0, 1e-12, false, false).unwrap();
        assert!((r.value - 1.0).abs() < 1e-14);
        let r = adaptive_integrate(|t| t.ln(), 0.0, 1.0, 1e-12, true, false).unwrap();
        assert!((r.value + 1.0).abs() < 1e-12, "got {}", r.value);
    }

    #[test]
    fn dilog_integral() {
        // int_0^1 log t/(t-1) dt = pi^2/6
        let r = adaptive_integrate(|t| t.ln() / (t - 1.0), 0.0, 1.0, 1e-12, true, false).unwrap();
        assert!((r.value - PI * PI / 6.0).abs() < 1e-11, "got {}", r.value);
    }

    #[test]
    fn smooth_oscillatory() {
        let r = adaptive_integrate(|t| (10.0 * t).sin(), 0.0, 1.0, 1e-12, false, false).unwrap();
        let exact = (1.0 - (10.0f64).cos()) / 10.0;
        assert!((r.value - exact).abs() < 1e-12);
    }

    #[test]
    fn additivity() {
        let f = |t: f64| (t * t + 1.0).ln();
        let whole = adaptive_integrate(f, 0.0, 2.0, 1e-11, false, false).unwrap();
        let l = adaptive_integrate(f, 0.0, 0.7, 1e-11, false, false).unwrap();
        let r = adaptive_integrate(f, 0.7, 2.0, 1e-11, false, false).unwrap();
        let bound = 2.0 * (whole.est_error + l.est_error + r.est_error) + 1e-13;
        assert!((whole.value - (l.value + r.value)).abs() <= bound);
    }

    #[test]
    fn cot_moments_closed_forms() {
        let r = cot_moment(1, 0.5).unwrap();
        assert!((r.value - 0.5 * (2.0f64).ln()).abs() < 1e-11, "got {}", r.value);
        let r = cot_moment(1, 0.25).unwrap();
        // x log sin(pi x) - int_0^x log sin(pi u) du at x = 1/4
        let expect = 0.125 * (2.0f64).ln() + CATALAN / (2.0 * PI);
        assert!((r.value - expect).abs() < 1e-11);
        // oracle value for x = 0.3
        let r = cot_moment(1, 0.3).unwrap();
        assert!((r.value - 0.2692708583528755).abs() < 1e-11);
        assert!(cot_moment(3, 0.5).is_err());
        assert!(cot_moment(1, 1.2).is_err());
    }

    #[test]
    fn cot_series_patch_is_smooth() {
        // series and direct evaluation agree across the switchover
        for &u in &[9.99e-4, 1.0e-3, 1.01e-3, 5e-4] {
            let direct = PI * u * (PI * u).cos() / (PI * u).sin();
            assert!((pi_u_cot_pi_u(u) - direct).abs() < 1e-14);
        }
        assert_eq!(pi_u_cot_pi_u(0.0), 1.0);
    }

    #[test]
    fn log_sine_values() {
        let r = log_sine_integral(0.5).unwrap();
        assert!(r.value.abs() < 1e-11, "got {}", r.value);
        let r = log_sine_integral(0.25).unwrap();
        assert!((r.value + CATALAN / (2.0 * PI)).abs() < 1e-11);
        let r = log_sine_integral(0.3).unwrap();
        assert!((r.value + 0.12490731083499448).abs() < 1e-11);
    }

    #[test]
    fn bradley_log_sin_integral() {
        // int_0^{pi/4} log sin t dt = -(pi/4) log 2 - G/2
        let r = adaptive_integrate(|t| t.sin().ln(), 0.0, PI / 4.0, 1e-12, true, false).unwrap();
        let expect = -(PI / 4.0) * (2.0f64).ln() - CATALAN / 2.0;
        assert!((r.value - expect).abs() < 1e-11, "got {}", r.value);
    }

    #[test]
    fn integration_by_parts_relation() {
        // int_0^x pi u cot pi u du + int_0^x log sin pi u du = x log sin pi x
        for &x in &[0.2, 0.3] {
            let a = cot_moment(1, x).unwrap().value;
            let b = log_sine_integral(x).unwrap().value - x * (2.0f64).ln();
            let rhs = x * (PI * x).sin().ln();
            assert!((a + b - rhs).abs() < 1e-9, "x={}", x);
        }
    }

    #[test]
    fn fourier_check() {
        // int_0^x log(2 sin pi u) du = -(1/2pi) sum sin(2 pi n x)/n^2
        let x = 0.3f64;
        let lhs = log_sine_integral(x).unwrap().value;
        let mut s = 0.0;
        for n in (1..200_000u64).rev() {
            s += (2.0 * PI * n as f64 * x).sin() / ((n * n) as f64);
        }
        assert!((lhs + s / (2.0 * PI)).abs() < 1e-8, "resid {:e}", lhs + s / (2.0 * PI));
    }
}
