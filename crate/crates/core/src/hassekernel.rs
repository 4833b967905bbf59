//! Forward-difference tables and the two signature double sums built on
//! them: the harmonic-weight ("Hasse") sum
//!     sum_{n>=0} 1/(n+1) * sum_k C(n,k)(-1)^k f(shift + k)
//! and the geometric-weight ("Sondow") sum with weight v^(n+1).
//!
//! The inner alternating binomial sum equals (-1)^n * Delta^n f, so both
//! series are weighted sums over the rows of a difference table. Rows are
//! produced by iterated differencing; the alternating accumulation of the
//! outer series is compensated (Neumaier).
//!
//! Numerical reality check: differencing loses roughly one bit per order,
//! so row n carries absolute noise on the order of 2^n * eps * max|f|.
//! The drivers monitor that floor and refuse to report digits below it;
//! slowly decaying integrands (log-type) must therefore be evaluated at a
//! shifted argument by the callers in `specialfn`, where the decay is fast
//! enough to finish well before the noise floor matters.

use crate::error::{Error, Result};
use crate::exactmath::Rational;
use num_traits::Zero;
use std::ops::AddAssign;

/// Compensated (Kahan/Neumaier) accumulator for cancellation-prone sums.
#[derive(Default, Clone, Copy)]
pub struct NeumaierSum {
    s: f64,
    c: f64,
}

impl NeumaierSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn sum(&self) -> f64 {
        self.s + self.c
    }
}

impl AddAssign<f64> for NeumaierSum {
    fn add_assign(&mut self, rhs: f64) {
        let (a, b) = if self.s.abs() >= rhs.abs() {
            (self.s, rhs)
        } else {
            (rhs, self.s)
        };
        let s = a + b;
        self.c += (a - s) + b;
        self.s = s;
    }
}

/// Truncation / convergence policy for the infinite series evaluators.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrecisionPolicy {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub n_max: usize,
    pub stabilization_count: usize,
}

impl Default for PrecisionPolicy {
    fn default() -> Self {
        PrecisionPolicy {
            rel_tol: 1e-12,
            abs_tol: 1e-12,
            n_max: 60,
            stabilization_count: 5,
        }
    }
}

impl PrecisionPolicy {
    pub fn with_n_max(mut self, n_max: usize) -> Self {
        self.n_max = n_max;
        self
    }

    pub fn with_tol(mut self, tol: f64) -> Self {
        self.rel_tol = tol;
        self.abs_tol = tol;
        self
    }
}

/// Outcome of an infinite-series evaluation.
#[derive(Debug, Clone, Copy)]
pub struct SeriesResult {
    pub value: f64,
    pub terms_used: usize,
    pub est_error: f64,
    pub converged: bool,
}

/// Triangular table of forward differences over equally spaced samples.
/// Row 0 is the samples themselves; row n entry j is
/// Delta^n f at offset j, i.e. row(n-1)[j+1] - row(n-1)[j].
pub struct DifferenceTable {
    rows: Vec<Vec<f64>>,
}

impl DifferenceTable {
    pub fn new(samples: Vec<f64>) -> Self {
        let mut rows = Vec::with_capacity(samples.len());
        rows.push(samples);
        DifferenceTable { rows }
    }

    pub fn samples(&self) -> &[f64] {
        &self.rows[0]
    }

    /// Highest difference order available.
    pub fn max_order(&self) -> usize {
        self.rows[0].len().saturating_sub(1)
    }

    /// Row of order n, computing intermediate rows on demand.
    pub fn row(&mut self, n: usize) -> Result<&[f64]> {
        if n > self.max_order() {
            return Err(Error::OrderExceedsSamples {
                order: n,
                samples: self.rows[0].len(),
            });
        }
        while self.rows.len() <= n {
            let prev = &self.rows[self.rows.len() - 1];
            let next: Vec<f64> = prev.windows(2).map(|w| w[1] - w[0]).collect();
            self.rows.push(next);
        }
        Ok(&self.rows[n])
    }

    /// Delta^n f(0).
    pub fn delta_at_zero(&mut self, n: usize) -> Result<f64> {
        Ok(self.row(n)?[0])
    }

    /// The alternating binomial sum sum_k C(n,k)(-1)^k f(k) = (-1)^n Delta^n f(0).
    pub fn alternating_at_zero(&mut self, n: usize) -> Result<f64> {
        let d = self.delta_at_zero(n)?;
        Ok(if n % 2 == 0 { d } else { -d })
    }
}

/// Delta^n f(0) by iterated differencing of the given samples.
pub fn forward_difference(samples: &[f64], n: usize) -> Result<f64> {
    if n >= samples.len() {
        return Err(Error::OrderExceedsSamples {
            order: n,
            samples: samples.len(),
        });
    }
    let mut row = samples[..=n].to_vec();
    for _ in 0..n {
        for j in 0..row.len() - 1 {
            row[j] = row[j + 1] - row[j];
        }
        row.pop();
    }
    Ok(row[0])
}

fn weighted_difference_sum(
    samples: Vec<f64>,
    weight: impl Fn(usize) -> f64,
    policy: &PrecisionPolicy,
) -> SeriesResult {
    // Row n only touches samples 0..=n, so the cancellation floor for the
    // leading entry of row n is ~2^n * eps * max|f(0..n)|.
    let mut prefix_max = Vec::with_capacity(samples.len());
    let mut m = 0.0f64;
    for s in &samples {
        m = m.max(s.abs());
        prefix_max.push(m);
    }
    let mut table = DifferenceTable::new(samples);
    let mut acc = NeumaierSum::new();
    let mut stable = 0usize;
    let mut last_term = 0.0f64;
    let mut window_max = 0.0f64;
    let mut terms = 0usize;
    let mut noise = 0.0f64;
    for n in 0..=policy.n_max.min(table.max_order()) {
        let alt = table.alternating_at_zero(n).expect("order within table");
        let term = weight(n) * alt;
        acc += term;
        terms = n + 1;
        last_term = term;
        let threshold = policy.abs_tol.max(policy.rel_tol * acc.sum().abs());
        if term.abs() <= threshold {
            stable += 1;
            window_max = window_max.max(term.abs());
            if stable >= policy.stabilization_count {
                return SeriesResult {
                    value: acc.sum(),
                    terms_used: terms,
                    est_error: window_max.max(noise),
                    converged: true,
                };
            }
        } else {
            stable = 0;
            window_max = 0.0;
        }
        // One bit of cancellation per difference order: row n is unreliable
        // once 2^n * eps * max|f(0..n)| reaches the magnitude of its leading
        // entry. Past that point further terms only add noise.
        noise = prefix_max[n] * f64::EPSILON * (n as f64).exp2();
        if stable == 0 && noise > 4.0 * policy.abs_tol && alt.abs() < 8.0 * noise {
            break;
        }
    }
    SeriesResult {
        value: acc.sum(),
        terms_used: terms,
        est_error: last_term.abs().max(noise),
        converged: false,
    }
}

/// Harmonic-weight double sum sum_n 1/(n+1) * sum_k C(n,k)(-1)^k f(shift+k).
pub fn hasse_sum(
    f: impl Fn(f64) -> f64,
    shift: f64,
    policy: &PrecisionPolicy,
) -> Result<SeriesResult> {
    let samples: Vec<f64> = (0..=policy.n_max).map(|k| f(shift + k as f64)).collect();
    if samples.iter().any(|x| !x.is_finite()) {
        return Err(Error::OutOfRange(format!(
            "integrand not finite on shift {} + 0..{}",
            shift, policy.n_max
        )));
    }
    Ok(weighted_difference_sum(
        samples,
        |n| 1.0 / (n as f64 + 1.0),
        policy,
    ))
}

/// Geometric-weight double sum sum_n v^(n+1) * sum_k C(n,k)(-1)^k f(k).
pub fn sondow_sum(
    f: impl Fn(f64) -> f64,
    v: f64,
    policy: &PrecisionPolicy,
) -> Result<SeriesResult> {
    if !(0.0 < v && v < 1.0) {
        return Err(Error::OutOfRange(format!("weight v={} not in (0,1)", v)));
    }
    let samples: Vec<f64> = (0..=policy.n_max).map(|k| f(k as f64)).collect();
    if samples.iter().any(|x| !x.is_finite()) {
        return Err(Error::OutOfRange("integrand not finite".into()));
    }
    Ok(weighted_difference_sum(samples, |n| v.powi(n as i32 + 1), policy))
}

/// Exact harmonic-weight sum for a polynomial integrand, which terminates
/// because Delta^n annihilates polynomials of degree < n. `coeffs[i]` is
/// the coefficient of x^i; the polynomial is sampled at shift, shift+1, ...
/// Equals B_d(shift) when p(x) = x^d.
pub fn hasse_sum_exact_polynomial(coeffs: &[Rational], shift: &Rational) -> Rational {
    let d = coeffs.len().saturating_sub(1);
    let eval = |x: &Rational| -> Rational {
        let mut acc = Rational::zero();
        for c in coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    };
    let samples: Vec<Rational> = (0..=d)
        .map(|k| eval(&(shift + Rational::from_integer(k.into()))))
        .collect();
    let mut total = Rational::zero();
    let mut row = samples;
    for n in 0..=d {
        // row currently holds Delta^n at offsets 0..d-n; alternating sign:
        let signed = if n % 2 == 0 {
            row[0].clone()
        } else {
            -row[0].clone()
        };
        total += signed / Rational::from_integer((n as i64 + 1).into());
        for j in 0..row.len() - 1 {
            row[j] = row[j + 1].clone() - row[j].clone();
        }
        row.pop();
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{bernoulli_poly, rat, rat_int};
    use std::f64::consts::PI;

    #[test]
    fn forward_difference_basics() {
        let ones = vec![1.0; 10];
        assert_eq!(forward_difference(&ones, 0).unwrap(), 1.0);
        for n in 1..10 {
            assert_eq!(forward_difference(&ones, n - 1).unwrap(), if n == 1 { 1.0 } else { 0.0 });
        }
        let squares: Vec<f64> = (0..10).map(|k| (k * k) as f64).collect();
        assert_eq!(forward_difference(&squares, 3).unwrap(), 0.0);
        // f(k) = 1/(k+1): Delta^4 f(0) = 4!/(1*2*3*4*5) = 1/5
        let recip: Vec<f64> = (0..10).map(|k| 1.0 / (k as f64 + 1.0)).collect();
        assert!((forward_difference(&recip, 4).unwrap() - 0.2).abs() < 1e-14);
        assert!(forward_difference(&recip, 10).is_err());
    }

    #[test]
    fn forward_difference_matches_alternating_binomial() {
        // Agreement bound: ~2^n * 8 ulp on smooth data.
        let f = |k: f64| (0.3 * k).sin() + 1.0 / (k + 2.0);
        let samples: Vec<f64> = (0..=24).map(|k| f(k as f64)).collect();
        for n in 0..=20usize {
            let mut alt = 0.0f64;
            let mut c = 1.0f64;
            for k in 0..=n {
                let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
                alt += sign * c * samples[k];
                c = c * (n - k) as f64 / (k + 1) as f64;
            }
            let direct = if n % 2 == 0 { alt } else { -alt };
            let tabled = forward_difference(&samples, n).unwrap();
            let bound = (n as f64).exp2() * 8.0 * f64::EPSILON;
            assert!(
                (tabled - direct).abs() <= bound.max(1e-15),
                "n={} diff={:e}",
                n,
                (tabled - direct).abs()
            );
        }
    }

    #[test]
    fn hasse_sum_constant_function() {
        let r = hasse_sum(|_| 1.0, 0.0, &PrecisionPolicy::default()).unwrap();
        assert!(r.converged);
        assert_eq!(r.value, 1.0);
    }

    #[test]
    fn hasse_sum_zeta2_partial_matches_reduced_form() {
        // For f(k) = 1/(k+1) the inner sum collapses to 1/(n+1), so the
        // series is sum 1/(n+1)^2; compare at matched truncation.
        // Shallow truncation keeps 2^n cancellation below 1e-10.
        let policy = PrecisionPolicy::default().with_n_max(18);
        let r = hasse_sum(|x| 1.0 / (x + 1.0), 0.0, &policy).unwrap();
        let reduced: f64 = (0..r.terms_used).map(|n| 1.0 / ((n + 1) as f64).powi(2)).sum();
        assert!((r.value - reduced).abs() < 1e-10, "diff {:e}", (r.value - reduced).abs());
    }

    #[test]
    fn hasse_sum_zeta2_via_shift() {
        // The shift parameter makes the series converge fast: zeta(2) =
        // sum_{j<16} 1/(j+1)^2 + hasse_sum(1/x at shift 17).
        let policy = PrecisionPolicy::default();
        let r = hasse_sum(|x| 1.0 / x, 32.0, &policy).unwrap();
        assert!(r.converged, "terms {} err {:e}", r.terms_used, r.est_error);
        let head: f64 = (1..32).map(|j| 1.0 / (j as f64 * j as f64)).sum();
        assert!(
            (head + r.value - PI * PI / 6.0).abs() < 1e-12,
            "resid {:e}",
            (head + r.value - PI * PI / 6.0).abs()
        );
    }

    #[test]
    fn hasse_sum_log_reaches_gamma_at_noise_floor() {
        // Direct (unshifted) evaluation of the log series is noise-limited;
        // it should still land within ~1e-4 of -gamma and report no
        // convergence under a tight default policy.
        let r = hasse_sum(|x| (1.0 + x).ln(), 0.0, &PrecisionPolicy::default()).unwrap();
        assert!(!r.converged);
        assert!((r.value + 0.5772156649015329).abs() < 1e-2, "value {}", r.value);
        assert!(r.est_error > (r.value + 0.5772156649015329).abs() / 50.0);
    }

    #[test]
    fn sondow_log2_and_zeta_a() {
        let policy = PrecisionPolicy::default();
        let r = sondow_sum(|k| 1.0 / (k + 1.0), 0.5, &policy).unwrap();
        assert!(r.converged);
        assert!((r.value - std::f64::consts::LN_2).abs() < 1e-12);

        let r2 = sondow_sum(|k| 1.0 / ((k + 1.0) * (k + 1.0)), 0.5, &policy).unwrap();
        assert!(r2.converged);
        assert!((r2.value - PI * PI / 12.0).abs() < 1e-12);

        let r3 = sondow_sum(|_| 1.0, 0.5, &policy).unwrap();
        assert_eq!(r3.value, 0.5);
    }

    #[test]
    fn sondow_alternating_zeta_family() {
        // (1 - 2^(1-s)) zeta(s) for s = 2, 3, 4
        let zeta = [PI * PI / 6.0, 1.2020569031595942854, PI.powi(4) / 90.0];
        let policy = PrecisionPolicy::default();
        for (i, s) in [2i32, 3, 4].iter().enumerate() {
            let r = sondow_sum(|k| (k + 1.0).powi(-s), 0.5, &policy).unwrap();
            let expect = (1.0 - (2.0f64).powi(1 - s)) * zeta[i];
            assert!((r.value - expect).abs() < 1e-12, "s={}", s);
        }
    }

    #[test]
    fn exact_polynomial_sum_is_bernoulli() {
        // p(x) = x^2 sampled from shift: equals B_2(shift)
        let coeffs = [rat_int(0), rat_int(0), rat_int(1)];
        for shift in [rat_int(0), rat(1, 2), rat(3, 7)] {
            assert_eq!(
                hasse_sum_exact_polynomial(&coeffs, &shift),
                bernoulli_poly(2, &shift)
            );
        }
        // p(k) = (k+1)^2 via shift 1 -> B_2(1) = 1/6
        assert_eq!(hasse_sum_exact_polynomial(&coeffs, &rat_int(1)), rat(1, 6));
        // constants and odd Bernoulli
        assert_eq!(hasse_sum_exact_polynomial(&[rat_int(1)], &rat_int(0)), rat_int(1));
        let cubic = [rat_int(0), rat_int(0), rat_int(0), rat_int(1)];
        assert_eq!(hasse_sum_exact_polynomial(&cubic, &rat_int(0)), rat_int(0));
    }

    #[test]
    fn hasse_sum_matches_exact_polynomial_in_f64() {
        let policy = PrecisionPolicy::default();
        for d in 1..=8usize {
            let mut coeffs = vec![rat_int(0); d + 1];
            coeffs[d] = rat_int(1);
            let exact = crate::exactmath::rational_to_f64(&hasse_sum_exact_polynomial(
                &coeffs,
                &rat(1, 2),
            ));
            let num = hasse_sum(|x| x.powi(d as i32), 0.5, &policy).unwrap();
            // The table sees samples up to ~60^d, so allow the documented
            // cancellation bound rather than pretending to exactness.
            let bound = (1e-12 * (1.0 + exact.abs())).max(num.est_error * 4.0);
            assert!(
                (num.value - exact).abs() <= bound,
                "d={} num={} exact={} bound={:e}",
                d,
                num.value,
                exact,
                bound
            );
        }
    }

    #[test]
    fn linearity() {
        // Use a shifted (fast-converging) pair so all three evaluations
        // actually converge; linearity then holds to combined tolerance.
        let policy = PrecisionPolicy::default();
        let f = |x: f64| 1.0 / x;
        let g = |x: f64| 1.0 / (x * x);
        let a = 2.5;
        let b = -1.25;
        let lhs = hasse_sum(|x| a * f(x) + b * g(x), 32.0, &policy).unwrap();
        let rf = hasse_sum(f, 32.0, &policy).unwrap();
        let rg = hasse_sum(g, 32.0, &policy).unwrap();
        assert!(lhs.converged && rf.converged && rg.converged);
        assert!((lhs.value - (a * rf.value + b * rg.value)).abs() < 1e-11);
    }

    #[test]
    fn sondow_rejects_bad_weight() {
        assert!(sondow_sum(|_| 1.0, 0.0, &PrecisionPolicy::default()).is_err());
        assert!(sondow_sum(|_| 1.0, 1.0, &PrecisionPolicy::default()).is_err());
    }
}
