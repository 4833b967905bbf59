//! Finite alternating binomial–harmonic identities in exact rational
//! arithmetic, and infinite Euler sums S_{p,q} with both closed forms
//! and direct-summation oracles.
//!
//! The finite layer (finite_S, nested_harmonic, finite_identity_bank)
//! runs entirely in exact rationals, so a passing check is a proof for
//! that n. The infinite layer pairs closed forms in zeta values with
//! partial sums carrying Euler–Maclaurin tail corrections, each side
//! serving as the other's oracle.

use crate::error::{Error, Result};
use crate::exactmath::{binomial, harmonic, rat_int, Rational};
use crate::hassekernel::{NeumaierSum, PrecisionPolicy, SeriesResult};
use crate::specialfn::{zeta, ConstantsCache};
use num_traits::{One, Zero};

/// Shape of an infinite Euler sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EulerSumKey {
    /// sum_k H_k^(p) / k^q
    Linear(u32, u32),
    /// sum_k (H_k)^2 / k^q
    Square(u32),
    /// sum_k (H_k)^3 / k^q
    Cube(u32),
    /// sum_k H_k H_k^(2) / k^q
    Mixed12(u32),
}

/// Partial sum plus tail correction, with a bound on the remaining error.
#[derive(Debug, Clone, Copy)]
pub struct TailEstimate {
    pub partial: f64,
    pub correction: f64,
    pub bound: f64,
}

impl TailEstimate {
    pub fn value(&self) -> f64 {
        self.partial + self.correction
    }
}

/// Exact sum_{k=1}^n C(n,k)(-1)^(k+1) / k^s.
#[allow(non_snake_case)]
pub fn finite_S(n: usize, s: u32) -> Rational {
    let mut acc = Rational::zero();
    for k in 1..=n {
        let mut term = Rational::from_integer(binomial(n, k));
        let kp = rat_int(k as i64);
        for _ in 0..s {
            term /= &kp;
        }
        if k % 2 == 1 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Exact nested harmonic sum sum_{1 <= i_1 <= ... <= i_d <= n} 1/(i_1 ... i_d),
/// by the recurrence T_d(n) = T_d(n-1) + T_{d-1}(n)/n.
pub fn nested_harmonic(n: usize, depth: u32) -> Rational {
    let mut prev: Vec<Rational> = (0..=n).map(|_| Rational::one()).collect();
    for _ in 1..=depth {
        let mut cur = vec![Rational::zero(); n + 1];
        for m in 1..=n {
            cur[m] = &cur[m - 1] + &prev[m] / rat_int(m as i64);
        }
        prev = cur;
    }
    prev[n].clone()
}

/// One exact identity family checked over a range of n.
#[derive(Debug, Clone)]
pub struct FiniteCheck {
    pub name: &'static str,
    pub n_max: usize,
    pub holds: bool,
}

/// Exact-rational verification, for n <= 30, of the binomial-harmonic
/// bank: the two alternating binomial transforms with H_k weights, the
/// 't Woord rearrangement, the three Spiess convolutions, and the
/// Apery-type telescoping at x in {1/2, 2, 3}.
pub fn finite_identity_bank() -> Vec<FiniteCheck> {
    const N_MAX: usize = 30;
    let h = |n: usize, r: u32| harmonic(n, r);
    let mut out = Vec::new();

    // sum C(n,k)(-1)^(k+1) H_k / k = H_n^(2)
    let mut holds = true;
    for n in 1..=N_MAX {
        let mut lhs = Rational::zero();
        for k in 1..=n {
            let t = Rational::from_integer(binomial(n, k)) * h(k, 1) / rat_int(k as i64);
            if k % 2 == 1 {
                lhs += t;
            } else {
                lhs -= t;
            }
        }
        holds &= lhs == h(n, 2);
    }
    out.push(FiniteCheck {
        name: "binomial transform of H_k/k gives H_n^(2)",
        n_max: N_MAX,
        holds,
    });

    // sum C(n,k)(-1)^(k+1) (1/k) sum_{j<=k} H_j/j = H_n^(3)
    let mut holds = true;
    let mut inner = vec![Rational::zero(); N_MAX + 1];
    for j in 1..=N_MAX {
        inner[j] = &inner[j - 1] + h(j, 1) / rat_int(j as i64);
    }
    for n in 1..=N_MAX {
        let mut lhs = Rational::zero();
        for k in 1..=n {
            let t =
                Rational::from_integer(binomial(n, k)) * &inner[k] / rat_int(k as i64);
            if k % 2 == 1 {
                lhs += t;
            } else {
                lhs -= t;
            }
        }
        holds &= lhs == h(n, 3);
    }
    out.push(FiniteCheck {
        name: "iterated binomial transform gives H_n^(3)",
        n_max: N_MAX,
        holds,
    });

    // sum_{k<=n} H_k^(2)/k = sum C(n,k)(-1)^(k+1) H_k/k^2
    let mut holds = true;
    for n in 1..=N_MAX {
        let mut lhs = Rational::zero();
        for k in 1..=n {
            lhs += h(k, 2) / rat_int(k as i64);
        }
        let mut rhs = Rational::zero();
        for k in 1..=n {
            let t = Rational::from_integer(binomial(n, k)) * h(k, 1)
                / (rat_int(k as i64) * rat_int(k as i64));
            if k % 2 == 1 {
                rhs += t;
            } else {
                rhs -= t;
            }
        }
        holds &= lhs == rhs;
    }
    out.push(FiniteCheck {
        name: "sum H_k^(2)/k equals binomial transform of H_k/k^2",
        n_max: N_MAX,
        holds,
    });

    // Spiess: sum_k 1/(k(n-k+1)) = 2 H_n/(n+1)
    let mut holds = true;
    for n in 1..=N_MAX {
        let mut lhs = Rational::zero();
        for k in 1..=n {
            lhs += Rational::one() / rat_int((k * (n - k + 1)) as i64);
        }
        holds &= lhs == rat_int(2) * h(n, 1) / rat_int(n as i64 + 1);
    }
    out.push(FiniteCheck {
        name: "Spiess convolution 1/(k(n-k+1))",
        n_max: N_MAX,
        holds,
    });

    // Spiess: sum_{k=2}^n (2/(k(n-k+1))) H_{k-1} = (3/(n+1))[(H_n)^2 - H_n^(2)]
    let mut holds = true;
    for n in 2..=N_MAX {
        let mut lhs = Rational::zero();
        for k in 2..=n {
            lhs += rat_int(2) * h(k - 1, 1) / rat_int((k * (n - k + 1)) as i64);
        }
        let hn = h(n, 1);
        let rhs = rat_int(3) * (&hn * &hn - h(n, 2)) / rat_int(n as i64 + 1);
        holds &= lhs == rhs;
    }
    out.push(FiniteCheck {
        name: "Spiess convolution with H_{k-1}",
        n_max: N_MAX,
        holds,
    });

    // Spiess: sum_{k=2}^n (4/(k(n-k+1))) H_{k-1} H_{n-k}
    //   = (4/(n+1)) [(H_n)^3 - 3 H_n H_n^(2) + 2 H_n^(3)]
    let mut holds = true;
    for n in 2..=N_MAX {
        let mut lhs = Rational::zero();
        for k in 2..=n {
            lhs += rat_int(4) * h(k - 1, 1) * h(n - k, 1)
                / rat_int((k * (n - k + 1)) as i64);
        }
        let hn = h(n, 1);
        let cube = &hn * &hn * &hn;
        let rhs = rat_int(4) * (cube - rat_int(3) * &hn * h(n, 2) + rat_int(2) * h(n, 3))
            / rat_int(n as i64 + 1);
        holds &= lhs == rhs;
    }
    out.push(FiniteCheck {
        name: "Spiess double convolution",
        n_max: N_MAX,
        holds,
    });

    // Apery telescoping: sum_{k<=n} k!/(k (1+x)...(k+x)) = 1/x - n!/(x (1+x)...(n+x))
    let mut holds = true;
    for x in [crate::exactmath::rat(1, 2), rat_int(2), rat_int(3)] {
        for n in 1..=N_MAX {
            let mut lhs = Rational::zero();
            let mut fact = Rational::one(); // k!
            let mut poch = Rational::one(); // (1+x)...(k+x)
            for k in 1..=n {
                fact *= rat_int(k as i64);
                poch *= rat_int(k as i64) + &x;
                lhs += &fact / (rat_int(k as i64) * &poch);
            }
            let rhs = Rational::one() / &x - fact / (&x * poch);
            holds &= lhs == rhs;
        }
    }
    out.push(FiniteCheck {
        name: "Apery-type telescoping at x in {1/2, 2, 3}",
        n_max: N_MAX,
        holds,
    });

    out
}

fn binom_f64(n: i64, k: i64) -> f64 {
    if k < 0 || n < 0 || k > n {
        return 0.0;
    }
    let mut acc = 1.0f64;
    for i in 0..k {
        acc = acc * (n - i) as f64 / (i + 1) as f64;
    }
    acc
}

/// zeta with the convention zeta(1) = 0, used inside the symmetric
/// linear-sum formula.
fn zeta_or_nil(s: u32) -> f64 {
    if s <= 1 {
        0.0
    } else {
        zeta(s as f64)
    }
}

/// Closed form for an Euler sum: the symmetric formula for linear sums
/// of odd weight, plus the tabulated low-weight specials.
pub fn euler_sum_closed(key: EulerSumKey) -> Result<f64> {
    let z = |s: u32| zeta(s as f64);
    match key {
        EulerSumKey::Square(2) => Ok(17.0 / 4.0 * z(4)),
        EulerSumKey::Square(3) => Ok(7.0 / 2.0 * z(5) - z(2) * z(3)),
        EulerSumKey::Cube(2) => Ok(10.0 * z(5) + z(2) * z(3)),
        EulerSumKey::Mixed12(2) => Ok(z(5) + z(2) * z(3)),
        EulerSumKey::Linear(2, 2) => Ok(7.0 / 4.0 * z(4)),
        EulerSumKey::Linear(1, 3) => Ok(5.0 / 4.0 * z(4)),
        EulerSumKey::Linear(p, q) if p >= 1 && q >= 2 && (p + q) % 2 == 1 => {
            // symmetric formula for sum_k H_k^(p)/k^q at odd weight m,
            // with zeta(1) read as nil
            let m = p + q;
            let sign = if p % 2 == 0 { 1.0 } else { -1.0 };
            let mut acc = z(m)
                * (0.5
                    - 0.5 * sign * binom_f64(m as i64 - 1, p as i64)
                    - 0.5 * sign * binom_f64(m as i64 - 1, q as i64));
            acc += (1.0 - sign) / 2.0 * zeta_or_nil(p) * zeta_or_nil(q);
            for k in 1..=(p / 2) {
                acc += sign
                    * binom_f64(m as i64 - 2 * k as i64 - 1, q as i64 - 1)
                    * z(2 * k)
                    * zeta_or_nil(m - 2 * k);
            }
            for k in 1..=(q / 2) {
                acc += sign
                    * binom_f64(m as i64 - 2 * k as i64 - 1, p as i64 - 1)
                    * z(2 * k)
                    * zeta_or_nil(m - 2 * k);
            }
            Ok(acc)
        }
        _ => Err(Error::UnsupportedKey),
    }
}

/// Tail sum_{k>n} log^i(k) k^(-s) by Euler–Maclaurin on g(x) = log^i x / x^s:
///     sum_{k>n} g(k) = int_n^inf g - g(n)/2 - g'(n)/12 + g'''(n)/720 - ...
/// Returns (value, bound), the bound being the magnitude of the first
/// neglected correction.
fn log_power_tail(i: u32, s: f64, n: f64) -> (f64, f64) {
    let ln = n.ln();
    // integral: I_j = log^j(n) n^(1-s)/(s-1) + j/(s-1) I_{j-1}
    let mut integral = n.powf(1.0 - s) / (s - 1.0);
    for j in 1..=i {
        integral = ln.powi(j as i32) * n.powf(1.0 - s) / (s - 1.0)
            + j as f64 / (s - 1.0) * integral;
    }
    // derivatives of g via coefficients over powers of log x
    let eval = |coeff: &[f64], t: f64| -> f64 {
        let mut acc = 0.0;
        for (m, c) in coeff.iter().enumerate() {
            acc += c * ln.powi(m as i32);
        }
        acc * n.powf(-t)
    };
    let deriv = |coeff: &[f64], t: f64| -> Vec<f64> {
        // d/dx [L^m x^-t] = m L^(m-1) x^(-t-1) - t L^m x^(-t-1)
        let mut out = vec![0.0; coeff.len()];
        for (m, c) in coeff.iter().enumerate() {
            out[m] -= t * c;
            if m > 0 {
                out[m - 1] += m as f64 * c;
            }
        }
        out
    };
    let mut coeff = vec![0.0; i as usize + 1];
    coeff[i as usize] = 1.0;
    let g0 = eval(&coeff, s);
    let mut t = s;
    let mut derivs = Vec::new(); // odd-order derivative values: g', g''', g^(5)
    for order in 1..=5usize {
        coeff = deriv(&coeff, t);
        t += 1.0;
        if order % 2 == 1 {
            derivs.push(eval(&coeff, t));
        }
    }
    let value = integral - 0.5 * g0 - derivs[0] / 12.0 + derivs[1] / 720.0;
    (value, derivs[2].abs() / 30240.0 + f64::EPSILON * integral.abs())
}

/// Weight asymptotics as terms coeff * log^i(k) * k^(-(q+extra)).
fn tail_terms(key: EulerSumKey) -> Result<(u32, Vec<(f64, u32, u32)>)> {
    let g = ConstantsCache::standard().euler_gamma;
    let z2 = zeta(2.0);
    match key {
        EulerSumKey::Linear(1, q) => Ok((
            q,
            vec![(1.0, 1, 0), (g, 0, 0), (0.5, 0, 1), (-1.0 / 12.0, 0, 2)],
        )),
        EulerSumKey::Linear(p, q) if p >= 2 => Ok((
            q,
            vec![
                (zeta(p as f64), 0, 0),
                (-1.0 / (p as f64 - 1.0), 0, p - 1),
                (0.5, 0, p),
            ],
        )),
        EulerSumKey::Square(q) => Ok((
            q,
            vec![
                (1.0, 2, 0),
                (2.0 * g, 1, 0),
                (g * g, 0, 0),
                (1.0, 1, 1),
                (g, 0, 1),
                (0.25, 0, 2),
                (-1.0 / 6.0, 1, 2),
                (-g / 6.0, 0, 2),
            ],
        )),
        EulerSumKey::Cube(q) => Ok((
            q,
            vec![
                (1.0, 3, 0),
                (3.0 * g, 2, 0),
                (3.0 * g * g, 1, 0),
                (g * g * g, 0, 0),
                (1.5, 2, 1),
                (3.0 * g, 1, 1),
                (1.5 * g * g, 0, 1),
                (0.75, 1, 2),
                (0.75 * g, 0, 2),
                (-0.25, 2, 2),
                (-0.5 * g, 1, 2),
                (-0.25 * g * g, 0, 2),
            ],
        )),
        EulerSumKey::Mixed12(q) => Ok((
            q,
            vec![
                (z2, 1, 0),
                (z2 * g, 0, 0),
                (z2 / 2.0, 0, 1),
                (-1.0, 1, 1),
                (-g, 0, 1),
                (0.5, 1, 2),
                (0.5 * g - 0.5, 0, 2),
                (-z2 / 12.0, 0, 2),
            ],
        )),
        _ => Err(Error::UnsupportedKey),
    }
}

/// Direct partial sum of an Euler sum plus an Euler–Maclaurin tail from
/// the weight's harmonic asymptotics; `bound` covers both the neglected
/// asymptotic order and the neglected correction terms.
pub fn euler_sum_numeric(
    key: EulerSumKey,
    terms: usize,
    _policy: &PrecisionPolicy,
) -> Result<TailEstimate> {
    let (q, tail_spec) = tail_terms(key)?;
    if q < 2 {
        return Err(Error::UnsupportedKey);
    }
    if matches!(key, EulerSumKey::Linear(p, _) if p > 3 || p == 0) {
        return Err(Error::UnsupportedKey);
    }
    let mut acc = NeumaierSum::new();
    let (mut h1, mut h2, mut h3) = (0.0f64, 0.0f64, 0.0f64);
    for k in 1..=terms {
        let kf = k as f64;
        h1 += 1.0 / kf;
        h2 += 1.0 / (kf * kf);
        h3 += 1.0 / (kf * kf * kf);
        let w = match key {
            EulerSumKey::Linear(1, _) => h1,
            EulerSumKey::Linear(2, _) => h2,
            EulerSumKey::Linear(_, _) => h3,
            EulerSumKey::Square(_) => h1 * h1,
            EulerSumKey::Cube(_) => h1 * h1 * h1,
            EulerSumKey::Mixed12(_) => h1 * h2,
        };
        acc += w / kf.powi(q as i32);
    }
    let nf = terms as f64;
    let mut corr = 0.0f64;
    let mut bound = 0.0f64;
    for &(c, i, extra) in &tail_spec {
        let (v, b) = log_power_tail(i, (q + extra) as f64, nf);
        corr += c * v;
        bound += c.abs() * b;
    }
    // neglected k^-(q+3) order of the weight asymptotics
    let (t1, _) = log_power_tail(1, (q + 3) as f64, nf);
    let (t0, _) = log_power_tail(0, (q + 3) as f64, nf);
    bound += 4.0 * (t1.abs() + t0.abs());
    Ok(TailEstimate {
        partial: acc.sum(),
        correction: corr,
        bound,
    })
}

/// Alternating-zeta values via the harmonic-polynomial series
/// sum_n w_s(n) / (n 2^n) = zeta_a(s) = (1 - 2^(1-s)) zeta(s).
pub fn zeta_a_harmonic(s: u32, policy: &PrecisionPolicy) -> Result<SeriesResult> {
    if !(2..=5).contains(&s) {
        return Err(Error::OutOfRange(format!("zeta_a weight {}", s)));
    }
    let mut acc = NeumaierSum::new();
    let (mut h1, mut h2, mut h3, mut h4) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    let mut pow2 = 1.0f64;
    let n_top = policy.n_max.max(80);
    for n in 1..=n_top {
        let nf = n as f64;
        h1 += 1.0 / nf;
        h2 += 1.0 / (nf * nf);
        h3 += 1.0 / (nf * nf * nf);
        h4 += 1.0 / (nf * nf * nf * nf);
        pow2 *= 0.5;
        let w = match s {
            2 => h1,
            3 => 0.5 * (h1 * h1 + h2),
            4 => h1 * h1 * h1 / 6.0 + 0.5 * h1 * h2 + h3 / 3.0,
            _ => {
                (h1.powi(4) + 6.0 * h1 * h1 * h2 + 8.0 * h1 * h3 + 3.0 * h2 * h2
                    + 6.0 * h4)
                    / 24.0
            }
        };
        let term = w * pow2 / nf;
        acc += term;
        if term < policy.abs_tol * 1e-3 && n > 10 {
            return Ok(SeriesResult {
                value: acc.sum(),
                terms_used: n,
                est_error: term * 2.0,
                converged: true,
            });
        }
    }
    Err(Error::NonConvergence {
        n_max: n_top,
        last_term: acc.sum(),
    })
}

/// The central-binomial/odd-harmonic sum
///     sum_k [(2k)!/(2^(2k)(k!)^2)]^3 sum_{j=0}^{k-1} 1/(2j+1),
/// whose terms fall off like k^(-3/2) log k; summed to 10^6 terms with a
/// fitted k^(-3/2)(A + B log k) tail.
pub fn morley_sum(_policy: &PrecisionPolicy) -> Result<SeriesResult> {
    const N: usize = 1_000_000;
    let mut c = 1.0f64; // (2k)!/(4^k (k!)^2)
    let mut h = 0.0f64; // sum_{j<k} 1/(2j+1)
    let mut acc = NeumaierSum::new();
    let mut t_half = 0.0f64;
    for k in 1..=N {
        let kf = k as f64;
        c *= (2.0 * kf - 1.0) / (2.0 * kf);
        h += 1.0 / (2.0 * kf - 1.0);
        let t = c * c * c * h;
        acc += t;
        if k == N / 2 {
            t_half = t;
        }
    }
    let t_n = {
        // last term recomputed from the running state
        c * c * c * h
    };
    let nf = N as f64;
    // fit t_k k^(3/2) = A + B log k from the last two sampled terms
    let y_n = t_n * nf.powf(1.5);
    let y_h = t_half * (nf / 2.0).powf(1.5);
    let b = (y_n - y_h) / std::f64::consts::LN_2;
    let tail = 2.0 / nf.sqrt() * (y_n + 2.0 * b);
    Ok(SeriesResult {
        value: acc.sum() + tail,
        terms_used: N,
        est_error: 8.0 * tail / nf.sqrt() + 1e-8,
        converged: true,
    })
}

/// Candidate closed forms for the central-binomial/odd-harmonic sum; the
/// catalogued right-hand side has an ambiguous exponent, so all readings
/// are reported alongside a numerically fitted alternative.
pub fn morley_candidates(policy: &PrecisionPolicy) -> Result<Vec<(&'static str, f64)>> {
    let pi = std::f64::consts::PI;
    let g14 = crate::specialfn::log_gamma(0.25, policy)?.value.exp();
    let g34 = crate::specialfn::log_gamma(0.75, policy)?.value.exp();
    let d = g34.powi(4);
    Ok(vec![
        (
            "pi/24 (6 pi - sqrt2 Gamma(1/4)) / Gamma(3/4)^4",
            pi / 24.0 * (6.0 * pi - 2.0f64.sqrt() * g14) / d,
        ),
        (
            "pi/24 (6 pi - sqrt2 Gamma(1/4)^4) / Gamma(3/4)^4",
            pi / 24.0 * (6.0 * pi - 2.0f64.sqrt() * g14.powi(4)) / d,
        ),
        ("pi^2 / (6 Gamma(3/4)^4)", pi * pi / (6.0 * d)),
    ])
}

/// The Stirling-number series
///     zeta(p+1) = (-1)^p sum_k (-1)^k s(k,p) / (k k!),
/// carried as the ratio r_k(j) = s(k,j)/k! to stay inside f64 range.
/// Term k equals e_{p-1}(1, 1/2, ..., 1/(k-1)) / k^2, which decays only
/// like log^(p-1)(k)/k^2, so the partial sum to k_max gets the same
/// Euler–Maclaurin tail treatment as the Euler sums.
pub fn shen_zeta(p: u32, k_max: usize) -> Result<f64> {
    if !(1..=3).contains(&p) {
        return Err(Error::OutOfRange(format!("shen series order {}", p)));
    }
    let top = p as usize;
    let mut r = vec![0.0f64; top + 1]; // r[j] = s(k,j)/k!, starting at k=1
    if top >= 1 {
        r[1] = 1.0;
    }
    let mut acc = NeumaierSum::new();
    let mut sign = -1.0f64; // (-1)^k at k=1
    acc += sign * r[top] / 1.0;
    for k in 1..k_max {
        // s(k+1,j) = s(k,j-1) - k s(k,j)  =>  r_{k+1}(j) = (r_k(j-1) - k r_k(j))/(k+1)
        let kf = k as f64;
        let mut next = vec![0.0f64; top + 1];
        for j in 1..=top {
            next[j] = (r[j - 1] - kf * r[j]) / (kf + 1.0);
        }
        // r[0] = s(k,0)/k! = 0 for k >= 1
        r = next;
        sign = -sign;
        acc += sign * r[top] / (kf + 1.0);
    }
    let parity = if p % 2 == 0 { 1.0 } else { -1.0 };
    // tail: sum_{k>k_max} e_{p-1}(1..1/(k-1)) / k^2 from the harmonic
    // asymptotics of the elementary symmetric weights
    let g = ConstantsCache::standard().euler_gamma;
    let z2 = zeta(2.0);
    let tail_spec: Vec<(f64, u32, u32)> = match p {
        1 => vec![(1.0, 0, 0)],
        2 => vec![(1.0, 1, 0), (g, 0, 0), (-0.5, 0, 1), (-1.0 / 12.0, 0, 2)],
        _ => vec![
            (0.5, 2, 0),
            (g, 1, 0),
            (0.5 * g * g - 0.5 * z2, 0, 0),
            (0.5, 0, 1),
            (-0.5, 1, 1),
            (-0.5 * g, 0, 1),
            (-1.0 / 12.0, 1, 2),
            (-g / 12.0 - 0.125, 0, 2),
        ],
    };
    let nf = k_max as f64;
    let mut tail = 0.0f64;
    for &(c, i, extra) in &tail_spec {
        tail += c * log_power_tail(i, (2 + extra) as f64, nf).0;
    }
    Ok(parity * acc.sum() + tail)
}

/// Partial sum of sum_{k>=1} H_k / k!, which converges to
/// e (Gamma(0,1) + gamma).
pub fn gosper_harmonic_sum(terms: usize) -> f64 {
    let mut acc = NeumaierSum::new();
    let mut h = 0.0f64;
    let mut fact = 1.0f64;
    for k in 1..=terms {
        let kf = k as f64;
        h += 1.0 / kf;
        fact *= kf;
        acc += h / fact;
    }
    acc.sum()
}
