//! Exact arbitrary-precision combinatorics: binomials, factorials, signed
//! Stirling numbers of the first kind, Bernoulli numbers and polynomials,
//! Euler polynomials, and generalized harmonic numbers.
//!
//! Everything here is computed in `BigInt`/`BigRational` with no rounding,
//! so downstream identity checks in the FINITE group can demand residuals
//! of exactly zero.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::sync::Mutex;

pub type BigInteger = BigInt;
pub type Rational = BigRational;

/// Convenience constructor for small rationals.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Exact binomial coefficient C(n, k); zero when k > n.
pub fn binomial(n: usize, k: usize) -> BigInteger {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: usize) -> BigInteger {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}

/// Signed Stirling numbers of the first kind, defined by
/// x(x-1)...(x-n+1) = sum_k s(n,k) x^k, via the recurrence
/// s(n+1,k) = s(n,k-1) - n*s(n,k).
pub fn stirling1(n: usize, k: usize) -> BigInteger {
    if k > n {
        return BigInt::zero();
    }
    if n == 0 {
        return BigInt::one(); // s(0,0) = 1
    }
    // Row-by-row; only the previous row is retained.
    let mut row = vec![BigInt::one()]; // row for n = 0
    for m in 0..n {
        let mut next = vec![BigInt::zero(); m + 2];
        for (j, v) in row.iter().enumerate() {
            // s(m+1, j+1) += s(m, j)
            next[j + 1] += v;
            // s(m+1, j) -= m * s(m, j)
            next[j] -= BigInt::from(m) * v;
        }
        row = next;
    }
    row[k].clone()
}

/// Exact Bernoulli number B_m (convention B_1 = -1/2), computed from the
/// terminating double sum
///     B_p = sum_{n=0}^{p} 1/(n+1) sum_{k=0}^{n} C(n,k)(-1)^k k^p ,
/// which closes because the n-th forward difference annihilates any
/// polynomial of degree below n.
pub fn bernoulli_number(m: usize) -> Rational {
    let mut total = Rational::zero();
    for n in 0..=m {
        let mut inner = BigInt::zero();
        for k in 0..=n {
            let term = binomial(n, k) * BigInt::from(k).pow(m as u32);
            if k % 2 == 0 {
                inner += term;
            } else {
                inner -= term;
            }
        }
        total += Rational::new(inner, BigInt::from(n + 1));
    }
    total
}

/// Exact Bernoulli polynomial B_m(x) via the same terminating double sum
/// with samples (x+k)^m.
pub fn bernoulli_poly(m: usize, x: &Rational) -> Rational {
    let mut total = Rational::zero();
    for n in 0..=m {
        let mut inner = Rational::zero();
        for k in 0..=n {
            let base = x + rat_int(k as i64);
            let term = Rational::from_integer(binomial(n, k)) * pow_rat(&base, m as u32);
            if k % 2 == 0 {
                inner += term;
            } else {
                inner -= term;
            }
        }
        total += inner / rat_int(n as i64 + 1);
    }
    total
}

/// Exact Euler polynomial E_p(u) via the geometric-weight double sum
///     E_p(u) = sum_{n=0}^{p} 1/2^n sum_k C(n,k)(-1)^k (u+k)^p .
pub fn euler_poly(p: usize, u: &Rational) -> Rational {
    let mut total = Rational::zero();
    for n in 0..=p {
        let mut inner = Rational::zero();
        for k in 0..=n {
            let base = u + rat_int(k as i64);
            let term = Rational::from_integer(binomial(n, k)) * pow_rat(&base, p as u32);
            if k % 2 == 0 {
                inner += term;
            } else {
                inner -= term;
            }
        }
        total += inner / Rational::from_integer(BigInt::one() << n);
    }
    total
}

fn pow_rat(x: &Rational, e: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..e {
        acc *= x;
    }
    acc
}

/// Exact generalized harmonic number H_n^{(r)} = sum_{k=1}^{n} k^{-r}.
pub fn harmonic(n: usize, r: u32) -> Rational {
    let mut acc = Rational::zero();
    for k in 1..=n {
        acc += Rational::new(BigInt::one(), BigInt::from(k).pow(r));
    }
    acc
}

/// Grow-on-demand cache of H_n^{(r)}, keyed by order r. Each order keeps
/// the full prefix 0..=n so a request for (n, r) fills every smaller n too.
pub struct HarmonicTable {
    rows: Mutex<HashMap<u32, Vec<Rational>>>,
}

impl HarmonicTable {
    pub fn new() -> Self {
        HarmonicTable {
            rows: Mutex::new(HashMap::new()),
        }
    }

    pub fn get(&self, n: usize, r: u32) -> Rational {
        let mut rows = self.rows.lock().unwrap();
        let row = rows.entry(r).or_insert_with(|| vec![Rational::zero()]);
        while row.len() <= n {
            let k = row.len();
            let next = row[k - 1].clone() + Rational::new(BigInt::one(), BigInt::from(k).pow(r));
            row.push(next);
        }
        row[n].clone()
    }
}

impl Default for HarmonicTable {
    fn default() -> Self {
        Self::new()
    }
}

/// Render a rational as f64 (used at the boundary to the numeric modules).
pub fn rational_to_f64(x: &Rational) -> f64 {
    // Scale down so numerator/denominator both fit in f64 range.
    let num = x.numer();
    let den = x.denom();
    let nb = num.bits() as i64;
    let db = den.bits() as i64;
    let shift = (nb.max(db) - 900).max(0) as u64;
    let num_s: BigInt = num >> shift;
    let den_s: BigInt = den >> shift;
    let nf = bigint_to_f64(&num_s);
    let df = bigint_to_f64(&den_s);
    nf / df
}

fn bigint_to_f64(x: &BigInt) -> f64 {
    let mut acc = 0.0f64;
    let (sign, digits) = x.to_u64_digits();
    for d in digits.iter().rev() {
        acc = acc * 1.8446744073709552e19 + *d as f64;
    }
    if sign == num_bigint::Sign::Minus {
        -acc
    } else {
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_small_cases() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        for n in 0..12 {
            assert_eq!(binomial(n, 0), BigInt::one());
        }
        assert_eq!(binomial(30, 15), BigInt::from(155117520u64));
        assert_eq!(binomial(4, 7), BigInt::zero());
    }

    #[test]
    fn binomial_pascal_triangle() {
        for n in 1..25usize {
            for k in 1..=n {
                assert_eq!(
                    binomial(n, k),
                    binomial(n - 1, k - 1) + binomial(n - 1, k)
                );
            }
        }
    }

    #[test]
    fn stirling1_values() {
        // expand x(x-1)(x-2) = x^3 - 3x^2 + 2x
        assert_eq!(stirling1(3, 2), BigInt::from(-3));
        assert_eq!(stirling1(3, 1), BigInt::from(2));
        // s(k,1) = (-1)^(k+1) (k-1)!
        assert_eq!(stirling1(4, 1), BigInt::from(-6));
        assert_eq!(stirling1(5, 1), BigInt::from(24));
        // s(k,2) = (-1)^k (k-1)! H_{k-1}
        assert_eq!(stirling1(4, 2), BigInt::from(11));
        let h4 = harmonic(4, 1);
        let expect = Rational::from_integer(-factorial(4)) * h4;
        assert_eq!(Rational::from_integer(stirling1(5, 2)), expect);
    }

    #[test]
    fn stirling1_pochhammer_reconstruction() {
        // sum_k (-1)^(n+k) s(n,k) x^k = x(x+1)...(x+n-1)
        let points = [rat(1, 2), rat(-3, 4), rat(2, 1), rat(7, 3), rat(-5, 2)];
        for n in 1..=15usize {
            for x in &points {
                let mut lhs = Rational::zero();
                for k in 0..=n {
                    let sign = if (n + k) % 2 == 0 { 1 } else { -1 };
                    lhs += rat_int(sign)
                        * Rational::from_integer(stirling1(n, k))
                        * pow_rat(x, k as u32);
                }
                let mut rhs = Rational::one();
                for j in 0..n {
                    rhs *= x + rat_int(j as i64);
                }
                assert_eq!(lhs, rhs, "n={}", n);
            }
        }
    }

    #[test]
    fn bernoulli_numbers() {
        assert_eq!(bernoulli_number(0), rat_int(1));
        assert_eq!(bernoulli_number(1), rat(-1, 2));
        assert_eq!(bernoulli_number(2), rat(1, 6));
        assert_eq!(bernoulli_number(3), rat_int(0));
        assert_eq!(bernoulli_number(4), rat(-1, 30));
        assert_eq!(bernoulli_number(6), rat(1, 42));
        assert_eq!(bernoulli_number(8), rat(-1, 30));
        assert_eq!(bernoulli_number(10), rat(5, 66));
        assert_eq!(bernoulli_number(12), rat(-691, 2730));
        for m in (3..=19).step_by(2) {
            assert_eq!(bernoulli_number(m), rat_int(0), "odd m={}", m);
        }
    }

    #[test]
    fn bernoulli_poly_matches_closed_forms() {
        // B_2(x) = x^2 - x + 1/6 ; B_3(x) = x^3 - 3/2 x^2 + 1/2 x
        assert_eq!(bernoulli_poly(1, &rat(1, 2)), rat_int(0));
        assert_eq!(bernoulli_poly(3, &rat(1, 2)), rat_int(0));
        assert_eq!(bernoulli_poly(3, &rat(1, 4)), rat(3, 64));
        let x = rat(2, 7);
        let b2 = &x * &x - &x + rat(1, 6);
        assert_eq!(bernoulli_poly(2, &x), b2);
    }

    #[test]
    fn bernoulli_poly_reflection() {
        // B_m(1-x) = (-1)^m B_m(x)
        let x = rat(1, 3);
        let lhs = bernoulli_poly(3, &(rat_int(1) - &x));
        assert_eq!(lhs, -bernoulli_poly(3, &x));
        let lhs4 = bernoulli_poly(4, &(rat_int(1) - &x));
        assert_eq!(lhs4, bernoulli_poly(4, &x));
    }

    #[test]
    fn bernoulli_number_consistent_with_poly() {
        for m in 0..=20usize {
            assert_eq!(bernoulli_number(m), bernoulli_poly(m, &rat_int(0)), "m={}", m);
        }
    }

    #[test]
    fn euler_poly_values() {
        let half = rat(1, 2);
        assert_eq!(euler_poly(0, &half), rat_int(1));
        assert_eq!(euler_poly(1, &half), rat_int(0));
        assert_eq!(euler_poly(2, &rat_int(0)), rat_int(0));
        // E_1(u) = u - 1/2
        let u = rat(3, 5);
        assert_eq!(euler_poly(1, &u), &u - rat(1, 2));
        // E_2(u) = u^2 - u
        assert_eq!(euler_poly(2, &u), &u * &u - &u);
        // Euler numbers: E_n = 2^n E_n(1/2); E_2 = -1, E_4 = 5
        assert_eq!(euler_poly(2, &half) * rat_int(4), rat_int(-1));
        assert_eq!(euler_poly(4, &half) * rat_int(16), rat_int(5));
    }

    #[test]
    fn harmonic_values() {
        assert_eq!(harmonic(3, 1), rat(11, 6));
        assert_eq!(harmonic(0, 3), rat_int(0));
        assert_eq!(harmonic(4, 2), rat(205, 144));
        let table = HarmonicTable::new();
        for n in 0..20 {
            for r in 1..4 {
                assert_eq!(table.get(n, r), harmonic(n, r));
            }
        }
    }

    #[test]
    fn kronecker_delta_identity() {
        // sum_k C(n,k)(-1)^k = 0 for n >= 1
        for n in 1..=25usize {
            let mut acc = BigInt::zero();
            for k in 0..=n {
                let t = binomial(n, k);
                if k % 2 == 0 {
                    acc += t;
                } else {
                    acc -= t;
                }
            }
            assert!(acc.is_zero(), "n={}", n);
        }
    }

    #[test]
    fn rational_to_f64_roundtrip() {
        assert_eq!(rational_to_f64(&rat(1, 2)), 0.5);
        assert_eq!(rational_to_f64(&rat(-7, 8)), -0.875);
        let big = Rational::new(factorial(40), factorial(38));
        assert_eq!(rational_to_f64(&big), (40.0 * 39.0) as f64);
        let h = harmonic(100, 1);
        assert!((rational_to_f64(&h) - 5.187377517639621).abs() < 1e-12);
    }
}
