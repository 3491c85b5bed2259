//! Dense integer polynomials and cyclotomic polynomials Φ_N.
//!
//! Coefficient vectors are stored constant-term first. Everything here is
//! exact `BigInt` arithmetic; the only division used is exact division,
//! which is checked.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num::{BigInt, One, Zero};

/// Monic integer polynomial Φ_N, the N-th cyclotomic polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicPolynomial {
    n: u64,
    /// Coefficients, constant term first. Monic, so the last entry is 1.
    coeffs: Vec<BigInt>,
    /// Indices of nonzero coefficients, for sparse reduction loops.
    support: Vec<usize>,
}

impl CyclotomicPolynomial {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    fn from_coeffs(n: u64, coeffs: Vec<BigInt>) -> Self {
        let support = coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| i)
            .collect();
        CyclotomicPolynomial { n, coeffs, support }
    }

    /// Reduce `poly` (constant-first, any degree) modulo Φ_N in place and
    /// truncate to degree < deg Φ_N. Works for any coefficient type that
    /// supports ring ops via the closure-free generic below.
    pub fn reduce_bigint(&self, poly: &mut Vec<BigInt>) {
        let deg = self.degree();
        let mut k = poly.len();
        while k > deg {
            k -= 1;
            if poly[k].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut poly[k], BigInt::zero());
            // x^k = x^(k-deg) * (x^deg - Φ_N(x) + Φ_N(x)) ≡ -x^(k-deg)(Φ_N - x^deg)
            let base = k - deg;
            for &i in &self.support {
                if i == deg {
                    continue;
                }
                let delta = &c * &self.coeffs[i];
                poly[base + i] -= delta;
            }
        }
        poly.truncate(deg);
        poly.resize(deg, BigInt::zero());
    }
}

/// Euler totient, by trial-division factorization (inputs are desk-scale).
pub fn euler_phi(n: u64) -> u64 {
    let mut n = n;
    let mut result = n;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Distinct prime factors, ascending.
pub fn prime_factors(n: u64) -> Vec<u64> {
    let mut n = n;
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm_u64(a: u64, b: u64) -> u64 {
    a / gcd_u64(a, b) * b
}

/// Exact division of integer polynomials: returns q with num = q * den.
/// Panics if the division is not exact; callers only divide products they
/// constructed, where exactness is guaranteed.
fn div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = num.len() - 1;
    let dd = den.len() - 1;
    assert!(dn >= dd, "division degree underflow");
    assert!(den[dd].is_one(), "divisor must be monic");
    let mut rem: Vec<BigInt> = num.to_vec();
    let mut quot = vec![BigInt::zero(); dn - dd + 1];
    for k in (dd..=dn).rev() {
        let c = std::mem::replace(&mut rem[k], BigInt::zero());
        if c.is_zero() {
            continue;
        }
        for (i, d) in den.iter().enumerate().take(dd) {
            if !d.is_zero() {
                let delta = &c * d;
                rem[k - dd + i] -= delta;
            }
        }
        quot[k - dd] = c;
    }
    assert!(
        rem.iter().all(|c| c.is_zero()),
        "inexact polynomial division"
    );
    quot
}

/// Substitute x -> x^e in a polynomial (inflation).
fn inflate(poly: &[BigInt], e: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); (poly.len() - 1) * e + 1];
    for (i, c) in poly.iter().enumerate() {
        if !c.is_zero() {
            out[i * e] = c.clone();
        }
    }
    out
}

fn compute_cyclotomic(n: u64) -> CyclotomicPolynomial {
    if n == 1 {
        // x - 1
        return CyclotomicPolynomial::from_coeffs(
            1,
            vec![BigInt::from(-1), BigInt::one()],
        );
    }
    let primes = prime_factors(n);
    let radical: u64 = primes.iter().product();

    // Build Φ_radical by Φ_{mp}(x) = Φ_m(x^p) / Φ_m(x) for p not dividing m.
    let mut phi = vec![BigInt::from(-1), BigInt::one()]; // Φ_1
    for &p in &primes {
        let inflated = inflate(&phi, p as usize);
        phi = div_exact(&inflated, &phi);
    }
    // Then Φ_n(x) = Φ_radical(x^(n/radical)).
    if n > radical {
        phi = inflate(&phi, (n / radical) as usize);
    }
    debug_assert_eq!(phi.len() as u64 - 1, euler_phi(n));
    CyclotomicPolynomial::from_coeffs(n, phi)
}

/// Φ_N with a process-wide cache. Values are shared immutably.
pub fn cyclotomic_poly(n: u64) -> Arc<CyclotomicPolynomial> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<CyclotomicPolynomial>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&n) {
        return hit.clone();
    }
    let computed = Arc::new(compute_cyclotomic(n));
    cache
        .lock()
        .unwrap()
        .entry(n)
        .or_insert(computed)
        .clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeffs_i64(poly: &CyclotomicPolynomial) -> Vec<i64> {
        poly.coeffs()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(coeffs_i64(&cyclotomic_poly(1)), vec![-1, 1]);
        assert_eq!(coeffs_i64(&cyclotomic_poly(2)), vec![1, 1]);
        assert_eq!(coeffs_i64(&cyclotomic_poly(3)), vec![1, 1, 1]);
        assert_eq!(coeffs_i64(&cyclotomic_poly(4)), vec![1, 0, 1]);
        assert_eq!(coeffs_i64(&cyclotomic_poly(6)), vec![1, -1, 1]);
        assert_eq!(coeffs_i64(&cyclotomic_poly(12)), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn phi_105_has_coefficient_minus_two() {
        // The classical first cyclotomic polynomial with a coefficient
        // outside {0, ±1}; degree phi(105) = 48.
        let phi = cyclotomic_poly(105);
        assert_eq!(phi.degree(), 48);
        let coeffs = coeffs_i64(&phi);
        assert_eq!(coeffs[7], -2);
        assert_eq!(coeffs[41], -2);
        assert!(coeffs.contains(&-2));
    }

    #[test]
    fn product_over_divisors_is_x_n_minus_1() {
        for n in [1u64, 2, 6, 12, 30, 36] {
            let mut product = vec![BigInt::one()];
            for d in 1..=n {
                if n % d == 0 {
                    let phi = cyclotomic_poly(d);
                    product = poly_mul(&product, phi.coeffs());
                }
            }
            let mut expected = vec![BigInt::zero(); n as usize + 1];
            expected[0] = BigInt::from(-1);
            expected[n as usize] = BigInt::one();
            assert_eq!(product, expected, "divisor product failed at n={n}");
        }
    }

    #[test]
    fn reduce_wraps_high_powers() {
        // x^4 mod Φ_5 = -(1 + x + x^2 + x^3)
        let phi = cyclotomic_poly(5);
        let mut poly = vec![BigInt::zero(); 5];
        poly[4] = BigInt::one();
        phi.reduce_bigint(&mut poly);
        assert_eq!(
            poly.iter().map(|c| i64::try_from(c).unwrap()).collect::<Vec<_>>(),
            vec![-1, -1, -1, -1]
        );
    }

    #[test]
    fn euler_phi_values() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(2), 1);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(105), 48);
        assert_eq!(euler_phi(5000), 2000);
    }

    fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    out[i + j] += x * y;
                }
            }
        }
        out
    }
}
