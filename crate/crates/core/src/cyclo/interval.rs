//! Fixed-point interval arithmetic for rigorous enclosures of the real
//! numbers that arise as cyclotomic values.
//!
//! An `Interval` at precision `p` encloses a real x as
//! `[lo / 2^p, hi / 2^p]`. All operations round outward, so enclosures
//! stay sound under composition. Precision is escalated by the caller
//! until intervals separate; equality is always decided exactly first.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};


use num::{BigInt, BigRational, One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub prec: u32,
    pub lo: BigInt,
    pub hi: BigInt,
}

impl Interval {
    pub fn zero(prec: u32) -> Self {
        Interval {
            prec,
            lo: BigInt::zero(),
            hi: BigInt::zero(),
        }
    }

    pub fn from_rational(q: &BigRational, prec: u32) -> Self {
        let scaled = q * BigRational::from(BigInt::one() << prec);
        let lo = scaled.floor().to_integer();
        let hi = scaled.ceil().to_integer();
        Interval { prec, lo, hi }
    }

    pub fn add(&self, other: &Interval) -> Interval {
        debug_assert_eq!(self.prec, other.prec);
        Interval {
            prec: self.prec,
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    pub fn sub(&self, other: &Interval) -> Interval {
        debug_assert_eq!(self.prec, other.prec);
        Interval {
            prec: self.prec,
            lo: &self.lo - &other.hi,
            hi: &self.hi - &other.lo,
        }
    }

    pub fn neg(&self) -> Interval {
        Interval {
            prec: self.prec,
            lo: -&self.hi,
            hi: -&self.lo,
        }
    }

    pub fn mul(&self, other: &Interval) -> Interval {
        debug_assert_eq!(self.prec, other.prec);
        let candidates = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = candidates.iter().min().unwrap().clone();
        let hi = candidates.iter().max().unwrap().clone();
        Interval {
            prec: self.prec,
            lo: shift_floor(&lo, self.prec),
            hi: shift_ceil(&hi, self.prec),
        }
    }

    /// Multiply by an exact rational, rounding outward.
    pub fn scale_rational(&self, q: &BigRational) -> Interval {
        let num = q.numer();
        let den = q.denom();
        let a = &self.lo * num;
        let b = &self.hi * num;
        let (lo, hi) = if q.is_negative() { (b, a) } else { (a, b) };
        Interval {
            prec: self.prec,
            lo: div_floor(&lo, den),
            hi: div_ceil(&hi, den),
        }
    }

    /// Multiply by an exact integer ratio k/d with d > 0.
    pub fn scale_ratio(&self, k: i64, d: u64) -> Interval {
        let q = BigRational::new(BigInt::from(k), BigInt::from(d));
        self.scale_rational(&q)
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn is_strictly_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn is_strictly_negative(&self) -> bool {
        self.hi.is_negative()
    }

    /// Outward-rounded f64 endpoints (padded by a couple of ulps).
    pub fn to_f64_bounds(&self) -> (f64, f64) {
        let scale = 2f64.powi(-(self.prec as i32));
        let lo = big_to_f64(&self.lo) * scale;
        let hi = big_to_f64(&self.hi) * scale;
        (pad_down(lo), pad_up(hi))
    }

    /// Midpoint as an exact rational.
    pub fn midpoint(&self) -> BigRational {
        BigRational::new(&self.lo + &self.hi, BigInt::from(2) << self.prec)
    }

    /// Width as an exact rational.
    pub fn width(&self) -> BigRational {
        BigRational::new(&self.hi - &self.lo, BigInt::one() << self.prec)
    }
}

fn big_to_f64(x: &BigInt) -> f64 {
    use num::ToPrimitive;
    x.to_f64().unwrap_or(if x.is_negative() {
        f64::NEG_INFINITY
    } else {
        f64::INFINITY
    })
}

fn pad_down(x: f64) -> f64 {
    if x.is_finite() {
        x - x.abs() * 4.0 * f64::EPSILON - f64::MIN_POSITIVE
    } else {
        x
    }
}

fn pad_up(x: f64) -> f64 {
    if x.is_finite() {
        x + x.abs() * 4.0 * f64::EPSILON + f64::MIN_POSITIVE
    } else {
        x
    }
}

fn shift_floor(x: &BigInt, bits: u32) -> BigInt {
    // Arithmetic right shift of BigInt is floor division by 2^bits.
    x >> bits
}

fn shift_ceil(x: &BigInt, bits: u32) -> BigInt {
    -((-x) >> bits)
}

fn div_floor(a: &BigInt, b: &BigInt) -> BigInt {
    debug_assert!(b.is_positive());
    let (q, r) = num::Integer::div_rem(a, b);
    if r.is_negative() {
        q - 1
    } else {
        q
    }
}

fn div_ceil(a: &BigInt, b: &BigInt) -> BigInt {
    -div_floor(&-a, b)
}

/// arctan(1/x) at scale 2^prec, as an interval. Alternating series with
/// one-ulp rounding per term and the first omitted term as tail bound.
fn arctan_inv(x: u64, prec: u32) -> Interval {
    let one = BigInt::one() << prec;
    let x = BigInt::from(x);
    let x2 = &x * &x;
    let mut term_denom = x.clone(); // x^(2k+1)
    let mut k = 0u64;
    let mut sum = BigInt::zero();
    let mut ulp_budget = BigInt::zero();
    loop {
        let divisor = &term_denom * BigInt::from(2 * k + 1);
        let term = &one / &divisor; // truncated toward zero; error < 1 ulp
        if term.is_zero() {
            // Tail bounded by one more ulp.
            ulp_budget += 1;
            break;
        }
        if k % 2 == 0 {
            sum += &term;
        } else {
            sum -= &term;
        }
        ulp_budget += 1;
        term_denom *= &x2;
        k += 1;
    }
    Interval {
        prec,
        lo: &sum - &ulp_budget,
        hi: &sum + &ulp_budget,
    }
}

/// π as an interval at precision `prec`, cached per precision.
/// Machin: π = 16 arctan(1/5) − 4 arctan(1/239).
pub fn pi(prec: u32) -> Interval {
    static CACHE: OnceLock<Mutex<HashMap<u32, Interval>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&prec) {
        return hit.clone();
    }
    let guard = prec + 16;
    let a = arctan_inv(5, guard);
    let b = arctan_inv(239, guard);
    let pi_guard = Interval {
        prec: guard,
        lo: BigInt::from(16) * &a.lo - BigInt::from(4) * &b.hi,
        hi: BigInt::from(16) * &a.hi - BigInt::from(4) * &b.lo,
    };
    let result = Interval {
        prec,
        lo: shift_floor(&pi_guard.lo, 16),
        hi: shift_ceil(&pi_guard.hi, 16),
    };
    cache.lock().unwrap().insert(prec, result.clone());
    result
}

/// cos(θ) for θ an interval inside [0, π/2 + small], by Taylor series with
/// explicit tail bound.
fn cos_first_quadrant(theta: &Interval) -> Interval {
    let prec = theta.prec;
    let theta_sq = theta.mul(theta);
    let one = Interval {
        prec,
        lo: BigInt::one() << prec,
        hi: BigInt::one() << prec,
    };
    let mut sum = one.clone();
    let mut term = one; // x^(2n)/(2n)! as interval, n = 0
    let mut n = 0u64;
    loop {
        n += 1;
        // term *= θ² / ((2n−1)(2n))
        term = term
            .mul(&theta_sq)
            .scale_ratio(1, (2 * n - 1) * (2 * n));
        if n % 2 == 1 {
            sum = sum.sub(&term);
        } else {
            sum = sum.add(&term);
        }
        // θ ≤ 1.58 so the term ratio θ²/((2n+1)(2n+2)) < 1/4 from n ≥ 1;
        // once the term is below one ulp the alternating tail is too.
        let magnitude = term.lo.abs().max(term.hi.abs());
        if magnitude <= BigInt::from(2) {
            sum.lo -= BigInt::from(4);
            sum.hi += BigInt::from(4);
            break;
        }
    }
    sum
}

/// Rigorous enclosure of cos(2π k / n) at precision `prec`, 0 ≤ k < n.
pub fn cos_two_pi(k: u64, n: u64, prec: u32) -> Interval {
    debug_assert!(n >= 1);
    let mut k = k % n;
    // cos is even around 0: cos(2πk/n) = cos(2π(n−k)/n).
    if 2 * k > n {
        k = n - k;
    }
    // Now 2πk/n ∈ [0, π]. Split at π/2 via the exact midpoint test 4k vs n.
    let guard = prec + 16;
    let pi_val = pi(guard);
    let enclosure = if 4 * k <= n {
        // θ = 2πk/n ≤ π/2 (+ rounding slack)
        let theta = pi_val.scale_ratio(2 * k as i64, n);
        cos_first_quadrant(&theta)
    } else {
        // cos(θ) = −cos(π − θ), π − θ = π(n−2k)/n ∈ [0, π/2)
        let phi = pi_val.scale_ratio(n as i64 - 2 * k as i64, n);
        cos_first_quadrant(&phi).neg()
    };
    Interval {
        prec,
        lo: shift_floor(&enclosure.lo, 16),
        hi: shift_ceil(&enclosure.hi, 16),
    }
}

/// Enclosure of a Z-combination evaluated as Σ c_k · cos(2π k / n).
pub fn cos_combination(
    terms: impl Iterator<Item = (u64, BigRational)>,
    n: u64,
    prec: u32,
) -> Interval {
    let mut sum = Interval::zero(prec);
    for (k, coeff) in terms {
        if coeff.is_zero() {
            continue;
        }
        let c = cos_two_pi(k, n, prec).scale_rational(&coeff);
        sum = sum.add(&c);
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;

    fn approx(iv: &Interval) -> f64 {
        let (lo, hi) = iv.to_f64_bounds();
        (lo + hi) / 2.0
    }

    fn width_le(iv: &Interval, bound: f64) -> bool {
        let (lo, hi) = iv.to_f64_bounds();
        hi - lo <= bound
    }

    #[test]
    fn pi_enclosure_is_tight_and_correct() {
        for prec in [64u32, 128, 512] {
            let p = pi(prec);
            let (lo, hi) = p.to_f64_bounds();
            assert!(lo < std::f64::consts::PI && std::f64::consts::PI < hi);
            assert!(width_le(&p, 1e-12));
        }
    }

    #[test]
    fn cos_matches_f64_reference() {
        for (k, n) in [(0u64, 5u64), (1, 5), (2, 5), (3, 7), (1, 2), (1, 4), (5, 12)] {
            let iv = cos_two_pi(k, n, 80);
            let expected = (2.0 * std::f64::consts::PI * k as f64 / n as f64).cos();
            let got = approx(&iv);
            assert!(
                (got - expected).abs() < 1e-12,
                "cos(2π·{k}/{n}) enclosure {got} vs {expected}"
            );
            let (lo, hi) = iv.to_f64_bounds();
            assert!(lo <= expected + 1e-13 && expected - 1e-13 <= hi);
        }
    }

    #[test]
    fn cos_special_values_contain_exact_points() {
        // cos(2π/4) = 0
        let iv = cos_two_pi(1, 4, 100);
        assert!(iv.contains_zero());
        // cos(2π/6) = 1/2
        let iv = cos_two_pi(1, 6, 100);
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let scaled = Interval::from_rational(&half, 100);
        assert!(iv.lo <= scaled.hi && scaled.lo <= iv.hi);
    }

    #[test]
    fn escalating_precision_narrows() {
        let coarse = cos_two_pi(1, 7, 64);
        let fine = cos_two_pi(1, 7, 256);
        assert!(fine.width() < coarse.width());
        let tiny = BigRational::new(BigInt::one(), BigInt::one() << 200);
        assert!(fine.width() <= tiny);
    }

    #[test]
    fn interval_mul_is_outward() {
        let a = Interval::from_rational(&BigRational::new(BigInt::from(1), BigInt::from(3)), 64);
        let b = Interval::from_rational(&BigRational::new(BigInt::from(-2), BigInt::from(7)), 64);
        let prod = a.mul(&b);
        let exact = BigRational::new(BigInt::from(-2), BigInt::from(21));
        let exact_iv = Interval::from_rational(&exact, 64);
        assert!(prod.lo <= exact_iv.lo && exact_iv.hi <= prod.hi);
    }
}
