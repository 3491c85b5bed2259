//! Exact real cyclotomic numbers.
//!
//! A `CycloReal` is an element of Q(ζ_N) represented by its reduced
//! coefficient vector modulo Φ_N, constrained to be fixed by complex
//! conjugation (hence real). This covers every eigenvalue in this crate:
//! 4 sin²(π j/m) = 2 − ζ_m^j − ζ_m^{−j}, and all sums of such values.
//!
//! Equality is exact (compare in the compositum). Ordering follows the
//! real embedding ζ_N = e^(2πi/N): equality is decided exactly first, then
//! interval enclosures are evaluated with doubling precision until they
//! separate.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use num::{BigInt, BigRational, One, Signed, Zero};

use super::interval::{cos_combination, Interval};
use super::poly::{cyclotomic_poly, euler_phi, gcd_u64, lcm_u64};
use crate::error::CycloError;

/// Interval precision schedule for `cmp_val`.
const CMP_START_BITS: u32 = 64;
const CMP_MAX_BITS: u32 = 4096;

#[derive(Debug)]
struct Inner {
    conductor: u64,
    /// Reduced coefficients modulo Φ_conductor, length phi(conductor).
    coeffs: Vec<BigRational>,
    /// Cached outward f64 bounds from a 64-bit enclosure.
    approx: OnceLock<(f64, f64)>,
}

/// An exact real number in the maximal real subfield of a cyclotomic field.
#[derive(Clone)]
pub struct CycloReal(Arc<Inner>);

impl fmt::Debug for CycloReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloReal({self})")
    }
}

fn rat_int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn mul_rat_int(c: &BigRational, b: &BigInt) -> BigRational {
    BigRational::new(c.numer() * b, c.denom().clone())
}

/// Reduce a rational-coefficient polynomial modulo Φ_n, yielding exactly
/// phi(n) coefficients. Integer-only inputs take a faster path.
fn reduce_mod_phi(n: u64, mut poly: Vec<BigRational>) -> Vec<BigRational> {
    let phi_poly = cyclotomic_poly(n);
    let deg = phi_poly.degree();
    if poly.iter().all(|c| c.is_integer()) {
        let mut ints: Vec<BigInt> = poly.iter().map(|c| c.numer().clone()).collect();
        phi_poly.reduce_bigint(&mut ints);
        return ints.into_iter().map(BigRational::from_integer).collect();
    }
    let coeffs = phi_poly.coeffs();
    let mut k = poly.len();
    while k > deg {
        k -= 1;
        if poly[k].is_zero() {
            continue;
        }
        let c = std::mem::replace(&mut poly[k], BigRational::zero());
        let base = k - deg;
        for (i, pc) in coeffs.iter().enumerate().take(deg) {
            if !pc.is_zero() {
                let delta = mul_rat_int(&c, pc);
                poly[base + i] -= delta;
            }
        }
    }
    poly.truncate(deg);
    poly.resize(deg, BigRational::zero());
    poly
}

/// Attempt cheap conductor descent on a reduced coefficient vector:
///   - constants descend to conductor 1,
///   - N ≡ 2 (mod 4) rewrites into conductor N/2,
///   - support contained in qZ for a prime q | N rewrites into N/q.
fn normalize(mut n: u64, mut coeffs: Vec<BigRational>) -> (u64, Vec<BigRational>) {
    loop {
        if n == 1 {
            return (n, coeffs);
        }
        if coeffs.iter().skip(1).all(|c| c.is_zero()) {
            let c0 = coeffs.into_iter().next().unwrap_or_else(BigRational::zero);
            return (1, vec![c0]);
        }
        if n % 2 == 0 && (n / 2) % 2 == 1 {
            // ζ_{2k}^j = (−1)^j ζ_k^{j(k+1)/2 mod k} for odd k.
            let k = n / 2;
            let s = (k + 1) / 2;
            let mut lifted = vec![BigRational::zero(); k as usize];
            for (j, c) in coeffs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let target = ((j as u64) * s % k) as usize;
                if j % 2 == 0 {
                    lifted[target] += c;
                } else {
                    lifted[target] -= c;
                }
            }
            n = k;
            coeffs = reduce_mod_phi(n, lifted);
            continue;
        }
        let mut descended = false;
        for q in super::poly::prime_factors(n) {
            if n / q == 0 || n % q != 0 {
                continue;
            }
            let all_in_lattice = coeffs
                .iter()
                .enumerate()
                .all(|(j, c)| c.is_zero() || (j as u64) % q == 0);
            if all_in_lattice && n / q >= 1 {
                // v = W(x^q) at conductor N means v = W(ζ_{N/q}).
                let m = n / q;
                let mut w = vec![BigRational::zero(); coeffs.len() / q as usize + 1];
                for (j, c) in coeffs.iter().enumerate() {
                    if !c.is_zero() {
                        w[j / q as usize] = c.clone();
                    }
                }
                n = m;
                coeffs = reduce_mod_phi(n, w);
                descended = true;
                break;
            }
        }
        if !descended {
            return (n, coeffs);
        }
    }
}

impl CycloReal {
    fn from_normalized(n: u64, coeffs: Vec<BigRational>) -> Self {
        debug_assert_eq!(coeffs.len() as u64, euler_phi(n));
        CycloReal(Arc::new(Inner {
            conductor: n,
            coeffs,
            approx: OnceLock::new(),
        }))
    }

    fn build(n: u64, poly: Vec<BigRational>) -> Self {
        let reduced = reduce_mod_phi(n, poly);
        let (n, coeffs) = normalize(n, reduced);
        Self::from_normalized(n, coeffs)
    }

    pub fn zero() -> Self {
        Self::from_rational(BigRational::zero())
    }

    pub fn from_rational(q: BigRational) -> Self {
        Self::from_normalized(1, vec![q])
    }

    pub fn from_integer(v: i64) -> Self {
        Self::from_rational(rat_int(v))
    }

    /// Construct from a reduced coefficient vector at conductor `n`,
    /// validating length, reduction and reality. This is the entry point
    /// for untrusted (parsed) data.
    pub fn from_coeffs(n: u64, coeffs: Vec<BigRational>) -> Result<Self, CycloError> {
        if n == 0 {
            return Err(CycloError::InvalidConductor(n));
        }
        if n > crate::MAX_CONDUCTOR {
            return Err(CycloError::ConductorTooLarge(n));
        }
        if coeffs.len() as u64 > euler_phi(n) {
            return Err(CycloError::TooManyCoefficients {
                conductor: n,
                got: coeffs.len(),
            });
        }
        let mut padded = coeffs;
        padded.resize(euler_phi(n) as usize, BigRational::zero());
        let value = Self::build(n, padded);
        if !value.is_real() {
            return Err(CycloError::NotReal);
        }
        Ok(value)
    }

    /// 4 sin²(π j / m) = 2 − ζ_m^j − ζ_m^{−j}, built at the minimal
    /// conductor m / gcd(j, m).
    pub fn eig_value(j: u64, m: u64) -> Self {
        assert!(m >= 2, "cycle length must be at least 2");
        let j = j % m;
        if j == 0 {
            return Self::zero();
        }
        let g = gcd_u64(j, m);
        let (j, n) = (j / g, m / g);
        let mut poly = vec![BigRational::zero(); n as usize];
        poly[0] += rat_int(2);
        poly[j as usize] -= BigRational::one();
        poly[(n - j) as usize] -= BigRational::one();
        let value = Self::build(n, poly);
        debug_assert!(value.is_real());
        value
    }

    pub fn conductor(&self) -> u64 {
        self.0.conductor
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.0.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.0.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_rational(&self) -> Option<BigRational> {
        if self.0.conductor == 1 {
            Some(self.0.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Lift the coefficient vector into Q(ζ_target), target a multiple of
    /// the conductor. Returns the reduced vector at the target conductor.
    pub fn lift_coeffs(&self, target: u64) -> Vec<BigRational> {
        let n = self.0.conductor;
        debug_assert_eq!(target % n, 0, "lift target must be a multiple");
        if target == n {
            return self.0.coeffs.clone();
        }
        let step = (target / n) as usize;
        let mut poly = vec![BigRational::zero(); (self.0.coeffs.len() - 1) * step + 1];
        for (k, c) in self.0.coeffs.iter().enumerate() {
            if !c.is_zero() {
                poly[k * step] = c.clone();
            }
        }
        reduce_mod_phi(target, poly)
    }

    /// True if the value is fixed by ζ ↦ ζ^{N−1} (complex conjugation).
    pub fn is_real(&self) -> bool {
        let n = self.0.conductor;
        if n <= 2 {
            return true;
        }
        let mut conj = vec![BigRational::zero(); n as usize];
        for (k, c) in self.0.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let idx = ((n - k as u64) % n) as usize;
                conj[idx] += c;
            }
        }
        reduce_mod_phi(n, conj) == self.0.coeffs
    }

    pub fn add(&self, other: &CycloReal) -> CycloReal {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &CycloReal) -> CycloReal {
        self.combine(other, true)
    }

    fn combine(&self, other: &CycloReal, negate: bool) -> CycloReal {
        let l = lcm_u64(self.0.conductor, other.0.conductor);
        let mut a = self.lift_coeffs(l);
        let b = other.lift_coeffs(l);
        for (x, y) in a.iter_mut().zip(b.iter()) {
            if negate {
                *x -= y;
            } else {
                *x += y;
            }
        }
        let (n, coeffs) = normalize(l, a);
        CycloReal::from_normalized(n, coeffs)
    }

    pub fn neg(&self) -> CycloReal {
        let coeffs = self.0.coeffs.iter().map(|c| -c).collect();
        CycloReal::from_normalized(self.0.conductor, coeffs)
    }

    pub fn scale(&self, q: &BigRational) -> CycloReal {
        if q.is_zero() {
            return CycloReal::zero();
        }
        let coeffs = self.0.coeffs.iter().map(|c| c * q).collect();
        CycloReal::from_normalized(self.0.conductor, coeffs)
    }

    /// Exact product. Used by the characteristic-polynomial cross-checks;
    /// spectra themselves only ever add eigenvalues.
    pub fn mul(&self, other: &CycloReal) -> CycloReal {
        if self.is_zero() || other.is_zero() {
            return CycloReal::zero();
        }
        if let Some(q) = self.is_rational() {
            return other.scale(&q);
        }
        if let Some(q) = other.is_rational() {
            return self.scale(&q);
        }
        let l = lcm_u64(self.0.conductor, other.0.conductor);
        let a = self.lift_coeffs(l);
        let b = other.lift_coeffs(l);
        let mut prod = vec![BigRational::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        CycloReal::build(l, prod)
    }

    /// Exact equality via the compositum.
    pub fn eq_val(&self, other: &CycloReal) -> bool {
        if self.0.conductor == other.0.conductor {
            return self.0.coeffs == other.0.coeffs;
        }
        // Fast reject on cached bounds before paying for a lift.
        let (alo, ahi) = self.f64_bounds();
        let (blo, bhi) = other.f64_bounds();
        if ahi < blo || bhi < alo {
            return false;
        }
        let l = lcm_u64(self.0.conductor, other.0.conductor);
        self.lift_coeffs(l) == other.lift_coeffs(l)
    }

    /// Rigorous enclosure of the real value at the given precision.
    pub fn enclosure(&self, prec: u32) -> Interval {
        // Real by invariant, so the value equals Σ c_k cos(2πk/N).
        let n = self.0.conductor;
        cos_combination(
            self.0
                .coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (k as u64, c.clone())),
            n,
            prec,
        )
    }

    /// Cached outward f64 bounds from a 64-bit enclosure.
    pub fn f64_bounds(&self) -> (f64, f64) {
        *self
            .0
            .approx
            .get_or_init(|| self.enclosure(CMP_START_BITS).to_f64_bounds())
    }

    /// Total order consistent with the real embedding. Equality is decided
    /// exactly; unequal values are separated by escalating intervals.
    ///
    /// Panics if `CMP_MAX_BITS` of precision fail to separate two values
    /// already proven unequal; no value in this crate's scope comes close.
    pub fn cmp_val(&self, other: &CycloReal) -> Ordering {
        let (alo, ahi) = self.f64_bounds();
        let (blo, bhi) = other.f64_bounds();
        if ahi < blo {
            return Ordering::Less;
        }
        if bhi < alo {
            return Ordering::Greater;
        }
        if self.eq_val(other) {
            return Ordering::Equal;
        }
        let mut prec = CMP_START_BITS;
        while prec <= CMP_MAX_BITS {
            let a = self.enclosure(prec);
            let b = other.enclosure(prec);
            if a.hi < b.lo {
                return Ordering::Less;
            }
            if b.hi < a.lo {
                return Ordering::Greater;
            }
            prec *= 2;
        }
        panic!(
            "internal error: {CMP_MAX_BITS}-bit intervals failed to separate unequal \
             cyclotomic values {self} and {other}"
        );
    }

    pub fn sign(&self) -> Ordering {
        if self.is_zero() {
            return Ordering::Equal;
        }
        self.cmp_val(&CycloReal::zero())
    }

    /// Floating approximation with a rigorous error bound.
    pub fn to_float(&self, prec_bits: u32) -> FloatApprox {
        let prec_bits = prec_bits.max(53);
        let iv = self.enclosure(prec_bits);
        let (lo, hi) = iv.to_f64_bounds();
        let value = lo + (hi - lo) / 2.0;
        let error = (hi - lo) / 2.0 + value.abs() * 4.0 * f64::EPSILON;
        FloatApprox { value, error }
    }

    /// Decimal rendering with the requested number of significant digits.
    pub fn decimal_string(&self, sig_digits: u32) -> String {
        if let Some(q) = self.is_rational() {
            if q.is_integer() {
                return q.numer().to_string();
            }
        }
        let prec = 32 + (sig_digits as f64 * 3.33).ceil() as u32;
        let mid = self.enclosure(prec).midpoint();
        render_decimal(&mid, sig_digits)
    }
}

/// Round a rational to `sig` significant decimal digits.
fn render_decimal(q: &BigRational, sig: u32) -> String {
    if q.is_zero() {
        return "0".to_string();
    }
    let neg = q.is_negative();
    let abs = q.abs();
    // Find the decimal exponent e with 10^e <= abs < 10^(e+1).
    let mut e: i64 = 0;
    let ten = BigRational::from_integer(BigInt::from(10));
    let one = BigRational::one();
    let mut scaled = abs.clone();
    while scaled >= ten {
        scaled /= &ten;
        e += 1;
    }
    while scaled < one {
        scaled *= &ten;
        e -= 1;
    }
    // digits = round(abs * 10^(sig-1-e))
    let shift = sig as i64 - 1 - e;
    let mut shifted = abs;
    let ten_int = BigInt::from(10);
    if shift >= 0 {
        shifted *= BigRational::from_integer(ten_int.pow(shift as u32));
    } else {
        shifted /= BigRational::from_integer(ten_int.pow((-shift) as u32));
    }
    let mut digits = (shifted + BigRational::new(BigInt::one(), BigInt::from(2)))
        .floor()
        .to_integer()
        .to_string();
    // Rounding may carry into an extra digit.
    if digits.len() as u32 > sig {
        e += 1;
        digits.truncate(sig as usize);
    }
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    if e >= 0 && (e as usize) < digits.len() {
        out.push_str(&digits[..=e as usize]);
        let frac = &digits[e as usize + 1..];
        let frac = frac.trim_end_matches('0');
        if !frac.is_empty() {
            out.push('.');
            out.push_str(frac);
        }
    } else if e < 0 && e >= -4 {
        out.push_str("0.");
        for _ in 0..(-e - 1) {
            out.push('0');
        }
        out.push_str(digits.trim_end_matches('0'));
    } else {
        out.push_str(&digits[..1]);
        let frac = digits[1..].trim_end_matches('0');
        if !frac.is_empty() {
            out.push('.');
            out.push_str(frac);
        }
        out.push_str(&format!("e{e}"));
    }
    out
}

/// Floating approximation together with a rigorous error bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FloatApprox {
    pub value: f64,
    pub error: f64,
}

impl PartialEq for CycloReal {
    fn eq(&self, other: &Self) -> bool {
        self.eq_val(other)
    }
}

impl Eq for CycloReal {}

/// Textual form: `cyclo(N; c0, c1, ...)` with exact rationals.
impl fmt::Display for CycloReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cyclo({};", self.0.conductor)?;
        for (i, c) in self.0.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, " {c}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for CycloReal {
    type Err = CycloError;

    fn from_str(s: &str) -> Result<Self, CycloError> {
        let s = s.trim();
        let body = s
            .strip_prefix("cyclo(")
            .and_then(|rest| rest.strip_suffix(')'))
            .ok_or_else(|| CycloError::Parse(s.to_string()))?;
        let (n_str, coeff_str) = body
            .split_once(';')
            .ok_or_else(|| CycloError::Parse(s.to_string()))?;
        let n: u64 = n_str
            .trim()
            .parse()
            .map_err(|_| CycloError::Parse(s.to_string()))?;
        let coeffs = coeff_str
            .split(',')
            .map(|c| parse_rational(c.trim()).ok_or_else(|| CycloError::Parse(s.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        CycloReal::from_coeffs(n, coeffs)
    }
}

/// Parse "a", "a/b", or a plain decimal like "1.25" into an exact rational.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().ok()?;
        let d: BigInt = den.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(BigRational::new(n, d));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let neg = int_part.trim_start().starts_with('-');
        let int: BigInt = if int_part.is_empty() || int_part == "-" {
            BigInt::zero()
        } else {
            int_part.parse().ok()?
        };
        let frac: BigInt = frac_part.parse().ok()?;
        let den = BigInt::from(10).pow(frac_part.len() as u32);
        let num = int.abs() * &den + frac;
        let num = if neg { -num } else { num };
        return Some(BigRational::new(num, den));
    }
    let n: BigInt = s.parse().ok()?;
    Some(BigRational::from_integer(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eig(j: u64, m: u64) -> CycloReal {
        CycloReal::eig_value(j, m)
    }

    #[test]
    fn eig_value_rational_cases() {
        assert!(eig(0, 5).is_zero());
        assert_eq!(eig(1, 4).is_rational(), Some(rat_int(2)));
        assert_eq!(eig(1, 2).is_rational(), Some(rat_int(4)));
        assert_eq!(eig(1, 3).is_rational(), Some(rat_int(3)));
        assert_eq!(eig(1, 6).is_rational(), Some(rat_int(1)));
        assert_eq!(eig(2, 6).is_rational(), Some(rat_int(3)));
    }

    #[test]
    fn sums_of_eigenvalues() {
        let six = CycloReal::from_integer(6);
        assert!(eig(1, 3).add(&eig(1, 3)).eq_val(&six));
        assert!(eig(1, 4).add(&eig(1, 2)).eq_val(&six));
        // Σ over all j of 4 sin²(πj/5) = 2·5, so the two conjugate pairs
        // sum to 10 − 0 = 10; each pair appears twice.
        let five = CycloReal::from_integer(5);
        assert!(eig(1, 5).add(&eig(2, 5)).eq_val(&five));
    }

    #[test]
    fn equality_across_conductors() {
        assert!(eig(1, 6).eq_val(&CycloReal::from_integer(1)));
        assert!(!eig(1, 5).eq_val(&eig(2, 5)));
        assert!(eig(2, 10).eq_val(&eig(1, 5)));
    }

    #[test]
    fn trace_identity() {
        for m in 2..=50u64 {
            let mut total = CycloReal::zero();
            for j in 0..m {
                total = total.add(&CycloReal::eig_value(j, m));
            }
            assert!(
                total.eq_val(&CycloReal::from_integer(2 * m as i64)),
                "trace failed at m={m}"
            );
        }
    }

    #[test]
    fn conductor_descent() {
        for m in 2..=12u64 {
            for k in 1..=4u64 {
                for j in 0..m {
                    assert!(
                        CycloReal::eig_value(k * j, k * m).eq_val(&CycloReal::eig_value(j, m)),
                        "descent failed at j={j}, m={m}, k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn ordering_follows_the_real_embedding() {
        assert_eq!(eig(1, 7).cmp_val(&eig(1, 6)), Ordering::Less);
        assert_eq!(CycloReal::zero().cmp_val(&eig(1, 1000)), Ordering::Less);
        let four_a = eig(1, 4).add(&eig(1, 4));
        assert_eq!(four_a.cmp_val(&eig(1, 2)), Ordering::Equal);
        // ascending in j for fixed m
        for j in 1..5u64 {
            assert_eq!(eig(j, 11).cmp_val(&eig(j + 1, 11)), Ordering::Less);
        }
    }

    #[test]
    fn to_float_examples() {
        let three = eig(1, 3).to_float(64);
        assert!((three.value - 3.0).abs() <= three.error + 1e-12);
        let v = eig(1, 5).to_float(64);
        assert!((v.value - 1.381966011250105).abs() < 1e-12);
        let z = CycloReal::zero().to_float(64);
        assert_eq!(z.value, 0.0);
    }

    #[test]
    fn reality_invariant() {
        for m in [5u64, 7, 12, 30] {
            for j in 1..m {
                assert!(CycloReal::eig_value(j, m).is_real());
            }
        }
        // A deliberately non-real element must be rejected by from_coeffs.
        let imag = CycloReal::from_coeffs(
            4,
            vec![BigRational::zero(), BigRational::one()],
        );
        assert!(matches!(imag, Err(CycloError::NotReal)));
    }

    #[test]
    fn textual_round_trip() {
        for v in [
            eig(1, 5),
            eig(3, 7).add(&eig(1, 4)),
            CycloReal::from_rational(BigRational::new(BigInt::from(-7), BigInt::from(3))),
        ] {
            let s = v.to_string();
            let back: CycloReal = s.parse().unwrap();
            assert!(v.eq_val(&back), "round trip failed for {s}");
        }
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(CycloReal::zero().decimal_string(12), "0");
        assert_eq!(CycloReal::from_integer(4).decimal_string(12), "4");
        assert_eq!(eig(1, 5).decimal_string(12), "1.38196601125");
        assert_eq!(
            CycloReal::from_rational(BigRational::new(BigInt::from(1), BigInt::from(4)))
                .decimal_string(3),
            "0.25"
        );
    }

    #[test]
    fn parse_rational_forms() {
        assert_eq!(parse_rational("3").unwrap(), rat_int(3));
        assert_eq!(
            parse_rational("-7/2").unwrap(),
            BigRational::new(BigInt::from(-7), BigInt::from(2))
        );
        assert_eq!(
            parse_rational("1.25").unwrap(),
            BigRational::new(BigInt::from(5), BigInt::from(4))
        );
        assert_eq!(
            parse_rational("-0.5").unwrap(),
            BigRational::new(BigInt::from(-1), BigInt::from(2))
        );
        assert!(parse_rational("abc").is_none());
    }

    #[test]
    fn scalar_and_mul() {
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let v = eig(1, 2).scale(&half);
        assert!(v.eq_val(&CycloReal::from_integer(2)));
        // (2 − ζ5 − ζ5^4)(2 − ζ5^2 − ζ5^3) = product of the two distinct
        // nonzero C5 eigenvalues = 5 (from x^4+x^3+x^2+x+1 at x=1 ... known
        // identity: Π 4sin²(πj/5), j=1..4 equals 25; the two distinct values
        // multiply to 5).
        let p = eig(1, 5).mul(&eig(2, 5));
        assert!(p.eq_val(&CycloReal::from_integer(5)));
    }
}
