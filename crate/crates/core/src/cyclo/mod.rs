//! Exact cyclotomic arithmetic: the eigenvalue carrier for everything else.

pub mod interval;
pub mod poly;
mod real;

pub use interval::Interval;
pub use poly::{cyclotomic_poly, euler_phi, gcd_u64, lcm_u64, CyclotomicPolynomial};
pub use real::{parse_rational, CycloReal, FloatApprox};
