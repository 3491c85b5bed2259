//! Exact spectral analysis of discrete tori and circulant graphs.
//!
//! The centerpiece is a constructive converse to "you can't hear the shape
//! of a drum" for discrete rectangular tori C_{m_1} × … × C_{m_p}: the
//! sorted factor list is recovered from the Laplacian spectrum alone by
//! peeling cycle factors off the theta function. Supporting machinery:
//!
//! - [`cyclo`]: exact arithmetic for eigenvalues 4 sin²(πj/m) in
//!   cyclotomic fields, with a total order on exact values.
//! - [`graph`]: multigraphs, Laplacians, Cartesian products, and the
//!   cycle/torus/circulant constructors.
//! - [`spectra`]: exact spectra as multisets, closed forms, characteristic
//!   polynomials, and an independent numeric eigensolver.
//! - [`theta`]: spectra as exponential sums Σ c e^{−μt}, their product,
//!   exact deconvolution, and numeric term recovery from samples.
//! - [`hearing`]: the reconstruction algorithm itself.
//! - [`circulant`]: the cospectral-circulant laboratory, including the
//!   order-20 cospectral non-isomorphic pair and the exhaustive sweep
//!   showing nothing smaller exists.

pub mod circulant;
pub mod cyclo;
pub mod error;
pub mod graph;
pub mod hearing;
pub mod spectra;
pub mod theta;

pub use cyclo::CycloReal;
pub use graph::{IntegerMatrix, MultiGraph};

/// Largest conductor accepted when constructing exact values from
/// untrusted input. Keeps adversarial spectra from allocating
/// arbitrarily large coefficient vectors.
pub const MAX_CONDUCTOR: u64 = 1_000_000;
