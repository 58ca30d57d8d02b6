//! Desk-scale laboratory for the analytic machinery behind twisted
//! `GL(3) x GL(2)` moment estimates: exact modular arithmetic and character
//! sums, coefficient sieves for the exactly computable families
//! (`d`, `d_3`, `lambda_min`, Ramanujan `tau`), the Duke–Friedlander–Iwaniec
//! delta symbol, Voronoi summation checks, oscillatory integral transforms,
//! and the rational minimax exponent optimizer.
//!
//! Everything here is built to be *verified*, not merely computed: identities
//! are tested two-sided, truncation claims are tested as decay scans, and
//! square-root cancellation claims are tested as fitted growth exponents.

pub mod bessel;
pub mod coeffs;
pub mod delta;
pub mod expsums;
pub mod gammafn;
pub mod gl3;
pub mod modp;
pub mod oscillatory;
pub mod pipeline;
pub mod quad;
pub mod stats;
pub mod voronoi;
pub mod weights;

use std::fmt;

/// Errors surfaced by operations with declared failure modes.
/// Pure-math preconditions that cannot fail for valid inputs are
/// `debug_assert`ed instead.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// `gcd(a, modulus) != 1` so no inverse exists.
    NotInvertible { a: i64, modulus: u64 },
    /// A character index or table index outside its valid range.
    IndexOutOfRange { index: u64, max: u64 },
    /// A coefficient table query beyond the sieved range.
    TableRange { n: u64, max: u64 },
    /// The claimed prime modulus failed the primality test.
    NotPrime(u64),
    /// A quadrature did not reach the requested tolerance.
    QuadratureFailure { achieved: f64, requested: f64 },
    /// Contour truncation never reached the requested tail threshold.
    ContourTruncation { tail_ratio: f64 },
    /// A structurally invalid parameter set.
    InvalidParameter(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotInvertible { a, modulus } => {
                write!(f, "{a} is not invertible mod {modulus}")
            }
            Error::IndexOutOfRange { index, max } => {
                write!(f, "index {index} out of range (max {max})")
            }
            Error::TableRange { n, max } => {
                write!(f, "{n} exceeds table range {max}")
            }
            Error::NotPrime(p) => write!(f, "{p} is not an odd prime"),
            Error::QuadratureFailure { achieved, requested } => {
                write!(f, "quadrature achieved error {achieved:.3e} > requested {requested:.3e}")
            }
            Error::ContourTruncation { tail_ratio } => {
                write!(f, "contour tail still {tail_ratio:.3e} of peak at cutoff")
            }
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;

pub use num_complex::Complex64;
