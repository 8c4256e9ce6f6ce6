//! Self-contained special-function kernels.
//!
//! Complex log-gamma, the Kummer confluent hypergeometric function M(a,b;z),
//! Jacobi polynomials and the Whittaker function M_{α,β}(z). Everything here
//! is a pure function of its arguments; accuracy targets are documented per
//! function and checked against independent series oracles in the tests.

mod gamma;
mod jacobi;
mod kummer;

pub use gamma::{gamma, log_gamma};
pub use jacobi::jacobi_p;
pub use kummer::{kummer_m, kummer_m_real, whittaker_m};

pub use num_complex::Complex64;

/// True when `x` sits on a pole of Γ, i.e. is a non-positive integer
/// (up to floating-point representation).
pub(crate) fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.floor() && x.is_finite()
}
