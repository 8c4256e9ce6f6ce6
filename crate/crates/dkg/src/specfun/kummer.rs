//! Kummer's confluent hypergeometric function M(a,b;z) and the Whittaker
//! function M_{α,β}(z) built on it.

use super::is_nonpositive_integer;
use crate::error::{Error, Result};
use num_complex::Complex64;

const MAX_TERMS: usize = 2000;

/// M(a,b;z) = Σ_k (a)_k/(b)_k z^k/k!, summed term by term with an explicit
/// convergence test: stop once |term| < 1e-17 |sum| three times in a row.
///
/// When `a` is a real non-positive integer -n the series truncates and the
/// exact degree-n polynomial is returned. No large-|z| asymptotics are
/// implemented; callers keep |z| desk-scale.
pub fn kummer_m(a: Complex64, b: Complex64, z: Complex64) -> Result<Complex64> {
    let poly_degree = real_nonpositive_integer(a).map(|n| n as usize);
    if let Some(bn) = real_nonpositive_integer(b) {
        // (b)_k vanishes at k = |b|+1; only a truncation at or before that
        // index keeps the series finite.
        let allowed = matches!(poly_degree, Some(n) if n <= bn as usize);
        if !allowed {
            return Err(Error::ParameterPole(b.re));
        }
    }

    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    if let Some(n) = poly_degree {
        for k in 0..n {
            let kf = k as f64;
            term *= (a + kf) / (b + kf) * z / (kf + 1.0);
            sum += term;
        }
        return Ok(sum);
    }

    let mut below = 0u32;
    let mut max_mag = 1.0f64;
    for k in 0..MAX_TERMS {
        let kf = k as f64;
        term *= (a + kf) / (b + kf) * z / (kf + 1.0);
        sum += term;
        max_mag = max_mag.max(term.norm());
        if term.norm() < 1e-17 * sum.norm() {
            below += 1;
            if below >= 3 {
                // guard against catastrophic cancellation for large |z|
                if max_mag > 1e15 * sum.norm().max(f64::MIN_POSITIVE) {
                    return Err(Error::NonConvergence(format!(
                        "Kummer series lost all significant digits at |z| = {}",
                        z.norm()
                    )));
                }
                return Ok(sum);
            }
        } else {
            below = 0;
        }
    }
    Err(Error::NonConvergence(format!(
        "Kummer series did not settle after {MAX_TERMS} terms at |z| = {}",
        z.norm()
    )))
}

/// Real-argument convenience wrapper.
pub fn kummer_m_real(a: f64, b: f64, z: f64) -> Result<f64> {
    kummer_m(
        Complex64::new(a, 0.0),
        Complex64::new(b, 0.0),
        Complex64::new(z, 0.0),
    )
    .map(|v| v.re)
}

/// Whittaker M through the standard identity
/// `M_{α,β}(z) = z^{β+1/2} e^{-z/2} M(β-α+1/2, 1+2β; z)`,
/// with the principal branch of `z^{β+1/2}`.
///
/// Arguments on the negative real axis sit on the branch cut and are
/// rejected with [`Error::BranchCutInput`].
pub fn whittaker_m(alpha: Complex64, beta: Complex64, z: Complex64) -> Result<Complex64> {
    if z.im == 0.0 && z.re < 0.0 {
        return Err(Error::BranchCutInput);
    }
    let a = beta - alpha + 0.5;
    let b = 2.0 * beta + 1.0;
    let m = kummer_m(a, b, z)?;
    if z.norm() == 0.0 {
        // z^{β+1/2} with Re β > -1/2 tends to 0; keep the limit finite for
        // the β = 0 edge by returning 0 directly.
        return Ok(Complex64::new(0.0, 0.0));
    }
    Ok(z.powc(beta + 0.5) * (-z / 2.0).exp() * m)
}

fn real_nonpositive_integer(v: Complex64) -> Option<u64> {
    if v.im == 0.0 && is_nonpositive_integer(v.re) {
        Some((-v.re) as u64)
    } else {
        None
    }
}
