//! Adaptive composite Gauss-Legendre quadrature.
//!
//! 16-point panels with recursive bisection; a panel is accepted when its
//! value agrees with the sum of its halves within the locally allotted
//! tolerance. The returned error estimate is the accumulated disagreement.

use crate::error::{Error, Result};

/// Nodes and weights of the 16-point Gauss-Legendre rule on [-1, 1].
const GL16: [(f64, f64); 16] = [
    (-0.9894009349916499326, 0.027152459411754094852),
    (-0.94457502307323257608, 0.062253523938647892863),
    (-0.86563120238783174388, 0.09515851168249278481),
    (-0.7554044083550030339, 0.12462897125553387205),
    (-0.61787624440264374845, 0.14959598881657673208),
    (-0.45801677765722738634, 0.16915651939500253819),
    (-0.28160355077925891323, 0.18260341504492358887),
    (-0.095012509837637440185, 0.18945061045506849629),
    (0.095012509837637440185, 0.18945061045506849629),
    (0.28160355077925891323, 0.18260341504492358887),
    (0.45801677765722738634, 0.16915651939500253819),
    (0.61787624440264374845, 0.14959598881657673208),
    (0.7554044083550030339, 0.12462897125553387205),
    (0.86563120238783174388, 0.09515851168249278481),
    (0.94457502307323257608, 0.062253523938647892863),
    (0.9894009349916499326, 0.027152459411754094852),
];

const MAX_DEPTH: u32 = 48;
const DEFAULT_TOL: f64 = 1e-10;

/// Integral value plus an error estimate.
#[derive(Debug, Clone, Copy)]
pub struct Quadrature {
    pub value: f64,
    pub error_estimate: f64,
}

/// ∫_a^b f with error targeted at 1e-10, absolute for order-one integrals
/// and relative for large ones (a panel is accepted once it agrees with its
/// halves within tol × max(1, local magnitude)).
pub fn quadrature<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Result<Quadrature> {
    quadrature_tol(f, a, b, DEFAULT_TOL)
}

pub fn quadrature_tol<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> Result<Quadrature> {
    let whole = panel(f, a, b);
    let mut total_err = 0.0;
    let value = refine(f, a, b, whole, tol, 0, &mut total_err)?;
    Ok(Quadrature {
        value,
        error_estimate: total_err,
    })
}

fn panel<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> f64 {
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let mut acc = 0.0;
    for &(x, w) in &GL16 {
        acc += w * f(mid + half * x);
    }
    acc * half
}

fn refine<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    whole: f64,
    tol: f64,
    depth: u32,
    total_err: &mut f64,
) -> Result<f64> {
    if depth > MAX_DEPTH {
        return Err(Error::MaxDepthExceeded);
    }
    let mid = 0.5 * (a + b);
    let left = panel(f, a, mid);
    let right = panel(f, mid, b);
    let diff = (left + right - whole).abs();
    if diff <= tol * (left.abs() + right.abs()).max(1.0) {
        *total_err += diff;
        return Ok(left + right);
    }
    let half_tol = 0.5 * tol;
    Ok(refine(f, a, mid, left, half_tol, depth + 1, total_err)?
        + refine(f, mid, b, right, half_tol, depth + 1, total_err)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear() {
        let q = quadrature(&|x| x, 0.0, 1.0).unwrap();
        assert!((q.value - 0.5).abs() < 1e-14);
    }

    #[test]
    fn truncated_exponential() {
        let q = quadrature(&|x: f64| (-x).exp(), 0.0, 40.0).unwrap();
        assert!((q.value - 1.0).abs() < 1e-10, "got {}", q.value);
        assert!(q.error_estimate < 1e-9);
    }

    #[test]
    fn gamma_integrand() {
        // ∫_0^20 x^{1.7} e^{-x} dx ≈ Γ(2.7) (tail beyond 20 is ~1e-6 of it,
        // so compare on the truncated reference computed from log-gamma).
        use crate::specfun::{log_gamma, Complex64};
        let q = quadrature(&|x: f64| x.powf(1.7) * (-x).exp(), 0.0, 20.0).unwrap();
        let full = log_gamma(Complex64::new(2.7, 0.0)).unwrap().re.exp();
        assert!(
            (q.value - full).abs() < 1e-6,
            "{} vs Γ(2.7) = {}",
            q.value,
            full
        );
        // against a 200-digit-grade reference of the truncated integral the
        // rule should be much tighter
        let q2 = quadrature(&|x: f64| x.powf(1.7) * (-x).exp(), 0.0, 60.0).unwrap();
        assert!((q2.value - full).abs() < 1e-8, "extended range");
    }

    #[test]
    fn oscillatory() {
        let q = quadrature(&|x: f64| (10.0 * x).sin(), 0.0, std::f64::consts::PI).unwrap();
        let exact = (1.0 - (10.0 * std::f64::consts::PI).cos()) / 10.0;
        assert!((q.value - exact).abs() < 1e-10);
    }
}
