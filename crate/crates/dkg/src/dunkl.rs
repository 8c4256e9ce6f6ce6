//! The one-dimensional Dunkl operator `D = d/dx + (μ/x)(1 - R)`.
//!
//! Used at the operator level for property tests; the reflection part is
//! evaluated exactly, the derivative by a 4th-order central difference.

use crate::error::{Error, Result};

/// `R f(x) = f(-x)`.
pub fn reflect<F: Fn(f64) -> f64>(f: F) -> impl Fn(f64) -> f64 {
    move |x| f(-x)
}

/// `D f(x) = f'(x) + (μ/x)(f(x) - f(-x))` for `x ≠ 0`.
///
/// The derivative uses a 4th-order central difference with step
/// `h = max(1e-4, 1e-4 |x|)`, good to ~1e-7 on smooth functions.
pub fn dunkl_derivative<F: Fn(f64) -> f64>(f: F, x: f64, mu: f64) -> Result<f64> {
    if x == 0.0 {
        return Err(Error::EvaluationAtOrigin);
    }
    let h = 1e-4_f64.max(1e-4 * x.abs());
    let deriv = (8.0 * (f(x + h) - f(x - h)) - (f(x + 2.0 * h) - f(x - 2.0 * h))) / (12.0 * h);
    Ok(deriv + mu / x * (f(x) - f(-x)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64, msg: &str) {
        assert!((a - b).abs() <= tol, "{msg}: {a} vs {b}");
    }

    #[test]
    fn reflection_parities() {
        let even = reflect(|x: f64| x * x);
        assert_eq!(even(2.0), 4.0);
        let odd = reflect(|x: f64| x * x * x);
        assert_eq!(odd(2.0), -8.0);
        let exp_refl = reflect(|x: f64| x.exp());
        close(exp_refl(1.0), (-1.0f64).exp(), 1e-15, "e^{-1}");
    }

    #[test]
    fn linear_function() {
        // D x = 1 + 2μ
        for mu in [-0.4, 0.0, 0.7, 2.0] {
            for x in [0.5, -1.3, 4.0] {
                let d = dunkl_derivative(|t| t, x, mu).unwrap();
                close(d, 1.0 + 2.0 * mu, 1e-8, "D x");
            }
        }
    }

    #[test]
    fn even_part_annihilated() {
        // D x² = 2x for any μ
        for mu in [0.0, 0.4, -0.3] {
            let d = dunkl_derivative(|t| t * t, 1.7, mu).unwrap();
            close(d, 3.4, 1e-8, "D x²");
        }
    }

    #[test]
    fn exponential_worked_value() {
        // D e^x at x = 1, μ = 0.4: e + 0.4 (e - 1/e)
        let d = dunkl_derivative(|t: f64| t.exp(), 1.0, 0.4).unwrap();
        close(d, 3.658442783374086, 1e-8, "D e^x");
    }

    #[test]
    fn origin_rejected() {
        assert!(matches!(
            dunkl_derivative(|t| t, 0.0, 0.3),
            Err(Error::EvaluationAtOrigin)
        ));
    }

    #[test]
    fn linearity() {
        let (a, b) = (2.5, -1.25);
        let f = |x: f64| x.sin();
        let g = |x: f64| x * x * x - x;
        for x in [0.3, 1.1, -2.0] {
            for mu in [0.0, 0.4] {
                let lhs = dunkl_derivative(|t| a * f(t) + b * g(t), x, mu).unwrap();
                let rhs = a * dunkl_derivative(f, x, mu).unwrap()
                    + b * dunkl_derivative(g, x, mu).unwrap();
                close(lhs, rhs, 1e-8, "linearity");
            }
        }
    }

    #[test]
    fn parity_exchange() {
        // D maps even functions to odd and odd to even
        let even = |x: f64| (x * x).cos();
        let odd = |x: f64| x * (x * x).cos();
        for x in [0.4, 1.9] {
            let mu = 0.4;
            let de_p = dunkl_derivative(even, x, mu).unwrap();
            let de_m = dunkl_derivative(even, -x, mu).unwrap();
            close(de_p, -de_m, 1e-8, "even → odd");
            let do_p = dunkl_derivative(odd, x, mu).unwrap();
            let do_m = dunkl_derivative(odd, -x, mu).unwrap();
            close(do_p, do_m, 1e-8, "odd → even");
        }
    }

    #[test]
    fn mu_zero_reduces_to_derivative() {
        let f = |x: f64| x.exp() * x.sin();
        let x = 0.9f64;
        let exact = x.exp() * (x.sin() + x.cos());
        let d = dunkl_derivative(f, x, 0.0).unwrap();
        close(d, exact, 1e-9, "μ = 0");
    }
}
