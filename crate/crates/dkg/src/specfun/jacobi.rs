//! Jacobi polynomials by the three-term recurrence.

/// P_n^{(α,β)}(x).
///
/// Exact for n = 0, 1 by construction. The recurrence itself is defined for
/// any α, β (callers wanting orthogonality keep α, β > -1).
pub fn jacobi_p(n: u32, alpha: f64, beta: f64, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let p1 = (alpha - beta) / 2.0 + (alpha + beta + 2.0) * x / 2.0;
    if n == 1 {
        return p1;
    }
    let mut pm2 = 1.0;
    let mut pm1 = p1;
    for k in 2..=n {
        let k = k as f64;
        let ab = alpha + beta;
        let c0 = 2.0 * k * (k + ab) * (2.0 * k + ab - 2.0);
        let c1 = (2.0 * k + ab - 1.0) * ((2.0 * k + ab) * (2.0 * k + ab - 2.0) * x + alpha * alpha - beta * beta);
        let c2 = 2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * (2.0 * k + ab);
        let p = (c1 * pm1 - c2 * pm2) / c0;
        pm2 = pm1;
        pm1 = p;
    }
    pm1
}
