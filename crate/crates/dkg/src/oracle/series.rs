//! Reference series in compensated (double-double) arithmetic.
//!
//! Test-side oracles, deliberately independent of the production kernels:
//! every term is rebuilt from scratch as a factor-by-factor product, and
//! both the factors and the running sum are carried in double-double
//! precision (~31 digits). High-degree polynomial cases cancel by ten
//! orders of magnitude, which plain f64 products cannot survive.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy)]
pub enum SeriesKind {
    /// M(a,b;z), truncated at the polynomial degree when a = -n.
    Kummer { a: f64, b: f64 },
    /// P_n^{(α,β)}(x) through the terminating hypergeometric sum
    /// ((α+1)_n/n!) Σ_k (-n)_k (n+α+β+1)_k / ((α+1)_k k!) ((1-x)/2)^k.
    Jacobi { n: u32, alpha: f64, beta: f64 },
}

pub fn reference_series(kind: SeriesKind, z: f64) -> Result<f64> {
    match kind {
        SeriesKind::Kummer { a, b } => kummer_reference(a, b, z),
        SeriesKind::Jacobi { n, alpha, beta } => Ok(jacobi_reference(n, alpha, beta, z)),
    }
}

/// Unevaluated sum hi + lo with |lo| well below ulp(hi).
#[derive(Debug, Clone, Copy)]
struct Dd {
    hi: f64,
    lo: f64,
}

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

fn fast_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl Dd {
    const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    /// Exact sum of two doubles.
    fn from_sum(a: f64, b: f64) -> Dd {
        let (hi, lo) = two_sum(a, b);
        Dd { hi, lo }
    }

    fn value(self) -> f64 {
        self.hi + self.lo
    }

    fn add(self, other: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, other.hi);
        let e = e + self.lo + other.lo;
        let (hi, lo) = fast_two_sum(s, e);
        Dd { hi, lo }
    }

    fn mul(self, other: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, other.hi);
        let e = e + self.hi * other.lo + self.lo * other.hi;
        let (hi, lo) = fast_two_sum(p, e);
        Dd { hi, lo }
    }

    fn div(self, other: Dd) -> Dd {
        let q1 = self.hi / other.hi;
        // r = self - q1*other, computed in double-double
        let r = self.add(other.mul(Dd { hi: -q1, lo: 0.0 }));
        let q2 = r.hi / other.hi;
        let r2 = r.add(other.mul(Dd { hi: -q2, lo: 0.0 }));
        let q3 = r2.hi / other.hi;
        let (hi, lo) = fast_two_sum(q1, q2 + q3);
        Dd { hi, lo }
    }
}

fn kummer_reference(a: f64, b: f64, z: f64) -> Result<f64> {
    let truncation = if a <= 0.0 && a == a.floor() {
        Some((-a) as u32)
    } else {
        None
    };
    let mut sum = Dd::ZERO;
    let n_terms = truncation.unwrap_or(400);
    for k in 0..=n_terms {
        // (a)_k / (b)_k z^k / k!, factor by factor, factors exact in dd
        let mut term = Dd::ONE;
        for j in 0..k {
            let denom = Dd::from_sum(b, j as f64);
            if denom.value() == 0.0 {
                return Err(Error::ParameterPole(b));
            }
            term = term
                .mul(Dd::from_sum(a, j as f64))
                .div(denom)
                .mul(Dd { hi: z, lo: 0.0 })
                .div(Dd {
                    hi: j as f64 + 1.0,
                    lo: 0.0,
                });
        }
        sum = sum.add(term);
        if truncation.is_none() && k > 10 && term.value().abs() < 1e-20 * sum.value().abs() {
            return Ok(sum.value());
        }
    }
    if truncation.is_some() {
        Ok(sum.value())
    } else {
        Err(Error::NonConvergence(
            "reference Kummer series did not settle".into(),
        ))
    }
}

fn jacobi_reference(n: u32, alpha: f64, beta: f64, x: f64) -> f64 {
    // expand about the nearer endpoint so the sum argument stays ≤ 1/2:
    // P_n^{(α,β)}(-x) = (-1)^n P_n^{(β,α)}(x)
    if x < 0.0 {
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        return sign * jacobi_reference(n, beta, alpha, -x);
    }
    // h = (1 - x)/2 exactly
    let h = {
        let d = Dd::from_sum(1.0, -x);
        Dd {
            hi: d.hi / 2.0,
            lo: d.lo / 2.0,
        }
    };
    let nf = n as f64;
    let ab1 = Dd::from_sum(alpha, beta).add(Dd {
        hi: nf + 1.0,
        lo: 0.0,
    });
    let mut sum = Dd::ZERO;
    for k in 0..=n {
        let mut term = Dd::ONE;
        for j in 0..k {
            let jf = j as f64;
            term = term
                .mul(Dd {
                    hi: jf - nf,
                    lo: 0.0,
                })
                .mul(ab1.add(Dd { hi: jf, lo: 0.0 }))
                .div(Dd::from_sum(alpha, 1.0 + jf))
                .div(Dd {
                    hi: jf + 1.0,
                    lo: 0.0,
                })
                .mul(h);
        }
        sum = sum.add(term);
    }
    // leading factor (α+1)_n / n!
    let mut front = Dd::ONE;
    for j in 0..n {
        front = front
            .mul(Dd::from_sum(alpha, 1.0 + j as f64))
            .div(Dd {
                hi: j as f64 + 1.0,
                lo: 0.0,
            });
    }
    front.mul(sum).value()
}
