//! Angular eigenfunctions `Θ_j` of the separated Dunkl Laplacian.
//!
//! `Θ_1` depends on the parities `s_1, s_2`, higher `Θ_j` on `s_{j+1}`;
//! each is (up to normalization, which the closed forms leave free and we
//! fix to 1) a product of `cos^e θ sin^p θ` prefactors and a Jacobi
//! polynomial in `cos 2θ`. Physical normalization, when needed, is done
//! numerically by quadrature against the weight
//! `|cos θ|^{2μ_1} |sin θ|^{2μ_2}`.
//!
//! The angular operator for the first angle is implemented with the overall
//! sign that makes `(J + λ_1²) Θ_1 = 0` hold (and without any radial factor
//! in the drift term), which is the form consistent with the polar
//! decomposition of the Dunkl Laplacian:
//!
//! ```text
//! J f = f'' - 2(μ_1 tan θ - μ_2 cot θ) f'
//!       - μ_1 (f - f(π-θ))/cos²θ - μ_2 (f - f(-θ))/sin²θ
//! ```

use crate::config::{AngularState, DunklConfig, Parity};
use crate::error::{Error, Result};
use crate::specfun::jacobi_p;

/// λ_1² = 4 ℓ_1 (ℓ_1 + μ_1 + μ_2), evaluated from the doubled quantum number.
pub fn lambda1_squared(config: &DunklConfig, two_ell1: u32) -> f64 {
    let t = two_ell1 as f64;
    t * (t + 2.0 * (config.mu()[0] + config.mu()[1]))
}

fn check_theta1_coupling(config: &DunklConfig, two_ell1: u32) -> Result<(u8, u8)> {
    let s = config.s();
    let e1 = s[0].indicator();
    let e2 = s[1].indicator();
    let odd_sector = s[0] != s[1];
    if odd_sector != (two_ell1 % 2 == 1) {
        return Err(Error::ParityCoupling(format!(
            "2ℓ_1 = {two_ell1} incompatible with s_1 s_2 = {}",
            if odd_sector { -1 } else { 1 }
        )));
    }
    if two_ell1 == 0 && (e1, e2) != (0, 0) {
        return Err(Error::ParityCoupling(
            "ℓ_1 = 0 exists only for s_1 = s_2 = +1".into(),
        ));
    }
    Ok((e1, e2))
}

/// `Θ_1(θ)` for the parity sector carried by `config` (unnormalized).
pub fn theta_1(config: &DunklConfig, two_ell1: u32, theta: f64) -> Result<f64> {
    let (e1, e2) = check_theta1_coupling(config, two_ell1)?;
    let two_degree = two_ell1 as i64 - (e1 + e2) as i64;
    if two_degree < 0 {
        return Err(Error::NegativeDegree(two_degree as f64 / 2.0));
    }
    let n = (two_degree / 2) as u32;
    let alpha = config.mu()[1] + e2 as f64 - 0.5;
    let beta = config.mu()[0] + e1 as f64 - 0.5;
    let x = (2.0 * theta).cos();
    Ok(theta.cos().powi(e1 as i32) * theta.sin().powi(e2 as i32) * jacobi_p(n, alpha, beta, x))
}

/// `Θ_j(θ)`, `j = 2..=d-1` (unnormalized). Lower quantum numbers enter
/// through the `sin^{2(ℓ_1+..+ℓ_{j-1})} θ` prefactor and the first Jacobi
/// parameter.
pub fn theta_j(config: &DunklConfig, j: usize, ang: &AngularState, theta: f64) -> Result<f64> {
    let d = config.d();
    if j < 2 || j > d - 1 {
        return Err(Error::IndexOutOfRange { k: j, max: d - 1 });
    }
    if ang.two_ell().len() != d - 1 {
        return Err(Error::DimensionMismatch(format!(
            "angular state has {} entries, expected {}",
            ang.two_ell().len(),
            d - 1
        )));
    }
    let s_next = config.s()[j];
    let e = s_next.indicator();
    let two_ell_j = ang.two_ell()[j - 1];
    if (e == 1) != (two_ell_j % 2 == 1) {
        return Err(Error::ParityCoupling(format!(
            "2ℓ_{j} = {two_ell_j} incompatible with s_{} = {s_next}",
            j + 1
        )));
    }
    let two_degree = two_ell_j as i64 - e as i64;
    if two_degree < 0 {
        return Err(Error::NegativeDegree(two_degree as f64 / 2.0));
    }
    let n = (two_degree / 2) as u32;
    let t_prev: u32 = ang.two_ell()[..j - 1].iter().sum();
    let mu_partial: f64 = config.mu()[..j].iter().sum();
    let alpha = (j as f64 - 2.0) / 2.0 + t_prev as f64 + mu_partial;
    let beta = config.mu()[j] + e as f64 - 0.5;
    let x = (2.0 * theta).cos();
    Ok(theta.cos().powi(e as i32)
        * theta.sin().powi(t_prev as i32)
        * jacobi_p(n, alpha, beta, x))
}

/// A sampled angular eigenfunction.
#[derive(Debug, Clone)]
pub struct AngularProfile {
    pub j: usize,
    pub samples: Vec<(f64, f64)>,
}

impl AngularProfile {
    /// Samples `f` on `count` points spread symmetrically over `[a, b]`
    /// (endpoints included), so index mirroring realizes θ → a + b - θ.
    pub fn sample<F: Fn(f64) -> Result<f64>>(
        j: usize,
        f: F,
        a: f64,
        b: f64,
        count: usize,
    ) -> Result<Self> {
        let mut samples = Vec::with_capacity(count);
        for i in 0..count {
            let theta = a + (b - a) * i as f64 / (count - 1) as f64;
            samples.push((theta, f(theta)?));
        }
        Ok(Self { j, samples })
    }
}

/// Which reflection acts on the sampled angle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reflection {
    /// θ → π - θ (the reflections `R_1` and `R_{j+1}`, j ≥ 2).
    PiMinusTheta,
    /// θ → -θ, realized as θ → 2π - θ on the first angle's full range
    /// (the reflection `R_2`).
    MinusTheta,
}

/// Max over samples of `|Θ(reflected θ) - s Θ(θ)|`.
///
/// The profile must be sampled symmetrically: about π/2 for
/// [`Reflection::PiMinusTheta`], about 0 or π for [`Reflection::MinusTheta`].
pub fn check_parity(profile: &AngularProfile, s: Parity, reflection: Reflection) -> f64 {
    let n = profile.samples.len();
    let a = profile.samples[0].0;
    let b = profile.samples[n - 1].0;
    let midpoint_ok = match reflection {
        Reflection::PiMinusTheta => (a + b - std::f64::consts::PI).abs() < 1e-9,
        Reflection::MinusTheta => {
            (a + b).abs() < 1e-9 || (a + b - 2.0 * std::f64::consts::PI).abs() < 1e-9
        }
    };
    assert!(
        midpoint_ok,
        "profile grid [{a}, {b}] is not symmetric under the requested reflection"
    );
    let mut dev = 0.0f64;
    for i in 0..n {
        let (_, v) = profile.samples[i];
        let (_, v_reflected) = profile.samples[n - 1 - i];
        dev = dev.max((v_reflected - s.sign() * v).abs());
    }
    dev
}

/// Applies the first angular operator to a callable, reflections exact,
/// derivatives by 4th-order central differences.
pub fn theta1_operator<F: Fn(f64) -> f64>(config: &DunklConfig, f: &F, theta: f64) -> f64 {
    let mu1 = config.mu()[0];
    let mu2 = config.mu()[1];
    let h = 1e-3;
    let d1 = (8.0 * (f(theta + h) - f(theta - h)) - (f(theta + 2.0 * h) - f(theta - 2.0 * h)))
        / (12.0 * h);
    let d2 = (-(f(theta + 2.0 * h) + f(theta - 2.0 * h))
        + 16.0 * (f(theta + h) + f(theta - h))
        - 30.0 * f(theta))
        / (12.0 * h * h);
    let (sin, cos) = theta.sin_cos();
    let refl_1 = f(std::f64::consts::PI - theta);
    let refl_2 = f(-theta);
    d2 - 2.0 * (mu1 * sin / cos - mu2 * cos / sin) * d1
        - mu1 * (f(theta) - refl_1) / (cos * cos)
        - mu2 * (f(theta) - refl_2) / (sin * sin)
}

/// Max-norm residual of `(J + λ_1²) Θ_1` over the given angles.
pub fn theta1_eigen_residual(
    config: &DunklConfig,
    two_ell1: u32,
    thetas: &[f64],
) -> Result<f64> {
    check_theta1_coupling(config, two_ell1)?;
    let lambda2 = lambda1_squared(config, two_ell1);
    let f = |t: f64| theta_1(config, two_ell1, t).unwrap();
    let mut worst = 0.0f64;
    for &theta in thetas {
        let applied = theta1_operator(config, &f, theta);
        worst = worst.max((applied + lambda2 * f(theta)).abs());
    }
    Ok(worst)
}
