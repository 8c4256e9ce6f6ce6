//! Scattering states of the Dunkl-Coulomb problem and pair creation.
//!
//! In the variable `ζ = -2iκr`, `κ = sqrt(E² - m²)`, the radial equation
//! becomes the Whittaker equation with indices
//!
//! ```text
//! α = -i E Ze²/κ,   β = ± i β̃,   β̃ = sqrt(Z²e⁴ - ϖ² - ϑ(ϑ+1) - 1/4)
//! ```
//!
//! where `2ϑ = -(d - 1 + 2Σμ)`. Matching the in-mode `M_{α,β}` onto the
//! out-modes `W_{∓α,β}(∓ζ)` gives the Bogoliubov coefficients
//!
//! ```text
//! A = Γ(1+2β) e^{iπα} / Γ(1/2+β-α),
//! B = Γ(1+2β) e^{iπ(α-β-1/2)} / Γ(1/2+β+α),
//! ```
//!
//! and the pair-creation probability and density
//!
//! ```text
//! P = cosh π(β̃+x) / cosh π(β̃-x) · e^{-2πβ̃},    x = E Ze²/κ,
//! N = P/(1-P),
//! ```
//!
//! computed in log space (β̃, x of order 10 already overflow a naive cosh).
//!
//! The sign of β is not fixed by the quadratic it solves. The branch
//! `β = -i β̃` is the one for which `|B/A|²` reproduces P above and
//! `|A| > |B|` (a positive bosonic normalization); the `+i β̃` branch gives
//! the reciprocal. Both are exposed through [`BetaBranch`] and the
//! verification suite reports which one satisfies the normalization.

use crate::config::{self, AngularState, DunklConfig};
use crate::error::{Error, Result};
use crate::specfun::{log_gamma, whittaker_m, Complex64};
use crate::INVERSE_FINE_STRUCTURE;
use std::f64::consts::{LN_2, PI};

/// Scattering input: one propagating energy on one configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct ScatterInput {
    pub config: DunklConfig,
    pub ang: AngularState,
    pub m: f64,
    pub ze2: f64,
    pub energy: f64,
}

impl ScatterInput {
    pub fn new(
        config: DunklConfig,
        ang: AngularState,
        m: f64,
        ze2: f64,
        energy: f64,
    ) -> Result<Self> {
        if !(m > 0.0) {
            return Err(Error::InvalidParameter(format!("mass m = {m} must be positive")));
        }
        if !(ze2 >= 0.0) {
            return Err(Error::InvalidParameter(format!(
                "coupling Ze² = {ze2} must be non-negative"
            )));
        }
        if energy.abs() <= m {
            return Err(Error::NonPropagatingEnergy(energy.abs(), m));
        }
        Ok(Self { config, ang, m, ze2, energy })
    }

    /// κ = sqrt(E² - m²).
    pub fn kappa(&self) -> f64 {
        (self.energy * self.energy - self.m * self.m).sqrt()
    }

    /// x = E Ze²/κ.
    pub fn alpha_im(&self) -> f64 {
        self.energy * self.ze2 / self.kappa()
    }
}

/// All pair-creation observables of one input.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScatterResult {
    pub vartheta: f64,
    pub beta_tilde: f64,
    pub alpha_im: f64,
    pub probability: f64,
    pub density: f64,
}

/// `ϑ = -(d - 1 + 2Σμ)/2`.
pub fn vartheta(config: &DunklConfig) -> f64 {
    -config.drift_coefficient() / 2.0
}

/// Radicand `Z²e⁴ - ϖ² - ϑ(ϑ+1) - 1/4` of β̃.
pub fn creation_radicand(config: &DunklConfig, ang: &AngularState, ze2: f64) -> f64 {
    let varpi2 = config::varpi_squared_unchecked(config, ang);
    let th = vartheta(config);
    ze2 * ze2 - varpi2 - th * (th + 1.0) - 0.25
}

/// `β̃ = sqrt(Z²e⁴ - ϖ² - ϑ(ϑ+1) - 1/4)`, real only above the creation
/// threshold.
pub fn beta_tilde(config: &DunklConfig, ang: &AngularState, ze2: f64) -> Result<f64> {
    let radicand = creation_radicand(config, ang, ze2);
    if radicand < 0.0 {
        return Err(Error::SubcriticalCharge(radicand));
    }
    Ok(radicand.sqrt())
}

/// Pair-creation condition `Z²e⁴ ≥ ϖ² + ϑ(ϑ+1) + 1/4` (boundary included).
pub fn creation_condition(config: &DunklConfig, ang: &AngularState, ze2: f64) -> Result<bool> {
    config::validate(config, ang)?;
    Ok(creation_radicand(config, ang, ze2) >= 0.0)
}

/// Critical nucleus charge, in charge-number units (e² = 1/137).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CriticalCharge {
    /// `Z_cr = 137 sqrt(ϖ² + ϑ(ϑ+1) + 1/4)`.
    pub general: f64,
    /// The μ = 0 closed form `Z = 137 (ℓ + d/2 - 1)` with ℓ read as a
    /// single integer quantum number; reported only when every μ_j = 0 and
    /// the angular numbers are uniform.
    pub reduced_mu_zero: Option<f64>,
}

pub fn critical_charge(config: &DunklConfig, ang: &AngularState) -> Result<CriticalCharge> {
    config::validate(config, ang)?;
    Ok(critical_charge_unchecked(config, ang))
}

/// Formula-level critical charge (spectra tables sweep parity assignments
/// that the coupling rules exclude; the threshold itself carries no s).
pub fn critical_charge_unchecked(config: &DunklConfig, ang: &AngularState) -> CriticalCharge {
    let varpi2 = config::varpi_squared_unchecked(config, ang);
    let th = vartheta(config);
    let general = INVERSE_FINE_STRUCTURE * (varpi2 + th * (th + 1.0) + 0.25).sqrt();
    let mu_zero = config.mu().iter().all(|&m| m == 0.0);
    let uniform = ang.two_ell().windows(2).all(|w| w[0] == w[1]);
    let reduced_mu_zero = if mu_zero && uniform && !ang.two_ell().is_empty() {
        let ell = ang.two_ell()[0] as f64 / 2.0;
        Some(INVERSE_FINE_STRUCTURE * (ell + config.d() as f64 / 2.0 - 1.0))
    } else {
        None
    };
    CriticalCharge {
        general,
        reduced_mu_zero,
    }
}

/// Which sign of `β = ± i β̃` to use in the gamma-function route.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BetaBranch {
    PlusI,
    MinusI,
}

/// Bogoliubov coefficients with log-magnitudes (the values themselves can
/// overflow for large x, the log-magnitudes never do).
#[derive(Debug, Clone, Copy)]
pub struct BogoliubovCoefficients {
    pub a: Complex64,
    pub b: Complex64,
    pub log_abs_a: f64,
    pub log_abs_b: f64,
}

impl BogoliubovCoefficients {
    /// `|B/A|²`, evaluated from the log-magnitudes.
    pub fn probability(&self) -> f64 {
        (2.0 * (self.log_abs_b - self.log_abs_a)).exp()
    }

    /// Sign of `|A|² - |B|²`; positive for a bosonic in/out matching.
    pub fn normalization_sign(&self) -> f64 {
        (self.log_abs_a - self.log_abs_b).signum()
    }
}

/// A and B from the gamma-function route, `α = -i x`, `β = ∓ i β̃`.
pub fn bogoliubov(
    alpha_im: f64,
    beta_tilde: f64,
    branch: BetaBranch,
) -> Result<BogoliubovCoefficients> {
    let alpha = Complex64::new(0.0, -alpha_im);
    let beta = match branch {
        BetaBranch::PlusI => Complex64::new(0.0, beta_tilde),
        BetaBranch::MinusI => Complex64::new(0.0, -beta_tilde),
    };
    let one_plus_2beta = 2.0 * beta + 1.0;
    let lg_top = log_gamma(one_plus_2beta).map_err(|_| Error::GammaPole)?;
    let lg_a = log_gamma(beta - alpha + 0.5).map_err(|_| Error::GammaPole)?;
    let lg_b = log_gamma(beta + alpha + 0.5).map_err(|_| Error::GammaPole)?;
    let i_pi = Complex64::new(0.0, PI);
    let log_a = lg_top + i_pi * alpha - lg_a;
    let log_b = lg_top + i_pi * (alpha - beta - 0.5) - lg_b;
    Ok(BogoliubovCoefficients {
        a: log_a.exp(),
        b: log_b.exp(),
        log_abs_a: log_a.re,
        log_abs_b: log_b.re,
    })
}

/// `log cosh y = |y| + log(1 + e^{-2|y|}) - log 2`, overflow-free.
pub fn log_cosh(y: f64) -> f64 {
    y.abs() + (-2.0 * y.abs()).exp().ln_1p() - LN_2
}

/// `log P` of the closed form, directly from (β̃, x). Clamped to 0 from
/// above: the exact value is never positive, but for x ≫ β̃ the three-term
/// cancellation can leave a stray positive ulp.
pub fn log_probability_parts(beta_tilde: f64, x: f64) -> f64 {
    (log_cosh(PI * (beta_tilde + x)) - log_cosh(PI * (beta_tilde - x)) - 2.0 * PI * beta_tilde)
        .min(0.0)
}

/// Closed-form pair-creation probability for one scattering input.
///
/// Exactly 1 on the threshold β̃ = 0; strictly below 1 above it.
pub fn pair_probability(input: &ScatterInput) -> Result<f64> {
    let bt = beta_tilde(&input.config, &input.ang, input.ze2)?;
    Ok(log_probability_parts(bt, input.alpha_im()).exp())
}

/// Pair density `N = P/(1-P)`, evaluated as `1/expm1(-log P)` so the
/// near-threshold regime keeps full precision; diverges on the threshold.
pub fn pair_density(input: &ScatterInput) -> Result<f64> {
    let bt = beta_tilde(&input.config, &input.ang, input.ze2)?;
    density_from_log(log_probability_parts(bt, input.alpha_im()))
}

fn density_from_log(log_p: f64) -> Result<f64> {
    if log_p == 0.0 {
        return Err(Error::DivergentDensity(1.0));
    }
    Ok(1.0 / (-log_p).exp_m1())
}

/// All observables at once.
pub fn scatter(input: &ScatterInput) -> Result<ScatterResult> {
    let bt = beta_tilde(&input.config, &input.ang, input.ze2)?;
    let x = input.alpha_im();
    let log_p = log_probability_parts(bt, x);
    Ok(ScatterResult {
        vartheta: vartheta(&input.config),
        beta_tilde: bt,
        alpha_im: x,
        probability: log_p.exp(),
        density: density_from_log(log_p)?,
    })
}

/// The in-mode `Φ_in⁺(ζ) = M_{α,β}(ζ)` on the consistent branch
/// `β = -i β̃`.
pub fn whittaker_mode(input: &ScatterInput, zeta: Complex64) -> Result<Complex64> {
    let bt = beta_tilde(&input.config, &input.ang, input.ze2)?;
    let alpha = Complex64::new(0.0, -input.alpha_im());
    let beta = Complex64::new(0.0, -bt);
    whittaker_m(alpha, beta, zeta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Parity;
    use proptest::prelude::*;

    fn cfg(d: usize, mu: f64) -> DunklConfig {
        DunklConfig::uniform(d, mu, Parity::Plus).unwrap()
    }

    #[test]
    fn vartheta_values() {
        assert_eq!(vartheta(&cfg(3, 0.0)), -1.0);
        assert!((vartheta(&cfg(3, 0.4)) + 2.2).abs() < 1e-14);
        assert!((vartheta(&cfg(6, -0.4)) + 0.1).abs() < 1e-12);
    }

    #[test]
    fn beta_tilde_thresholds() {
        // d=3, μ=0.4 each, ℓ=(1,1): real iff Ze² ≥ 5.7
        let c = cfg(3, 0.4);
        let a = AngularState::uniform(3, 2);
        assert!(matches!(
            beta_tilde(&c, &a, 5.69),
            Err(Error::SubcriticalCharge(_))
        ));
        let r = creation_radicand(&c, &a, 5.7);
        assert!(r.abs() < 1e-9, "boundary radicand = {r}");
        assert!(beta_tilde(&c, &a, 6.0).unwrap() > 0.0);

        // d=4, μ=-0.4 each, ℓ=(1,1,1): threshold Ze² = 5.4
        let c = cfg(4, -0.4);
        let a = AngularState::uniform(4, 2);
        let r = creation_radicand(&c, &a, 5.4);
        assert!(r.abs() < 1e-9, "radicand at the 5.4 threshold: {r}");
    }

    #[test]
    fn creation_condition_cases() {
        let c = cfg(3, 0.0);
        let a = AngularState::uniform(3, 2);
        assert!(!creation_condition(&c, &a, 0.0).unwrap());
        assert!(creation_condition(&c, &a, 4.5).unwrap(), "boundary is true");
        assert!(!creation_condition(&c, &a, 4.5 - 1e-9).unwrap());
    }

    #[test]
    fn critical_charges_worked() {
        let z = critical_charge(&cfg(3, 0.4), &AngularState::uniform(3, 2)).unwrap();
        assert!((z.general / 137.0 - 5.7).abs() < 1e-12);
        assert!(z.reduced_mu_zero.is_none());

        let z = critical_charge(&cfg(4, -0.4), &AngularState::uniform(4, 2)).unwrap();
        assert!((z.general / 137.0 - 5.4).abs() < 1e-12);

        let z = critical_charge(&cfg(3, 0.0), &AngularState::uniform(3, 2)).unwrap();
        assert_eq!(z.reduced_mu_zero, Some(1.5 * 137.0));
    }

    #[test]
    fn critical_charge_monotonicity() {
        // increases with each ℓ, with d, and with μ on the survey grid
        for d in 3..=6usize {
            for twol in [2u32, 4, 6] {
                for mu in [-0.4, 0.0, 0.4] {
                    let base = critical_charge_unchecked(
                        &cfg(d, mu),
                        &AngularState::uniform(d, twol),
                    )
                    .general;
                    let bigger_l = critical_charge_unchecked(
                        &cfg(d, mu),
                        &AngularState::uniform(d, twol + 2),
                    )
                    .general;
                    assert!(bigger_l > base, "ℓ growth at d={d} μ={mu}");
                    let bigger_d = critical_charge_unchecked(
                        &cfg(d + 1, mu),
                        &AngularState::uniform(d + 1, twol),
                    )
                    .general;
                    assert!(bigger_d > base, "d growth at 2ℓ={twol} μ={mu}");
                    let bigger_mu = critical_charge_unchecked(
                        &cfg(d, mu + 0.2),
                        &AngularState::uniform(d, twol),
                    )
                    .general;
                    assert!(bigger_mu > base, "μ growth at d={d} 2ℓ={twol}");
                }
            }
        }
    }

    #[test]
    fn probability_worked_value() {
        // β̃=1, x=2: P = cosh(3π)/cosh(π) e^{-2π}
        let p = log_probability_parts(1.0, 2.0).exp();
        assert!((p - 0.9981360446106482).abs() < 1e-13, "P = {p}");
        let n = 1.0 / (-log_probability_parts(1.0, 2.0)).exp_m1();
        assert!((n - 535.4935264613634).abs() < 1e-9 * 535.0, "N = {n}");
        // the quoted density expression evaluated literally at this scale
        let quoted = (3.0 * PI).cosh()
            / ((2.0 * PI).exp() * PI.cosh() - (3.0 * PI).cosh());
        assert!((n - quoted).abs() < 1e-9 * quoted, "N = {n} vs quoted {quoted}");
    }

    #[test]
    fn probability_asymptotics() {
        // large β̃ at fixed x: log P → 2π(x - β̃)
        let lp = log_probability_parts(20.0, 1.0);
        assert!(
            (lp - 2.0 * PI * (1.0 - 20.0)).abs() < 1e-8,
            "log P = {lp}"
        );
    }

    #[test]
    fn log_space_stays_finite() {
        for &(bt, x) in &[(50.0, 50.0), (50.0, 0.1), (0.1, 50.0)] {
            let lp = log_probability_parts(bt, x);
            assert!(lp.is_finite());
            let p = lp.exp();
            assert!(p.is_finite() && (0.0..=1.0).contains(&p), "(β̃={bt}, x={x})");
        }
        // β̃ = x deep in the overflow regime: P = 1/2 exactly
        let p = log_probability_parts(50.0, 50.0).exp();
        assert!((p - 0.5).abs() < 1e-12, "deep symmetric point: {p}");
    }

    #[test]
    fn threshold_probability_is_one_without_nan() {
        let p = log_probability_parts(0.0, 3.0).exp();
        assert_eq!(p, 1.0);
    }

    #[test]
    fn half_probability_gives_unit_density() {
        // β̃ = x ⇒ P = (1 + e^{-4πβ̃})/2 → 1/2, N → 1
        let n = 1.0 / (-log_probability_parts(1.7, 1.7)).exp_m1();
        assert!((n - 1.0).abs() < 1e-8, "N = {n}");
        let n = 1.0 / (-log_probability_parts(50.0, 50.0)).exp_m1();
        assert!((n - 1.0).abs() < 1e-12, "N = {n}");
        // and through the full input path
        let input = ScatterInput::new(
            cfg(3, 0.4),
            AngularState::uniform(3, 2),
            1.0,
            6.5,
            2.0,
        )
        .unwrap();
        let r = scatter(&input).unwrap();
        // P = N/(1+N), the well-conditioned direction near P → 1
        assert!((r.probability - r.density / (1.0 + r.density)).abs() <= 1e-12);
    }

    #[test]
    fn density_error_paths() {
        // exactly at threshold (4.5 and 20.25 are exact in binary): P = 1,
        // density divergent
        let c0 = cfg(3, 0.0);
        let a = AngularState::uniform(3, 2);
        let input = ScatterInput::new(c0, a.clone(), 1.0, 4.5, 2.0).unwrap();
        match pair_density(&input) {
            Err(Error::DivergentDensity(_)) => {}
            other => panic!("expected divergent density, got {other:?}"),
        }
        // below threshold: subcritical
        let c = cfg(3, 0.4);
        let input = ScatterInput::new(c.clone(), a.clone(), 1.0, 5.0, 2.0).unwrap();
        assert!(matches!(
            pair_probability(&input),
            Err(Error::SubcriticalCharge(_))
        ));
        // |E| ≤ m rejected at construction
        assert!(matches!(
            ScatterInput::new(c, a, 1.0, 6.0, 0.9),
            Err(Error::NonPropagatingEnergy(_, _))
        ));
    }

    #[test]
    fn bogoliubov_matches_closed_form() {
        for i in 1..=10 {
            for j in 1..=10 {
                let bt = 0.1 + 4.9 * (i - 1) as f64 / 9.0;
                let x = 0.1 + 4.9 * (j - 1) as f64 / 9.0;
                let coeffs = bogoliubov(x, bt, BetaBranch::MinusI).unwrap();
                let closed = log_probability_parts(bt, x).exp();
                let via_gamma = coeffs.probability();
                assert!(
                    (via_gamma - closed).abs() <= 1e-9 * closed.max(1e-30),
                    "β̃={bt} x={x}: {via_gamma} vs {closed}"
                );
                assert!(coeffs.normalization_sign() > 0.0, "|A| must exceed |B|");
            }
        }
    }

    #[test]
    fn plus_branch_gives_reciprocal() {
        let (bt, x) = (1.0, 2.0);
        let plus = bogoliubov(x, bt, BetaBranch::PlusI).unwrap();
        let closed = log_probability_parts(bt, x).exp();
        assert!(
            (plus.probability() - 1.0 / closed).abs() < 1e-9 / closed,
            "+iβ̃ branch: {} vs 1/P = {}",
            plus.probability(),
            1.0 / closed
        );
        assert!(plus.normalization_sign() < 0.0);
    }

    #[test]
    fn zero_coupling_magnitude_relation() {
        // x = 0: |A| = |B| e^{πβ̃}
        for bt in [0.3, 1.0, 2.5] {
            let coeffs = bogoliubov(0.0, bt, BetaBranch::MinusI).unwrap();
            let ratio = coeffs.log_abs_a - coeffs.log_abs_b;
            assert!(
                (ratio - PI * bt).abs() < 1e-12,
                "log|A/B| = {ratio} vs πβ̃ = {}",
                PI * bt
            );
        }
    }

    #[test]
    fn near_threshold_probability_continuous() {
        // β̃ → 0⁺: |B/A|² → 1 without NaN
        let p = bogoliubov(1.5, 1e-8, BetaBranch::MinusI)
            .unwrap()
            .probability();
        assert!(p.is_finite() && (p - 1.0).abs() < 1e-6, "P = {p}");
    }

    #[test]
    fn whittaker_mode_finite_on_ray() {
        let input = ScatterInput::new(
            cfg(3, 0.4),
            AngularState::uniform(3, 2),
            1.0,
            6.5,
            2.0,
        )
        .unwrap();
        let kappa = input.kappa();
        for k in 1..=10 {
            let r = k as f64;
            let zeta = Complex64::new(0.0, -2.0 * kappa * r);
            let v = whittaker_mode(&input, zeta).unwrap();
            assert!(v.norm().is_finite(), "mode at r = {r}");
        }
    }

    proptest! {
        #[test]
        fn density_probability_identity(
            bt in 0.1f64..5.0,
            x in 0.1f64..5.0,
        ) {
            let log_p = log_probability_parts(bt, x);
            prop_assume!(log_p < 0.0);
            let n = 1.0 / (-log_p).exp_m1();
            // P/(1-P) with 1-P kept free of cancellation
            let p = log_p.exp();
            let one_minus_p = -log_p.exp_m1();
            let identity = p / one_minus_p;
            prop_assert!((n - identity).abs() <= 1e-12 * n.abs().max(1.0),
                "N = {n} vs P/(1-P) = {identity} at β̃={bt}, x={x}");
        }

        #[test]
        fn probability_range(
            bt in 1e-3f64..30.0,
            x in 0.0f64..30.0,
        ) {
            let p = log_probability_parts(bt, x).exp();
            prop_assert!((0.0..=1.0).contains(&p));
            // away from the underflow tail the bound is strict
            if x < bt + 2.0 {
                prop_assert!(p < 1.0);
            }
        }
    }
}
