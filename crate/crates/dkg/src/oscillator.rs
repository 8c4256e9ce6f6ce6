//! The Dunkl-Klein-Gordon oscillator: closed-form spectrum,
//! non-relativistic limit and radial wavefunctions/densities.
//!
//! With `L = Σ ell_j`, `Σμ = Σ mu_j` and `Σμs = Σ mu_j s_j`, the quantized
//! energies are
//!
//! ```text
//! E = ± sqrt( 2mω [ 2(n + L) + Σμ - Σμs ] + m² )
//! ```
//!
//! and the radial solutions, in the dimensionless variable `ρ = mωr²`, read
//! `R(ρ) = C ρ^L e^{-ρ/2} M(-n, b; ρ)` with `b = 2L + d/2 + Σμ`.
//!
//! The spectrum is an algebraic function of the parity vector, and spectra
//! sweeps (including the survey figures) evaluate it for every parity
//! assignment at fixed `ell`; the angular coupling rules only restrict which
//! assignments carry eigenfunctions, and are enforced by
//! [`OscillatorSpec::validate`] where those are constructed.

use crate::config::{self, AngularState, DunklConfig};
use crate::error::{Error, Result};
use crate::oracle::{self, quadrature, RadialGrid, RadialProblem};
use crate::specfun::kummer_m_real;

/// Sign of the energy root.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Positive,
    Negative,
}

/// Physical parameters of one oscillator problem.
#[derive(Debug, Clone, PartialEq)]
pub struct OscillatorSpec {
    pub config: DunklConfig,
    pub ang: AngularState,
    pub m: f64,
    pub omega: f64,
}

impl OscillatorSpec {
    pub fn new(config: DunklConfig, ang: AngularState, m: f64, omega: f64) -> Result<Self> {
        if !(m > 0.0) {
            return Err(Error::InvalidParameter(format!("mass m = {m} must be positive")));
        }
        if !(omega > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "frequency omega = {omega} must be positive"
            )));
        }
        if ang.two_ell().len() != config.d() - 1 {
            return Err(Error::DimensionMismatch(format!(
                "angular state has {} entries, expected {}",
                ang.two_ell().len(),
                config.d() - 1
            )));
        }
        Ok(Self { config, ang, m, omega })
    }

    /// Full validation including the angular coupling rules.
    pub fn validate(&self) -> Result<()> {
        config::validate(&self.config, &self.ang)
    }

    /// `2(n + L) + Σμ - Σμs`, the combination the spectrum depends on.
    pub fn excitation(&self, n: u32) -> f64 {
        2.0 * n as f64
            + self.ang.total_two_ell() as f64
            + self.config.mu_sum()
            - self.config.mu_parity_sum()
    }

    /// Kummer parameter `b = 2L + d/2 + Σμ`.
    pub fn kummer_b(&self) -> f64 {
        self.ang.total_two_ell() as f64 + self.config.d() as f64 / 2.0 + self.config.mu_sum()
    }
}

/// Quantized energy `E_n` on the requested branch.
pub fn energy(spec: &OscillatorSpec, n: u32, branch: Branch) -> Result<f64> {
    let radicand = 2.0 * spec.m * spec.omega * spec.excitation(n) + spec.m * spec.m;
    if radicand < 0.0 {
        return Err(Error::ImaginaryEnergy(radicand));
    }
    let e = radicand.sqrt();
    Ok(match branch {
        Branch::Positive => e,
        Branch::Negative => -e,
    })
}

/// Non-relativistic energy `E_nr = ω [ 2(n + L) + Σμ - Σμs ]`
/// (rest mass excluded).
pub fn energy_nonrel(spec: &OscillatorSpec, n: u32) -> f64 {
    spec.omega * spec.excitation(n)
}

/// Unnormalized radial wavefunction `R(ρ) = ρ^L e^{-ρ/2} M(-n, b; ρ)`.
pub fn radial_wavefunction(spec: &OscillatorSpec, n: u32, rho: f64) -> Result<f64> {
    let big_l = spec.ang.ell_sum();
    let b = spec.kummer_b();
    let m = kummer_m_real(-(n as f64), b, rho)?;
    Ok(rho.powf(big_l) * (-rho / 2.0).exp() * m)
}

/// `|R|²` sampled on a grid, normalized so that
/// `∫ |R|² ρ^{(d-2)/2 + Σμ} dρ / (2 sqrt(mω)) = 1` over the grid support.
#[derive(Debug, Clone)]
pub struct RadialProfile {
    pub grid: Vec<f64>,
    pub values: Vec<f64>,
    pub norm_constant: f64,
}

/// Default profile grid: 2000 uniform points on (0, ρ_max] with
/// `ρ_max = 4(2n + b)`, covering the classically allowed region and the
/// decay tail.
pub fn default_grid(spec: &OscillatorSpec, n: u32) -> Vec<f64> {
    let rho_max = 4.0 * (2.0 * n as f64 + spec.kummer_b());
    let count = 2000;
    (1..=count)
        .map(|i| rho_max * i as f64 / count as f64)
        .collect()
}

pub fn density_profile(spec: &OscillatorSpec, n: u32, grid: &[f64]) -> Result<RadialProfile> {
    if grid.is_empty() || grid[0] <= 0.0 {
        return Err(Error::InvalidParameter(
            "profile grid must be strictly positive".into(),
        ));
    }
    let weight_power = (spec.config.d() as f64 - 2.0) / 2.0 + spec.config.mu_sum();
    let measure = 1.0 / (2.0 * (spec.m * spec.omega).sqrt());
    let density = |rho: f64| -> f64 {
        let v = radial_wavefunction(spec, n, rho).unwrap_or(f64::NAN);
        v * v * rho.powf(weight_power)
    };
    let (a, b) = (grid[0], *grid.last().unwrap());
    let integral = quadrature(&density, a, b)?;
    let norm_integral = integral.value * measure;
    if !(norm_integral > 0.0) {
        return Err(Error::InvalidParameter(
            "normalization integral vanished on the grid support".into(),
        ));
    }
    // the quadrature's own confidence in the normalization
    let quad_estimate = integral.error_estimate / integral.value.abs();
    if quad_estimate > 1e-6 {
        return Err(Error::GridTooCoarse(quad_estimate));
    }

    // and the grid's ability to represent what it claims: the trapezoid on
    // the caller's grid must reproduce the normalization to 1e-4
    let sampled: Vec<f64> = grid.iter().map(|&r| density(r)).collect();
    let mut trapezoid = 0.0;
    for i in 1..grid.len() {
        trapezoid += 0.5 * (sampled[i] + sampled[i - 1]) * (grid[i] - grid[i - 1]);
    }
    trapezoid *= measure;
    let self_estimate = ((trapezoid - norm_integral) / norm_integral).abs();
    if self_estimate > 1e-4 {
        return Err(Error::GridTooCoarse(self_estimate));
    }

    let norm_constant = (1.0 / norm_integral).sqrt();
    let values = grid
        .iter()
        .map(|&rho| {
            let v = radial_wavefunction(spec, n, rho).unwrap_or(f64::NAN) * norm_constant;
            v * v
        })
        .collect();
    Ok(RadialProfile {
        grid: grid.to_vec(),
        values,
        norm_constant,
    })
}

/// The radial equation as an oracle problem. The spectral parameter is
/// `E² - m²`, so `constant` carries only the parity-dependent frequency
/// shift `2mω(Σμs + d/2)`.
pub fn radial_problem(spec: &OscillatorSpec, grid: RadialGrid) -> RadialProblem {
    RadialProblem {
        c: spec.config.drift_coefficient(),
        inverse_square: config::varpi_squared_unchecked(&spec.config, &spec.ang),
        inverse_r: 0.0,
        quadratic: -(spec.m * spec.omega).powi(2),
        constant: 2.0
            * spec.m
            * spec.omega
            * (spec.config.mu_parity_sum() + spec.config.d() as f64 / 2.0),
        grid,
    }
}

/// Interior sign changes of the radial wavefunction sampled on `grid`.
pub fn node_count(spec: &OscillatorSpec, n: u32, grid: &[f64]) -> Result<usize> {
    let values: Result<Vec<f64>> = grid
        .iter()
        .map(|&rho| radial_wavefunction(spec, n, rho))
        .collect();
    Ok(oracle::count_nodes(&values?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Parity;

    fn spec(d: usize, mu: f64, s: i32, two_ell: u32) -> OscillatorSpec {
        let config = DunklConfig::uniform(d, mu, Parity::from_sign(s).unwrap()).unwrap();
        let ang = AngularState::uniform(d, two_ell);
        OscillatorSpec::new(config, ang, 1.0, 1.0).unwrap()
    }

    #[test]
    fn ground_state_is_rest_mass() {
        let s = spec(3, 0.0, 1, 0);
        assert_eq!(energy(&s, 0, Branch::Positive).unwrap(), 1.0);
        assert_eq!(energy(&s, 0, Branch::Negative).unwrap(), -1.0);
    }

    #[test]
    fn worked_energies() {
        let s = spec(3, 0.4, 1, 2);
        assert!((energy(&s, 0, Branch::Positive).unwrap() - 3.0).abs() < 1e-14);

        let s = spec(3, 0.4, -1, 2);
        let e = energy(&s, 0, Branch::Positive).unwrap();
        assert!((e - 13.8f64.sqrt()).abs() < 1e-14, "got {e}");
    }

    #[test]
    fn nonrel_values() {
        // all s = +1: μ-terms cancel, E_nr = 2ω(n + L)
        let s = spec(4, 0.3, 1, 2);
        assert!((energy_nonrel(&s, 1) - 2.0 * (1.0 + 3.0)).abs() < 1e-14);

        let s = spec(3, 0.0, 1, 0);
        assert_eq!(energy_nonrel(&s, 1), 2.0);

        let s = spec(3, 0.4, -1, 2);
        assert!((energy_nonrel(&s, 0) - 6.4).abs() < 1e-14);
    }

    #[test]
    fn parity_shift_identity() {
        // E²(s_j = -1) - E²(s_j = +1) = 4 m ω μ_j, one axis at a time
        let base = DunklConfig::new(
            4,
            vec![0.4, -0.3, 0.1, 0.25],
            vec![Parity::Plus; 4],
        )
        .unwrap();
        let ang = AngularState::uniform(4, 2);
        for axis in 0..4 {
            let flipped = base.with_parity_flipped(axis);
            let e_plus = energy(
                &OscillatorSpec::new(base.clone(), ang.clone(), 1.0, 1.0).unwrap(),
                1,
                Branch::Positive,
            )
            .unwrap();
            let e_minus = energy(
                &OscillatorSpec::new(flipped, ang.clone(), 1.0, 1.0).unwrap(),
                1,
                Branch::Positive,
            )
            .unwrap();
            let shift = e_minus * e_minus - e_plus * e_plus;
            let expected = 4.0 * base.mu()[axis];
            assert!(
                (shift - expected).abs() <= 1e-12 * expected.abs().max(1.0),
                "axis {axis}: {shift} vs {expected}"
            );
        }
    }

    #[test]
    fn imaginary_energy_detected() {
        // strongly negative μ with n = L = 0 pushes the radicand below zero
        let config = DunklConfig::new(
            2,
            vec![-0.45, -0.45],
            vec![Parity::Minus, Parity::Minus],
        )
        .unwrap();
        let ang = AngularState::uniform(2, 2);
        let s = OscillatorSpec::new(config, ang, 0.1, 10.0).unwrap();
        // excitation = 2 + (-0.9) - (0.9) = ... compute: with s = -1,
        // Σμ - Σμs = -0.9 - 0.9 = -1.8; X = 2 - 1.8 = 0.2 > 0 — still fine,
        // so force it with n = 0, ℓ = 0 via a fresh state
        let s2 = OscillatorSpec::new(s.config.clone(), AngularState::uniform(2, 0), 0.1, 10.0)
            .unwrap();
        let x = s2.excitation(0); // -1.8
        assert!(x < 0.0);
        assert!(matches!(
            energy(&s2, 0, Branch::Positive),
            Err(Error::ImaginaryEnergy(_))
        ));
    }

    #[test]
    fn wavefunction_closed_forms() {
        // n = 0, L = 0: R = e^{-ρ/2}
        let s = spec(3, 0.2, 1, 0);
        for rho in [0.3, 1.0, 4.0] {
            let v = radial_wavefunction(&s, 0, rho).unwrap();
            assert!((v - (-rho / 2.0f64).exp()).abs() < 1e-14);
        }

        // n = 1: single node at ρ = b
        let s = spec(3, 0.1, 1, 2);
        let b = s.kummer_b();
        let just_below = radial_wavefunction(&s, 1, b - 1e-6).unwrap();
        let just_above = radial_wavefunction(&s, 1, b + 1e-6).unwrap();
        assert!(just_below * just_above < 0.0, "node strides ρ = b");

        // worked value: d=3, μ=0.4 each, ℓ=(1,1), n=2, ρ=1
        let s = spec(3, 0.4, 1, 2);
        assert!((s.kummer_b() - 6.7).abs() < 1e-14);
        let v = radial_wavefunction(&s, 2, 1.0).unwrap();
        let expected = (-0.5f64).exp() * 0.7208761387865865; // ρ² e^{-1/2} M(-2, 6.7, 1)
        assert!((v - expected).abs() < 1e-13, "got {v}");
    }

    #[test]
    fn node_counts_match_quantum_number() {
        let s = spec(3, 0.4, 1, 2);
        let grid = default_grid(&s, 5);
        for n in 2..=5 {
            assert_eq!(node_count(&s, n, &grid).unwrap(), n as usize);
        }
    }

    #[test]
    fn density_profile_normalizes() {
        let s = spec(3, 0.4, 1, 2);
        let grid = default_grid(&s, 2);
        let p = density_profile(&s, 2, &grid).unwrap();
        assert!(p.values.iter().all(|&v| v >= 0.0));
        // re-integrate the normalized density over the support
        let weight = |rho: f64| rho.powf((3.0 - 2.0) / 2.0 + 1.2);
        let f = |rho: f64| {
            let v = radial_wavefunction(&s, 2, rho).unwrap() * p.norm_constant;
            v * v * weight(rho) / 2.0
        };
        let q = quadrature(&f, grid[0], *grid.last().unwrap()).unwrap();
        assert!((q.value - 1.0).abs() < 1e-8, "norm integral {}", q.value);
    }

    #[test]
    fn ground_density_monotone() {
        let s = spec(3, 0.0, 1, 0);
        let grid = default_grid(&s, 0);
        let p = density_profile(&s, 0, &grid).unwrap();
        for w in p.values.windows(2) {
            assert!(w[1] <= w[0] + 1e-15);
        }
    }

    #[test]
    fn coarse_grid_rejected() {
        let s = spec(3, 0.4, 1, 2);
        let rho_max = 4.0 * (4.0 + s.kummer_b());
        let coarse: Vec<f64> = (1..=12).map(|i| rho_max * i as f64 / 12.0).collect();
        assert!(matches!(
            density_profile(&s, 2, &coarse),
            Err(Error::GridTooCoarse(_))
        ));
    }

    #[test]
    fn peak_intensity_decreases_with_n() {
        // |R|² with C = 1, the figure convention
        let s = spec(3, 0.4, 1, 2);
        let mut peaks = Vec::new();
        for n in 2..=5 {
            let peak = default_grid(&s, n)
                .into_iter()
                .map(|rho| radial_wavefunction(&s, n, rho).unwrap().powi(2))
                .fold(0.0f64, f64::max);
            peaks.push(peak);
        }
        for w in peaks.windows(2) {
            assert!(w[1] < w[0], "peaks {peaks:?} not decreasing");
        }
    }

    #[test]
    fn nonrel_consistency_scaling() {
        // |E - m - E_nr| shrinks by ~10 per decade of m
        let config = DunklConfig::uniform(3, 0.0, Parity::Plus).unwrap();
        let ang = AngularState::uniform(3, 0);
        let err = |m: f64| {
            let s = OscillatorSpec::new(config.clone(), ang.clone(), m, 1.0).unwrap();
            (energy(&s, 1, Branch::Positive).unwrap() - m - energy_nonrel(&s, 1)).abs()
        };
        let (e1, e2, e3) = (err(10.0), err(100.0), err(1000.0));
        for ratio in [e1 / e2, e2 / e3] {
            assert!((8.0..12.0).contains(&ratio), "ratio {ratio}");
        }
    }

    #[test]
    fn energy_monotone_in_n_and_d() {
        for d in 3..=5 {
            let s = spec(d, 0.4, 1, 2);
            let mut prev = 0.0;
            for n in 0..6 {
                let e = energy(&s, n, Branch::Positive).unwrap();
                assert!(e > prev);
                prev = e;
            }
        }
        for n in [0, 3] {
            let energies: Vec<f64> = (3..=6)
                .map(|d| energy(&spec(d, 0.4, 1, 2), n, Branch::Positive).unwrap())
                .collect();
            for w in energies.windows(2) {
                assert!(w[1] > w[0], "not increasing in d: {energies:?}");
            }
        }
    }

    #[test]
    fn radial_ode_residual() {
        // R(ρ(r)) satisfies the radial equation in r; 4th-order FD residual
        let s = spec(3, 0.4, 1, 2);
        let n = 2;
        let e = energy(&s, n, Branch::Positive).unwrap();
        let varpi2 = config::varpi_squared_unchecked(&s.config, &s.ang);
        let c = s.config.drift_coefficient();
        let shift = 2.0 * s.m * s.omega
            * (s.config.mu_parity_sum() + s.config.d() as f64 / 2.0);
        let f = |r: f64| radial_wavefunction(&s, n, s.m * s.omega * r * r).unwrap();
        let h = 1e-3;
        let mut worst = 0.0f64;
        for i in 0..200 {
            let rho = 0.1 + 9.9 * i as f64 / 199.0;
            let r = (rho / (s.m * s.omega)).sqrt();
            let d1 =
                (8.0 * (f(r + h) - f(r - h)) - (f(r + 2.0 * h) - f(r - 2.0 * h))) / (12.0 * h);
            let d2 = (-(f(r + 2.0 * h) + f(r - 2.0 * h)) + 16.0 * (f(r + h) + f(r - h))
                - 30.0 * f(r))
                / (12.0 * h * h);
            let residual = d2
                + c / r * d1
                + (shift - (s.m * s.omega).powi(2) * r * r + e * e - s.m * s.m
                    - varpi2 / (r * r))
                    * f(r);
            worst = worst.max(residual.abs());
        }
        assert!(worst < 1e-5, "ODE residual {worst}");
    }
}
