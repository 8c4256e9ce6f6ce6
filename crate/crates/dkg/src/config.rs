//! Dunkl configuration, angular quantum numbers and separation constants.
//!
//! A configuration is the dimension `d`, one Dunkl parameter `mu_j` and one
//! reflection parity `s_j = ±1` per Cartesian axis. Separation of the
//! d-dimensional Dunkl Laplacian in hyperspherical coordinates attaches one
//! angular quantum number `ell_j` to each of the `d-1` angles; the parities
//! decide whether each `ell_j` runs over integers or half-integers.
//!
//! Half-integers are stored doubled (`two_ell = 2*ell`) so every constraint
//! check and every sum over quantum numbers is exact integer arithmetic.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Eigenvalue of a reflection operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Parity {
    Plus,
    Minus,
}

impl Parity {
    pub fn sign(self) -> f64 {
        match self {
            Parity::Plus => 1.0,
            Parity::Minus => -1.0,
        }
    }

    pub fn from_sign(sign: i32) -> Option<Self> {
        match sign {
            1 => Some(Parity::Plus),
            -1 => Some(Parity::Minus),
            _ => None,
        }
    }

    /// Indicator `e = (1 - s)/2`, i.e. 1 for odd parity and 0 for even.
    pub fn indicator(self) -> u8 {
        match self {
            Parity::Plus => 0,
            Parity::Minus => 1,
        }
    }
}

impl std::fmt::Display for Parity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Parity::Plus => write!(f, "+"),
            Parity::Minus => write!(f, "-"),
        }
    }
}

/// Dimension, Dunkl parameters and reflection parities of one problem.
///
/// Invariants enforced on construction: `mu` and `s` have length `d`,
/// `d >= 2`, and every `mu_j > -1/2` (the Dunkl operator is well defined
/// only above that bound).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DunklConfig {
    d: usize,
    mu: Vec<f64>,
    s: Vec<Parity>,
}

impl DunklConfig {
    pub fn new(d: usize, mu: Vec<f64>, s: Vec<Parity>) -> Result<Self> {
        if d < 2 {
            return Err(Error::InvalidParameter(format!(
                "dimension d = {d} must be at least 2"
            )));
        }
        if mu.len() != d {
            return Err(Error::DimensionMismatch(format!(
                "mu has {} entries, expected d = {d}",
                mu.len()
            )));
        }
        if s.len() != d {
            return Err(Error::DimensionMismatch(format!(
                "s has {} entries, expected d = {d}",
                s.len()
            )));
        }
        for (j, &m) in mu.iter().enumerate() {
            if !(m > -0.5) {
                return Err(Error::MuOutOfRange { index: j, value: m });
            }
        }
        Ok(Self { d, mu, s })
    }

    /// All axes share one `mu` and one parity.
    pub fn uniform(d: usize, mu: f64, s: Parity) -> Result<Self> {
        Self::new(d, vec![mu; d], vec![s; d])
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn mu(&self) -> &[f64] {
        &self.mu
    }

    pub fn s(&self) -> &[Parity] {
        &self.s
    }

    /// `Σ_j mu_j`
    pub fn mu_sum(&self) -> f64 {
        self.mu.iter().sum()
    }

    /// `Σ_j mu_j s_j`
    pub fn mu_parity_sum(&self) -> f64 {
        self.mu
            .iter()
            .zip(&self.s)
            .map(|(m, s)| m * s.sign())
            .sum()
    }

    /// Coefficient `d - 1 + 2 Σ mu` of the radial first-derivative term.
    pub fn drift_coefficient(&self) -> f64 {
        (self.d as f64) - 1.0 + 2.0 * self.mu_sum()
    }

    /// Copy with one parity flipped; used for parity-shift identities.
    pub fn with_parity_flipped(&self, axis: usize) -> Self {
        let mut s = self.s.clone();
        s[axis] = match s[axis] {
            Parity::Plus => Parity::Minus,
            Parity::Minus => Parity::Plus,
        };
        Self {
            d: self.d,
            mu: self.mu.clone(),
            s,
        }
    }
}

/// The `d-1` angular quantum numbers, stored doubled so half-integers are
/// exact: `two_ell[j] = 2*ell_{j+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AngularState {
    two_ell: Vec<u32>,
}

impl AngularState {
    pub fn new(two_ell: Vec<u32>) -> Self {
        Self { two_ell }
    }

    /// All `d-1` angular numbers equal; `two_ell` is the doubled value.
    pub fn uniform(d: usize, two_ell: u32) -> Self {
        Self {
            two_ell: vec![two_ell; d.saturating_sub(1)],
        }
    }

    /// Doubles floating-point quantum numbers, rejecting values that are
    /// not integers or half-integers.
    pub fn from_ell(ell: &[f64]) -> Result<Self> {
        let mut two_ell = Vec::with_capacity(ell.len());
        for &l in ell {
            let doubled = 2.0 * l;
            let rounded = doubled.round();
            if (doubled - rounded).abs() > 1e-9 || rounded < 0.0 {
                return Err(Error::InvalidParameter(format!(
                    "ell = {l} is not a non-negative integer or half-integer"
                )));
            }
            two_ell.push(rounded as u32);
        }
        Ok(Self { two_ell })
    }

    pub fn two_ell(&self) -> &[u32] {
        &self.two_ell
    }

    /// `2L = Σ_j 2*ell_j`, exact.
    pub fn total_two_ell(&self) -> u64 {
        self.two_ell.iter().map(|&t| t as u64).sum()
    }

    /// `L = Σ_j ell_j`.
    pub fn ell_sum(&self) -> f64 {
        self.total_two_ell() as f64 / 2.0
    }
}

/// Indicator vector `e_j = (1 - s_j)/2 ∈ {0, 1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityIndicator {
    pub e: Vec<u8>,
}

impl From<&DunklConfig> for ParityIndicator {
    fn from(config: &DunklConfig) -> Self {
        Self {
            e: config.s().iter().map(|s| s.indicator()).collect(),
        }
    }
}

/// Checks the angular state against the configuration.
///
/// Coupling rules tied to the reflection eigenvalues:
/// - `ell_1` is a half-integer iff `s_1 s_2 = -1`, an integer otherwise,
///   and `ell_1 = 0` exists only in the `s_1 = s_2 = +1` sector;
/// - for `j >= 2`, `ell_j` is a half-integer iff `s_{j+1} = -1`.
pub fn validate(config: &DunklConfig, ang: &AngularState) -> Result<()> {
    let d = config.d();
    if ang.two_ell().len() != d - 1 {
        return Err(Error::DimensionMismatch(format!(
            "angular state has {} entries, expected d - 1 = {}",
            ang.two_ell().len(),
            d - 1
        )));
    }
    for (j, &m) in config.mu().iter().enumerate() {
        if !(m > -0.5) {
            return Err(Error::MuOutOfRange { index: j, value: m });
        }
    }

    let s = config.s();
    let t1 = ang.two_ell()[0];
    let odd_sector = s[0] != s[1];
    if odd_sector && t1 % 2 == 0 {
        return Err(Error::ParityCoupling(format!(
            "s_1 s_2 = -1 requires half-integer ell_1, got 2*ell_1 = {t1}"
        )));
    }
    if !odd_sector && t1 % 2 == 1 {
        return Err(Error::ParityCoupling(format!(
            "s_1 s_2 = +1 requires integer ell_1, got 2*ell_1 = {t1}"
        )));
    }
    if t1 == 0 && !(s[0] == Parity::Plus && s[1] == Parity::Plus) {
        return Err(Error::ParityCoupling(
            "ell_1 = 0 exists only for s_1 = s_2 = +1".into(),
        ));
    }

    for j in 2..d {
        let t = ang.two_ell()[j - 1];
        let odd = s[j] == Parity::Minus;
        if odd && t % 2 == 0 {
            return Err(Error::ParityCoupling(format!(
                "s_{} = -1 requires half-integer ell_{}, got 2*ell = {t}",
                j + 1,
                j
            )));
        }
        if !odd && t % 2 == 1 {
            return Err(Error::ParityCoupling(format!(
                "s_{} = +1 requires integer ell_{}, got 2*ell = {t}",
                j + 1,
                j
            )));
        }
    }
    Ok(())
}

/// Separation constant of the radial equation,
/// `ϖ² = 4L(L + Σmu + (d-2)/2)` with `L = Σ ell_j`.
///
/// Evaluated as `t(t + 2Σmu + d - 2)` with `t = 2L` kept integer, so the
/// quantum-number part is exact.
pub fn varpi_squared(config: &DunklConfig, ang: &AngularState) -> Result<f64> {
    validate(config, ang)?;
    Ok(varpi_squared_unchecked(config, ang))
}

/// `ϖ²` without the coupling validation; the separation constant is an
/// algebraic function of `(L, Σmu, d)` and spectra sweeps evaluate it for
/// parity assignments outside the coupled sectors.
pub fn varpi_squared_unchecked(config: &DunklConfig, ang: &AngularState) -> f64 {
    let t = ang.total_two_ell() as f64;
    t * (t + 2.0 * config.mu_sum() + config.d() as f64 - 2.0)
}

/// Separation constant of the k-th chained angular equation,
/// `λ_k² = 4(ell_1+..+ell_k)(ell_1+..+ell_k + mu_1+..+mu_{k+1} + (k-1)/2)`.
///
/// Valid for `1 <= k <= d-1`; the last index reproduces `ϖ²`.
pub fn lambda_squared(k: usize, config: &DunklConfig, ang: &AngularState) -> Result<f64> {
    validate(config, ang)?;
    let d = config.d();
    if k < 1 || k > d - 1 {
        return Err(Error::IndexOutOfRange { k, max: d - 1 });
    }
    let t: u64 = ang.two_ell()[..k].iter().map(|&x| x as u64).sum();
    let t = t as f64;
    let mu_partial: f64 = config.mu()[..=k].iter().sum();
    Ok(t * (t + 2.0 * mu_partial + (k as f64 - 1.0)))
}
