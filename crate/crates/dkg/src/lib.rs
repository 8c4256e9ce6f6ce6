//! Spectra, wavefunctions and pair-creation observables of the
//! d-dimensional Dunkl-Klein-Gordon equation.
//!
//! The Dunkl derivative `D = ∂ + (μ/x)(1 - R)` replaces each partial
//! derivative of the Klein-Gordon equation; separation in hyperspherical
//! coordinates then yields one radial equation per potential and `d - 1`
//! chained angular equations whose solutions carry reflection parities.
//! This crate provides:
//!
//! - [`config`]: configurations, quantum-number coupling rules and the
//!   separation constants `λ_k²`, `ϖ²`;
//! - [`specfun`]: complex log-gamma, Kummer M, Jacobi polynomials and
//!   Whittaker M kernels;
//! - [`dunkl`]: the one-dimensional Dunkl operator for property tests;
//! - [`angular`]: the angular eigenfunctions `Θ_j` and their parities;
//! - [`oscillator`]: the Dunkl-Klein-Gordon oscillator spectrum,
//!   non-relativistic limit and radial densities;
//! - [`coulomb`]: Coulomb bound states;
//! - [`scattering`]: Whittaker scattering modes, Bogoliubov coefficients,
//!   pair-creation probability/density and critical charges;
//! - [`oracle`]: an independent finite-difference eigensolver, adaptive
//!   quadrature and reference series used for cross-validation;
//! - [`figures`]: datasets behind the survey plots;
//! - [`verify`]: the oracle-vs-closed-form comparison suite.
//!
//! Natural units `ħ = c = 1` throughout; charge enters as `Ze²` with
//! `e² = 1/137` where a nuclear charge number is reported.

pub mod angular;
pub mod config;
pub mod coulomb;
pub mod dunkl;
mod error;
pub mod figures;
pub mod oracle;
pub mod oscillator;
pub mod scattering;
pub mod specfun;
pub mod verify;

pub use config::{AngularState, DunklConfig, Parity, ParityIndicator};
pub use error::{Error, Result};

/// Fine-structure denominator used when charges are reported as a nucleus
/// charge number Z: e² = 1/137 exactly.
pub const INVERSE_FINE_STRUCTURE: f64 = 137.0;
