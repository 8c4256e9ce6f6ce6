//! Independent numerical verification.
//!
//! Finite-difference eigensolver for the separated radial equations,
//! adaptive Gauss-Legendre quadrature for normalization integrals, and
//! compensated-summation reference series. Nothing in here reuses the
//! closed-form solution path it is meant to check.

mod eigen;
mod quadrature;
mod series;

pub use eigen::{
    count_nodes, eigensolve, eigensolve_richardson, linear_eigenvector, symmetrize,
    CoulombEnergyProblem, RadialEigenproblem, RadialGrid, RadialProblem, SymmetrizedProblem,
};
pub use quadrature::{quadrature, Quadrature};
pub use series::{reference_series, SeriesKind};
