use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("parity coupling violated: {0}")]
    ParityCoupling(String),

    #[error("Dunkl parameter out of range: mu[{index}] = {value} must exceed -1/2")]
    MuOutOfRange { index: usize, value: f64 },

    #[error("separation-constant index {k} outside 1..={max}")]
    IndexOutOfRange { k: usize, max: usize },

    #[error("log-gamma pole at non-positive integer {0}")]
    PoleAtNonPositiveInteger(f64),

    #[error("hypergeometric parameter pole: b = {0} is a non-positive integer")]
    ParameterPole(f64),

    #[error("series did not converge: {0}")]
    NonConvergence(String),

    #[error("argument on the negative real axis (principal branch cut)")]
    BranchCutInput,

    #[error("Dunkl derivative requires x != 0; the origin needs the limit form")]
    EvaluationAtOrigin,

    #[error("Jacobi polynomial degree would be negative ({0})")]
    NegativeDegree(f64),

    #[error("imaginary oscillator energy: radicand {0} is negative")]
    ImaginaryEnergy(f64),

    #[error("profile grid too coarse: quadrature self-estimate {0:.3e} exceeds 1e-6")]
    GridTooCoarse(f64),

    #[error("supercritical charge: bound-state radicand {0} is negative")]
    SupercriticalCharge(f64),

    #[error("degenerate denominator in the Coulomb energy formula")]
    DegenerateDenominator,

    #[error("subcritical charge: pair-creation radicand {0} is negative")]
    SubcriticalCharge(f64),

    #[error("energy |E| = {0} does not exceed the rest mass m = {1}")]
    NonPropagatingEnergy(f64, f64),

    #[error("divergent pair density: probability reached {0}")]
    DivergentDensity(f64),

    #[error("gamma pole in Bogoliubov coefficients")]
    GammaPole,

    #[error("potential is not confining: {0}")]
    NonConfining(String),

    #[error("bisection bracket failure: {0}")]
    BisectionBracketFailure(String),

    #[error("adaptive quadrature exceeded the maximum recursion depth")]
    MaxDepthExceeded,

    #[error("unknown figure id: {0} (expected F1..F8)")]
    UnknownFigure(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Classifies the error for process exit codes: configuration errors
    /// exit with 1, numerical failures with 2.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::DimensionMismatch(_)
                | Error::ParityCoupling(_)
                | Error::MuOutOfRange { .. }
                | Error::IndexOutOfRange { .. }
                | Error::InvalidParameter(_)
                | Error::UnknownFigure(_)
        )
    }
}
