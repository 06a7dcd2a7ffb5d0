use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LgfError {
    #[error("invalid displacement {coords:?} for {lattice}: {reason}")]
    InvalidDisplacement {
        lattice: &'static str,
        coords: Vec<i64>,
        reason: String,
    },

    #[error("omega = {omega} is outside the domain of {what}")]
    Domain { what: &'static str, omega: f64 },

    #[error("power series does not converge at |omega| = {modulus} <= 1")]
    ConvergenceDomain { modulus: f64 },

    #[error("no built-in singular model for {lattice} at displacement {coords:?}")]
    UnsupportedModel { lattice: &'static str, coords: Vec<i64> },

    #[error("phase-weighted model is not real: imaginary weight {imaginary:e} on {kind}")]
    ComplexWeight { kind: &'static str, imaginary: f64 },

    #[error("{what} is not supported for the {lattice} lattice")]
    UnsupportedLattice { lattice: &'static str, what: &'static str },

    #[error("least-squares fit is degenerate over n in [{lo}, {hi}]")]
    DegenerateFit { lo: usize, hi: usize },

    #[error("adaptive quadrature failed to reach tolerance {tolerance:e} (estimated error {estimate:e})")]
    QuadratureFailure { tolerance: f64, estimate: f64 },

    #[error("patch radius {radius} is too small for walks of length {n}")]
    PatchTooSmall { radius: usize, n: usize },

    #[error("table of order {have} cannot serve order {need}")]
    InsufficientOrder { have: usize, need: usize },

    #[error("unknown lattice family '{0}'")]
    UnknownLattice(String),
}

pub type Result<T> = std::result::Result<T, LgfError>;
