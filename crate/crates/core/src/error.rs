//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Errors raised when a value violates a domain invariant.
///
/// Constructors validate eagerly and reject invalid inputs instead of
/// silently clamping or renormalizing them.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A scalar parameter fell outside its admissible interval.
    #[error("{name} = {value} out of range [{min}, {max}]")]
    OutOfRange {
        name: &'static str,
        value: f64,
        min: f64,
        max: f64,
    },

    /// A probability was negative.
    #[error("{name} = {value} is a negative probability")]
    NegativeProbability { name: &'static str, value: f64 },

    /// Channel probabilities do not sum to one.
    #[error("channel probabilities sum to {sum}, expected 1 (renormalization refused)")]
    NotNormalized { sum: f64 },

    /// A matrix that must be Hermitian is not.
    #[error("matrix is not Hermitian: max |m[i][j] - conj(m[j][i])| = {asymmetry}")]
    NotHermitian { asymmetry: f64 },

    /// A density matrix does not have unit trace.
    #[error("matrix trace is {trace}, expected 1")]
    NotUnitTrace { trace: f64 },

    /// A density matrix has a significantly negative eigenvalue.
    #[error("matrix is not positive semidefinite: min eigenvalue = {min_eigenvalue}")]
    NotPositiveSemidefinite { min_eigenvalue: f64 },

    /// An operation that requires a pure state received only mixed states.
    #[error("trace fidelity requires at least one pure (rank-1) argument")]
    NotPure,

    /// Bell-state index outside 0..=3.
    #[error("Bell-state index {index} out of range 0..=3")]
    BellIndexOutOfRange { index: usize },

    /// Werner parameter below 1/3: the non-classicality threshold exceeds 1,
    /// so no channel can reach non-classical fidelity.
    #[error("werner alpha = {alpha} < 1/3: threshold (1+alpha)/(4 alpha) exceeds 1, infeasible")]
    InfeasibleWerner { alpha: f64 },
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
