use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Input document does not describe a system (bad syntax, bad shapes,
    /// non-Hermitian matrices, missing fields).
    #[error("malformed document: {field}: {message}")]
    Malformed { field: String, message: String },

    /// A value is structurally fine but violates a constraint.
    #[error("invalid {field}: {message}")]
    Validation { field: String, message: String },

    #[error("dimension mismatch in {context}: {details}")]
    DimensionMismatch { context: String, details: String },

    #[error("{context} is not Hermitian (max deviation {deviation:.3e})")]
    NotHermitian { context: String, deviation: f64 },

    #[error("generator {index} is not skew-Hermitian (max deviation {deviation:.3e})")]
    NotSkewHermitian { index: usize, deviation: f64 },

    #[error("no generators supplied")]
    EmptyGenerators,

    #[error("eigensolver failed to converge after {sweeps} sweeps")]
    EigenConvergence { sweeps: usize },

    /// A sufficient criterion and the Lie-algebraic verdict disagree. This
    /// flags a tolerance failure in the inputs, not a physics result.
    #[error("internal consistency check failed: {details}")]
    Inconsistent { details: String },
}

pub type Result<T> = std::result::Result<T, Error>;
