use thiserror::Error;

/// Errors produced by the algebra, module, operator, and spectral layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A scalar entering from outside carried a NaN or infinite component.
    #[error("non-finite component {value} in field `{field}`")]
    NonFinite { field: &'static str, value: f64 },

    /// Inversion of the exact zero scalar.
    #[error("division by zero")]
    ZeroDivision,

    /// Inversion of a zero divisor: one idempotent component vanishes.
    #[error("null-cone operand: an idempotent component is within {tol:.3e} of zero")]
    NullCone { tol: f64 },

    #[error("ket length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("matrix is not Hermitian: asymmetry {defect:.3e} exceeds allowed {allowed:.3e}")]
    NotHermitian { defect: f64, allowed: f64 },

    #[error("operator is not self-adjoint: defect {defect:.3e} exceeds allowed {allowed:.3e}")]
    NotSelfAdjoint { defect: f64, allowed: f64 },

    /// The Jacobi sweep budget ran out before the off-diagonal mass met the
    /// convergence target. `residual` is the remaining off-diagonal Frobenius
    /// norm relative to the matrix Frobenius norm.
    #[error("eigensolver did not converge after {sweeps} sweeps (residual {residual:.3e})")]
    NoConvergence { sweeps: usize, residual: f64 },

    /// A parsed document violated a schema rule (length fields, shape, ranges).
    #[error("invalid document: {0}")]
    InvalidDocument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
