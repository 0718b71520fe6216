use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    /// A magnetic quantum number is out of range or has the wrong parity
    /// for its spin.
    #[error("invalid magnetic number 2m={twice_m} for spin 2j={twice_j}")]
    InvalidMagnetic { twice_j: u32, twice_m: i32 },

    /// Operands have incompatible shapes.
    #[error("dimension mismatch: {context} (got {got}, expected {expected})")]
    DimensionMismatch {
        context: &'static str,
        got: usize,
        expected: usize,
    },

    /// An operation required a Hermitian matrix but the input was not
    /// Hermitian within tolerance.
    #[error("matrix not Hermitian (residual {residual:.3e})")]
    NotHermitian { residual: f64 },

    /// A quantity that must be real came out with a significant imaginary
    /// part.
    #[error("imaginary residual {residual:.3e} exceeds tolerance")]
    ImaginaryResidual { residual: f64 },

    /// Qubit count outside the supported range.
    #[error("qubit count {n} outside supported range {min}..={max}")]
    QubitCountOutOfRange { n: usize, min: usize, max: usize },

    /// Cloning requires at least as many output copies as input copies.
    #[error("cannot clone {m} copies into {n} < {m}")]
    CloneShrinks { m: usize, n: usize },

    /// Block weights that do not describe a trace-preserving positive
    /// combination.
    #[error("infeasible block weights: {reason}")]
    InfeasibleWeights { reason: &'static str },
}

pub type Result<T> = std::result::Result<T, Error>;
