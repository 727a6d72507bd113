//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, AqcError>;

#[derive(Debug, Error)]
pub enum AqcError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: u64, right: u64 },

    #[error("dimension {dim} exceeds the {what} cap of {cap}")]
    DimensionTooLarge { dim: u64, what: &'static str, cap: u64 },

    #[error("invalid vector representation: {0}")]
    InvalidVector(String),

    #[error("factor set is not orthonormal (max Gram deviation {max_dev:e})")]
    NotOrthonormal { max_dev: f64 },

    #[error("initial state is not a ground state (eigen-residual {residual:e} at energy {energy})")]
    NotGroundState { residual: f64, energy: f64 },

    #[error("degenerate basis: every candidate vector was dropped")]
    DegenerateBasis,

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("invalid schedule: {0}")]
    InvalidSchedule(String),

    #[error("operation requires a piecewise-constant schedule")]
    ScheduleNotPiecewise,

    #[error("operation requires a continuous schedule")]
    ScheduleNotContinuous,

    #[error("operation requires a differentiable schedule")]
    ScheduleNotDifferentiable,

    #[error("parameter {name} = {value} violates requirement: {requirement}")]
    InvalidParameter { name: &'static str, value: f64, requirement: &'static str },

    #[error("ground space of the problem operator is its kernel (ground energy {energy}); \
             jump-schedule machinery needs a strictly negative ground energy")]
    GroundSpaceIsKernel { energy: f64 },

    #[error("integrator step size underflow at s = {s}")]
    StepSizeUnderflow { s: f64 },

    #[error("spectral gap closes below {gap:e} at parameter {location}: true crossing")]
    TrueCrossing { location: f64, gap: f64 },

    #[error("instance file error: {0}")]
    InstanceFile(String),
}
