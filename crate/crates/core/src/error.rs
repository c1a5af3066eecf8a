use thiserror::Error;

/// Everything that can go wrong while building or analysing an orbit.
///
/// Variants up to `BoundExceeded` are user-input problems; `InternalInconsistency`
/// means two independent computations disagreed and always points at a bug.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrbitError {
    #[error("parts must be weakly decreasing, found {found:?}")]
    NotDecreasing { found: Vec<u32> },

    #[error("sum mismatch: expected {expected}, found {found}")]
    SumMismatch { expected: u32, found: u32 },

    #[error(
        "parity violation: columns c_{upper_index} = {upper} and c_{lower_index} = {lower} have odd sum"
    )]
    ParityViolation {
        upper_index: i64,
        lower_index: i64,
        upper: u32,
        lower: u32,
    },

    #[error("symplectic groups need an even dimension, got {0}")]
    OddSymplecticDimension(u32),

    #[error("group dimension must be positive")]
    ZeroDimension,

    #[error("unrecognised group `{0}` (expected `sp:<2m>` or `o:<n>`)")]
    InvalidGroup(String),

    #[error("dimension {dimension} exceeds the enumeration bound {bound}")]
    BoundExceeded { dimension: u32, bound: u32 },

    #[error("columns c_{index} and c_{} are both {value}; the orbit must have distinct columns", index - 1)]
    NonDistinctColumns { index: usize, value: u32 },

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

impl OrbitError {
    /// True for errors that can only come from a bug, never from bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, OrbitError::InternalInconsistency(_))
    }
}

pub type Result<T, E = OrbitError> = std::result::Result<T, E>;
