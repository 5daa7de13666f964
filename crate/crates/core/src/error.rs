use thiserror::Error;

pub type Result<T> = std::result::Result<T, GttError>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GttError {
    #[error("matrix is not unitary: max |W†W - I| = {deviation:e}")]
    NotUnitary { deviation: f64 },

    #[error("bad shape: {0}")]
    BadShape(String),

    #[error("non-finite value at position {0}")]
    NonFinite(usize),

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("dense size {size} exceeds cap {cap}")]
    TooLarge { size: usize, cap: usize },

    #[error("transform size {base}^{power} overflows the index range")]
    Overflow { base: usize, power: usize },

    #[error("index {index} out of range 0..{len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("x = {0} is outside [0, 1)")]
    DomainError(f64),

    #[error("sample count {samples} is not a positive multiple of {len}")]
    BadSampleCount { samples: usize, len: usize },

    #[error("vector is not normalized: norm = {norm}")]
    NotNormalized { norm: f64 },

    #[error("k = {k} outside 1..={len}")]
    BadK { k: usize, len: usize },

    #[error("selection retains zero mass")]
    EmptySelection,

    #[error("invalid selection: {0}")]
    BadSelection(String),

    #[error("cutoff {cutoff} outside 1..={len}")]
    BadCutoff { cutoff: usize, len: usize },

    #[error("all samples are zero")]
    ZeroVector,
}
