use thiserror::Error;

pub type Result<T> = std::result::Result<T, FftError>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FftError {
    #[error("input is empty; at least one coefficient is required")]
    EmptyInput,
    #[error("transform size must be at least 1")]
    ZeroSize,
    #[error("length {len} is not a power of two; FFT algorithms require n = 2^k")]
    NotPowerOfTwo { len: usize },
    #[error("length {len} is not even and at least 2")]
    OddLength { len: usize },
    #[error("index {index} does not fit in {bits} bits")]
    IndexOutOfRange { index: usize, bits: u32 },
    #[error("expected length {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("twiddle table is for size {table}, input has length {input}")]
    TableSizeMismatch { table: usize, input: usize },
    #[error("pass {pass} is out of range 1..={passes}")]
    PassOutOfRange { pass: usize, passes: usize },
    #[error("value at index {index} is not finite")]
    NonFinite { index: usize },
    #[error("{0} does not support pass tracing")]
    Untraceable(&'static str),
}
