use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("gcd(0, 0) is undefined")]
    UndefinedGcd,

    #[error("euler phi is undefined for 0")]
    PhiOfZero,

    #[error("modulus must be at least 2, got {0}")]
    ModulusTooSmall(u64),

    #[error("modulus {q} exceeds the configured limit {limit}")]
    ModulusTooLarge { q: u64, limit: u64 },

    #[error("residue {value} is out of range for modulus {q}")]
    ResidueOutOfRange { value: u64, q: u64 },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u64, right: u64 },

    #[error("message has {message_len} symbols but the generator has {rows} rows")]
    MessageLengthMismatch { message_len: usize, rows: usize },

    #[error("vector must have at least one coordinate")]
    EmptyVector,

    #[error("matrix rows must be non-empty and all of the same length")]
    RaggedMatrix,

    #[error("dimension k must be at least {min}, got {k}")]
    DimensionTooSmall { k: u32, min: u32 },

    #[error("puncture dimension u must satisfy 2 <= u <= k-1 = {max_u}, got {u}")]
    PunctureOutOfRange { u: u32, max_u: u32 },

    #[error("enumeration too large: {messages} messages exceeds the cap of {cap}")]
    EnumerationTooLarge { messages: u128, cap: u64 },

    #[error("generator matrix with {entries} entries exceeds the limit of {limit}")]
    GeneratorTooLarge { entries: u128, limit: u64 },

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("trivial code: the weight distribution has no nonzero weight")]
    TrivialCode,

    #[error("unknown reference table label {0:?}")]
    UnknownReferenceTable(String),

    #[error("worker count must be at least 1")]
    NoWorkers,
}
