use thiserror::Error;

/// Errors surfaced by public operations.
///
/// Structural misuse of element-level arithmetic (mixing primes inside a
/// single expression) panics instead; those are programming errors, not
/// input conditions.
#[derive(Debug, Error)]
pub enum Error {
    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("exponent known mod p^{given} but p^{required} is needed for degree {degree}")]
    InsufficientExponentPrecision {
        given: u32,
        required: u32,
        degree: usize,
    },

    #[error("working precision {given} is below the required {required}")]
    InsufficientPrecision { given: u32, required: u32 },

    #[error("substitution target for variable {var} has a nonzero constant term")]
    NonzeroConstantTerm { var: usize },

    #[error("series vanishes mod p; divide out the uniformizer first")]
    ZeroModP,

    #[error("point coordinate {index} is not inside the open unit polydisk")]
    PointNotInDisk { index: usize },

    #[error("invalid group parameter series: {0}")]
    InvalidGroupLaw(String),

    #[error("not an Eisenstein polynomial: {0}")]
    NotEisenstein(String),

    #[error("division is not exact: {0}")]
    InexactDivision(String),

    #[error("torsion level {level} exceeds the tower depth {max}")]
    LevelTooDeep { level: u32, max: u32 },

    #[error("exhaustive enumeration would produce {count} tuples, above the cap {cap}; use sampling")]
    EnumerationTooLarge { count: u128, cap: u64 },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("malformed json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
