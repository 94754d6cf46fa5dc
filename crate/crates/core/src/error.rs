use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported modulus {0}: only 2 and 3 are supported")]
    UnsupportedModulus(u64),

    #[error("symbol {value} out of range for modulus {p} at row {row}, column {col}")]
    SymbolOutOfRange {
        p: u8,
        row: usize,
        col: usize,
        value: i64,
    },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix must have at least one column")]
    NoColumns,

    #[error("empty code: minimal distance is undefined for dimension 0")]
    EmptyCode,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unsupported family/rank combination: {0}")]
    UnsupportedFamily(String),

    #[error("invalid node index {node} for rank {rank}")]
    InvalidNode { node: usize, rank: usize },

    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),

    #[error("unknown table {0:?}")]
    UnknownTable(String),

    #[error("unknown formula {0:?}")]
    UnknownFormula(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
