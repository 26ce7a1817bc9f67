use thiserror::Error;

/// Errors raised by the algebra kernel and the matrix/tensor layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator {symbol} out of bounds for {family}")]
    OutOfBounds { symbol: String, family: String },

    #[error("operand not valid over the given relation algebra: {0}")]
    SpecMismatch(String),

    #[error("differential action requires the Weyl family, got {0}")]
    NotWeyl(String),

    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("Pfaffian requires even size, got {0}")]
    OddSize(usize),

    #[error("matrix is not antisymmetric at ({row},{col})")]
    NotAntisymmetric { row: usize, col: usize },

    #[error("Pfaffian entries must pairwise commute (single commuting alphabet), found mixed generators")]
    NonCommutingEntries,

    #[error("index set must have even cardinality, got {0}")]
    OddIndexSet(usize),

    #[error("blocks are not disjoint")]
    OverlappingBlocks,

    #[error("multi-index must be non-decreasing")]
    NotNonDecreasing,

    #[error("tensor factor dimensions do not match: {0}")]
    DimensionMismatch(String),

    #[error("invalid permutation images")]
    BadPermutation,

    #[error("invalid partition or tableau: {0}")]
    BadShape(String),

    #[error("parameter out of supported range: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
