use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid abacus size e = {0} (need e > 2)")]
    InvalidE(i64),

    #[error("invalid parameters d = {d}, e = {e} (need 1 < d < e, gcd(d, e) = 1, e > 2)")]
    InvalidPair { d: i64, e: i64 },

    #[error("cannot parse {what} from {input:?}: {reason}")]
    Parse {
        what: &'static str,
        input: String,
        reason: String,
    },

    #[error("cell ({row}, {col}) is outside the Young diagram")]
    CellOutside { row: usize, col: usize },

    #[error("the given cells are not a rim hook of the partition")]
    NotRimHook,

    #[error("dominance is only defined for partitions of equal size ({left} vs {right})")]
    SizeMismatch { left: usize, right: usize },

    #[error("operation is undefined for the empty partition")]
    EmptyPartition,

    #[error("malformed beta-set: {0}")]
    MalformedBetaSet(String),

    #[error("beta-sets carry different shifts ({left} vs {right})")]
    ShiftMismatch { left: i64, right: i64 },

    #[error("partition {partition} is not {e}-regular")]
    NotERegular { partition: String, e: i64 },

    #[error("partition {partition} is not {d}-balanced")]
    NotDBalanced { partition: String, d: i64 },

    #[error("partition {partition} is not an {e}-core")]
    NotECore { partition: String, e: i64 },

    #[error("position {0} is not a bead")]
    NotABead(i64),

    #[error("position {0} is not an empty space")]
    NotAnEmptySpace(i64),

    #[error("a positive multiplier is required, got a = {0}")]
    NonPositiveMultiplier(i64),

    #[error("every row of the runner matrix must contain a zero")]
    ZeroRowGuard,

    #[error("the runner matrix has no row of positive entries")]
    NoPositiveRow,

    #[error("matrix has shape {rows}x{cols}, expected {expected_rows}x{expected_cols}")]
    MatrixShape {
        rows: usize,
        cols: usize,
        expected_rows: usize,
        expected_cols: usize,
    },

    #[error("combined pair violates max B <= min C ({max_b} > {min_c})")]
    PairOrder { max_b: i64, min_c: i64 },

    #[error("swap cap of {0} reached before termination")]
    SwapCap(usize),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
