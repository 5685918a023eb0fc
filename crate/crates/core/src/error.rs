use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("no power-series expansion at 0")]
    NoSeriesAtZero,
    #[error("series coefficient of degree {0} is not an integer")]
    NonIntegralSeries(usize),
    #[error("invalid stratum (s={s}, d={d}, n={n}): need 1 <= s <= d <= n")]
    InvalidStratum { s: usize, d: usize, n: usize },
    #[error("d={d} out of range for n={n}: need 1 <= d <= n-1")]
    DimensionOutOfRange { d: usize, n: usize },
    #[error("n={n} out of range: {reason}")]
    SizeOutOfRange { n: usize, reason: &'static str },
    #[error("minor size {size} exceeds matrix extent {rows}x{cols}")]
    MinorTooLarge { size: usize, rows: usize, cols: usize },
    #[error("symbolic determinant of size {0} exceeds the 9x9 cap")]
    DeterminantCap(usize),
    #[error("matrix has {0} rows; minor memoization supports at most 64")]
    TooManyRows(usize),
    #[error("matrix shape mismatch: {0}")]
    Shape(String),
    #[error("subspace enumeration needs {count} candidates, above the cap of {cap}")]
    EnumerationCap { count: u128, cap: u128 },
    #[error("rank criteria disagree: Kalman rank {kalman} vs small rank {small}")]
    CriteriaDisagree { kalman: usize, small: usize },
    #[error("series is not symmetric under variable permutation")]
    NotSymmetric,
    #[error("non-integral Schur coefficient {coeff} at partition {partition:?}")]
    NonIntegralSchur { partition: Vec<u32>, coeff: String },
    #[error("closed form evaluated to {0}, not a nonnegative integer")]
    NonIntegerDegree(String),
    #[error("method {method} requires {requirement}")]
    MethodNotApplicable { method: &'static str, requirement: &'static str },
    #[error("{0} is not a prime below 2^31")]
    InvalidModulus(u64),
    #[error("field mismatch: expected {expected}, found {found}")]
    FieldMismatch { expected: String, found: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
