use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime; only prime fields are supported")]
    NotPrime(u64),
    #[error("bad field spec {0:?}: expected \"Q\" or \"F<p>\"")]
    BadFieldSpec(String),
    #[error("generator has rank {rank} but {k} rows")]
    RankDeficient { rank: usize, k: usize },
    #[error("malformed generator: {0}")]
    Shape(String),
    #[error("column {0} is zero")]
    ZeroColumn(usize),
    #[error("linear form {0} is zero")]
    ZeroForm(usize),
    #[error("columns {0} and {1} are proportional")]
    ProportionalColumns(usize, usize),
    #[error("column index {0} out of range")]
    ColumnOutOfRange(usize),
    #[error("{what}: need {needed}, budget is {limit}")]
    BudgetExceeded { what: &'static str, needed: u128, limit: u128 },
    #[error("operation requires {0}")]
    UnsupportedField(String),
    #[error("the code has full length (k = n); its dual is zero")]
    ZeroDual,
    #[error("column {0} is a coloop; puncturing drops the rank")]
    ColoopPuncture(usize),
    #[error("cannot shorten a one-dimensional code")]
    DimensionUnderflow,
    #[error("code is not MDS: d = {d}, n - k + 1 = {singleton}")]
    NotMds { d: usize, singleton: usize },
    #[error("the shifted Tutte polynomial has no term of x-degree 1")]
    NoLinearTerm,
    #[error("the matroid has a loop")]
    LoopInMatroid,
    #[error("argument out of range: {0}")]
    BadRange(String),
    #[error("characteristic {characteristic} does not exceed degree {degree}")]
    BadCharacteristic { characteristic: u64, degree: usize },
    #[error("the point is not a valid intersection point of the arrangement")]
    NotAnIntersectionPoint,
    #[error("the Orlik-Terao ideal is zero")]
    ZeroIdeal,
    #[error("betti table bounds do not reach ({0}, {1})")]
    InsufficientBounds(usize, usize),
    #[error("expected a code of dimension 3, got {0}")]
    WrongDimension(usize),
    #[error("support of size {0}; only 3-element supports are allowed")]
    BadSupportSize(usize),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("unknown example {0:?}")]
    UnknownExample(String),
}
