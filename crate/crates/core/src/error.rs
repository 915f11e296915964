use thiserror::Error;

/// Coarse classification used by the command-line front end to pick an exit code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Malformed input: bad JSON, wrong shapes, unknown names.
    Schema,
    /// Well-formed input that violates a mathematical precondition.
    Precondition,
    /// A computed object failed one of its own invariants.
    Internal,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("unsupported ambient dimension {0} (supported: 1 to 3)")]
    UnsupportedDimension(usize),

    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("halfspace intersection is unbounded")]
    Unbounded,

    #[error("halfspace intersection is empty")]
    EmptyIntersection,

    #[error("halfspace normal is the zero vector")]
    ZeroNormal,

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("cannot compare valuation vectors carrying different monomial orders")]
    OrderMismatch,

    #[error("unknown monomial order {0:?} (expected \"lex\" or \"deglex\")")]
    UnknownOrder(String),

    #[error("level {0} is not present in the graded data")]
    UnknownLevel(u32),

    #[error("point index {index} out of range (have {count} points)")]
    PointIndex { index: usize, count: usize },

    #[error("vertex {vertex} is not smooth: {reason}")]
    NonDelzant { vertex: usize, reason: String },

    #[error("vertex list does not match the convex hull of the vertices")]
    NotVertexList,

    #[error("chosen vertex indices must be distinct and nonempty")]
    InvalidChoice,

    #[error("class is not pseudoeffective with respect to the supplied curves")]
    NotPseudoeffective,

    #[error("support of the negative part is not negative definite")]
    SupportNotNegativeDefinite,

    #[error("class is not big")]
    NotBig,

    #[error("number of blown-up points {0} outside the supported range 1..=8")]
    PointCountOutOfRange(usize),

    #[error("user-supplied curve {index} has nonnegative self-intersection {self_intersection}")]
    NonNegativeCurve { index: usize, self_intersection: String },

    #[error("the point p_{0} lies in the augmented base locus (E_{0} is in the negative part)")]
    PointInBaseLocus(usize),

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("the endpoint of the ray is irrational; {0}")]
    IrrationalEndpoint(&'static str),

    #[error("invalid rational literal {0:?}")]
    ParseRational(String),

    #[error("schema violation: {0}")]
    Schema(String),

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::UnknownOrder(_)
            | Error::ParseRational(_)
            | Error::Schema(_)
            | Error::Json(_)
            | Error::Io(_) => ErrorKind::Schema,
            Error::Invariant(_) => ErrorKind::Internal,
            _ => ErrorKind::Precondition,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
