use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("non-composable path `{0}`")]
    NonComposable(String),
    #[error("inhomogeneous relation: {0}")]
    InhomogeneousRelation(String),
    #[error("not finite-dimensional within bound {0}")]
    NotFiniteDimensional(usize),
    #[error("budget exceeded: {needed} basis tuples > budget {budget}")]
    BudgetExceeded { needed: usize, budget: usize },
    #[error("not a cycle")]
    NotACycle,
    #[error("inconsistent filtration: boundaries are not contained in cycles")]
    InconsistentFiltration,
    #[error("degree {0} out of range")]
    DegreeOutOfRange(usize),
    #[error("not idempotent")]
    NotIdempotent,
    #[error("not Nakayama-cyclic shaped: {0}")]
    NotNakayama(String),
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("n must be ≥ 2")]
    NTooSmall,
    #[error("non-integral multiplicity {0}")]
    NonIntegral(String),
    #[error("infinite resolution: terms do not terminate by degree {0}")]
    InfiniteResolution(usize),
    #[error("not projective: {0}")]
    NotProjective(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
