use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("unknown label `{0}`")]
    UnknownLabel(String),

    #[error("label `{0}` is used by both operands")]
    LabelCollision(String),

    #[error("{what} has {size} elements, cap is {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),

    #[error("set system is not normal (empty set is not feasible)")]
    NotNormal,

    #[error("set system is not even")]
    NotEven,

    #[error("set system is not a matroid")]
    NotMatroid,

    #[error("presentation has {0} vertices, expected a bouquet")]
    NotBouquet(usize),

    #[error("presentation is not connected ({0} components)")]
    Disconnected(usize),

    #[error("word carries a negative sign; an unsigned word is required")]
    SignedWord,

    #[error("invalid gap: {0}")]
    InvalidGap(String),

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error("search budget of {0} visited classes exhausted")]
    BudgetExhausted(usize),

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
