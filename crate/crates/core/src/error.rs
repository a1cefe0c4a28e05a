use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty set has no minimum or maximum")]
    EmptySet,

    #[error("invalid element: {0}")]
    InvalidElement(String),

    #[error("invalid generator: eps({0}) needs an index of at least 2")]
    InvalidGenerator(i64),

    #[error("exception set is empty: the H-class is the full group of units")]
    FullUnitsCase,

    #[error("invalid extension point {0}: must be non-positive")]
    InvalidExtensionPoint(i64),

    #[error("invalid indices k={k}, l={l}: need 2 <= l < k")]
    InvalidIndices { k: i64, l: i64 },

    #[error("element has gap {gap}, outside filtration level {k}")]
    NotInFiltration { gap: i64, k: i64 },

    #[error("invalid finite tail map: {0}")]
    InvalidTailMap(String),

    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error("suite `{suite}` does not run over the {monoid} monoid")]
    UnsupportedMonoid { suite: String, monoid: String },

    #[error("empty generating set")]
    EmptyGenerators,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
