use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid order {0}: must be at least 1")]
    InvalidOrder(i64),

    #[error("invalid index set: {0}")]
    InvalidHoles(String),

    #[error("point ({0}/2, {1}/2) is not a cell center")]
    NotCellCenter(i64, i64),

    #[error("{engine}: input too large ({detail})")]
    TooLarge { engine: &'static str, detail: String },

    #[error("fkt: embedding has a bounded face that is not a unit square")]
    UnsupportedEmbedding,

    #[error("engines disagree: {primary} = {a}, {secondary} = {b}")]
    EngineDisagreement {
        primary: &'static str,
        secondary: &'static str,
        a: String,
        b: String,
    },

    #[error("invalid symmetry axis: {0}")]
    InvalidAxis(String),

    #[error("product is not integral: {0}")]
    NonIntegral(String),

    #[error("malformed input: {0}")]
    Malformed(String),
}
