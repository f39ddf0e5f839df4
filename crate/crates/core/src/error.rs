use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("illegal root system type {family}{rank}")]
    IllegalType { family: char, rank: usize },

    #[error("vector {0:?} is not a root")]
    NotARoot(Vec<i32>),

    #[error("roots {0:?} and {1:?} are proportional")]
    Proportional(Vec<i32>, Vec<i32>),

    #[error("unknown real form `{0}`")]
    UnknownForm(String),

    #[error("simple root index {index} out of range for rank {rank}")]
    BadPhi { index: usize, rank: usize },

    #[error("conjugation invariant violated for {label}: {detail}")]
    Conjugation { label: String, detail: String },

    #[error("inconsistent sign system for {label}: {detail}")]
    SignSystem { label: String, detail: String },

    #[error("matrix is not Hermitian")]
    NotHermitian,

    #[error("{0} is not a characteristic real root")]
    NotCharacteristic(String),

    #[error("golden table has no row for {0}")]
    GoldenCoverage(String),

    #[error("bad golden table: {0}")]
    Golden(String),

    #[error("unknown output format `{0}`")]
    Format(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
