use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot parse system selector `{0}`")]
    BadSelector(String),
    #[error("no data for system `{0}`")]
    UnknownSystem(String),
    #[error("malformed diagram table, line {line}: {msg}")]
    Table { line: usize, msg: String },
    #[error("subdiagram component {0:?} is not of finite type")]
    NotFiniteType(Vec<usize>),
    #[error("vector has length {got}, expected {expected}")]
    Length { got: usize, expected: usize },
    #[error("point is not in the closed alcove: {0}")]
    NotInAlcove(String),
    #[error("cannot parse rational `{0}`")]
    BadRational(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}
