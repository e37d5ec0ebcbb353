use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("invalid tree: {0}")]
    InvalidTree(String),
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{what} is {got}, exceeding the limit of {limit}")]
    Guard {
        what: &'static str,
        got: usize,
        limit: usize,
    },
    #[error("not a poset: {0}")]
    NotAPoset(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
