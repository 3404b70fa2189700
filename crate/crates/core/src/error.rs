use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("unknown relation identifier `{0}`")]
    UnknownRelation(String),

    #[error("(s - t) division left a non-zero remainder at total degree {degree}")]
    NonzeroRemainder { degree: usize },

    #[error("generator index {index} exceeds the rule table bound {bound}")]
    IndexOutOfTable { index: u32, bound: u32 },

    #[error("linear system has no unique solution: {0}")]
    Singular(String),

    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse { position, message: message.into() }
    }
}
