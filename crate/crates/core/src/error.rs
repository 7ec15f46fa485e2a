use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid word: {0}")]
    InvalidWord(String),

    #[error("page mismatch: {left} inner boundaries vs {right}")]
    PageMismatch { left: usize, right: usize },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("invalid monodromy: {0}")]
    InvalidMonodromy(String),

    #[error("invalid lens parameters: {0}")]
    InvalidLens(String),

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("invalid move: {0}")]
    InvalidMove(String),

    #[error("push letters present; use the S^4 certificate instead")]
    PushLettersPresent,

    #[error("condition not applicable: {0}")]
    NotApplicable(String),

    #[error("{0}")]
    Io(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}
