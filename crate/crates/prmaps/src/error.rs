use thiserror::Error;

/// Byte range into a source text; `start <= end <= input.len()`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SourceSpan {
    pub start: usize,
    pub end: usize,
}

impl std::fmt::Display for SourceSpan {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}..{}", self.start, self.end)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("type error: {0}")]
    Type(String),
    #[error("decode error: {0}")]
    Decode(String),
    #[error("proof error: {0}")]
    Proof(String),
    #[error("parse error at {span}: expected {expected}")]
    Parse { span: SourceSpan, expected: String },
}

impl Error {
    pub fn ty(msg: impl Into<String>) -> Self {
        Error::Type(msg.into())
    }

    pub fn decode(msg: impl Into<String>) -> Self {
        Error::Decode(msg.into())
    }

    pub fn proof(msg: impl Into<String>) -> Self {
        Error::Proof(msg.into())
    }

    pub fn parse(span: SourceSpan, expected: impl Into<String>) -> Self {
        Error::Parse {
            span,
            expected: expected.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
