use thiserror::Error;

/// Errors raised by the word calculi, invariants and bundle constructions.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("alphabet mismatch: {0}")]
    AlphabetMismatch(String),

    #[error("vertex set {0:?} is not anti-connected")]
    NotAntiConnected(Vec<String>),

    #[error("Kim condition fails: no admissible path from {from} to {to} appears in the word")]
    KimConditionFailed { from: String, to: String },

    #[error("malformed dissection: {0}")]
    MalformedDissection(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("strand count mismatch: {0} vs {1}")]
    StrandMismatch(usize, usize),

    #[error("genus mismatch: {0} vs {1}")]
    GenusMismatch(usize, usize),

    #[error("matrix is not symplectic for the chain intersection form")]
    NotSymplectic,

    #[error("verification failed: {0}")]
    Verification(String),
}

impl Error {
    /// Coarse classification used by front ends to pick exit codes.
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Parse(_) => ErrorKind::Parse,
            Error::Verification(_) => ErrorKind::Verification,
            _ => ErrorKind::Precondition,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Parse,
    Precondition,
    Verification,
}

pub type Result<T> = std::result::Result<T, Error>;
