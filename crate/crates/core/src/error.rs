use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{op} is undefined for n = 0")]
    Zero { op: &'static str },

    #[error("empty bitstring")]
    EmptyBitstring,

    #[error("invalid binary digit {found:?} at position {pos}")]
    InvalidDigit { found: char, pos: usize },

    #[error("bitstring is not canonical (must be nonempty and start with 1)")]
    NonCanonical,

    #[error("malformed run encoding: {0}")]
    MalformedRuns(String),

    #[error("pads must have equal length (d0 has {d0}, d1 has {d1})")]
    UnequalPads { d0: usize, d1: usize },

    #[error("pads must be nonempty")]
    EmptyPad,

    #[error("transform mode must be {expected}")]
    WrongMode { expected: &'static str },

    #[error("value needs {bits} bits but the target type holds {width}")]
    Overflow { bits: u64, width: u64 },

    #[error("invalid scan configuration: {0}")]
    InvalidConfig(String),
}
