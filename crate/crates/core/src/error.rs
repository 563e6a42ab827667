use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameter p = {p}: {reason}")]
    InvalidParameter { p: u32, reason: &'static str },

    #[error(
        "p = {p} exceeds the enumeration limit {max_p} (raise the limit explicitly to proceed)"
    )]
    GateExceeded { p: u32, max_p: u32 },

    #[error("element index {index} out of range for a group of order {order}")]
    IndexOutOfRange { index: u64, order: u64 },

    #[error("malformed multiplication table at line {line}: {reason}")]
    MalformedTable { line: usize, reason: String },

    #[error("table group is not a group: {0}")]
    NotAGroup(String),
}
