use std::fmt;

/// Errors reported by the query and construction entry points.
///
/// Every public operation that takes a position, a label or an encoded
/// container validates its input and reports a structured error instead of
/// panicking; panics are reserved for internal invariant violations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A 1-based position lies outside `[1, len]`.
    PositionOutOfRange { pos: usize, len: usize },
    /// A select count exceeds the number of matching bits.
    CountOutOfRange { count: usize, available: usize },
    /// A query range `[lo, hi]` with `lo > hi` or ends out of bounds.
    InvalidRange { lo: usize, hi: usize },
    /// A node label outside `[0, n]` (or `[1, n]` where the root is excluded).
    LabelOutOfRange { label: usize, n: usize },
    /// `findopen` was asked about a position that does not hold a `)`.
    NotAClosing { pos: usize },
    /// A parenthesis payload is not balanced.
    Unbalanced,
    /// An operation that needs at least one element got none.
    EmptyInput,
    /// `stack_pop` on an empty stack.
    StackUnderflow,
    /// `stack_push` with an index not strictly below the current top.
    StackOrder { pushed: usize, top: usize },
    /// A document or pattern byte outside the allowed `[2, 255]` range.
    InvalidByte { byte: u8 },
    /// A malformed serialized container (bad magic, version, truncation, ...).
    Format(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::PositionOutOfRange { pos, len } => {
                write!(f, "position {pos} out of range [1, {len}]")
            }
            Error::CountOutOfRange { count, available } => {
                write!(f, "select count {count} exceeds {available} matching bits")
            }
            Error::InvalidRange { lo, hi } => write!(f, "invalid range [{lo}, {hi}]"),
            Error::LabelOutOfRange { label, n } => {
                write!(f, "label {label} out of range for {n} nodes")
            }
            Error::NotAClosing { pos } => write!(f, "position {pos} is not a closing parenthesis"),
            Error::Unbalanced => write!(f, "parenthesis sequence is not balanced"),
            Error::EmptyInput => write!(f, "input must not be empty"),
            Error::StackUnderflow => write!(f, "pop from an empty stack"),
            Error::StackOrder { pushed, top } => {
                write!(f, "pushed index {pushed} is not below the current top {top}")
            }
            Error::InvalidByte { byte } => {
                write!(f, "byte {byte:#04x} outside the document alphabet [2, 255]")
            }
            Error::Format(msg) => write!(f, "malformed container: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
