use thiserror::Error;

/// Errors shared by all modules of the crate.
///
/// Structural errors (references to undeclared cells, carrier mismatches) are
/// kept distinct from dimension errors and from failed composability, so that
/// callers can tell a malformed input from a well-formed but inapplicable one.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension error: {0}")]
    Dimension(String),

    #[error("unknown cell `{name}` in dimension {dim}")]
    UnknownCell { dim: usize, name: String },

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("structural error: {0}")]
    Structure(String),

    #[error("cells are not {i}-composable: target of `{left}` is `{left_boundary}`, source of `{right}` is `{right_boundary}`")]
    NotComposable {
        i: usize,
        left: String,
        left_boundary: String,
        right: String,
        right_boundary: String,
    },

    #[error("unsupported dimension {0}: cell equality is decided only in dimension <= 2")]
    UnsupportedDimension(usize),

    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
