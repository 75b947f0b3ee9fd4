use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("not a group: {0}")]
    NotAGroup(String),

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("permutation closure exceeded {0} elements")]
    ClosureExceeded(usize),

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("group of order {0} is too large for this operation")]
    TooLarge(usize),

    #[error("operation is undefined on the trivial group")]
    TrivialGroup,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error at line {line}, column {column}: expected {expected}")]
    Parse {
        line: usize,
        column: usize,
        expected: String,
    },

    #[error("undeclared generator `{0}`")]
    UndeclaredGenerator(String),

    #[error("coset enumeration exceeded {0} cosets")]
    CosetLimitExceeded(usize),

    #[error("group is abelian")]
    AbelianGroup,

    #[error("centralizer of class {0} is not maximal")]
    NotMaximal(usize),

    #[error("class {0} together with the center is not a subgroup")]
    NotASubgroup(usize),

    #[error("group is not a regular non-abelian 2-group")]
    NotRegular2Group,

    #[error("unknown format `{0}`")]
    UnknownFormat(String),

    #[error("{source_name}:{line}: {reason}")]
    Format {
        source_name: String,
        line: usize,
        reason: String,
    },

    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),

    #[error("entry `{label}` declares order {declared} but has order {actual}")]
    OrderMismatch {
        label: String,
        declared: usize,
        actual: usize,
    },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}
