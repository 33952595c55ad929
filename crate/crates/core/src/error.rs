use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("group order {order} exceeds the enumeration cap {cap}")]
    GroupTooLarge { order: u128, cap: usize },

    #[error("group order {order} exceeds the subgroup-enumeration cap {cap}")]
    SubgroupCapExceeded { order: usize, cap: usize },

    #[error("element is not a member of the group")]
    NotInGroup,

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("product set is not a subgroup")]
    NotASubgroup,

    #[error("group is not solvable")]
    NotSolvable,

    #[error("{p} does not divide the group order {order}")]
    PrimeDoesNotDivide { p: u64, order: usize },

    #[error("subgroup is not a {0}-group")]
    NotAPGroup(u64),

    #[error("{k} is not a unit modulo {level}")]
    NotAUnit { k: i64, level: u32 },

    #[error("division by zero")]
    DivisionByZero,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("character table computation failed: {0}")]
    Dixon(String),

    #[error("class function is not a character: {0}")]
    NotACharacter(String),

    #[error("precondition not met: {0}")]
    Precondition(String),

    #[error("theorem violation: {0}")]
    TheoremViolation(String),

    #[error("corpus line {line}: {message}")]
    Corpus { line: usize, message: String },

    #[error("unknown group {0:?}")]
    UnknownGroup(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
