use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("a group needs at least one cyclic factor")]
    EmptyGroup,
    #[error("cyclic factor order {0} is below 2")]
    BadOrder(u64),
    #[error("group order overflows 64 bits")]
    GroupTooLarge,
    #[error("expected {expected} coordinates, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("cannot parse {input:?} as an element of {group}")]
    Parse { input: String, group: String },
    #[error("elements belong to different groups")]
    ParentMismatch,
    #[error("{what}: cardinality {size} exceeds the configured bound {bound}")]
    BoundExceeded {
        what: &'static str,
        size: u128,
        bound: u128,
    },
    #[error("generator {row} cannot map to an element of incompatible order")]
    InvalidHomomorphism { row: usize },
    #[error("matrix does not define an automorphism")]
    NotBijective,
    #[error("form is degenerate or not well defined on generators")]
    InvalidForm,
    #[error("cyclotomic moduli differ: {0} vs {1}")]
    ModulusMismatch(u64, u64),
    #[error("coefficient not divisible by {0}")]
    NotDivisible(String),
    #[error("character values are not a homomorphism on the subgroup")]
    NotAHomomorphism,
    #[error("group is not a p-group")]
    NotPGroup,
    #[error("multiplier {mult} is not coprime to {p}")]
    NotCoprime { mult: i64, p: u64 },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("index {index} out of range (only {len} available)")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}
