use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("multiplication table is not associative at ({0}, {1}, {2})")]
    NonAssociative(usize, usize, usize),

    #[error("not a group: {0}")]
    NotAGroup(String),

    #[error("unknown builtin group `{0}`")]
    UnknownBuiltin(String),

    #[error("malformed group spec: {0}")]
    BadSpec(String),

    #[error("size {size} exceeds the configured bound {bound}")]
    SizeBound { size: usize, bound: usize },

    #[error("element {element} out of range for a group of order {order}")]
    ElementOutOfRange { element: usize, order: usize },

    #[error("element set is not a subgroup")]
    NotASubgroup,

    #[error("wrong ambient group: {0}")]
    WrongAmbient(String),

    #[error("coboundary into degree {0} is not supported")]
    DegreeOverflow(usize),

    #[error("cochain is not a cocycle")]
    NotACocycle,

    #[error("cochain is not normalized")]
    NotNormalized,

    #[error("modulus mismatch: expected {expected}, found {found}")]
    ModulusMismatch { expected: u64, found: u64 },

    #[error("2-cochain does not trivialize the 3-cocycle on the subgroup")]
    NotTrivializing,

    #[error("stabilizer cocycle fails the 2-cocycle identity at {0:?}")]
    FormulaNotClosed(Vec<usize>),

    #[error("classification incomplete: {0}")]
    ReportIncomplete(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
