use thiserror::Error;

/// Errors raised when building or analysing finite structures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("carrier must have at least one element")]
    EmptyCarrier,
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),
    #[error("table has {found} entries, expected {expected}")]
    TableShape { expected: usize, found: usize },
    #[error("table entry {value} at ({row}, {col}) is out of range for order {order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("operation is not associative: ({0}, {1}, {2}) is a counterexample")]
    NotAssociative(usize, usize, usize),
    #[error("operation has no two-sided identity")]
    NoIdentity,
    #[error("element {0} has no two-sided inverse")]
    NoInverse(usize),
    #[error("element index {index} is out of range for order {order}")]
    ElementOutOfRange { index: usize, order: usize },
    #[error("carriers differ in order: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("joiner {joiner} is not the identity {identity} of the group operation")]
    JoinerNotIdentity { joiner: usize, identity: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),
    #[error("quotient is not well defined: {x} ~ {x2} and {y} ~ {y2} but the products differ")]
    IllDefinedQuotient {
        x: usize,
        x2: usize,
        y: usize,
        y2: usize,
    },
    #[error("method is not available for this query: {0}")]
    MethodIncompatible(String),
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;
