use thiserror::Error;

use crate::spec::SpecError;

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("empty generator list")]
    NoGenerators,

    #[error("group order exceeds the enumeration cap of {cap}")]
    OrderCap { cap: usize },

    #[error("group order {order} exceeds the subgroup-lattice cap of {cap}")]
    LatticeCap { order: usize, cap: usize },

    #[error("element is not a member of the group")]
    NotAnElement,

    #[error("subset is not a subgroup of the group")]
    NotASubgroup,

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("group of order {0} is not a p-group")]
    NotAPGroup(usize),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("invalid Cayley table: {0}")]
    InvalidTable(String),

    #[error("invalid series: {0}")]
    InvalidSeries(String),

    #[error(transparent)]
    Spec(#[from] SpecError),

    #[error("{path}: line {line}: {message}")]
    GeneratorFile {
        path: String,
        line: usize,
        message: String,
    },

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T, E = GroupError> = std::result::Result<T, E>;
