use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("group closure exceeds the element cap of {cap}")]
    ClosureExceedsCap { cap: usize },
    #[error("malformed permutation: {0}")]
    MalformedPermutation(String),
    #[error("too many conjugacy classes ({classes}, cap {cap})")]
    TooManyClasses { classes: usize, cap: usize },
    #[error("prime {p} does not divide the group order {order}")]
    PrimeDoesNotDivideOrder { p: u64, order: u64 },
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("degree recovery failed for class vector {0}")]
    DegreeRecoveryFailure(usize),
    #[error("empty input")]
    EmptyInput,
    #[error("graph has {n} vertices, the cap is {cap}")]
    GraphTooLarge { n: usize, cap: usize },
    #[error("graph is not connected")]
    NotConnected,
    #[error("vertices {0} and {1} are not at distance three")]
    NotDistanceThree(usize, usize),
    #[error("vertex {0} lies farther than three from the chosen endpoint")]
    BeyondDistanceThree(usize),
    #[error("solver inconsistency: {0}")]
    SolverInconsistency(String),
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True for errors caused by a configured size cap rather than bad input.
    pub fn is_resource_limit(&self) -> bool {
        matches!(
            self,
            Error::ClosureExceedsCap { .. } | Error::TooManyClasses { .. } | Error::GraphTooLarge { .. }
        )
    }
}
