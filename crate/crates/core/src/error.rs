use thiserror::Error;

/// Errors raised by root-system construction and queries.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse Cartan type {0:?}: expected a family letter A-G followed by a decimal rank")]
    Parse(String),
    #[error("rank {rank} is not admissible for type {family}")]
    InadmissibleRank { family: char, rank: usize },
    #[error("vector {0} is not a root of this system")]
    NotARoot(String),
    #[error("vector {0} is not a positive root")]
    NotPositiveRoot(String),
    #[error("simple index {index} out of range for rank {rank}")]
    BadIndex { index: usize, rank: usize },
    #[error("vector has dimension {found}, expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("coefficients of {0} on the simple roots are not integral")]
    NonIntegralSolution(String),
    #[error("simple root {0} is not special")]
    NotSpecial(usize),
    #[error("root {0} is not long")]
    NotLong(String),
    #[error("simple root {index} does not appear in {root}")]
    MultiplicityZero { index: usize, root: String },
    #[error("simple root {0} is neither special nor co-special")]
    NeitherSpecialNorCospecial(usize),
    #[error("height descent stalled at {0}")]
    DescentStalled(String),
    #[error("witness word for simple root {0} does not replay to its dominant conjugate")]
    WitnessFailed(usize),
    #[error("malformed rational {0:?}")]
    BadRational(String),
}

pub type Result<T> = std::result::Result<T, Error>;
