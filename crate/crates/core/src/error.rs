use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("genus mismatch: {left} vs {right}")]
    GenusMismatch { left: usize, right: usize },

    #[error("tensor degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("unsupported tensor degree {0} (expected 1..=3)")]
    UnsupportedDegree(usize),

    #[error("genus {genus} is below the minimum {min} for {what}")]
    GenusTooSmall {
        genus: usize,
        min: usize,
        what: &'static str,
    },

    #[error("genus {genus} exceeds the supported maximum {max}")]
    GenusTooLarge { genus: usize, max: usize },

    #[error("generator index {index} out of range for genus {genus}")]
    IndexOutOfRange { index: i64, genus: usize },

    #[error("invalid generator: {0}")]
    InvalidGenerator(String),

    #[error("vector is not in the sum of the two subspaces")]
    NotInSum,

    #[error("expression contains a formal T2(i,j,k,l) factor and has no pi_1 action")]
    FormalOnly,

    #[error("mapping class is not in the level 2 subgroup; homology action:\n{matrix}")]
    NotLevel2 { matrix: String },

    #[error("tensor is not liftable to an S3-invariant tensor modulo H (x) <omega>")]
    NotLiftable,

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("{0}")]
    Empty(&'static str),
}
