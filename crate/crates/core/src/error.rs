use num_bigint::BigUint;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} must be a positive integer")]
    NotPositive(&'static str),

    #[error("a partition needs at least one part")]
    EmptyPartition,

    #[error("part at position {index} is zero; parts must be positive")]
    ZeroPart { index: usize },

    #[error("parts must be nondecreasing: {prev} is followed by {next} at position {index}")]
    Unsorted {
        index: usize,
        prev: BigUint,
        next: BigUint,
    },

    #[error("{what}: {value} lies outside the admissible window [{lo}, {hi}]")]
    OutOfWindow {
        what: &'static str,
        value: BigUint,
        lo: BigUint,
        hi: BigUint,
    },

    #[error("{0}")]
    Domain(String),

    #[error("{parts} is not an M-partition")]
    NotMPartition { parts: String },
}
