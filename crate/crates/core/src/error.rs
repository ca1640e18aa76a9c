use alloc::string::String;

use crate::partition::Partition;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid partition text {0:?}")]
    PartitionSyntax(String),
    #[error("parts are not weakly decreasing: {0}")]
    NotWeaklyDecreasing(Partition),
    #[error("character requested for {shape} at {cycle_type}: weights differ")]
    WeightMismatch { shape: Partition, cycle_type: Partition },
    #[error("expansion is not homogeneous")]
    NotHomogeneous,
    #[error("non-integral Schur coefficient at {0}")]
    NonIntegral(Partition),
    #[error("plethysm with a degree-0 inner function")]
    ConstantInner,
    #[error("empty plethysm chain")]
    EmptyChain,
    #[error("polynomial is not divisible by (1-x)(1-y)")]
    InexactDivision,
    #[error("polynomial is not an evaluation at 1 - x - y of a degree-consistent function")]
    InconsistentEvaluation,
    #[error("polynomial has a non-integral coefficient")]
    NonIntegralPolynomial,
    #[error("parameter out of range: {0}")]
    OutOfRange(&'static str),
    #[error("{0} is not a hook+column shape with first part at least 2")]
    InvalidShape(Partition),
    #[error("unknown OEIS id {0:?}")]
    UnknownSequence(String),
}
