use thiserror::Error;

use crate::diagrams::{Block, HookPartition, Level};

/// Errors produced by the core library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("p must be an odd prime, got {0}")]
    NotOddPrime(u64),
    #[error("level r must be at least 1")]
    ZeroLevel,
    #[error("group too large for p = {p}, r = {r}")]
    Overflow { p: u64, r: u32 },
    #[error("conductor mismatch: {0} vs {1}")]
    ConductorMismatch(u64, u64),
    #[error("group parameters differ between operands")]
    ParamsMismatch,
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("invalid level {0}")]
    InvalidLevel(String),
    #[error("shape {shape} is not in level {level}")]
    ShapeNotInLevel { shape: HookPartition, level: Level },
    #[error("cannot remove {block} from {shape}")]
    InvalidRemoval { shape: HookPartition, block: Block },
    #[error("block {block} is not admissible at scale p^{scale_exponent}")]
    InadmissibleBlock { block: Block, scale_exponent: u32 },
    #[error("malformed tableau: {0}")]
    MalformedTableau(String),
    #[error("tableaux of a pair have different shapes or levels")]
    ShapeMismatch,
    #[error("elements lie in different levels")]
    LevelMismatch,
    #[error("element {0} is not in the subgroup SG_r")]
    NotInSubgroup(String),
    #[error("inadmissible content: {0}")]
    InadmissibleContent(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
