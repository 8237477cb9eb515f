use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid root system {family}{rank}: {constraint}")]
    InvalidRootSystem {
        family: String,
        rank: usize,
        constraint: &'static str,
    },
    #[error("Cartan matrix is not of finite type: {0}")]
    InvalidCartan(String),
    #[error("the zero vector has no coroot")]
    ZeroRoot,
    #[error("vector {0:?} is not a root")]
    NotARoot(Vec<i64>),
    #[error("vector length {got} does not match rank {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("simple root index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("unknown real form label `{0}`")]
    UnknownLabel(String),
    #[error("invalid parameters for {label}: {reason}")]
    InvalidParams { label: String, reason: String },
    #[error("Weyl group has order {required}, above the enumeration cap {cap}")]
    EnumerationCap { required: u128, cap: u128 },
    #[error("word {word:?} is not reduced")]
    NotReduced { word: Vec<usize> },
    #[error("deleting position {index} of {word:?} does not give a codimension-1 subword")]
    NotCodimensionOne { word: Vec<usize>, index: usize },
    #[error("deleting the last letter of {word:?} always has coefficient 0")]
    LastLetter { word: Vec<usize> },
    #[error("cell dimensions {from} and {to} do not differ by one")]
    DimensionMismatch { from: String, to: String },
    #[error("multiplicity parity of simple root {0} is not determined by its rank class")]
    MultiplicityUnavailable(usize),
    #[error("no sign assignment makes d2*d3 vanish")]
    InconsistentSigns,
    #[error("unexpected torsion coefficient {0} in the boundary map")]
    UnexpectedTorsion(String),
    #[error("the classification theorem does not apply over {0}")]
    ClassificationNotApplicable(String),
    #[error("invalid coefficient ring `{0}`")]
    InvalidRing(String),
    #[error("no Satake diagram available for {0}")]
    UnsupportedSatake(String),
    #[error("arrow pair ({0}, {1}) is not orthogonal to the imaginary roots")]
    NotPerpPair(usize, usize),
    #[error("parse error: {0}")]
    Parse(String),
}
