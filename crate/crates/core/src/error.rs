use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuandleError {
    #[error("table is empty")]
    Empty,
    #[error("row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("entry {a}*{b} = {value} is out of range")]
    EntryOutOfRange { a: usize, b: usize, value: usize },
    #[error("not idempotent: {0}*{0} != {0}")]
    NotIdempotent(usize),
    #[error("left translation of {0} is not a bijection")]
    RowNotBijective(usize),
    #[error("not left distributive: {0}*({1}*{2}) != ({0}*{1})*({0}*{2})")]
    NotLeftDistributive(usize, usize, usize),
    #[error("not a congruence: {0}~{1} and {2}~{3} but {0}*{2} and {1}*{3} lie in different blocks")]
    NotACongruence(usize, usize, usize, usize),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("permutation degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("not a permutation of 0..{0}")]
    NotAPermutation(usize),
    #[error("empty list of moduli")]
    EmptyModuli,
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("map has {got} entries, group has order {expected}")]
    WrongLength { expected: usize, got: usize },
    #[error("map value {0} is not a group element")]
    OutOfRange(usize),
    #[error("map is not bijective")]
    NotBijective,
    #[error("map is not additive at ({0}, {1})")]
    NotAdditive(usize, usize),
    #[error("group axiom fails: {0}")]
    AxiomViolation(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MeshError {
    #[error("mesh shape: {0}")]
    Shape(String),
    #[error("phi[{0}][{1}] is not a homomorphism")]
    NotAHomomorphism(usize, usize),
    #[error("(M1) fails at {0}: 1 - phi[{0}][{0}] is not an automorphism")]
    M1Violation(usize),
    #[error("(M2) fails at {0}: c[{0}][{0}] != 0")]
    M2Violation(usize),
    #[error("(M3) fails at i={0}, j={1}, j'={2}, k={3}")]
    M3Violation(usize, usize, usize, usize),
    #[error("(M4) fails at i={0}, j={1}, k={2}")]
    M4Violation(usize, usize, usize),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error("not a homomorphic image of an affine quandle")]
    NotHomImage,
    #[error("invalid multitransversal: {0}")]
    InvalidMultitransversal(String),
    #[error("operation on the multitransversal is undefined at ({0}, {1})")]
    OplusUndefined(usize, usize),
    #[error("internal assertion failed: {0}")]
    InternalAssertionFailure(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError { line, message: message.into() }
    }
}
