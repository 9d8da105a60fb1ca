use alloc::string::String;

use crate::Rational;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("position {pos} out of range 1..={s}")]
    PositionOutOfRange { pos: usize, s: usize },
    #[error("positions must be strictly increasing")]
    NonIncreasing,
    #[error("positions must be distinct")]
    RepeatedPosition,
    #[error("operator on {r} factors does not fit into {s} factors")]
    TooManyFactors { r: usize, s: usize },
    #[error("operator must act on a power of a single graded space")]
    MixedFactors,
    #[error("operator is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("space is not a two-factor product")]
    NotTwoFactor,
    #[error("matrix is singular")]
    Singular,
    #[error("vector is not in the span of the basis")]
    NotInSpan,
    #[error("osp(M|N) requires even N, got N = {0}")]
    OddN(usize),
    #[error("omega=2: Killing metric degenerate")]
    OspOmegaTwo,
    #[error("sl({0}|{0}) is not simple: Killing metric degenerate")]
    SlSquare(usize),
    #[error("pole of R(u) at u = {0}")]
    Pole(Rational),
    #[error("roots are not pairwise distinct")]
    RepeatedRoot,
    #[error("multiplicity must be at least 1")]
    ZeroMultiplicity,
    #[error("operator is not idempotent")]
    NotIdempotent,
    #[error("dimension is not a non-negative integer: {0}")]
    BadDimension(Rational),
    #[error("str2(C^{0}) is not proportional to the identity")]
    NotScalar(u32),
    #[error("unavailable: {0}")]
    Unavailable(String),
}
