//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("diagram is not alternating")]
    NotAlternating,

    #[error("diagram is not reduced (nugatory crossing produces a checkerboard loop)")]
    NotReduced,

    #[error("checkerboard graph of an alternating diagram has mixed edge signs (convention bug)")]
    MixedSigns,

    #[error("graph did not originate from this diagram")]
    NotCheckerboard,

    #[error("Jones prefactor exponent (b - a + 3w)/4 = {0}/4 is not an integer (convention bug)")]
    NonIntegralShift(i64),

    #[error(
        "bracket exponent {0} is not a multiple of 4 after writhe correction (convention bug)"
    )]
    NonIntegralExponent(i64),

    #[error("input too large: {0}")]
    TooLarge(String),

    #[error("graph has loops")]
    HasLoops,

    #[error("edge {0} not found")]
    EdgeNotFound(usize),

    #[error("cannot contract a loop")]
    ContractLoop,

    #[error("zero polynomial has no coefficient span")]
    ZeroPolynomial,

    #[error("bad argument: {0}")]
    BadArgument(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("census row {row}: {reason}")]
    Csv { row: usize, reason: String },
}
