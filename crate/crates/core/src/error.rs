use thiserror::Error;

use crate::geometry::TriangleRecord;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("denominator vanishes: {0}")]
    DenominatorZero(&'static str),
    #[error("degenerate parameters: {0}")]
    DegenerateParams(&'static str),
    #[error("singular curve")]
    SingularCurve,
    #[error("point is not on the curve")]
    NotOnCurve,
    #[error("point has finite order {0}; its canonical height is 0")]
    TorsionPoint(u32),
    #[error("precondition violated: {0}")]
    Precondition(&'static str),
    #[error("exceptional denominator in {0}")]
    ExceptionalDenominator(&'static str),
    #[error("point at infinity has no triangle")]
    InfinitePoint,
    #[error("degenerate triangle")]
    DegenerateTriangle,
    #[error("slope m = 0 is not supported here")]
    ZeroSlope,
    #[error("invalid base point: {0}")]
    InvalidBase(&'static str),
    #[error("rank witness is torsion; only {} triangles exist among its multiples", partial.len())]
    WitnessTorsionExhausted { partial: Vec<TriangleRecord> },
}
