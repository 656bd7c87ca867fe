//! Exact constructions of rational triangles from rational points on
//! algebraic curves.
//!
//! Three families are covered:
//!
//! * [`isosceles`]: isosceles triangles over a fixed rational base, from a
//!   genus-0 parametrization of the perpendicular bisector.
//! * [`heron`]: Heron triangles with base `|q|` and apex on `y = mx + 1`,
//!   in correspondence with rational points of an elliptic curve `E_{m,q}`.
//! * [`genus3`]: triangles with base `|q|` and apex on the parabola
//!   `x = y^2`, i.e. rational points on a genus-3 curve in P^4.
//!
//! All arithmetic is exact over [`Rational`]. The only floating-point values
//! anywhere are canonical-height estimates in [`weierstrass`], which feed a
//! heuristic independence test and nothing else.

pub mod error;
pub mod exact;
pub mod genus3;
pub mod geometry;
pub mod heron;
pub mod isosceles;
pub mod weierstrass;

pub use error::{Error, Result};
pub use exact::Rational;
pub use geometry::{Point2, Tag, Triangle, TriangleRecord};
pub use weierstrass::{EcPoint, WeierstrassCurve};
