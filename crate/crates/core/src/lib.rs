//! Exact reversibility analysis for group elements.
//!
//! The crate detects reversors (elements `r` with `r f r⁻¹ = f⁻¹`) of integer
//! matrices in `GL(n,Z)` and `PGL(n,Z)`, planar and three-dimensional
//! polynomial automorphisms, and elliptic-curve translations, and classifies
//! the reversing symmetry group into its known structural cases. All
//! arithmetic is exact.

pub mod exactmath;
pub mod matgroup;
pub mod absgroup;
pub mod elliptic;
pub mod numth;
pub mod polyauto;
pub mod scalar;
pub mod scoreboard;
mod serde_display;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

pub use exactmath::{Matrix, Order, Poly, Reciprocity};

/// Integer matrix with arbitrary-precision entries.
pub type IntMatrix = Matrix<BigInt>;
/// Dense univariate integer polynomial.
pub type IntPoly = Poly<BigInt>;
/// Exact rational scalar.
pub type Rational = BigRational;
/// Rational polynomial in several variables.
pub type RatPoly = polyauto::MultiPoly<BigRational>;
/// Rational polynomial self-map of affine space.
pub type RatMap = polyauto::PolyMap<BigRational>;
/// Elliptic curve over the rationals.
pub type RatCurve = elliptic::Curve<BigRational>;
/// Rational point of an elliptic curve.
pub type RatPoint = elliptic::CurvePoint<BigRational>;
