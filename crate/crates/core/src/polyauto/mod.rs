//! Exact composition of multivariate polynomial maps and the reversibility
//! identities of planar polynomial automorphisms and the Fibonacci trace map.
//!
//! Reversors are checked inverse-free: `r f r⁻¹ = f⁻¹` holds iff
//! `f ∘ r ∘ f = r` for invertible maps, so no inversion algorithm is needed.

mod families;
mod map;
mod multipoly;

pub use families::{
    build_example_family, case2_involution_search, check_family, default_parameters, fricke_vogt_invariant, negation,
    trace_map, trace_map_suite, ExampleFamily, FamilyReport, NonInvolutionWitness, TraceMapReport,
};
pub use map::{
    check_reversor_identity, check_symmetry_identity, compose, iterate, map_order, max_degree, poly_map_equal, MapChain,
    PolyMap, DEFAULT_MAX_DEGREE,
};
pub use multipoly::{Monomial, MultiPoly};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyAutoError {
    #[error("expected {expected} variables, got {got}")]
    VariableCountMismatch { expected: usize, got: usize },
    #[error("composition would reach total degree {degree}, above the limit {limit}")]
    DegreeLimitExceeded { degree: u32, limit: u32 },
    #[error("polynomial {0} is not odd")]
    OddnessViolated(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}

pub type Result<T> = std::result::Result<T, PolyAutoError>;
