//! Symmetries and reversors of elements of `GL(n,Z)` and `PGL(n,Z)`.
//!
//! A symmetry `s` of `f` commutes with it; a reversor `r` conjugates it to its
//! inverse. In the projective group both relations only need to hold up to
//! the global sign `-I`. Reversors are searched inside the intertwiner
//! lattice of `(f, f⁻¹)`, symmetry groups of `2 x 2` matrices are computed
//! from the unit equation of their commutant, and the reversing symmetry
//! group of a `GL(2,Z)` element of infinite order is classified into one of
//! three structures by the square of a reversor and its action on the
//! fundamental symmetry.

mod classify;
mod lattice;
mod report;
mod search;
mod symmetry;

pub use classify::{classify_two_infty, verify_coset_decomposition, TwoInftyCase, TwoInftyClassification};
pub use lattice::{coefficient_box, integer_kernel, intertwiner_lattice, lll_reduce, IntertwinerLattice};
pub use report::{analyze, Classification, ReversibilityReport, Status};
pub use search::{are_conjugate_bounded, power_of_two_reversor, search_reversors, FoundReversor};
pub use symmetry::{discrete_log_in_symmetries, induced_automorphism, symmetry_generator_2x2, SymmetryDescriptor};

use serde::Serialize;
use thiserror::Error;

use crate::exactmath::{ExactError, Matrix, Poly};
use crate::scalar::IntegerRing;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatGroupError {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("element has dimension {got}, context expects {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("intertwiner lattice is trivial: no reversor exists over Z")]
    EmptyLattice,
    #[error("no generator of the unit group found with coefficients up to {bound}")]
    GeneratorNotFound { bound: i64 },
    #[error("input has finite order; the symmetry group is not of the form F x C∞")]
    FiniteOrderInput,
    #[error("characteristic polynomial is reducible over Z")]
    ReducibleCharPoly,
    #[error("operation requires a 2 x 2 matrix, got {0} x {0}")]
    NotTwoByTwo(usize),
    #[error("symmetry is not ±g^k for |k| <= {bound}")]
    NotInSpan { bound: i64 },
    #[error("reversor has infinite order")]
    InfiniteOrderReversor,
    #[error("matrix is not a reversor of the given element")]
    NotAReversor,
    #[error("σ(g)·g = ±g^{exponent} with exponent != 0: the symmetry generator is not fundamental")]
    SigmaOutsidePlusMinus { exponent: i64 },
    #[error("reversor square is not ±I")]
    ReversorSquareNotCentral,
    #[error("operation is only defined in {0}")]
    UnsupportedContext(&'static str),
}

pub type Result<T> = std::result::Result<T, MatGroupError>;

/// Ambient group: `GL(n,Z)` or, when `projective`, `PGL(n,Z) = GL(n,Z)/{±I}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GroupContext {
    pub dim: usize,
    pub projective: bool,
}

impl GroupContext {
    pub fn gl(dim: usize) -> Self {
        Self { dim, projective: false }
    }

    pub fn pgl(dim: usize) -> Self {
        Self { dim, projective: true }
    }

    pub fn name(&self) -> String {
        format!("{}({},Z)", if self.projective { "PGL" } else { "GL" }, self.dim)
    }

    pub fn check<T: IntegerRing>(&self, m: &Matrix<T>) -> Result<()> {
        if m.dim() != self.dim {
            return Err(MatGroupError::DimensionMismatch {
                expected: self.dim,
                got: m.dim(),
            });
        }
        Ok(())
    }

    fn check_element<T: IntegerRing>(&self, m: &Matrix<T>) -> Result<()> {
        self.check(m)?;
        if !m.is_unimodular() {
            return Err(ExactError::NotUnimodular { det: m.det().to_string() }.into());
        }
        Ok(())
    }

    /// Equality in the group: exact in `GL`, up to sign in `PGL`.
    pub fn same<T: IntegerRing>(&self, a: &Matrix<T>, b: &Matrix<T>) -> bool {
        a == b || (self.projective && *a == -b)
    }

    pub fn is_identity<T: IntegerRing>(&self, a: &Matrix<T>) -> bool {
        self.same(a, &Matrix::identity(a.dim()))
    }

    /// Canonical representative: the matrix itself in `GL`, the sign-normalized
    /// class representative in `PGL`.
    pub fn canonical<T: IntegerRing>(&self, a: &Matrix<T>) -> Matrix<T> {
        if self.projective {
            ProjClass::new(a.clone()).into_inner()
        } else {
            a.clone()
        }
    }
}

/// A matrix modulo global sign, stored with its first nonzero entry (row-major) positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(bound(serialize = "T: crate::scalar::Ring"))]
pub struct ProjClass<T>(Matrix<T>);

impl<T: IntegerRing> ProjClass<T> {
    pub fn new(m: Matrix<T>) -> Self {
        match m.entries().iter().find(|x| !x.is_zero()) {
            Some(x) if x.is_negative() => Self(-m),
            _ => Self(m),
        }
    }

    pub fn representative(&self) -> &Matrix<T> {
        &self.0
    }

    pub fn into_inner(self) -> Matrix<T> {
        self.0
    }
}

/// Search limits shared by the analysis pipeline.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SearchBounds {
    /// Coefficient bound on intertwiner-lattice coordinates.
    pub reversor: i64,
    /// Bound on `|a|, |b|` in the unit equation of a `2 x 2` commutant.
    pub generator: i64,
    /// Largest `|k|` tried when writing a symmetry as `±g^k`.
    pub discrete_log: i64,
}

impl Default for SearchBounds {
    fn default() -> Self {
        Self {
            reversor: 10,
            generator: 50,
            discrete_log: 64,
        }
    }
}

/// `s f s⁻¹ = f` (up to sign in `PGL`).
pub fn is_symmetry<T: IntegerRing>(s: &Matrix<T>, f: &Matrix<T>, ctx: GroupContext) -> Result<bool> {
    ctx.check_element(s)?;
    ctx.check(f)?;
    Ok(ctx.same(&(s * f), &(f * s)))
}

/// `r f r⁻¹ = f⁻¹` (up to sign in `PGL`), tested inverse-free as `f r f = r`.
pub fn is_reversor<T: IntegerRing>(r: &Matrix<T>, f: &Matrix<T>, ctx: GroupContext) -> Result<bool> {
    ctx.check_element(r)?;
    ctx.check(f)?;
    Ok(ctx.same(&(&(f * r) * f), r))
}

/// The grading `h ↦ ±1` on the reversing symmetry group: `Some(1)` for
/// symmetries, `Some(-1)` for reversors, `None` outside the group.
pub fn grade<T: IntegerRing>(h: &Matrix<T>, f: &Matrix<T>, ctx: GroupContext) -> Result<Option<i8>> {
    if is_symmetry(h, f, ctx)? {
        Ok(Some(1))
    } else if is_reversor(h, f, ctx)? {
        Ok(Some(-1))
    } else {
        Ok(None)
    }
}

/// `(-1)^n q(-x)`: characteristic polynomial of `-A` from that of `A`.
fn negate_variable<T: IntegerRing>(q: &Poly<T>) -> Poly<T> {
    let r = q.reflect();
    if q.degree().unwrap_or(0) % 2 == 1 {
        -&r
    } else {
        r
    }
}

/// Characteristic polynomial of `A⁻¹` from that of a unimodular `A`.
fn inverse_char_poly<T: IntegerRing>(p: &Poly<T>) -> Poly<T> {
    let rev = p.reversal();
    // constant term of p is ±1, so normalizing is multiplication by it
    let c0 = p.coeff(0);
    Poly::from_coeffs(rev.coeffs().iter().map(|c| c.clone() * c0.clone()).collect())
}

/// Spectral obstruction to reversibility: a reversor conjugates `f` to `f⁻¹`
/// (or `-f⁻¹` in `PGL`), so their characteristic polynomials must agree.
/// `true` proves irreversibility.
pub fn spectral_obstruction<T: IntegerRing>(char_poly: &Poly<T>, ctx: GroupContext) -> bool {
    let inv = inverse_char_poly(char_poly);
    if inv == *char_poly {
        return false;
    }
    !(ctx.projective && negate_variable(&inv) == *char_poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type M = Matrix<BigInt>;

    #[test]
    fn projective_canonical_sign() {
        let a = M::from_i64s(2, &[0, -1, 1, 0]);
        assert_eq!(ProjClass::new(a.clone()).representative(), &M::from_i64s(2, &[0, 1, -1, 0]));
        assert_eq!(ProjClass::new(a.clone()), ProjClass::new(-a));
    }

    #[test]
    fn symmetry_predicates() {
        let m = M::from_i64s(2, &[1, 2, 1, 3]);
        let gl = GroupContext::gl(2);
        assert!(is_symmetry(&m, &m, gl).unwrap());
        assert!(is_symmetry(&-M::identity(2), &m, gl).unwrap());
        assert!(!is_reversor(&M::identity(2), &m, gl).unwrap());
        let r2 = M::from_i64s(2, &[1, 0, 1, -1]);
        assert!(is_reversor(&r2, &m, gl).unwrap());
        assert_eq!(grade(&r2, &m, gl).unwrap(), Some(-1));
        assert!(matches!(
            is_symmetry(&M::identity(3), &m, gl),
            Err(MatGroupError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn obstruction_depends_on_context() {
        let fib = M::from_i64s(2, &[0, 1, 1, 1]).char_poly();
        assert!(spectral_obstruction(&fib, GroupContext::gl(2)));
        assert!(!spectral_obstruction(&fib, GroupContext::pgl(2)));
        let sq = M::from_i64s(2, &[1, 1, 1, 2]).char_poly();
        assert!(!spectral_obstruction(&sq, GroupContext::gl(2)));
    }
}
