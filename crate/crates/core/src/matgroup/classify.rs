use std::fmt;

use serde::Serialize;

use super::search::search_reversors;
use super::symmetry::{discrete_log_in_symmetries, induced_automorphism, symmetry_generator_2x2, SymmetryDescriptor};
use super::{is_reversor, is_symmetry, spectral_obstruction, GroupContext, MatGroupError, Result, SearchBounds};
use crate::exactmath::Matrix;
use crate::scalar::IntegerRing;

/// Reversing symmetry group structure for `S(f) ≅ C2 x C∞`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TwoInftyCase {
    /// `R ≅ C2 x D∞`, every reversor an involution.
    Case1,
    /// `R ≅ C∞ ⋊ C4`, every reversor of order 4.
    Case2,
    /// `R ≅ (C2 x C∞) ⋊ C2`, reversors of order 2 and 4.
    Case3,
    IrreversibleProven,
    Inconclusive { bound: i64 },
}

impl TwoInftyCase {
    pub fn structure(&self) -> Option<&'static str> {
        match self {
            TwoInftyCase::Case1 => Some("C2 x D∞"),
            TwoInftyCase::Case2 => Some("C∞ ⋊ C4"),
            TwoInftyCase::Case3 => Some("(C2 x C∞) ⋊ C2"),
            _ => None,
        }
    }

    /// Reversor orders the case predicts.
    pub fn reversor_orders(&self) -> &'static [u64] {
        match self {
            TwoInftyCase::Case1 => &[2],
            TwoInftyCase::Case2 => &[4],
            TwoInftyCase::Case3 => &[2, 4],
            _ => &[],
        }
    }
}

impl fmt::Display for TwoInftyCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TwoInftyCase::Case1 => write!(f, "case 1: C2 x D∞"),
            TwoInftyCase::Case2 => write!(f, "case 2: C∞ ⋊ C4"),
            TwoInftyCase::Case3 => write!(f, "case 3: (C2 x C∞) ⋊ C2"),
            TwoInftyCase::IrreversibleProven => write!(f, "irreversible"),
            TwoInftyCase::Inconclusive { bound } => write!(f, "inconclusive up to bound {bound}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound(serialize = "T: crate::scalar::Ring"))]
pub struct TwoInftyClassification<T> {
    pub case: TwoInftyCase,
    pub symmetry: SymmetryDescriptor<T>,
    /// The reversor the decision was made with, after normalization.
    pub witness: Option<Matrix<T>>,
    /// Sign `ε` with `r² = ε·I`.
    pub reversor_square: Option<i8>,
    /// Sign `ε` with `σ_r(g)·g = ε·I`.
    pub sigma_sign: Option<i8>,
}

fn sign_of_scalar<T: IntegerRing>(x: &Matrix<T>) -> Option<i8> {
    let id = Matrix::identity(x.dim());
    if *x == id {
        Some(1)
    } else if *x == -&id {
        Some(-1)
    } else {
        None
    }
}

/// `(sign of r², sign of σ_r(g)·g)` for a reversor `r`.
fn signature<T: IntegerRing>(r: &Matrix<T>, desc: &SymmetryDescriptor<T>, ctx: GroupContext, dl_bound: i64) -> Result<(i8, i8)> {
    let sq = sign_of_scalar(&r.pow(2)).ok_or(MatGroupError::ReversorSquareNotCentral)?;
    let g = &desc.generator;
    let sg = &induced_automorphism(r, g, ctx)? * g;
    let (eps, k) = discrete_log_in_symmetries(&sg, desc, dl_bound)?;
    if k != 0 {
        return Err(MatGroupError::SigmaOutsidePlusMinus { exponent: k });
    }
    Ok((sq, eps))
}

/// Classifies `R(M)` for `M in GL(2,Z)` of infinite order with irreducible
/// characteristic polynomial, where `S(M) = {±I} x <g>`.
///
/// With a reversor `r`: `r² = I, σ(g)g = I` gives case 1; `r² = -I, σ(g)g = I`
/// case 2; `r² = I, σ(g)g = -I` case 3. The remaining combination is
/// normalized by passing to the involution `r·g`, which lands in case 3.
pub fn classify_two_infty<T: IntegerRing>(m: &Matrix<T>, ctx: GroupContext, bounds: SearchBounds) -> Result<TwoInftyClassification<T>> {
    if ctx.projective {
        return Err(MatGroupError::UnsupportedContext("GL(2,Z)"));
    }
    let desc = symmetry_generator_2x2(m, ctx, bounds.generator)?;
    let reversors = match search_reversors(m, ctx, bounds.reversor) {
        Ok(r) => r,
        Err(MatGroupError::EmptyLattice) => Vec::new(),
        Err(e) => return Err(e),
    };
    let Some(first) = reversors
        .iter()
        .find(|r| r.order == crate::exactmath::Order::Finite(2))
        .or_else(|| reversors.first())
    else {
        let case = if spectral_obstruction(&m.char_poly(), ctx) {
            TwoInftyCase::IrreversibleProven
        } else {
            TwoInftyCase::Inconclusive { bound: bounds.reversor }
        };
        return Ok(TwoInftyClassification {
            case,
            symmetry: desc,
            witness: None,
            reversor_square: None,
            sigma_sign: None,
        });
    };

    let mut r = first.matrix.clone();
    let (mut sq, mut sigma) = signature(&r, &desc, ctx, bounds.discrete_log)?;
    if (sq, sigma) == (-1, -1) {
        r = &r * &desc.generator;
        (sq, sigma) = signature(&r, &desc, ctx, bounds.discrete_log)?;
    }
    let case = match (sq, sigma) {
        (1, 1) => TwoInftyCase::Case1,
        (-1, 1) => TwoInftyCase::Case2,
        (1, -1) => TwoInftyCase::Case3,
        _ => unreachable!("r·g is an involution when r² = -I and σ(g)g = -I"),
    };
    Ok(TwoInftyClassification {
        case,
        symmetry: desc,
        witness: Some(r),
        reversor_square: Some(sq),
        sigma_sign: Some(sigma),
    })
}

/// Checks `R(f) = S(f) ∪ r·S(f)` within bounds: every reversor found by the
/// lattice search is `r·s` with `s = ±g^k`, and every `r·(±g^k)` with
/// `|k| <= bound` is a reversor.
pub fn verify_coset_decomposition<T: IntegerRing>(
    f: &Matrix<T>,
    desc: &SymmetryDescriptor<T>,
    r: &Matrix<T>,
    ctx: GroupContext,
    bounds: SearchBounds,
) -> Result<bool> {
    if !is_reversor(r, f, ctx)? {
        return Err(MatGroupError::NotAReversor);
    }
    let r_inv = r.inverse_unimodular()?;
    let found = match search_reversors(f, ctx, bounds.reversor) {
        Ok(found) => found,
        Err(MatGroupError::EmptyLattice) => Vec::new(),
        Err(e) => return Err(e),
    };
    for x in &found {
        let s = &r_inv * &x.matrix;
        if !is_symmetry(&s, f, ctx)? {
            return Ok(false);
        }
        discrete_log_in_symmetries(&s, desc, bounds.discrete_log)?;
    }
    let g_inv = desc.generator.inverse_unimodular()?;
    let mut up = Matrix::identity(ctx.dim);
    let mut down = up.clone();
    for k in 0..=bounds.reversor {
        if k > 0 {
            up = &up * &desc.generator;
            down = &down * &g_inv;
        }
        for s in [&up, &down] {
            for cand in [r * s, r * &-s] {
                if !is_reversor(&cand, f, ctx)? {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{finite_order_test, Order};
    use num_bigint::BigInt;

    type M = Matrix<BigInt>;

    #[test]
    fn structure_cases() {
        let gl = GroupContext::gl(2);
        let b = SearchBounds::default();
        let c = |e: [i64; 4]| classify_two_infty(&M::from_i64s(2, &e), gl, b).unwrap().case;
        assert_eq!(c([1, 2, 1, 3]), TwoInftyCase::Case1);
        assert_eq!(c([5, 7, 7, 10]), TwoInftyCase::Case2);
        assert_eq!(c([1, 1, 1, 2]), TwoInftyCase::Case3);
        assert_eq!(c([0, 1, 1, 1]), TwoInftyCase::IrreversibleProven);
    }

    #[test]
    fn rejects_projective_context() {
        let err = classify_two_infty(&M::from_i64s(2, &[0, 1, 1, 1]), GroupContext::pgl(2), SearchBounds::default());
        assert!(matches!(err, Err(MatGroupError::UnsupportedContext(_))));
    }

    #[test]
    fn case3_signature_of_involutory_reversor() {
        let gl = GroupContext::gl(2);
        let f = M::from_i64s(2, &[1, 1, 1, 2]);
        let g = M::from_i64s(2, &[0, 1, 1, 1]);
        let r2 = M::from_i64s(2, &[1, 0, 1, -1]);
        let sg = &induced_automorphism(&r2, &g, gl).unwrap() * &g;
        assert_eq!(sg, -M::identity(2));
        // r2·g^k alternates between orders 2 and 4
        let desc = symmetry_generator_2x2(&f, gl, 50).unwrap();
        for k in 0..6u64 {
            let rk = &r2 * &g.pow(k);
            let expected = if k % 2 == 0 { 2 } else { 4 };
            assert_eq!(finite_order_test(&rk, false).unwrap(), Order::Finite(expected));
        }
        assert!(verify_coset_decomposition(&f, &desc, &r2, gl, SearchBounds { reversor: 4, ..Default::default() }).unwrap());
    }

    #[test]
    fn case2_reversor_inverts_generator() {
        let gl = GroupContext::gl(2);
        let f = M::from_i64s(2, &[5, 7, 7, 10]);
        let desc = symmetry_generator_2x2(&f, gl, 50).unwrap();
        let r4 = M::from_i64s(2, &[0, -1, 1, 0]);
        let g = &desc.generator;
        assert_eq!(induced_automorphism(&r4, g, gl).unwrap(), g.inverse_unimodular().unwrap());
    }
}
