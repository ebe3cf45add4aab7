use serde::Serialize;

use super::{GroupContext, MatGroupError, Result};
use crate::exactmath::{finite_order_test, Matrix, Order};
use crate::scalar::{from_i64, IntegerRing};

/// Symmetry group `S(M) = F x <g>` of a `2 x 2` matrix of infinite order,
/// with `F = {±I}` in `GL(2,Z)` and trivial in `PGL(2,Z)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound(serialize = "T: crate::scalar::Ring"))]
pub struct SymmetryDescriptor<T> {
    /// Order `N` of the finite factor.
    pub finite_part_order: u64,
    /// Generator of the infinite cyclic factor, normalized to positive trace.
    pub generator: Matrix<T>,
    /// The commutant is `Z·I + Z·K`; `K = M` for primitive `M`.
    pub commutant_basis: Matrix<T>,
    /// `generator = a·I + b·K`.
    #[serde(serialize_with = "crate::serde_display::pair")]
    pub unit_coordinates: (T, T),
    /// Sign `ε` in `M = ε·g^m`.
    pub f_sign: i8,
    /// Exponent `m >= 1` in `M = ε·g^m`.
    pub f_exponent: i64,
}

/// `r s r⁻¹`
pub fn induced_automorphism<T: IntegerRing>(r: &Matrix<T>, s: &Matrix<T>, ctx: GroupContext) -> Result<Matrix<T>> {
    ctx.check(r)?;
    ctx.check(s)?;
    let r_inv = r.inverse_unimodular()?;
    Ok(&(r * s) * &r_inv)
}

/// Writes `s` as `ε·g^k` with `|k| <= bound`, trying `k = 0, 1, -1, 2, -2, ...`.
///
/// In `PGL` the sign is whichever matches the given representative.
pub fn discrete_log_in_symmetries<T: IntegerRing>(s: &Matrix<T>, desc: &SymmetryDescriptor<T>, bound: i64) -> Result<(i8, i64)> {
    discrete_log(s, &desc.generator, bound)
}

fn discrete_log<T: IntegerRing>(s: &Matrix<T>, g: &Matrix<T>, bound: i64) -> Result<(i8, i64)> {
    if s.dim() != g.dim() {
        return Err(MatGroupError::DimensionMismatch {
            expected: g.dim(),
            got: s.dim(),
        });
    }
    let g_inv = g.inverse_unimodular()?;
    let neg_s = -s;
    let mut up = Matrix::identity(g.dim());
    let mut down = up.clone();
    let matches = |p: &Matrix<T>| {
        if p == s {
            Some(1)
        } else if *p == neg_s {
            Some(-1)
        } else {
            None
        }
    };
    if let Some(e) = matches(&up) {
        return Ok((e, 0));
    }
    for k in 1..=bound {
        up = &up * g;
        if let Some(e) = matches(&up) {
            return Ok((e, k));
        }
        down = &down * &g_inv;
        if let Some(e) = matches(&down) {
            return Ok((e, -k));
        }
    }
    Err(MatGroupError::NotInSpan { bound })
}

fn int_sqrt_exact<T: IntegerRing>(x: &T) -> bool {
    if x.is_negative() {
        return false;
    }
    let r = num_integer::Roots::sqrt(x);
    r.clone() * r == *x
}

/// Largest `|k|` worth trying when expressing bounded units as powers of a
/// candidate generator: the trace of `g^k` grows at least like Fibonacci numbers.
const UNIT_LOG_BOUND: i64 = 256;

/// Fundamental symmetry of a `2 x 2` matrix with irreducible characteristic
/// polynomial, found by bounded search on the unit equation.
///
/// The integer commutant of a non-scalar `M` is `Z·I + Z·K` with
/// `K = (M - m₀₀·I)/h`, `h = gcd(m₀₁, m₁₀, m₁₁ - m₀₀)` (and `K = M` when
/// `h = 1`). Its units are the solutions of
/// `a² + tr(K)·ab + det(K)·b² = ±1`. Among the solutions with
/// `|a|, |b| <= search_bound` and `b != 0`, the one of least `|trace|`
/// that generates every other bounded solution up to sign is chosen, then
/// oriented so that `M = ±g^m` with `m >= 1` and `tr(g) > 0`.
pub fn symmetry_generator_2x2<T: IntegerRing>(m: &Matrix<T>, ctx: GroupContext, search_bound: i64) -> Result<SymmetryDescriptor<T>> {
    if m.dim() != 2 {
        return Err(MatGroupError::NotTwoByTwo(m.dim()));
    }
    ctx.check(m)?;
    if finite_order_test(m, ctx.projective)? != Order::Infinite {
        return Err(MatGroupError::FiniteOrderInput);
    }
    let tr = m.trace();
    let det = m.det();
    let disc = tr.clone() * tr - from_i64::<T>(4) * det;
    if int_sqrt_exact(&disc) {
        return Err(MatGroupError::ReducibleCharPoly);
    }

    let (m00, m01, m10, m11) = (m.get(0, 0).clone(), m.get(0, 1).clone(), m.get(1, 0).clone(), m.get(1, 1).clone());
    let h = m01.gcd(&m10).gcd(&(m11.clone() - m00.clone()));
    let k = if h.is_one() {
        m.clone()
    } else {
        let shifted = m - &Matrix::scalar(2, m00);
        Matrix::new(2, shifted.entries().iter().map(|x| x.clone() / h.clone()).collect())?
    };
    let kt = k.trace();
    let kd = k.det();
    let unit = |a: &T, b: &T| {
        let v = a.clone() * a.clone() + kt.clone() * a.clone() * b.clone() + kd.clone() * b.clone() * b.clone();
        v.is_one() || (-v).is_one()
    };

    let mut candidates = Vec::new();
    for a in -search_bound..=search_bound {
        for b in -search_bound..=search_bound {
            if b == 0 {
                continue;
            }
            let (at, bt) = (from_i64::<T>(a), from_i64::<T>(b));
            if unit(&at, &bt) {
                let g = &Matrix::scalar(2, at.clone()) + &k.scale(&bt);
                candidates.push((g.trace().abs(), a.abs().max(b.abs()), a, b, g));
            }
        }
    }
    candidates.sort_by(|x, y| (&x.0, x.1, x.2, x.3).cmp(&(&y.0, y.1, y.2, y.3)));

    let generates_all = |g: &Matrix<T>| {
        candidates
            .iter()
            .all(|c| discrete_log(&c.4, g, UNIT_LOG_BOUND).is_ok())
            && discrete_log(m, g, UNIT_LOG_BOUND).is_ok()
    };
    let mut g = candidates
        .iter()
        .map(|c| c.4.clone())
        .find(|g| generates_all(g))
        .ok_or(MatGroupError::GeneratorNotFound { bound: search_bound })?;

    let (_, e) = discrete_log(m, &g, UNIT_LOG_BOUND)?;
    if e < 0 {
        g = g.inverse_unimodular()?;
    }
    if g.trace().is_negative() {
        g = -g;
    }
    let (sign, exponent) = discrete_log(m, &g, UNIT_LOG_BOUND)?;
    debug_assert!(exponent > 0);

    let b0 = if !k.get(0, 1).is_zero() {
        g.get(0, 1).clone() / k.get(0, 1).clone()
    } else {
        g.get(1, 0).clone() / k.get(1, 0).clone()
    };
    let a0 = g.get(0, 0).clone() - b0.clone() * k.get(0, 0).clone();

    Ok(SymmetryDescriptor {
        finite_part_order: if ctx.projective { 1 } else { 2 },
        generator: g,
        commutant_basis: k,
        unit_coordinates: (a0, b0),
        f_sign: sign,
        f_exponent: exponent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type M = Matrix<BigInt>;

    #[test]
    fn fibonacci_generates_itself() {
        let m = M::from_i64s(2, &[0, 1, 1, 1]);
        let d = symmetry_generator_2x2(&m, GroupContext::pgl(2), 50).unwrap();
        assert_eq!(d.generator, m);
        assert_eq!(d.f_exponent, 1);
        assert_eq!(d.finite_part_order, 1);
    }

    #[test]
    fn square_has_fibonacci_root() {
        let m = M::from_i64s(2, &[1, 1, 1, 2]);
        let d = symmetry_generator_2x2(&m, GroupContext::gl(2), 50).unwrap();
        assert_eq!(d.generator, M::from_i64s(2, &[0, 1, 1, 1]));
        assert_eq!((d.f_sign, d.f_exponent), (1, 2));
        assert_eq!(d.unit_coordinates, (BigInt::from(-1), BigInt::from(1)));
    }

    #[test]
    fn non_primitive_matrix_uses_reduced_commutant() {
        // M = I + 2K with K = [[0,1],[1,1]]; the commutant contains K itself
        let m = M::from_i64s(2, &[1, 2, 2, 3]);
        let d = symmetry_generator_2x2(&m, GroupContext::gl(2), 50).unwrap();
        assert_eq!(d.commutant_basis, M::from_i64s(2, &[0, 1, 1, 1]));
        assert_eq!(d.generator, M::from_i64s(2, &[0, 1, 1, 1]));
        assert_eq!(d.f_exponent, 3);
    }

    #[test]
    fn rejects_bad_inputs() {
        let gl = GroupContext::gl(2);
        assert_eq!(
            symmetry_generator_2x2(&M::from_i64s(2, &[0, -1, 1, 0]), gl, 10),
            Err(MatGroupError::FiniteOrderInput)
        );
        assert_eq!(
            symmetry_generator_2x2(&M::from_i64s(2, &[1, 1, 0, 1]), gl, 10),
            Err(MatGroupError::ReducibleCharPoly)
        );
        assert_eq!(
            symmetry_generator_2x2(&M::identity(3), GroupContext::gl(3), 10),
            Err(MatGroupError::NotTwoByTwo(3))
        );
    }

    #[test]
    fn discrete_logs() {
        let g = M::from_i64s(2, &[0, 1, 1, 1]);
        let d = symmetry_generator_2x2(&M::from_i64s(2, &[1, 1, 1, 2]), GroupContext::gl(2), 50).unwrap();
        assert_eq!(discrete_log_in_symmetries(&M::identity(2), &d, 5).unwrap(), (1, 0));
        assert_eq!(discrete_log_in_symmetries(&-&g, &d, 5).unwrap(), (-1, 1));
        assert_eq!(discrete_log_in_symmetries(&M::from_i64s(2, &[1, 1, 1, 2]), &d, 5).unwrap(), (1, 2));
        assert_eq!(
            discrete_log_in_symmetries(&M::from_i64s(2, &[1, 0, 1, -1]), &d, 5),
            Err(MatGroupError::NotInSpan { bound: 5 })
        );
    }
}
