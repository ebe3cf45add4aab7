use std::collections::HashSet;

use serde::Serialize;

use super::lattice::{coefficient_box, intertwiner_lattice, IntertwinerLattice};
use super::{is_reversor, GroupContext, MatGroupError, Result};
use crate::exactmath::{finite_order_test, Matrix, Order};
use crate::scalar::IntegerRing;

/// A reversor located by lattice search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound(serialize = "T: crate::scalar::Ring"))]
pub struct FoundReversor<T> {
    pub matrix: Matrix<T>,
    pub order: Order,
    /// Which target lattice: `false` for `X f = f⁻¹ X`, `true` for `X f = -f⁻¹ X` (PGL only).
    pub sign_variant: bool,
    pub coefficients: Vec<i64>,
}

/// Lattices whose unimodular points map `a` to `b` by conjugation within the context.
fn target_lattices<T: IntegerRing>(a: &Matrix<T>, b: &Matrix<T>, ctx: GroupContext) -> Vec<(bool, IntertwinerLattice<T>)> {
    let mut out = vec![(false, intertwiner_lattice(a, b))];
    if ctx.projective {
        out.push((true, intertwiner_lattice(a, &-b)));
    }
    out
}

/// All reversors `X = Σ c_i·basis_i` with `|c_i| <= coeff_bound` of the
/// intertwiner lattice of `(f, f⁻¹)`, with their orders.
///
/// Output is sorted by (lattice, coefficient vector). In `PGL` the results are
/// canonical class representatives, deduplicated. An empty lattice is an
/// error because it proves that no reversor exists at all.
pub fn search_reversors<T: IntegerRing>(f: &Matrix<T>, ctx: GroupContext, coeff_bound: i64) -> Result<Vec<FoundReversor<T>>> {
    ctx.check(f)?;
    let f_inv = f.inverse_unimodular()?;
    if f.pow(2) == Matrix::identity(ctx.dim) || (ctx.projective && ctx.is_identity(&f.pow(2))) {
        log::warn!("search_reversors: f² = 1, every symmetry is also a reversor");
    }
    let lattices = target_lattices(f, &f_inv, ctx);
    if lattices.iter().all(|(_, l)| l.is_trivial()) {
        return Err(MatGroupError::EmptyLattice);
    }
    let mut seen = HashSet::new();
    let mut found = Vec::new();
    for (sign_variant, lattice) in lattices {
        if lattice.is_trivial() {
            continue;
        }
        for coeffs in coefficient_box(lattice.rank(), coeff_bound) {
            let x = lattice.combination(&coeffs);
            if !x.is_unimodular() {
                continue;
            }
            let x = ctx.canonical(&x);
            if !seen.insert(x.clone()) {
                continue;
            }
            debug_assert!(is_reversor(&x, f, ctx).unwrap_or(false));
            let order = finite_order_test(&x, ctx.projective)?;
            found.push(FoundReversor {
                matrix: x,
                order,
                sign_variant,
                coefficients: coeffs,
            });
        }
    }
    Ok(found)
}

/// Bounded conjugacy search: a unimodular `X` with `X A X⁻¹ = B` (up to sign
/// in `PGL`) whose lattice coordinates are at most `coeff_bound`.
///
/// `None` only means no conjugator was found within the bound. Candidates are
/// tried by increasing sup-norm of their coordinates.
pub fn are_conjugate_bounded<T: IntegerRing>(a: &Matrix<T>, b: &Matrix<T>, ctx: GroupContext, coeff_bound: i64) -> Result<Option<Matrix<T>>> {
    ctx.check(a)?;
    ctx.check(b)?;
    if ctx.same(a, b) {
        return Ok(Some(Matrix::identity(ctx.dim)));
    }
    for (_, lattice) in target_lattices(a, b, ctx) {
        if lattice.is_trivial() {
            continue;
        }
        let mut coords: Vec<Vec<i64>> = coefficient_box(lattice.rank(), coeff_bound).collect();
        coords.sort_by_key(|c| c.iter().map(|x| x.abs()).max().unwrap_or(0));
        for c in coords {
            let x = lattice.combination(&c);
            if x.is_unimodular() {
                return Ok(Some(x));
            }
        }
    }
    Ok(None)
}

/// Replaces a reversor of order `2^ℓ (2m+1)` by its `(2m+1)`-th power,
/// a reversor of order `2^ℓ`.
pub fn power_of_two_reversor<T: IntegerRing>(r: &Matrix<T>, f: &Matrix<T>, ctx: GroupContext) -> Result<Matrix<T>> {
    if !is_reversor(r, f, ctx)? {
        return Err(MatGroupError::NotAReversor);
    }
    match finite_order_test(r, ctx.projective)? {
        Order::Infinite => Err(MatGroupError::InfiniteOrderReversor),
        Order::Finite(k) => {
            let odd = k >> k.trailing_zeros();
            Ok(r.pow(odd))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type M = Matrix<BigInt>;

    fn contains(found: &[FoundReversor<BigInt>], m: &M) -> bool {
        found.iter().any(|r| &r.matrix == m)
    }

    #[test]
    fn structure_case_examples() {
        let gl = GroupContext::gl(2);
        let r2 = M::from_i64s(2, &[1, 0, 1, -1]);
        let r4 = M::from_i64s(2, &[0, -1, 1, 0]);

        let found = search_reversors(&M::from_i64s(2, &[1, 2, 1, 3]), gl, 3).unwrap();
        assert!(contains(&found, &r2));

        let found = search_reversors(&M::from_i64s(2, &[5, 7, 7, 10]), gl, 3).unwrap();
        assert!(contains(&found, &r4));
        assert!(found.iter().all(|r| r.order == Order::Finite(4)));

        let found = search_reversors(&M::from_i64s(2, &[1, 1, 1, 2]), gl, 3).unwrap();
        assert!(contains(&found, &r2) && contains(&found, &r4));
    }

    #[test]
    fn fibonacci_is_irreversible_in_gl() {
        let fib = M::from_i64s(2, &[0, 1, 1, 1]);
        assert_eq!(search_reversors(&fib, GroupContext::gl(2), 5), Err(MatGroupError::EmptyLattice));
        let found = search_reversors(&fib, GroupContext::pgl(2), 5).unwrap();
        assert!(!found.is_empty());
        assert!(found.iter().all(|r| r.order == Order::Finite(2)));
    }

    #[test]
    fn power_of_two() {
        let gl = GroupContext::gl(2);
        let m = M::from_i64s(2, &[1, 2, 1, 3]);
        let r2 = M::from_i64s(2, &[1, 0, 1, -1]);
        assert_eq!(power_of_two_reversor(&r2, &m, gl).unwrap(), r2);
        assert_eq!(power_of_two_reversor(&M::identity(2), &m, gl), Err(MatGroupError::NotAReversor));

        // block-diagonal reversor of order 12 = 4 * 3
        let gl4 = GroupContext::gl(4);
        let f = M::from_i64s(4, &[5, 7, 0, 0, 7, 10, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1]);
        let r = M::from_i64s(4, &[0, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 1, -1]);
        assert_eq!(finite_order_test(&r, false).unwrap(), Order::Finite(12));
        let r4 = power_of_two_reversor(&r, &f, gl4).unwrap();
        assert_eq!(r4, r.pow(3));
        assert_eq!(finite_order_test(&r4, false).unwrap(), Order::Finite(4));
        assert!(is_reversor(&r4, &f, gl4).unwrap());
    }

    #[test]
    fn conjugacy() {
        let pgl = GroupContext::pgl(2);
        let r = M::from_i64s(2, &[1, 0, 1, -1]);
        let rp = M::from_i64s(2, &[0, -1, 1, 0]);
        assert_eq!(are_conjugate_bounded(&r, &r, pgl, 3).unwrap(), Some(M::identity(2)));
        assert_eq!(are_conjugate_bounded(&r, &rp, pgl, 10).unwrap(), None);
    }
}
