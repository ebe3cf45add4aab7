//! Integer solution lattices of linear matrix equations.
//!
//! The intertwiner lattice `{X in Z^{n x n} : X A = B X}` is the integer
//! kernel of the `n² x n²` map `X -> XA - BX`. The kernel is found by
//! unimodular column reduction (a column Hermite sweep that tracks the
//! transform), then LLL-reduced so that small lattice points have small
//! coordinates.

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::exactmath::Matrix;
use crate::scalar::{from_i64, IntegerRing};

/// Z-basis of an intertwiner lattice, each basis element an `n x n` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntertwinerLattice<T> {
    pub dim: usize,
    pub basis: Vec<Matrix<T>>,
}

impl<T: IntegerRing> IntertwinerLattice<T> {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.basis.is_empty()
    }

    /// `Σ c_i · basis_i`
    pub fn combination(&self, coeffs: &[i64]) -> Matrix<T> {
        assert_eq!(coeffs.len(), self.basis.len());
        let mut acc = Matrix::zero(self.dim);
        for (c, b) in coeffs.iter().zip(&self.basis) {
            if *c != 0 {
                acc = &acc + &b.scale(&from_i64(*c));
            }
        }
        acc
    }

    /// Coordinates of `x` in the basis, if `x` lies in the lattice.
    pub fn coordinates(&self, x: &Matrix<T>) -> Option<Vec<T>> {
        let rows: Vec<Vec<T>> = self.basis.iter().map(|b| b.entries().to_vec()).collect();
        solve_integer_combination(&rows, x.entries())
    }
}

/// Integer kernel basis of the linear map `X -> X·A - B·X`.
pub fn intertwiner_lattice<T: IntegerRing>(a: &Matrix<T>, b: &Matrix<T>) -> IntertwinerLattice<T> {
    let n = a.dim();
    assert_eq!(n, b.dim(), "intertwiner of matrices with different dimensions");
    let k = n * n;
    let mut rows = vec![vec![T::zero(); k]; k];
    for i in 0..n {
        for j in 0..n {
            let row = &mut rows[i * n + j];
            for q in 0..n {
                row[i * n + q] = row[i * n + q].clone() + a.get(q, j).clone();
            }
            for p in 0..n {
                row[p * n + j] = row[p * n + j].clone() - b.get(i, p).clone();
            }
        }
    }
    let kernel = lll_reduce(integer_kernel(&rows, k));
    IntertwinerLattice {
        dim: n,
        basis: kernel
            .into_iter()
            .map(|v| Matrix::new(n, v).expect("kernel vectors have n² entries"))
            .collect(),
    }
}

/// Z-basis of `{x in Z^cols : rows · x = 0}`.
pub fn integer_kernel<T: IntegerRing>(rows: &[Vec<T>], cols: usize) -> Vec<Vec<T>> {
    // column j of the working matrix lives in work[j], its transform in trans[j]
    let m = rows.len();
    let mut work: Vec<Vec<T>> = (0..cols)
        .map(|j| rows.iter().map(|r| r[j].clone()).collect())
        .collect();
    let mut trans: Vec<Vec<T>> = (0..cols)
        .map(|j| {
            let mut e = vec![T::zero(); cols];
            e[j] = T::one();
            e
        })
        .collect();

    let mut pivot = 0;
    for row in 0..m {
        if pivot == cols {
            break;
        }
        for j in pivot + 1..cols {
            if work[j][row].is_zero() {
                continue;
            }
            let a = work[pivot][row].clone();
            let b = work[j][row].clone();
            let eg = a.extended_gcd(&b);
            let (g, x, y) = (eg.gcd, eg.x, eg.y);
            let (u, v) = (-(b / g.clone()), a / g);
            combine(&mut work, pivot, j, &x, &y, &u, &v);
            combine(&mut trans, pivot, j, &x, &y, &u, &v);
        }
        if !work[pivot][row].is_zero() {
            pivot += 1;
        }
    }
    trans.split_off(pivot)
}

/// `(c_p, c_j) <- (x c_p + y c_j, u c_p + v c_j)`, a unimodular step when
/// `x v - y u = 1`.
fn combine<T: IntegerRing>(cols: &mut [Vec<T>], p: usize, j: usize, x: &T, y: &T, u: &T, v: &T) {
    let (cp, cj) = (cols[p].clone(), cols[j].clone());
    for i in 0..cp.len() {
        cols[p][i] = x.clone() * cp[i].clone() + y.clone() * cj[i].clone();
        cols[j][i] = u.clone() * cp[i].clone() + v.clone() * cj[i].clone();
    }
}

fn dot<T: IntegerRing>(a: &[Ratio<T>], b: &[Ratio<T>]) -> Ratio<T> {
    a.iter()
        .zip(b)
        .fold(Ratio::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

fn gram_schmidt<T: IntegerRing>(basis: &[Vec<T>]) -> (Vec<Vec<Ratio<T>>>, Vec<Vec<Ratio<T>>>, Vec<Ratio<T>>) {
    let r = basis.len();
    let mut star: Vec<Vec<Ratio<T>>> = Vec::with_capacity(r);
    let mut mu = vec![vec![Ratio::zero(); r]; r];
    let mut norms: Vec<Ratio<T>> = Vec::with_capacity(r);
    for i in 0..r {
        let bi: Vec<Ratio<T>> = basis[i].iter().cloned().map(Ratio::from_integer).collect();
        let mut v = bi.clone();
        for j in 0..i {
            mu[i][j] = dot(&bi, &star[j]) / norms[j].clone();
            for (vk, sk) in v.iter_mut().zip(&star[j]) {
                *vk = vk.clone() - mu[i][j].clone() * sk.clone();
            }
        }
        norms.push(dot(&v, &v));
        star.push(v);
    }
    (star, mu, norms)
}

/// Exact LLL reduction with `δ = 3/4` of linearly independent integer rows.
pub fn lll_reduce<T: IntegerRing>(mut basis: Vec<Vec<T>>) -> Vec<Vec<T>> {
    let r = basis.len();
    if r <= 1 {
        return basis;
    }
    let delta = Ratio::new(from_i64::<T>(3), from_i64::<T>(4));
    let half = Ratio::new(T::one(), from_i64::<T>(2));
    let (_, mut mu, mut norms) = gram_schmidt(&basis);
    let mut k = 1;
    while k < r {
        for j in (0..k).rev() {
            if mu[k][j].abs() > half {
                let q = mu[k][j].round().to_integer();
                let bj = basis[j].clone();
                for (x, y) in basis[k].iter_mut().zip(&bj) {
                    *x = x.clone() - q.clone() * y.clone();
                }
                let (_, m2, n2) = gram_schmidt(&basis);
                mu = m2;
                norms = n2;
            }
        }
        let lovasz = (delta.clone() - mu[k][k - 1].clone() * mu[k][k - 1].clone()) * norms[k - 1].clone();
        if norms[k] >= lovasz {
            k += 1;
        } else {
            basis.swap(k, k - 1);
            let (_, m2, n2) = gram_schmidt(&basis);
            mu = m2;
            norms = n2;
            k = (k - 1).max(1);
        }
    }
    basis
}

/// Solves `Σ c_i rows_i = target` over the integers, for independent rows.
fn solve_integer_combination<T: IntegerRing>(rows: &[Vec<T>], target: &[T]) -> Option<Vec<T>> {
    let r = rows.len();
    if r == 0 {
        return target.iter().all(Zero::is_zero).then(Vec::new);
    }
    // Gaussian elimination over Q on the transposed system, then integrality check.
    let cols = target.len();
    let mut aug: Vec<Vec<Ratio<T>>> = (0..cols)
        .map(|i| {
            let mut row: Vec<Ratio<T>> = rows.iter().map(|b| Ratio::from_integer(b[i].clone())).collect();
            row.push(Ratio::from_integer(target[i].clone()));
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for c in 0..r {
        let Some(p) = (rank..cols).find(|&i| !aug[i][c].is_zero()) else {
            continue;
        };
        aug.swap(rank, p);
        let inv = Ratio::one() / aug[rank][c].clone();
        for x in aug[rank].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..cols {
            if i != rank && !aug[i][c].is_zero() {
                let f = aug[i][c].clone();
                let pr = aug[rank].clone();
                for (x, y) in aug[i].iter_mut().zip(&pr) {
                    *x = x.clone() - f.clone() * y.clone();
                }
            }
        }
        pivots.push(c);
        rank += 1;
    }
    if aug[rank..].iter().any(|row| !row[r].is_zero()) {
        return None;
    }
    let mut sol = vec![T::zero(); r];
    for (i, &c) in pivots.iter().enumerate() {
        let v = &aug[i][r];
        if !v.is_integer() {
            return None;
        }
        sol[c] = v.to_integer();
    }
    Some(sol)
}

/// All coefficient vectors in `[-bound, bound]^rank`, lexicographic.
pub fn coefficient_box(rank: usize, bound: i64) -> impl Iterator<Item = Vec<i64>> {
    let mut current = if bound < 0 { None } else { Some(vec![-bound; rank]) };
    std::iter::from_fn(move || {
        let out = current.clone()?;
        let mut next = out.clone();
        let mut i = rank;
        loop {
            if i == 0 {
                current = None;
                break;
            }
            i -= 1;
            if next[i] < bound {
                next[i] += 1;
                for x in next.iter_mut().skip(i + 1) {
                    *x = -bound;
                }
                current = Some(next);
                break;
            }
        }
        Some(out)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type M = Matrix<BigInt>;

    #[test]
    fn identity_gives_full_lattice() {
        let l = intertwiner_lattice(&M::identity(3), &M::identity(3));
        assert_eq!(l.rank(), 9);
    }

    #[test]
    fn commutant_of_irreducible_2x2_is_span_of_identity_and_m() {
        let m = M::from_i64s(2, &[1, 2, 1, 3]);
        let l = intertwiner_lattice(&m, &m);
        assert_eq!(l.rank(), 2);
        assert!(l.coordinates(&M::identity(2)).is_some());
        assert!(l.coordinates(&m).is_some());
        // brute force: every commuting X with small entries is in the lattice
        for e in coefficient_box(4, 3) {
            let x = M::from_i64s(2, &e);
            if &x * &m == &m * &x {
                assert!(l.coordinates(&x).is_some(), "{x} missing");
            }
        }
    }

    #[test]
    fn kernel_is_saturated() {
        // x + 2y = 0 has kernel generated by (2, -1), not (4, -2)
        let rows = vec![vec![BigInt::from(1), BigInt::from(2)]];
        let k = integer_kernel(&rows, 2);
        assert_eq!(k.len(), 1);
        let v = &k[0];
        assert_eq!(v[0].clone() + v[1].clone() * 2, BigInt::from(0));
        assert_eq!(num_integer::gcd(v[0].clone(), v[1].clone()), BigInt::from(1));
    }

    #[test]
    fn box_enumeration() {
        let all: Vec<_> = coefficient_box(2, 1).collect();
        assert_eq!(all.len(), 9);
        assert_eq!(all[0], vec![-1, -1]);
        assert_eq!(all[8], vec![1, 1]);
        assert_eq!(coefficient_box(0, 3).count(), 1);
    }

    #[test]
    fn lll_shortens() {
        let b = vec![
            vec![BigInt::from(1), BigInt::from(0)],
            vec![BigInt::from(100), BigInt::from(1)],
        ];
        let r = lll_reduce(b);
        assert_eq!(r[1], vec![BigInt::from(0), BigInt::from(1)]);
    }
}
