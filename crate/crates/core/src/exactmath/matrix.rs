use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Serialize, Serializer};

use super::{ExactError, Poly};
use crate::scalar::{from_i64, IntegerRing, Ring};

/// Dense square matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    n: usize,
    data: Vec<T>,
}

impl<T: Ring> Matrix<T> {
    pub fn new(n: usize, data: Vec<T>) -> Result<Self, ExactError> {
        if n == 0 || data.len() != n * n {
            return Err(ExactError::Shape {
                rows: n,
                cols: vec![data.len()],
            });
        }
        Ok(Self { n, data })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, ExactError> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(ExactError::Shape {
                rows: n,
                cols: rows.iter().map(Vec::len).collect(),
            });
        }
        Ok(Self {
            n,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds an `n x n` matrix from row-major small integers.
    ///
    /// Panics when `entries.len() != n * n`; meant for literals.
    pub fn from_i64s(n: usize, entries: &[i64]) -> Self {
        assert!(n > 0 && entries.len() == n * n, "expected {} entries", n * n);
        Self {
            n,
            data: entries.iter().map(|&e| from_i64(e)).collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, T::one())
    }

    pub fn zero(n: usize) -> Self {
        Self {
            n,
            data: vec![T::zero(); n * n],
        }
    }

    pub fn scalar(n: usize, c: T) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.data[i * n + i] = c.clone();
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.n + j] = v;
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> {
        self.data.chunks(self.n)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn trace(&self) -> T {
        (0..self.n).fold(T::zero(), |acc, i| acc + self.get(i, i).clone())
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut out = self.clone();
        for i in 0..n {
            for j in 0..n {
                out.data[j * n + i] = self.data[i * n + j].clone();
            }
        }
        out
    }

    pub fn scale(&self, c: &T) -> Self {
        Self {
            n: self.n,
            data: self.data.iter().map(|x| x.clone() * c.clone()).collect(),
        }
    }

    fn check_dim(&self, other: &Self) -> Result<(), ExactError> {
        if self.n != other.n {
            return Err(ExactError::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    /// Exact product `self * other`.
    pub fn mul(&self, other: &Self) -> Result<Self, ExactError> {
        self.check_dim(other)?;
        let n = self.n;
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = T::zero();
                for k in 0..n {
                    let a = &self.data[i * n + k];
                    if a.is_zero() {
                        continue;
                    }
                    acc = acc + a.clone() * other.data[k * n + j].clone();
                }
                data.push(acc);
            }
        }
        Ok(Self { n, data })
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.n);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> T {
        let n = self.n;
        let mut a = self.data.clone();
        let mut negate = false;
        let mut prev = T::one();
        for k in 0..n.saturating_sub(1) {
            if a[k * n + k].is_zero() {
                match (k + 1..n).find(|&i| !a[i * n + k].is_zero()) {
                    Some(i) => {
                        for j in 0..n {
                            a.swap(k * n + j, i * n + j);
                        }
                        negate = !negate;
                    }
                    None => return T::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = a[i * n + j].clone() * a[k * n + k].clone()
                        - a[i * n + k].clone() * a[k * n + j].clone();
                    a[i * n + j] = v / prev.clone();
                }
            }
            prev = a[k * n + k].clone();
        }
        let d = a[n * n - 1].clone();
        if negate {
            -d
        } else {
            d
        }
    }

    /// Characteristic polynomial `det(xI - A)` together with the adjugate,
    /// both from one Faddeev-LeVerrier sweep. Every division is exact.
    pub fn char_poly_and_adjugate(&self) -> (Poly<T>, Self) {
        let n = self.n;
        let mut coeffs = vec![T::zero(); n + 1];
        coeffs[n] = T::one();
        let mut m = Self::zero(n);
        for k in 1..=n {
            m = &(self * &m) + &Self::scalar(n, coeffs[n - k + 1].clone());
            let am = self * &m;
            coeffs[n - k] = -(am.trace() / from_i64(k as i64));
        }
        let adj = if n % 2 == 1 { m } else { -&m };
        (Poly::from_coeffs(coeffs), adj)
    }

    pub fn char_poly(&self) -> Poly<T> {
        self.char_poly_and_adjugate().0
    }

    pub fn adjugate(&self) -> Self {
        self.char_poly_and_adjugate().1
    }
}

impl<T: IntegerRing> Matrix<T> {
    pub fn is_unimodular(&self) -> bool {
        let d = self.det();
        d.is_one() || (-d).is_one()
    }

    /// Integer inverse of a matrix with determinant `+1` or `-1`.
    pub fn inverse_unimodular(&self) -> Result<Self, ExactError> {
        let d = self.det();
        if d.is_one() {
            Ok(self.adjugate())
        } else if (-d.clone()).is_one() {
            Ok(-&self.adjugate())
        } else {
            Err(ExactError::NotUnimodular { det: d.to_string() })
        }
    }
}

impl<'a, T: Ring> Mul<&'a Matrix<T>> for &'a Matrix<T> {
    type Output = Matrix<T>;

    /// Panics on a dimension mismatch; use [`Matrix::mul`] for a checked product.
    fn mul(self, rhs: &'a Matrix<T>) -> Matrix<T> {
        Matrix::mul(self, rhs).expect("matrix dimensions agree")
    }
}

impl<'a, T: Ring> Add<&'a Matrix<T>> for &'a Matrix<T> {
    type Output = Matrix<T>;

    fn add(self, rhs: &'a Matrix<T>) -> Matrix<T> {
        assert_eq!(self.n, rhs.n, "matrix dimensions agree");
        Matrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }
}

impl<'a, T: Ring> Sub<&'a Matrix<T>> for &'a Matrix<T> {
    type Output = Matrix<T>;

    fn sub(self, rhs: &'a Matrix<T>) -> Matrix<T> {
        assert_eq!(self.n, rhs.n, "matrix dimensions agree");
        Matrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }
}

impl<T: Ring> Neg for &Matrix<T> {
    type Output = Matrix<T>;

    fn neg(self) -> Matrix<T> {
        Matrix {
            n: self.n,
            data: self.data.iter().map(|x| -x.clone()).collect(),
        }
    }
}

impl<T: Ring> Neg for Matrix<T> {
    type Output = Matrix<T>;

    fn neg(self) -> Matrix<T> {
        -&self
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.data.chunks(self.n).enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
        }
        write!(f, "]")
    }
}

/// Serialized as a list of rows of decimal strings.
impl<T: fmt::Display> Serialize for Matrix<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = self
            .data
            .chunks(self.n)
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect();
        rows.serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type M = Matrix<BigInt>;

    fn m2(e: [i64; 4]) -> M {
        M::from_i64s(2, &e)
    }

    #[test]
    fn products() {
        let a = m2([0, 1, 1, 1]);
        assert_eq!(M::identity(2).mul(&a).unwrap(), a);
        assert_eq!(a.mul(&a).unwrap(), m2([1, 1, 1, 2]));
        let r = m2([1, 0, 1, -1]);
        // R' = RM holds as PGL classes; the exact product is -R'
        assert_eq!(r.mul(&a).unwrap(), -m2([0, -1, 1, 0]));
    }

    #[test]
    fn product_dimension_mismatch() {
        let err = M::identity(2).mul(&M::identity(3)).unwrap_err();
        assert_eq!(err, ExactError::DimensionMismatch { left: 2, right: 3 });
    }

    #[test]
    fn determinants() {
        assert_eq!(M::identity(4).det(), BigInt::from(1));
        assert_eq!(m2([0, 1, 1, 1]).det(), BigInt::from(-1));
        assert_eq!(m2([5, 7, 7, 10]).det(), BigInt::from(1));
        // needs a pivot swap
        let p = M::from_i64s(3, &[0, 1, 0, 1, 0, 0, 0, 0, 1]);
        assert_eq!(p.det(), BigInt::from(-1));
        assert_eq!(M::from_i64s(3, &[1, 2, 3, 4, 5, 6, 7, 8, 9]).det(), BigInt::from(0));
    }

    #[test]
    fn unimodular_inverse() {
        assert_eq!(M::identity(3).inverse_unimodular().unwrap(), M::identity(3));
        assert_eq!(
            m2([5, 7, 7, 10]).inverse_unimodular().unwrap(),
            m2([10, -7, -7, 5])
        );
        assert_eq!(
            m2([1, 2, 2, 3]).inverse_unimodular().unwrap(),
            m2([-3, 2, 2, -1])
        );
        assert!(matches!(
            m2([2, 0, 0, 1]).inverse_unimodular(),
            Err(ExactError::NotUnimodular { .. })
        ));
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(M::from_rows(vec![]).is_err());
        assert!(M::from_rows(vec![vec![1.into(), 2.into()], vec![3.into()]]).is_err());
        assert!(M::new(2, vec![BigInt::from(1); 3]).is_err());
    }

    #[test]
    fn fixed_width_scalars_work_too() {
        let a = Matrix::<i64>::from_i64s(2, &[2, 1, 1, 1]);
        assert_eq!(a.inverse_unimodular().unwrap(), Matrix::from_i64s(2, &[1, -1, -1, 2]));
        let q = Matrix::<num_rational::Ratio<i64>>::from_i64s(2, &[1, 2, 3, 4]);
        assert_eq!(q.det(), num_rational::Ratio::from_integer(-2));
    }

    #[test]
    fn display_and_serialize() {
        let a = m2([0, -1, 1, 0]);
        assert_eq!(a.to_string(), "[0 -1; 1 0]");
    }
}
