use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Serialize, Serializer};

use crate::scalar::Ring;

/// Dense univariate polynomial, coefficients little-endian (`c[i]` multiplies `x^i`).
///
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Ring> Poly<T> {
    pub fn from_coeffs(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| crate::scalar::from_i64(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// `x^d p(1/x)` where `d` is the degree.
    pub fn reversal(&self) -> Self {
        Self::from_coeffs(self.coeffs.iter().rev().cloned().collect())
    }

    /// `p(-x)`
    pub fn reflect(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        )
    }

    /// Quotient and remainder by a monic divisor; exact over any ring.
    pub fn div_rem_monic(&self, divisor: &Self) -> Option<(Self, Self)> {
        if !divisor.is_monic() {
            return None;
        }
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return Some((Self::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![T::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd].clone();
            if c.is_zero() {
                continue;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] = rem[k + i].clone() - c.clone() * d.clone();
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Some((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Exact quotient when `divisor` is monic and divides `self`.
    pub fn div_exact_monic(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem_monic(divisor)?;
        r.is_zero().then_some(q)
    }
}

/// How `x^d p(1/x)` relates to `p(x)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Reciprocity {
    /// `x^d p(1/x) = p(x)`
    Direct,
    /// `x^d p(1/x) = -p(x)`
    UpToSign,
    Neither,
}

pub fn reciprocity_class<T: Ring>(p: &Poly<T>) -> Reciprocity {
    let rev = p.reversal();
    // a vanishing constant term drops the degree of the reversal
    if rev.degree() != p.degree() {
        return Reciprocity::Neither;
    }
    if rev == *p {
        Reciprocity::Direct
    } else if rev == -p {
        Reciprocity::UpToSign
    } else {
        Reciprocity::Neither
    }
}

impl<'a, T: Ring> Add<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;

    fn add(self, rhs: &'a Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a, T: Ring> Sub<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;

    fn sub(self, rhs: &'a Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a, T: Ring> Mul<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;

    fn mul(self, rhs: &'a Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::from_coeffs(out)
    }
}

impl<T: Ring> Neg for &Poly<T> {
    type Output = Poly<T>;

    fn neg(self) -> Poly<T> {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<T: Ring> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let mag = c.abs();
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            first = false;
            if !mag.is_one() || k == 0 {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

impl<T: Ring> Serialize for Poly<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type P = Poly<BigInt>;

    #[test]
    fn display() {
        assert_eq!(P::from_i64s(&[1, -2, -2, -2, 1]).to_string(), "x^4 - 2x^3 - 2x^2 - 2x + 1");
        assert_eq!(P::from_i64s(&[-1, -1, 1]).to_string(), "x^2 - x - 1");
        assert_eq!(P::zero().to_string(), "0");
        assert_eq!(P::from_i64s(&[0, 0, 0, 1]).to_string(), "x^3");
    }

    #[test]
    fn reciprocity() {
        assert_eq!(reciprocity_class(&P::from_i64s(&[1, -2, -2, -2, 1])), Reciprocity::Direct);
        assert_eq!(
            reciprocity_class(&P::from_i64s(&[1, -14, 22, -6, 1])),
            Reciprocity::Neither
        );
        assert_eq!(reciprocity_class(&P::from_i64s(&[-1, -1, 1])), Reciprocity::Neither);
        // x^3 - 2x^2 + 2x - 1: reversed is -x^3 + 2x^2 - 2x + 1
        assert_eq!(reciprocity_class(&P::from_i64s(&[-1, 2, -2, 1])), Reciprocity::UpToSign);
        assert_eq!(reciprocity_class(&P::from_i64s(&[0, 1])), Reciprocity::Neither);
    }

    #[test]
    fn division() {
        // (x^2 - 1) = (x - 1)(x + 1)
        let p = P::from_i64s(&[-1, 0, 1]);
        let d = P::from_i64s(&[1, 1]);
        assert_eq!(p.div_exact_monic(&d), Some(P::from_i64s(&[-1, 1])));
        assert_eq!(P::from_i64s(&[1, 0, 1]).div_exact_monic(&d), None);
        assert_eq!(p.div_rem_monic(&P::from_i64s(&[1, 2])), None);
    }
}
