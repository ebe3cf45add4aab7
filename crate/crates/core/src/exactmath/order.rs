use std::fmt;

use num_integer::Integer;
use serde::{Serialize, Serializer};

use super::{ExactError, Matrix, Poly};
use crate::scalar::{IntegerRing, Ring};

/// Order of a group element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Order {
    Finite(u64),
    Infinite,
}

impl Order {
    pub fn is_finite(self) -> bool {
        matches!(self, Order::Finite(_))
    }

    pub fn is_odd(self) -> bool {
        matches!(self, Order::Finite(k) if k % 2 == 1)
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(k) => write!(f, "{k}"),
            Order::Infinite => write!(f, "infinite"),
        }
    }
}

impl Serialize for Order {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

pub fn euler_phi(m: u64) -> u64 {
    let mut n = m;
    let mut phi = m;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if n > 1 {
        phi -= phi / n;
    }
    phi
}

/// The `m`-th cyclotomic polynomial, built by dividing `x^m - 1` by `Φ_d` for
/// every proper divisor `d`.
pub fn cyclotomic<T: Ring>(m: u64) -> Poly<T> {
    assert!(m >= 1);
    let mut p = &Poly::monomial(T::one(), m as usize) - &Poly::one();
    for d in (1..m).filter(|d| m % d == 0) {
        p = p
            .div_exact_monic(&cyclotomic(d))
            .expect("cyclotomic factors divide x^m - 1");
    }
    p
}

/// All `m` with `φ(m) <= n`: the possible orders of roots of unity that are
/// eigenvalues of an `n x n` integer matrix.
pub fn admissible_orders(n: usize) -> Vec<u64> {
    let n = n as u64;
    // φ(m) >= sqrt(m / 2), so m <= 2 n^2 bounds the search
    (1..=2 * n * n + 2).filter(|&m| euler_phi(m) <= n).collect()
}

/// Decides whether a unimodular matrix has finite order.
///
/// The characteristic polynomial is stripped of cyclotomic factors `Φ_m`
/// with `φ(m) <= n`. A leftover factor proves infinite order. Otherwise the
/// order divides `L = lcm(m)` if it is finite at all, and `A^L` settles it
/// (non-semisimple matrices such as unipotent ones fail this step). With
/// `projective`, the minimal `k` with `A^k = ±I` is reported.
pub fn finite_order_test<T: IntegerRing>(a: &Matrix<T>, projective: bool) -> Result<Order, ExactError> {
    if !a.is_unimodular() {
        return Err(ExactError::NotUnimodular {
            det: a.det().to_string(),
        });
    }
    let n = a.dim();
    let mut rest: Poly<T> = a.char_poly();
    let mut lcm: u64 = 1;
    for m in admissible_orders(n) {
        let phi = cyclotomic::<T>(m);
        while let Some(q) = rest.div_exact_monic(&phi) {
            rest = q;
            lcm = lcm.lcm(&m);
        }
    }
    if !rest.is_one() {
        return Ok(Order::Infinite);
    }
    if !a.pow(lcm).is_identity() {
        return Ok(Order::Infinite);
    }
    let minus_identity = -Matrix::<T>::identity(n);
    let k = (1..=lcm)
        .filter(|k| lcm % k == 0)
        .find(|&k| {
            let p = a.pow(k);
            p.is_identity() || (projective && p == minus_identity)
        })
        .expect("k = lcm always qualifies");
    Ok(Order::Finite(k))
}
