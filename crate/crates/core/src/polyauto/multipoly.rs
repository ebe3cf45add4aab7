use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Serialize, Serializer};

use super::{PolyAutoError, Result};
use crate::scalar::{from_i64, Ring};

/// Exponent vector, ordered graded-lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial in `vars` variables; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly<F> {
    vars: usize,
    terms: BTreeMap<Monomial, F>,
}

impl<F: Ring> MultiPoly<F> {
    pub fn zero(vars: usize) -> Self {
        Self { vars, terms: BTreeMap::new() }
    }

    pub fn constant(vars: usize, c: F) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(vec![0; vars], c);
        p
    }

    pub fn one(vars: usize) -> Self {
        Self::constant(vars, F::one())
    }

    /// The `i`-th coordinate function.
    pub fn var(vars: usize, i: usize) -> Self {
        let mut e = vec![0; vars];
        e[i] = 1;
        Self::monomial(e, F::one())
    }

    pub fn monomial(exps: Vec<u32>, c: F) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(exps, c);
        p
    }

    /// Builds from `(coefficient, exponents)` pairs; repeated exponents add up.
    pub fn from_terms(vars: usize, terms: &[(i64, &[u32])]) -> Self {
        let mut p = Self::zero(vars);
        for (c, e) in terms {
            assert_eq!(e.len(), vars, "exponent vector length");
            p.add_term(e.to_vec(), from_i64(*c));
        }
        p
    }

    /// Univariate polynomial from little-endian integer coefficients.
    pub fn univariate(coeffs: &[i64]) -> Self {
        let mut p = Self::zero(1);
        for (k, c) in coeffs.iter().enumerate() {
            p.add_term(vec![k as u32], from_i64(*c));
        }
        p
    }

    fn add_term(&mut self, exps: Vec<u32>, c: F) {
        if c.is_zero() {
            return;
        }
        let key = Monomial(exps);
        match self.terms.get_mut(&key) {
            Some(v) => {
                *v = v.clone() + c;
                if v.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exps: &[u32]) -> F {
        self.terms.get(&Monomial(exps.to_vec())).cloned().unwrap_or_else(F::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut p = Self::zero(self.vars);
        for (m, v) in &self.terms {
            p.add_term(m.0.clone(), v.clone() * c.clone());
        }
        p
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.vars);
        let mut base = self.clone();
        let mut e = k;
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

    pub fn evaluate(&self, point: &[F]) -> Result<F> {
        if point.len() != self.vars {
            return Err(PolyAutoError::VariableCountMismatch {
                expected: self.vars,
                got: point.len(),
            });
        }
        let mut powers: Vec<Vec<F>> = point.iter().map(|x| vec![F::one(), x.clone()]).collect();
        let mut acc = F::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                let pw = &mut powers[i];
                while pw.len() <= e as usize {
                    let next = pw[pw.len() - 1].clone() * point[i].clone();
                    pw.push(next);
                }
                t = t * pw[e as usize].clone();
            }
            acc = acc + t;
        }
        Ok(acc)
    }

    /// `self(g_0, ..., g_{v-1})` where all `g_i` share a variable count.
    pub fn substitute(&self, inner: &[MultiPoly<F>]) -> Result<MultiPoly<F>> {
        if inner.len() != self.vars {
            return Err(PolyAutoError::VariableCountMismatch {
                expected: self.vars,
                got: inner.len(),
            });
        }
        let out_vars = inner.first().map_or(0, MultiPoly::vars);
        if let Some(bad) = inner.iter().find(|g| g.vars != out_vars) {
            return Err(PolyAutoError::VariableCountMismatch {
                expected: out_vars,
                got: bad.vars,
            });
        }
        let mut powers: Vec<Vec<MultiPoly<F>>> = inner.iter().map(|g| vec![Self::one(out_vars), g.clone()]).collect();
        let mut acc = Self::zero(out_vars);
        for (m, c) in &self.terms {
            let mut t = Self::constant(out_vars, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = &mut powers[i];
                while pw.len() <= e as usize {
                    let next = &pw[pw.len() - 1] * &inner[i];
                    pw.push(next);
                }
                t = &t * &pw[e as usize];
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// `p(-x)`, all variables negated.
    pub fn reflect(&self) -> Self {
        let mut p = Self::zero(self.vars);
        for (m, c) in &self.terms {
            let c = if m.degree() % 2 == 1 { -c.clone() } else { c.clone() };
            p.add_term(m.0.clone(), c);
        }
        p
    }

    /// `p(-x) = -p(x)`
    pub fn is_odd(&self) -> bool {
        self.reflect() == -self
    }
}

impl<F: Ring> Add for &MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn add(self, rhs: &MultiPoly<F>) -> MultiPoly<F> {
        assert_eq!(self.vars, rhs.vars, "variable count mismatch in polynomial sum");
        let mut p = self.clone();
        for (m, c) in &rhs.terms {
            p.add_term(m.0.clone(), c.clone());
        }
        p
    }
}

impl<F: Ring> Sub for &MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn sub(self, rhs: &MultiPoly<F>) -> MultiPoly<F> {
        self + &-rhs
    }
}

impl<F: Ring> Neg for &MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn neg(self) -> MultiPoly<F> {
        MultiPoly {
            vars: self.vars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl<F: Ring> Mul for &MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn mul(self, rhs: &MultiPoly<F>) -> MultiPoly<F> {
        assert_eq!(self.vars, rhs.vars, "variable count mismatch in polynomial product");
        let mut p = MultiPoly::zero(self.vars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                let e = m1.0.iter().zip(&m2.0).map(|(a, b)| a + b).collect();
                p.add_term(e, c1.clone() * c2.clone());
            }
        }
        p
    }
}

pub(crate) fn var_name(i: usize, vars: usize) -> String {
    const NAMES: [&str; 4] = ["x", "y", "z", "w"];
    if vars <= NAMES.len() {
        NAMES[i].to_string()
    } else {
        format!("x{i}")
    }
}

impl<F: Ring> fmt::Display for MultiPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mut body = Vec::new();
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => body.push(var_name(i, self.vars)),
                    _ => body.push(format!("{}^{e}", var_name(i, self.vars))),
                }
            }
            if body.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", body.join(""))?;
            } else {
                write!(f, "{abs}{}", body.join(""))?;
            }
        }
        Ok(())
    }
}

impl<F: Ring> Serialize for MultiPoly<F> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
