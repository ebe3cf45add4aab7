//! Short Weierstrass curves `y² = x³ + Ax + B` over a field, their group law,
//! and the maps `P -> P + Ω` and `P -> -P + S`.
//!
//! Translations form a normal abelian subgroup of the maps generated by
//! translations and negation; every `P -> -P + S` is an involution and
//! conjugates a translation by `Ω` into the translation by `-Ω`, so each
//! translation is reversed by involutions.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::scalar::{from_i64, Field};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EllipticError {
    #[error("curve y² = x³ + ({a})x + ({b}) is singular")]
    Singular { a: String, b: String },
    #[error("point {0} is not on the curve")]
    PointNotOnCurve(String),
}

pub type Result<T> = std::result::Result<T, EllipticError>;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(bound(serialize = "F: fmt::Display"))]
pub enum CurvePoint<F> {
    Infinity,
    Affine {
        #[serde(serialize_with = "crate::serde_display::display")]
        x: F,
        #[serde(serialize_with = "crate::serde_display::display")]
        y: F,
    },
}

impl<F> CurvePoint<F> {
    pub fn affine(x: F, y: F) -> Self {
        CurvePoint::Affine { x, y }
    }
}

impl<F: Field> CurvePoint<F> {
    pub fn from_i64s(x: i64, y: i64) -> Self {
        CurvePoint::Affine {
            x: from_i64(x),
            y: from_i64(y),
        }
    }
}

impl<F: fmt::Display> fmt::Display for CurvePoint<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurvePoint::Infinity => write!(f, "∞"),
            CurvePoint::Affine { x, y } => write!(f, "({x}, {y})"),
        }
    }
}

/// `P -> P + Ω` or `P -> -P + S`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(bound(serialize = "F: fmt::Display"))]
pub enum CurveMap<F> {
    Translation(CurvePoint<F>),
    NegTranslation(CurvePoint<F>),
}

impl<F: fmt::Display> fmt::Display for CurveMap<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveMap::Translation(o) => write!(f, "P ↦ P + {o}"),
            CurveMap::NegTranslation(s) => write!(f, "P ↦ -P + {s}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound(serialize = "F: fmt::Display"))]
pub struct Curve<F> {
    #[serde(serialize_with = "crate::serde_display::display")]
    a: F,
    #[serde(serialize_with = "crate::serde_display::display")]
    b: F,
}

impl<F: Field> Curve<F> {
    pub fn new(a: F, b: F) -> Result<Self> {
        let c = Self { a, b };
        if c.discriminant().is_zero() {
            return Err(EllipticError::Singular {
                a: c.a.to_string(),
                b: c.b.to_string(),
            });
        }
        Ok(c)
    }

    pub fn from_i64s(a: i64, b: i64) -> Result<Self> {
        Self::new(from_i64(a), from_i64(b))
    }

    pub fn a(&self) -> &F {
        &self.a
    }

    pub fn b(&self) -> &F {
        &self.b
    }

    /// `-16(4A³ + 27B²)`
    pub fn discriminant(&self) -> F {
        let a3 = self.a.clone() * self.a.clone() * self.a.clone();
        let b2 = self.b.clone() * self.b.clone();
        from_i64::<F>(-16) * (from_i64::<F>(4) * a3 + from_i64::<F>(27) * b2)
    }

    fn rhs(&self, x: &F) -> F {
        x.clone() * x.clone() * x.clone() + self.a.clone() * x.clone() + self.b.clone()
    }

    pub fn contains(&self, p: &CurvePoint<F>) -> bool {
        match p {
            CurvePoint::Infinity => true,
            CurvePoint::Affine { x, y } => y.clone() * y.clone() == self.rhs(x),
        }
    }

    fn check(&self, p: &CurvePoint<F>) -> Result<()> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(EllipticError::PointNotOnCurve(p.to_string()))
        }
    }

    pub fn neg(&self, p: &CurvePoint<F>) -> Result<CurvePoint<F>> {
        self.check(p)?;
        Ok(neg_unchecked(p))
    }

    /// Chord-and-tangent addition.
    pub fn add(&self, p: &CurvePoint<F>, q: &CurvePoint<F>) -> Result<CurvePoint<F>> {
        self.check(p)?;
        self.check(q)?;
        Ok(self.add_unchecked(p, q))
    }

    fn add_unchecked(&self, p: &CurvePoint<F>, q: &CurvePoint<F>) -> CurvePoint<F> {
        let (x1, y1, x2, y2) = match (p, q) {
            (CurvePoint::Infinity, _) => return q.clone(),
            (_, CurvePoint::Infinity) => return p.clone(),
            (CurvePoint::Affine { x: x1, y: y1 }, CurvePoint::Affine { x: x2, y: y2 }) => (x1, y1, x2, y2),
        };
        let lambda = if x1 == x2 {
            if (y1.clone() + y2.clone()).is_zero() {
                return CurvePoint::Infinity;
            }
            // doubling; y1 = y2 != 0 here
            (from_i64::<F>(3) * x1.clone() * x1.clone() + self.a.clone()) / (from_i64::<F>(2) * y1.clone())
        } else {
            (y2.clone() - y1.clone()) / (x2.clone() - x1.clone())
        };
        let x3 = lambda.clone() * lambda.clone() - x1.clone() - x2.clone();
        let y3 = lambda * (x1.clone() - x3.clone()) - y1.clone();
        CurvePoint::Affine { x: x3, y: y3 }
    }

    /// `p - q`
    pub fn sub(&self, p: &CurvePoint<F>, q: &CurvePoint<F>) -> Result<CurvePoint<F>> {
        self.add(p, &self.neg(q)?)
    }

    /// `k·p` by double-and-add; negative `k` uses `-p`.
    pub fn scalar_mul(&self, k: i64, p: &CurvePoint<F>) -> Result<CurvePoint<F>> {
        self.check(p)?;
        let mut base = if k < 0 { neg_unchecked(p) } else { p.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = CurvePoint::Infinity;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.add_unchecked(&acc, &base);
            }
            base = self.add_unchecked(&base, &base);
            e >>= 1;
        }
        Ok(acc)
    }

    pub fn apply_map(&self, m: &CurveMap<F>, p: &CurvePoint<F>) -> Result<CurvePoint<F>> {
        match m {
            CurveMap::Translation(o) => self.add(p, o),
            CurveMap::NegTranslation(s) => self.add(&self.neg(p)?, s),
        }
    }

    /// `m1 ∘ m2` (apply `m2` first), in closed form.
    pub fn compose_maps(&self, m1: &CurveMap<F>, m2: &CurveMap<F>) -> Result<CurveMap<F>> {
        use CurveMap::{NegTranslation as N, Translation as T};
        Ok(match (m1, m2) {
            (T(o1), T(o2)) => T(self.add(o1, o2)?),
            (T(o), N(s)) => N(self.add(s, o)?),
            (N(s), T(o)) => N(self.sub(s, o)?),
            (N(s1), N(s2)) => T(self.sub(s1, s2)?),
        })
    }

    /// Checks that `r = (P -> -P + S)` reverses `f = (P -> P + Ω)`:
    /// `r(f(r(P))) = P - Ω` on every sample point, and
    /// `r ∘ f ∘ r = (P -> P - Ω)` symbolically.
    pub fn check_reversor_on_samples(&self, omega: &CurvePoint<F>, s: &CurvePoint<F>, samples: &[CurvePoint<F>]) -> Result<bool> {
        let f = CurveMap::Translation(omega.clone());
        let r = CurveMap::NegTranslation(s.clone());
        let f_inv = CurveMap::Translation(self.neg(omega)?);
        for p in samples {
            let lhs = self.apply_map(&r, &self.apply_map(&f, &self.apply_map(&r, p)?)?)?;
            if lhs != self.apply_map(&f_inv, p)? {
                return Ok(false);
            }
        }
        Ok(self.compose_maps(&r, &self.compose_maps(&f, &r)?)? == f_inv)
    }
}

fn neg_unchecked<F: Field>(p: &CurvePoint<F>) -> CurvePoint<F> {
    match p {
        CurvePoint::Infinity => CurvePoint::Infinity,
        CurvePoint::Affine { x, y } => CurvePoint::Affine {
            x: x.clone(),
            y: -y.clone(),
        },
    }
}
