use std::fmt;

use serde::Serialize;

use super::multipoly::MultiPoly;
use super::{PolyAutoError, Result};
use crate::scalar::Ring;

/// Default bound on the total degree of a composition.
pub const DEFAULT_MAX_DEGREE: u32 = 200;

/// Degree guardrail, overridable through `REVSYM_MAX_DEGREE`.
pub fn max_degree() -> u32 {
    std::env::var("REVSYM_MAX_DEGREE")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_DEGREE)
}

/// Polynomial self-map of affine `v`-space, one component per variable.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound(serialize = "F: Ring"))]
pub struct PolyMap<F> {
    components: Vec<MultiPoly<F>>,
}

impl<F: Ring> PolyMap<F> {
    pub fn new(components: Vec<MultiPoly<F>>) -> Result<Self> {
        let v = components.len();
        if let Some(bad) = components.iter().find(|c| c.vars() != v) {
            return Err(PolyAutoError::VariableCountMismatch {
                expected: v,
                got: bad.vars(),
            });
        }
        Ok(Self { components })
    }

    pub fn identity(vars: usize) -> Self {
        Self {
            components: (0..vars).map(|i| MultiPoly::var(vars, i)).collect(),
        }
    }

    pub fn vars(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[MultiPoly<F>] {
        &self.components
    }

    /// Maximal total degree of the components.
    pub fn degree(&self) -> u32 {
        self.components.iter().filter_map(MultiPoly::degree).max().unwrap_or(0)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.vars())
    }

    /// `self ∘ inner`: substitutes the components of `inner` into `self`.
    pub fn compose(&self, inner: &PolyMap<F>) -> Result<PolyMap<F>> {
        if self.vars() != inner.vars() {
            return Err(PolyAutoError::VariableCountMismatch {
                expected: self.vars(),
                got: inner.vars(),
            });
        }
        let bound = self.degree() * inner.degree();
        let limit = max_degree();
        if bound > limit {
            return Err(PolyAutoError::DegreeLimitExceeded { degree: bound, limit });
        }
        let components = self
            .components
            .iter()
            .map(|c| c.substitute(&inner.components))
            .collect::<Result<Vec<_>>>()?;
        Ok(PolyMap { components })
    }

    pub fn evaluate(&self, point: &[F]) -> Result<Vec<F>> {
        self.components.iter().map(|c| c.evaluate(point)).collect()
    }
}

impl<F: Ring> fmt::Display for PolyMap<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.components.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Exact equality of two maps (terms are stored canonically).
pub fn poly_map_equal<F: Ring>(f: &PolyMap<F>, g: &PolyMap<F>) -> bool {
    f == g
}

/// A map kept as a composition `factors[0] ∘ factors[1] ∘ ... ∘ factors[k-1]`.
///
/// Products of chains are expanded one factor at a time from the right, so
/// cancellation between neighbouring factors keeps intermediate degrees low
/// where expanding each chain first would not.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound(serialize = "F: Ring"))]
pub struct MapChain<F> {
    factors: Vec<PolyMap<F>>,
}

impl<F: Ring> From<PolyMap<F>> for MapChain<F> {
    fn from(m: PolyMap<F>) -> Self {
        Self { factors: vec![m] }
    }
}

impl<F: Ring> MapChain<F> {
    pub fn new(factors: Vec<PolyMap<F>>) -> Result<Self> {
        let Some(v) = factors.first().map(PolyMap::vars) else {
            return Err(PolyAutoError::InvalidParameters("empty map chain".into()));
        };
        if let Some(bad) = factors.iter().find(|m| m.vars() != v) {
            return Err(PolyAutoError::VariableCountMismatch {
                expected: v,
                got: bad.vars(),
            });
        }
        Ok(Self { factors })
    }

    pub fn identity(vars: usize) -> Self {
        PolyMap::identity(vars).into()
    }

    pub fn vars(&self) -> usize {
        self.factors[0].vars()
    }

    pub fn factors(&self) -> &[PolyMap<F>] {
        &self.factors
    }

    /// `self ∘ inner`, without expanding.
    pub fn then_after(&self, inner: &MapChain<F>) -> Result<MapChain<F>> {
        if self.vars() != inner.vars() {
            return Err(PolyAutoError::VariableCountMismatch {
                expected: self.vars(),
                got: inner.vars(),
            });
        }
        let mut factors = self.factors.clone();
        factors.extend(inner.factors.iter().cloned());
        Ok(MapChain { factors })
    }

    /// `self^k` for `k >= 0`, without expanding.
    pub fn power(&self, k: u32) -> MapChain<F> {
        if k == 0 {
            return Self::identity(self.vars());
        }
        let mut factors = Vec::with_capacity(self.factors.len() * k as usize);
        for _ in 0..k {
            factors.extend(self.factors.iter().cloned());
        }
        MapChain { factors }
    }

    /// The composite as a single polynomial map.
    pub fn expand(&self) -> Result<PolyMap<F>> {
        let mut acc = PolyMap::identity(self.vars());
        for m in self.factors.iter().rev() {
            acc = m.compose(&acc)?;
        }
        Ok(acc)
    }

    /// Pointwise application, innermost factor first.
    pub fn evaluate(&self, point: &[F]) -> Result<Vec<F>> {
        let mut p = point.to_vec();
        for m in self.factors.iter().rev() {
            p = m.evaluate(&p)?;
        }
        Ok(p)
    }
}

impl<F: Ring> fmt::Display for MapChain<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(" ∘ "))
    }
}

/// `f ∘ g` as a single map.
pub fn compose<F: Ring>(f: &MapChain<F>, g: &MapChain<F>) -> Result<PolyMap<F>> {
    f.then_after(g)?.expand()
}

/// `r f r⁻¹ = f⁻¹`, checked inverse-free as `f ∘ r ∘ f = r`.
pub fn check_reversor_identity<F: Ring>(f: &MapChain<F>, r: &MapChain<F>) -> Result<bool> {
    let lhs = f.then_after(r)?.then_after(f)?.expand()?;
    Ok(lhs == r.expand()?)
}

/// `f ∘ s = s ∘ f`
pub fn check_symmetry_identity<F: Ring>(f: &MapChain<F>, s: &MapChain<F>) -> Result<bool> {
    Ok(f.then_after(s)?.expand()? == s.then_after(f)?.expand()?)
}

/// Smallest `k <= cap` with `m^k = id`, by symbolic expansion.
pub fn map_order<F: Ring>(m: &MapChain<F>, cap: u32) -> Result<Option<u32>> {
    let mut acc = MapChain::identity(m.vars());
    for k in 1..=cap {
        acc = m.then_after(&acc)?;
        let e = acc.expand()?;
        if e.is_identity() {
            return Ok(Some(k));
        }
        acc = e.into();
    }
    Ok(None)
}

/// `k`-fold exact evaluation of `f` starting at `point`.
pub fn iterate<F: Ring>(f: &MapChain<F>, point: &[F], k: u32) -> Result<Vec<F>> {
    if point.len() != f.vars() {
        return Err(PolyAutoError::VariableCountMismatch {
            expected: f.vars(),
            got: point.len(),
        });
    }
    let mut p = point.to_vec();
    for _ in 0..k {
        p = f.evaluate(&p)?;
    }
    Ok(p)
}
