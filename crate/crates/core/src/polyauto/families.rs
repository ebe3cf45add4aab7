use serde::Serialize;

use super::map::{check_reversor_identity, check_symmetry_identity, iterate, map_order, MapChain, PolyMap};
use super::multipoly::MultiPoly;
use super::{PolyAutoError, Result};
use crate::scalar::{from_i64, Ring};

/// The planar automorphisms of one example family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound(serialize = "F: Ring"))]
pub struct ExampleFamily<F> {
    pub case: u8,
    pub f: MapChain<F>,
    /// `(x, y) -> (-x, -y)`
    pub s: MapChain<F>,
    pub r: MapChain<F>,
    /// Square root of `f` (case 3 only).
    pub t: Option<MapChain<F>>,
    /// `t ∘ r`, an order-4 reversor (case 3 only).
    pub r_prime: Option<MapChain<F>>,
}

fn xy<F: Ring>() -> (MultiPoly<F>, MultiPoly<F>) {
    (MultiPoly::var(2, 0), MultiPoly::var(2, 1))
}

fn planar<F: Ring>(a: MultiPoly<F>, b: MultiPoly<F>) -> PolyMap<F> {
    PolyMap::new(vec![a, b]).expect("both components are bivariate")
}

fn check_odd<F: Ring>(p: &MultiPoly<F>, name: &str) -> Result<()> {
    if p.vars() != 1 {
        return Err(PolyAutoError::InvalidParameters(format!("{name} must be univariate")));
    }
    if p.is_zero() {
        return Err(PolyAutoError::InvalidParameters(format!("{name} must be nonzero")));
    }
    if !p.is_odd() {
        return Err(PolyAutoError::OddnessViolated(name.to_string()));
    }
    Ok(())
}

/// `(x, y) -> (x + p(y), y)`
fn shear_x<F: Ring>(p: &MultiPoly<F>) -> Result<PolyMap<F>> {
    let (x, y) = xy();
    Ok(planar(&x + &p.substitute(&[y.clone()])?, y))
}

/// `(x, y) -> (x, y + q(x))`
fn shear_y<F: Ring>(q: &MultiPoly<F>) -> Result<PolyMap<F>> {
    let (x, y) = xy();
    Ok(planar(x.clone(), &y + &q.substitute(&[x])?))
}

pub fn negation<F: Ring>(vars: usize) -> PolyMap<F> {
    PolyMap::new((0..vars).map(|i| -&MultiPoly::var(vars, i)).collect()).expect("square map")
}

/// `(x, y) -> (-x - p(y), y)`
fn shear_reflection<F: Ring>(p: &MultiPoly<F>) -> Result<PolyMap<F>> {
    let (x, y) = xy();
    Ok(planar(&-&x - &p.substitute(&[y.clone()])?, y))
}

/// Default odd parameters `p(y) = y³`, `q(x) = x³ + x`.
pub fn default_parameters<F: Ring>() -> (MultiPoly<F>, MultiPoly<F>) {
    (MultiPoly::univariate(&[0, 0, 0, 1]), MultiPoly::univariate(&[0, 1, 0, 1]))
}

/// Builds the maps of one family:
///
/// 1. `f: x' = x + p(y), y' = y + q(x')` with odd `p != q`, reversed by the
///    involution `r: (x, y) -> (-x - p(y), y)`.
/// 2. `f: x' = -x + y³, y' = -y - x'³` (no parameters), reversed by
///    `r: (x, y) -> (-y, x)` of order 4.
/// 3. Case 1 with `q = p`; then `t: (x, y) -> (y, x + p(y))` squares to `f`.
pub fn build_example_family<F: Ring>(case: u8, p: Option<&MultiPoly<F>>, q: Option<&MultiPoly<F>>) -> Result<ExampleFamily<F>> {
    let s: MapChain<F> = negation(2).into();
    let (dp, dq) = default_parameters();
    match case {
        1 => {
            let p = p.unwrap_or(&dp);
            let q = q.unwrap_or(&dq);
            check_odd(p, "p")?;
            check_odd(q, "q")?;
            if p == q {
                return Err(PolyAutoError::InvalidParameters("case 1 needs p != q; use case 3 for q = p".into()));
            }
            Ok(ExampleFamily {
                case,
                f: MapChain::new(vec![shear_y(q)?, shear_x(p)?])?,
                s,
                r: shear_reflection(p)?.into(),
                t: None,
                r_prime: None,
            })
        }
        2 => {
            let (x, y) = xy::<F>();
            let cube = MultiPoly::univariate(&[0, 0, 0, 1]);
            let a = planar(&-&x + &cube.substitute(&[y.clone()])?, y.clone());
            let b = planar(x.clone(), &-&y - &cube.substitute(&[x.clone()])?);
            Ok(ExampleFamily {
                case,
                f: MapChain::new(vec![b, a])?,
                s,
                r: planar(-&y, x).into(),
                t: None,
                r_prime: None,
            })
        }
        3 => {
            let p = p.unwrap_or(&dp);
            check_odd(p, "p")?;
            if q.is_some_and(|q| q != p) {
                return Err(PolyAutoError::InvalidParameters("case 3 uses q = p".into()));
            }
            let (x, y) = xy::<F>();
            let t: MapChain<F> = planar(y.clone(), &x + &p.substitute(&[y])?).into();
            let r: MapChain<F> = shear_reflection(p)?.into();
            Ok(ExampleFamily {
                case,
                f: MapChain::new(vec![shear_y(p)?, shear_x(p)?])?,
                s,
                r_prime: Some(t.then_after(&r)?),
                r,
                t: Some(t),
            })
        }
        _ => Err(PolyAutoError::InvalidParameters(format!("unknown family case {case}"))),
    }
}

/// Pass/fail of each identity checked on one family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyReport {
    pub case: u8,
    pub reversor_identity: bool,
    pub symmetry_identity: bool,
    /// Order of `r` (2 in cases 1 and 3, 4 in case 2).
    pub reversor_order: Option<u32>,
    /// `r² = s` (case 2).
    pub reversor_square_is_s: bool,
    /// `t² = f` (case 3).
    pub root_squares_to_f: Option<bool>,
    /// Order of `t ∘ r` (case 3).
    pub r_prime_order: Option<u32>,
    /// `t ∘ r` reverses `f` (case 3).
    pub r_prime_reverses: Option<bool>,
    /// `r' ∘ r = t`: a product of two reversors is a symmetry (case 3).
    pub reversor_product_is_symmetry: Option<bool>,
}

impl FamilyReport {
    pub fn all_passed(&self) -> bool {
        let order_ok = match self.case {
            2 => self.reversor_order == Some(4) && self.reversor_square_is_s,
            _ => self.reversor_order == Some(2),
        };
        let case3_ok = self.case != 3
            || (self.root_squares_to_f == Some(true)
                && self.r_prime_order == Some(4)
                && self.r_prime_reverses == Some(true)
                && self.reversor_product_is_symmetry == Some(true));
        self.reversor_identity && self.symmetry_identity && order_ok && case3_ok
    }
}

pub fn check_family<F: Ring>(fam: &ExampleFamily<F>) -> Result<FamilyReport> {
    let r_sq = fam.r.power(2).expand()?;
    let mut rep = FamilyReport {
        case: fam.case,
        reversor_identity: check_reversor_identity(&fam.f, &fam.r)?,
        symmetry_identity: check_symmetry_identity(&fam.f, &fam.s)?,
        reversor_order: map_order(&fam.r, 8)?,
        reversor_square_is_s: r_sq == fam.s.expand()?,
        root_squares_to_f: None,
        r_prime_order: None,
        r_prime_reverses: None,
        reversor_product_is_symmetry: None,
    };
    if let (Some(t), Some(rp)) = (&fam.t, &fam.r_prime) {
        rep.root_squares_to_f = Some(t.power(2).expand()? == fam.f.expand()?);
        rep.r_prime_order = map_order(rp, 8)?;
        rep.r_prime_reverses = Some(check_reversor_identity(&fam.f, rp)?);
        // r' ∘ r = t r r = t
        let product = rp.then_after(&fam.r)?.expand()?;
        rep.reversor_product_is_symmetry = Some(product == t.expand()? && check_symmetry_identity(&fam.f, &product.into())?);
    }
    Ok(rep)
}

/// Results of the four trace-map identities.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceMapReport {
    /// `I ∘ F = I` for `I = x² + y² + z² - 2xyz - 1`.
    pub invariant_preserved: bool,
    /// `F ∘ r ∘ F = r` for `r = (z, y, x)`.
    pub r_reverses: bool,
    /// `F ∘ r' ∘ F = r'` for `r' = (2yz - x, z, y)`.
    pub r_prime_reverses: bool,
    pub r_involution: bool,
    pub r_prime_involution: bool,
    /// `F(1, 1, 1) = (1, 1, 1)`.
    pub fixes_unit_point: bool,
}

impl TraceMapReport {
    pub fn all_passed(&self) -> bool {
        self.invariant_preserved && self.r_reverses && self.r_prime_reverses && self.r_involution && self.r_prime_involution && self.fixes_unit_point
    }
}

/// The trace map `(x, y, z) -> (y, z, 2yz - x)` and its two involutory reversors.
pub fn trace_map<F: Ring>() -> (PolyMap<F>, PolyMap<F>, PolyMap<F>) {
    let v = |i| MultiPoly::<F>::var(3, i);
    let (x, y, z) = (v(0), v(1), v(2));
    let two_yz = (&y * &z).scale(&from_i64(2));
    let f = PolyMap::new(vec![y.clone(), z.clone(), &two_yz - &x]).expect("3 components");
    let r = PolyMap::new(vec![z.clone(), y.clone(), x.clone()]).expect("3 components");
    let rp = PolyMap::new(vec![&two_yz - &x, z, y]).expect("3 components");
    (f, r, rp)
}

/// `x² + y² + z² - 2xyz - 1`
pub fn fricke_vogt_invariant<F: Ring>() -> MultiPoly<F> {
    MultiPoly::from_terms(3, &[(1, &[2, 0, 0]), (1, &[0, 2, 0]), (1, &[0, 0, 2]), (-2, &[1, 1, 1]), (-1, &[0, 0, 0])])
}

pub fn trace_map_suite<F: Ring>() -> Result<TraceMapReport> {
    let (f, r, rp) = trace_map::<F>();
    let inv = fricke_vogt_invariant::<F>();
    let (f, r, rp): (MapChain<F>, MapChain<F>, MapChain<F>) = (f.into(), r.into(), rp.into());
    let one = vec![F::one(); 3];
    Ok(TraceMapReport {
        invariant_preserved: inv.substitute(f.expand()?.components())? == inv,
        r_reverses: check_reversor_identity(&f, &r)?,
        r_prime_reverses: check_reversor_identity(&f, &rp)?,
        r_involution: r.power(2).expand()?.is_identity(),
        r_prime_involution: rp.power(2).expand()?.is_identity(),
        fixes_unit_point: iterate(&f, &one, 5)? == one,
    })
}

/// A candidate reversor `r ∘ s^e ∘ f^k` shown not to be an involution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NonInvolutionWitness {
    pub s_exponent: u32,
    pub f_exponent: i32,
    /// A point where the candidate and its inverse differ; `None` if none of
    /// the probe points separated them.
    pub witness: Option<Vec<String>>,
}

/// Bounded corroboration that the case-2 map has no involutory reversor:
/// every `ρ = r ∘ s^e ∘ f^k` with `e + |k| <= max_len` satisfies
/// `ρ(P) != ρ⁻¹(P)` at some probe point `P`, which proves `ρ² != id`.
///
/// The check is pointwise because symbolic powers of `f` reach degree `9^k`.
pub fn case2_involution_search<F: Ring>(max_len: u32, probes: &[Vec<F>]) -> Result<Vec<NonInvolutionWitness>> {
    let fam = build_example_family::<F>(2, None, None)?;
    // f = b ∘ a with both factors involutions, so f⁻¹ = a ∘ b
    let [b, a] = fam.f.factors() else {
        unreachable!("case-2 map has two factors")
    };
    let f_inv = MapChain::new(vec![a.clone(), b.clone()])?;
    let (x, y) = xy::<F>();
    let r_inv: MapChain<F> = planar(y, -&x).into();
    let mut out = Vec::new();
    for e in 0..=1u32 {
        let rest = max_len.saturating_sub(e) as i32;
        for k in -rest..=rest {
            let fk = if k >= 0 { fam.f.power(k as u32) } else { f_inv.power((-k) as u32) };
            let fk_inv = if k >= 0 { f_inv.power(k as u32) } else { fam.f.power((-k) as u32) };
            let se = fam.s.power(e);
            let rho = fam.r.then_after(&se)?.then_after(&fk)?;
            let rho_inv = fk_inv.then_after(&se)?.then_after(&r_inv)?;
            let mut witness = None;
            for p in probes {
                if rho.evaluate(p)? != rho_inv.evaluate(p)? {
                    witness = Some(p.iter().map(ToString::to_string).collect());
                    break;
                }
            }
            out.push(NonInvolutionWitness {
                s_exponent: e,
                f_exponent: k,
                witness,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Q = BigRational;

    #[test]
    fn families_pass() {
        for case in 1..=3 {
            let fam = build_example_family::<Q>(case, None, None).unwrap();
            let rep = check_family(&fam).unwrap();
            assert!(rep.all_passed(), "case {case}: {rep:?}");
        }
    }

    #[test]
    fn parameter_errors() {
        let even = MultiPoly::<Q>::univariate(&[0, 0, 1]);
        assert_eq!(
            build_example_family::<Q>(1, Some(&even), None),
            Err(PolyAutoError::OddnessViolated("p".into()))
        );
        let p = MultiPoly::<Q>::univariate(&[0, 0, 0, 1]);
        assert!(matches!(
            build_example_family::<Q>(1, Some(&p), Some(&p)),
            Err(PolyAutoError::InvalidParameters(_))
        ));
        assert!(matches!(build_example_family::<Q>(4, None, None), Err(PolyAutoError::InvalidParameters(_))));
    }

    #[test]
    fn trace_map_identities() {
        assert!(trace_map_suite::<Q>().unwrap().all_passed());
    }

    #[test]
    fn case2_has_no_short_involutory_reversor() {
        let probes: Vec<Vec<Q>> = vec![vec![Q::from_integer(1.into()), Q::from_integer(2.into())]];
        let res = case2_involution_search::<Q>(4, &probes).unwrap();
        assert_eq!(res.len(), 9 + 7);
        assert!(res.iter().all(|w| w.witness.is_some()));
    }
}
