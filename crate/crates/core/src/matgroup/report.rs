use serde::Serialize;

use super::classify::{classify_two_infty, TwoInftyCase};
use super::search::{search_reversors, FoundReversor};
use super::symmetry::{symmetry_generator_2x2, SymmetryDescriptor};
use super::{spectral_obstruction, GroupContext, MatGroupError, Result, SearchBounds};
use crate::exactmath::{finite_order_test, reciprocity_class, ExactError, Matrix, Order, Poly, Reciprocity};
use crate::scalar::IntegerRing;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    Classified,
    IrreversibleProven,
    InconclusiveUpToBound,
    TriviallyReversible,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Classification {
    /// `GL(2,Z)`, `S(f) ≅ C2 x C∞`.
    TwoInfty(TwoInftyCase),
    /// `PGL(2,Z)`, `S(f) ≅ C∞`: `R(f) ≅ D∞` with involutory reversors only.
    InfiniteDihedral { all_involutions: bool },
    /// Reversors exist; the symmetry group was not computed.
    Reversible,
    /// `f² = 1`, so `R(f) = S(f)`.
    Trivial,
    Irreversible,
    Undetermined,
}

impl Classification {
    pub fn structure(&self) -> Option<&'static str> {
        match self {
            Classification::TwoInfty(c) => c.structure(),
            Classification::InfiniteDihedral { .. } => Some("D∞"),
            Classification::Trivial => Some("R(f) = S(f)"),
            _ => None,
        }
    }
}

/// Full analysis of one unimodular matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound(serialize = "T: crate::scalar::Ring"))]
pub struct ReversibilityReport<T> {
    pub matrix: Matrix<T>,
    pub context: GroupContext,
    pub order: Order,
    pub char_poly: Poly<T>,
    pub reciprocity: Reciprocity,
    /// Characteristic polynomials of `f` and `f⁻¹` (or `-f⁻¹` in `PGL`) differ.
    pub spectral_obstruction: bool,
    pub symmetry: Option<SymmetryDescriptor<T>>,
    pub reversors: Vec<FoundReversor<T>>,
    pub classification: Classification,
    pub bounds: SearchBounds,
    pub status: Status,
    pub notes: Vec<String>,
}

fn irreducible_quadratic<T: IntegerRing>(p: &Poly<T>) -> bool {
    if p.degree() != Some(2) {
        return false;
    }
    let (c, b) = (p.coeff(0), p.coeff(1));
    let disc = b.clone() * b - crate::scalar::from_i64::<T>(4) * c;
    if disc.is_negative() {
        return true;
    }
    let r = num_integer::Roots::sqrt(&disc);
    r.clone() * r != disc
}

/// Runs the whole pipeline: order, spectral data, reversor search, and for
/// `2 x 2` matrices of infinite order the symmetry group and the structural
/// classification.
pub fn analyze<T: IntegerRing>(m: &Matrix<T>, ctx: GroupContext, bounds: SearchBounds) -> Result<ReversibilityReport<T>> {
    ctx.check(m)?;
    if !m.is_unimodular() {
        return Err(ExactError::NotUnimodular { det: m.det().to_string() }.into());
    }
    let order = finite_order_test(m, ctx.projective)?;
    let char_poly = m.char_poly();
    let reciprocity = reciprocity_class(&char_poly);
    let obstruction = spectral_obstruction(&char_poly, ctx);
    let mut report = ReversibilityReport {
        matrix: m.clone(),
        context: ctx,
        order,
        char_poly,
        reciprocity,
        spectral_obstruction: obstruction,
        symmetry: None,
        reversors: Vec::new(),
        classification: Classification::Undetermined,
        bounds,
        status: Status::InconclusiveUpToBound,
        notes: Vec::new(),
    };

    if matches!(order, Order::Finite(1 | 2)) {
        report.classification = Classification::Trivial;
        report.status = Status::TriviallyReversible;
        return Ok(report);
    }

    match search_reversors(m, ctx, bounds.reversor) {
        Ok(found) => report.reversors = found,
        Err(MatGroupError::EmptyLattice) => report
            .notes
            .push("intertwiner lattice of (f, f⁻¹) is trivial".to_string()),
        Err(e) => return Err(e),
    }

    let two_infty = ctx.dim == 2 && order == Order::Infinite && irreducible_quadratic(&report.char_poly);
    if two_infty {
        match symmetry_generator_2x2(m, ctx, bounds.generator) {
            Ok(desc) => report.symmetry = Some(desc),
            Err(e @ MatGroupError::GeneratorNotFound { .. }) => report.notes.push(e.to_string()),
            Err(e) => return Err(e),
        }
    }

    let irreversible = report.reversors.is_empty() && obstruction;
    if two_infty && !ctx.projective && report.symmetry.is_some() {
        let cls = classify_two_infty(m, ctx, bounds)?;
        report.status = match cls.case {
            TwoInftyCase::IrreversibleProven => Status::IrreversibleProven,
            TwoInftyCase::Inconclusive { .. } => Status::InconclusiveUpToBound,
            _ => Status::Classified,
        };
        report.classification = match cls.case {
            TwoInftyCase::IrreversibleProven => Classification::Irreversible,
            TwoInftyCase::Inconclusive { .. } => Classification::Undetermined,
            c => Classification::TwoInfty(c),
        };
    } else if irreversible {
        report.status = Status::IrreversibleProven;
        report.classification = Classification::Irreversible;
    } else if report.reversors.is_empty() {
        report.status = Status::InconclusiveUpToBound;
        report.notes.push(format!(
            "no reversor with lattice coordinates up to {}; absence is not proven",
            bounds.reversor
        ));
    } else if two_infty && ctx.projective && report.symmetry.is_some() {
        let all_involutions = report.reversors.iter().all(|r| r.order == Order::Finite(2));
        report.status = Status::Classified;
        report.classification = Classification::InfiniteDihedral { all_involutions };
    } else {
        report.status = Status::Classified;
        report.classification = Classification::Reversible;
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type M = Matrix<BigInt>;

    #[test]
    fn fibonacci_in_both_groups() {
        let fib = M::from_i64s(2, &[0, 1, 1, 1]);
        let gl = analyze(&fib, GroupContext::gl(2), SearchBounds::default()).unwrap();
        assert_eq!(gl.status, Status::IrreversibleProven);
        assert_eq!(gl.reciprocity, Reciprocity::Neither);

        let pgl = analyze(&fib, GroupContext::pgl(2), SearchBounds::default()).unwrap();
        assert_eq!(pgl.status, Status::Classified);
        assert_eq!(pgl.classification, Classification::InfiniteDihedral { all_involutions: true });
    }

    #[test]
    fn identity_is_trivial() {
        let r = analyze(&M::identity(2), GroupContext::gl(2), SearchBounds::default()).unwrap();
        assert_eq!(r.status, Status::TriviallyReversible);
    }

    #[test]
    fn not_unimodular() {
        let r = analyze(&M::from_i64s(2, &[2, 0, 0, 1]), GroupContext::gl(2), SearchBounds::default());
        assert!(matches!(r, Err(MatGroupError::Exact(ExactError::NotUnimodular { .. }))));
    }
}
