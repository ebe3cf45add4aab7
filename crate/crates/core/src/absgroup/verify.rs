use std::collections::BTreeSet;

use serde::Serialize;

use super::{AbsGroupError, GroupModel, GroupWord, ModelKind, Result};
use crate::exactmath::Order;

/// One checked statement, relative to the enumeration window.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub name: &'static str,
    /// `false` when the claim does not apply to the model.
    pub applicable: bool,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimReport {
    pub model: ModelKind,
    pub window: i64,
    pub reversor_count: usize,
    pub symmetry_count: usize,
    pub order_spectrum: Vec<Order>,
    pub claims: Vec<Claim>,
}

impl ClaimReport {
    pub fn all_passed(&self) -> bool {
        self.claims.iter().all(|c| c.passed)
    }
}

/// Every word with free exponents in `[-window, window]`, in normal-form order.
fn window_words(model: &GroupModel, window: i64) -> Vec<GroupWord> {
    let bs = if model.two_free { -window..=window } else { 0..=0 };
    let mut out = Vec::new();
    for a in 0..model.torsion {
        for b in bs.clone() {
            for n in -window..=window {
                for j in 0..model.reversor_order {
                    out.push(GroupWord::new(a, b, n, j));
                }
            }
        }
    }
    out
}

/// All reversors of `f` with free exponents in `[-window, window]`, with their orders.
pub fn enumerate_reversors(model: &GroupModel, window: i64) -> Vec<(GroupWord, Order)> {
    window_words(model, window)
        .into_iter()
        .filter(|u| model.is_reversor(*u))
        .map(|u| (u, model.word_order(u)))
        .collect()
}

pub fn enumerate_symmetries(model: &GroupModel, window: i64) -> Vec<GroupWord> {
    window_words(model, window)
        .into_iter()
        .filter(|u| model.is_symmetry(*u))
        .collect()
}

fn order_rank(o: &Order) -> u64 {
    match o {
        Order::Finite(k) => *k,
        Order::Infinite => u64::MAX,
    }
}

struct Checker {
    claims: Vec<Claim>,
}

impl Checker {
    fn check(&mut self, name: &'static str, witness: Option<GroupWord>, detail: String) -> Result<()> {
        if let Some(w) = witness {
            return Err(AbsGroupError::ClaimViolated {
                claim: format!("{name}: {detail}"),
                witness: w,
            });
        }
        self.claims.push(Claim {
            name,
            applicable: true,
            passed: true,
            detail,
        });
        Ok(())
    }

    fn skip(&mut self, name: &'static str, detail: &str) {
        self.claims.push(Claim {
            name,
            applicable: false,
            passed: true,
            detail: detail.to_string(),
        });
    }
}

/// Exhaustively checks the structure claims for `model` on all words in the
/// window. Any violation is returned as an error with a witness word.
pub fn verify_theorem_claims(model: &GroupModel, window: i64) -> Result<ClaimReport> {
    let required = match model.kind {
        ModelKind::CinfRtimesC2p(p) | ModelKind::CpxCinfRtimesC2(p) => 2 * p as i64,
        _ => 1,
    };
    if window < required {
        return Err(AbsGroupError::WindowTooSmall { window, required });
    }
    let reversors = enumerate_reversors(model, window);
    let symmetries = enumerate_symmetries(model, window);
    let mut spectrum: Vec<Order> = reversors.iter().map(|(_, o)| *o).collect::<BTreeSet<_>>().into_iter().collect();
    spectrum.sort_by_key(order_rank);
    let mut c = Checker { claims: Vec::new() };

    c.check(
        "reversors-nonempty",
        reversors.is_empty().then_some(model.f_word),
        format!("{} reversors in window {window}", reversors.len()),
    )?;

    let expected = model.expected_spectrum();
    let witness = reversors
        .iter()
        .find(|(_, o)| !expected.contains(o))
        .map(|(u, _)| *u)
        .or_else(|| (spectrum != expected).then_some(GroupWord::IDENTITY));
    let show = |v: &[Order]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
    c.check(
        "order-spectrum",
        witness,
        format!("found {{{}}}, expected {{{}}}", show(&spectrum), show(&expected)),
    )?;

    let witness = reversors.iter().find(|(_, o)| o.is_odd()).map(|(u, _)| *u);
    c.check("no-odd-order-reversor", witness, "every reversor has even or infinite order".into())?;

    let witness = reversors.iter().find_map(|(u, _)| {
        reversors
            .iter()
            .map(|(v, _)| model.multiply(*u, *v))
            .find(|w| !model.is_symmetry(*w))
    });
    c.check(
        "reversor-products-are-symmetries",
        witness,
        format!("{} products", reversors.len() * reversors.len()),
    )?;

    let words: Vec<GroupWord> = symmetries.iter().copied().chain(reversors.iter().map(|(u, _)| *u)).collect();
    let witness = words
        .iter()
        .find(|u| (model.grade(**u) == -1) != model.is_reversor(**u))
        .copied()
        .or_else(|| {
            words.iter().find_map(|u| {
                words.iter().find_map(|v| {
                    let w = model.multiply(*u, *v);
                    let ok = model.grade(w) == model.grade(*u) * model.grade(*v)
                        && if model.grade(w) == 1 { model.is_symmetry(w) } else { model.is_reversor(w) };
                    (!ok).then_some(w)
                })
            })
        });
    c.check(
        "grading-homomorphism",
        witness,
        format!("grading multiplicative on {} pairs, kernel = symmetries", words.len() * words.len()),
    )?;

    if model.all_involutions() {
        let witness = symmetries.iter().find_map(|u| {
            symmetries
                .iter()
                .find(|v| model.multiply(*u, **v) != model.multiply(**v, *u))
                .copied()
        });
        c.check(
            "symmetries-abelian",
            witness,
            format!("{} symmetries commute pairwise", symmetries.len()),
        )?;
    } else {
        c.skip("symmetries-abelian", "not an all-involution model");
    }

    if let ModelKind::CinfRtimesC2p(p) = model.kind {
        let r = GroupWord::r(1);
        let rp = model.pow(r, p as i64);
        let ok = model.word_order(r) == Order::Finite(2 * p) && model.is_reversor(rp) && model.word_order(rp) == Order::Finite(2);
        c.check(
            "involutory-power-reversor",
            (!ok).then_some(rp),
            format!("r has order {}, r^{p} = {rp} is an involutory reversor", 2 * p),
        )?;
    } else {
        c.skip("involutory-power-reversor", "no reversor of order 2p in the model");
    }

    let witness = reversors.iter().find_map(|(u, o)| {
        let it = model.word_order_iterative(*u, 4 * model.reversor_order as u64 * model.torsion as u64);
        let agree = match o {
            Order::Finite(k) => it == Some(*k),
            Order::Infinite => it.is_none(),
        };
        (!agree).then_some(*u)
    });
    c.check("orders-match-iteration", witness, "analytic orders agree with repeated multiplication".into())?;

    Ok(ClaimReport {
        model: model.kind,
        window,
        reversor_count: reversors.len(),
        symmetry_count: symmetries.len(),
        order_spectrum: spectrum,
        claims: c.claims,
    })
}
