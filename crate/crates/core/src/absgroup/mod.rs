//! Normal-form arithmetic in presented reversing symmetry groups.
//!
//! Every model is a semidirect product `A ⋊ C_ord` where `A = C_T x <t> x <g>`
//! is the abelian symmetry part (torsion, optional second free generator, the
//! free generator) and the cyclic factor is generated by a reversor `r`
//! acting on `A` by an involutive automorphism. A word `(a, b, n, j)` stands
//! for `s^a t^b g^n r^j`.

mod verify;

pub use verify::{enumerate_reversors, enumerate_symmetries, verify_theorem_claims, Claim, ClaimReport};

use std::fmt;

use num_integer::Integer;
use serde::Serialize;
use thiserror::Error;

use crate::exactmath::Order;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AbsGroupError {
    #[error("parameter p = {0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("window {window} is smaller than the required {required}")]
    WindowTooSmall { window: i64, required: i64 },
    #[error("claim '{claim}' violated at {witness}")]
    ClaimViolated { claim: String, witness: GroupWord },
}

pub type Result<T> = std::result::Result<T, AbsGroupError>;

/// The presented groups. Names spell the group structure of `R(f)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ModelKind {
    /// `C∞ ⋊ C2 = D∞`, `r g r = g⁻¹`.
    Dinf,
    /// `C2 x D∞`.
    C2xDinf,
    /// `C∞ ⋊ C4`, `r g r⁻¹ = g⁻¹`, `s = r²`.
    CinfRtimesC4,
    /// `(C2 x C∞) ⋊ C2` with `ρ g ρ = s g⁻¹`, `f = g²`.
    C2xCinfRtimesC2,
    /// `C∞ ⋊ C2p`, `r f r⁻¹ = f⁻¹`, `h = r²` of order `p`.
    CinfRtimesC2p(u64),
    /// `(Cp x C∞) ⋊ C2`, `r h r = h⁻¹`.
    CpxCinfRtimesC2(u64),
    /// `C∞ x D∞`, `r` commutes with `t`.
    CinfxDinf,
    /// `(C∞ x C∞) ⋊ C2` with `r t r = t g^k`.
    TwistedDinf(i64),
    /// `(C∞ x C∞) ⋊ C2` with `r` inverting both generators.
    InvertingC2,
}

impl ModelKind {
    pub fn all(p: u64) -> [ModelKind; 9] {
        [
            ModelKind::Dinf,
            ModelKind::C2xDinf,
            ModelKind::CinfRtimesC4,
            ModelKind::C2xCinfRtimesC2,
            ModelKind::CinfRtimesC2p(p),
            ModelKind::CpxCinfRtimesC2(p),
            ModelKind::CinfxDinf,
            ModelKind::TwistedDinf(1),
            ModelKind::InvertingC2,
        ]
    }

    /// Model from its name (case, `-` and `_` ignored) or short tag such as `c4` or `c2p`.
    pub fn parse(name: &str, p: u64) -> Option<ModelKind> {
        let k = match name.to_ascii_lowercase().replace(['-', '_'], "").as_str() {
            "dinf" => ModelKind::Dinf,
            "c2xdinf" => ModelKind::C2xDinf,
            "c4" | "cinfrtimesc4" => ModelKind::CinfRtimesC4,
            "c2xcinf" | "c2xcinfrtimesc2" => ModelKind::C2xCinfRtimesC2,
            "c2p" | "cinfrtimesc2p" => ModelKind::CinfRtimesC2p(p),
            "cpxcinf" | "cpxcinfrtimesc2" => ModelKind::CpxCinfRtimesC2(p),
            "cinfxdinf" => ModelKind::CinfxDinf,
            "twisted" | "twisteddinf" | "twisteddinfk1" => ModelKind::TwistedDinf(1),
            "inverting" | "invertingc2" => ModelKind::InvertingC2,
            _ => return None,
        };
        Some(k)
    }
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelKind::Dinf => write!(f, "D∞"),
            ModelKind::C2xDinf => write!(f, "C2 x D∞"),
            ModelKind::CinfRtimesC4 => write!(f, "C∞ ⋊ C4"),
            ModelKind::C2xCinfRtimesC2 => write!(f, "(C2 x C∞) ⋊ C2"),
            ModelKind::CinfRtimesC2p(p) => write!(f, "C∞ ⋊ C{}", 2 * p),
            ModelKind::CpxCinfRtimesC2(p) => write!(f, "(C{p} x C∞) ⋊ C2"),
            ModelKind::CinfxDinf => write!(f, "C∞ x D∞"),
            ModelKind::TwistedDinf(k) => write!(f, "(C∞ x C∞) ⋊ C2, r t r = t g^{k}"),
            ModelKind::InvertingC2 => write!(f, "(C∞ x C∞) ⋊ C2, r t r = t⁻¹"),
        }
    }
}

/// `s^a t^b g^n r^j` with `0 <= a < torsion`, `0 <= j < reversor_order`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GroupWord {
    pub a: i64,
    pub b: i64,
    pub n: i64,
    pub j: i64,
}

impl GroupWord {
    pub const IDENTITY: GroupWord = GroupWord { a: 0, b: 0, n: 0, j: 0 };

    pub fn new(a: i64, b: i64, n: i64, j: i64) -> Self {
        Self { a, b, n, j }
    }

    pub fn g(n: i64) -> Self {
        Self::new(0, 0, n, 0)
    }

    pub fn t(b: i64) -> Self {
        Self::new(0, b, 0, 0)
    }

    pub fn s(a: i64) -> Self {
        Self::new(a, 0, 0, 0)
    }

    pub fn r(j: i64) -> Self {
        Self::new(0, 0, 0, j)
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (sym, e) in [("s", self.a), ("t", self.b), ("g", self.n), ("r", self.j)] {
            match e {
                0 => {}
                1 => parts.push(sym.to_string()),
                _ => parts.push(format!("{sym}^{e}")),
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

/// A presented group together with its distinguished reversible element `f`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GroupModel {
    pub kind: ModelKind,
    /// Order of the torsion generator `s` (1 when absent).
    pub torsion: i64,
    /// Whether the second free generator `t` is present.
    pub two_free: bool,
    /// Order of `r`.
    pub reversor_order: i64,
    pub f_word: GroupWord,
}

fn is_odd_prime(p: u64) -> bool {
    p > 2 && p % 2 == 1 && (3..).step_by(2).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

impl GroupModel {
    pub fn new(kind: ModelKind) -> Result<Self> {
        if let ModelKind::CinfRtimesC2p(p) | ModelKind::CpxCinfRtimesC2(p) = kind {
            if !is_odd_prime(p) {
                return Err(AbsGroupError::NotOddPrime(p));
            }
        }
        let (torsion, two_free, reversor_order, f_word) = match kind {
            ModelKind::Dinf => (1, false, 2, GroupWord::g(1)),
            ModelKind::C2xDinf => (2, false, 2, GroupWord::g(1)),
            ModelKind::CinfRtimesC4 => (1, false, 4, GroupWord::g(1)),
            ModelKind::C2xCinfRtimesC2 => (2, false, 2, GroupWord::g(2)),
            ModelKind::CinfRtimesC2p(p) => (1, false, 2 * p as i64, GroupWord::g(1)),
            ModelKind::CpxCinfRtimesC2(p) => (p as i64, false, 2, GroupWord::g(1)),
            ModelKind::CinfxDinf | ModelKind::TwistedDinf(_) | ModelKind::InvertingC2 => (1, true, 2, GroupWord::g(1)),
        };
        Ok(Self {
            kind,
            torsion,
            two_free,
            reversor_order,
            f_word,
        })
    }

    /// Reversor orders the structure classification predicts.
    pub fn expected_spectrum(&self) -> Vec<Order> {
        match self.kind {
            ModelKind::Dinf | ModelKind::C2xDinf | ModelKind::CpxCinfRtimesC2(_) | ModelKind::InvertingC2 => {
                vec![Order::Finite(2)]
            }
            ModelKind::CinfRtimesC4 => vec![Order::Finite(4)],
            ModelKind::C2xCinfRtimesC2 => vec![Order::Finite(2), Order::Finite(4)],
            ModelKind::CinfRtimesC2p(p) => vec![Order::Finite(2), Order::Finite(2 * p)],
            ModelKind::CinfxDinf | ModelKind::TwistedDinf(_) => vec![Order::Finite(2), Order::Infinite],
        }
    }

    /// Whether every reversor is predicted to be an involution.
    pub fn all_involutions(&self) -> bool {
        self.expected_spectrum() == [Order::Finite(2)]
    }

    /// Brings arbitrary exponents into canonical ranges.
    pub fn normalize(&self, u: GroupWord) -> GroupWord {
        GroupWord {
            a: u.a.rem_euclid(self.torsion),
            b: if self.two_free { u.b } else { 0 },
            n: u.n,
            j: u.j.rem_euclid(self.reversor_order),
        }
    }

    /// Conjugation by `r` on the abelian part `(a, b, n)`.
    fn act(&self, a: i64, b: i64, n: i64) -> (i64, i64, i64) {
        let (a, b, n) = match self.kind {
            ModelKind::Dinf | ModelKind::C2xDinf | ModelKind::CinfRtimesC4 | ModelKind::CinfRtimesC2p(_) => (a, b, -n),
            ModelKind::C2xCinfRtimesC2 => (a + n, b, -n),
            ModelKind::CpxCinfRtimesC2(_) => (-a, b, -n),
            ModelKind::CinfxDinf => (a, b, -n),
            ModelKind::TwistedDinf(k) => (a, b, k * b - n),
            ModelKind::InvertingC2 => (a, -b, -n),
        };
        (a.rem_euclid(self.torsion), b, n)
    }

    /// `r^j x r^{-j}`; the action is an involution so only the parity of `j` matters.
    fn act_pow(&self, j: i64, x: (i64, i64, i64)) -> (i64, i64, i64) {
        if j.rem_euclid(2) == 1 {
            self.act(x.0, x.1, x.2)
        } else {
            x
        }
    }

    pub fn multiply(&self, u: GroupWord, v: GroupWord) -> GroupWord {
        let (a2, b2, n2) = self.act_pow(u.j, (v.a, v.b, v.n));
        self.normalize(GroupWord::new(u.a + a2, u.b + b2, u.n + n2, u.j + v.j))
    }

    pub fn invert(&self, u: GroupWord) -> GroupWord {
        let (a, b, n) = self.act_pow(u.j, (u.a, u.b, u.n));
        self.normalize(GroupWord::new(-a, -b, -n, -u.j))
    }

    pub fn pow(&self, u: GroupWord, k: i64) -> GroupWord {
        let (mut base, mut e) = if k < 0 { (self.invert(u), -k) } else { (u, k) };
        let mut acc = GroupWord::IDENTITY;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.multiply(acc, base);
            }
            base = self.multiply(base, base);
            e >>= 1;
        }
        acc
    }

    /// `u v u⁻¹`
    pub fn conjugate(&self, u: GroupWord, v: GroupWord) -> GroupWord {
        self.multiply(self.multiply(u, v), self.invert(u))
    }

    pub fn is_reversor(&self, u: GroupWord) -> bool {
        self.conjugate(u, self.f_word) == self.invert(self.f_word)
    }

    pub fn is_symmetry(&self, u: GroupWord) -> bool {
        self.conjugate(u, self.f_word) == self.f_word
    }

    /// `+1` on symmetries, `-1` on reversors: the parity of the `r` exponent.
    pub fn grade(&self, u: GroupWord) -> i8 {
        if u.j.rem_euclid(2) == 0 {
            1
        } else {
            -1
        }
    }

    /// Order computed from the normal form.
    ///
    /// With `q` the order of `r^j`, `u^q` lies in the abelian part and equals
    /// `q·x` for even `j` and `(q/2)(x + σ(x))` for odd `j`.
    pub fn word_order(&self, u: GroupWord) -> Order {
        let u = self.normalize(u);
        let q = self.reversor_order / u.j.gcd(&self.reversor_order);
        let (a, b, n) = if u.j % 2 == 1 {
            let (sa, sb, sn) = self.act(u.a, u.b, u.n);
            let h = q / 2;
            (h * (u.a + sa), h * (u.b + sb), h * (u.n + sn))
        } else {
            (q * u.a, q * u.b, q * u.n)
        };
        if b != 0 || n != 0 {
            return Order::Infinite;
        }
        let a = a.rem_euclid(self.torsion);
        let torsion_order = self.torsion / a.gcd(&self.torsion);
        Order::Finite((q * torsion_order) as u64)
    }

    /// Order by repeated multiplication, `None` if it exceeds `cap`.
    pub fn word_order_iterative(&self, u: GroupWord, cap: u64) -> Option<u64> {
        let u = self.normalize(u);
        let mut acc = u;
        for k in 1..=cap {
            if acc == GroupWord::IDENTITY {
                return Some(k);
            }
            acc = self.multiply(acc, u);
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn model(k: ModelKind) -> GroupModel {
        GroupModel::new(k).unwrap()
    }

    #[test]
    fn dihedral_relation() {
        let m = model(ModelKind::Dinf);
        let r = GroupWord::r(1);
        let rg = m.multiply(r, GroupWord::g(1));
        assert_eq!(m.multiply(rg, r), GroupWord::g(-1));
        assert_eq!(m.multiply(GroupWord::g(3), GroupWord::IDENTITY), GroupWord::g(3));
        assert_eq!(m.invert(GroupWord::g(4)), GroupWord::g(-4));
    }

    #[test]
    fn twisted_involution_relation() {
        let m = model(ModelKind::C2xCinfRtimesC2);
        let rho = GroupWord::r(1);
        let w = m.multiply(m.multiply(rho, GroupWord::g(1)), rho);
        assert_eq!(w, GroupWord::new(1, 0, -1, 0));
    }

    #[test]
    fn order_four_reversor() {
        let m = model(ModelKind::CinfRtimesC4);
        assert_eq!(m.invert(GroupWord::r(1)), GroupWord::r(3));
        let rg = m.multiply(GroupWord::r(1), GroupWord::g(1));
        assert_eq!(m.word_order(rg), Order::Finite(4));
        assert_eq!(m.word_order(GroupWord::IDENTITY), Order::Finite(1));
    }

    #[test]
    fn twisted_reversor_of_infinite_order() {
        let m = model(ModelKind::TwistedDinf(1));
        let rt = m.multiply(GroupWord::r(1), GroupWord::t(1));
        assert!(m.is_reversor(rt));
        assert_eq!(m.word_order(rt), Order::Infinite);
    }

    #[test]
    fn prime_parameter_checked() {
        assert_eq!(GroupModel::new(ModelKind::CinfRtimesC2p(9)), Err(AbsGroupError::NotOddPrime(9)));
        assert_eq!(GroupModel::new(ModelKind::CpxCinfRtimesC2(2)), Err(AbsGroupError::NotOddPrime(2)));
        assert!(GroupModel::new(ModelKind::CinfRtimesC2p(7)).is_ok());
    }

    #[test]
    fn analytic_order_matches_iteration() {
        for kind in ModelKind::all(3).into_iter().chain(ModelKind::all(5)) {
            let m = model(kind);
            for a in 0..m.torsion {
                for b in -2..=2 {
                    for n in -2..=2 {
                        for j in 0..m.reversor_order {
                            let u = m.normalize(GroupWord::new(a, b, n, j));
                            let it = m.word_order_iterative(u, 64);
                            match m.word_order(u) {
                                Order::Finite(k) => assert_eq!(it, Some(k), "{kind:?} {u}"),
                                Order::Infinite => assert_eq!(it, None, "{kind:?} {u}"),
                            }
                        }
                    }
                }
            }
        }
    }
}
