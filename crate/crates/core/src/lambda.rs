//! The module `Lambda`: a relabeled copy of the standard module on which
//! the integer-labeled algebras act by multiplication.
//!
//! Basis labels are `a(e(n))`, `n >= 0`, standing for `exp(n)`, and
//! `a(o(n))`, `n >= 1`, standing for `-exp(n - 1/2)`. Only the formal
//! multiplication of these numbers is used; nothing is ever evaluated.

use std::fmt;

use serde_json::{Map, Value};

use crate::combination::{read_i64, BasisKey, LinComb};
use crate::error::{Error, Result};
use crate::heisenberg::{a_minus, a_plus, HeisLabel, Side};
use crate::lie::{GenIndex, LieElement};
use crate::standard_module::{act, t, SVector, TBasis};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Parity {
    Even,
    Odd,
}

/// `a(e(level))` or `a(o(level))`. Constructed only through [`LambdaBasis::new`],
/// which enforces `level >= 0` for even and `level >= 1` for odd labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LambdaBasis {
    parity: Parity,
    level: i64,
}

impl LambdaBasis {
    /// `None` when the label is outside the basis range.
    pub fn new(parity: Parity, level: i64) -> Option<Self> {
        let min = match parity {
            Parity::Even => 0,
            Parity::Odd => 1,
        };
        (level >= min).then_some(LambdaBasis { parity, level })
    }

    pub fn even(level: i64) -> Self {
        Self::new(Parity::Even, level).expect("even labels start at 0")
    }

    pub fn odd(level: i64) -> Self {
        Self::new(Parity::Odd, level).expect("odd labels start at 1")
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn level(&self) -> i64 {
        self.level
    }

    /// The unit `a(e(0))`.
    pub fn unit() -> Self {
        Self::even(0)
    }
}

/// Formal product of `exp`-labels with any integer level; range is checked
/// only when the result is turned back into a basis label.
fn formal_product(a: (Parity, i64), b: (Parity, i64)) -> (Parity, i64) {
    match (a.0, b.0) {
        (Parity::Even, Parity::Even) => (Parity::Even, a.1 + b.1),
        (Parity::Even, Parity::Odd) | (Parity::Odd, Parity::Even) => (Parity::Odd, a.1 + b.1),
        // (-exp(a - 1/2)) (-exp(b - 1/2)) = exp(a + b - 1)
        (Parity::Odd, Parity::Odd) => (Parity::Even, a.1 + b.1 - 1),
    }
}

/// The product on basis labels. Closed on the valid range.
pub fn bullet(a: LambdaBasis, b: LambdaBasis) -> LambdaBasis {
    let (p, l) = formal_product((a.parity, a.level), (b.parity, b.level));
    LambdaBasis::new(p, l).expect("product of basis labels stays in range")
}

impl fmt::Display for LambdaBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.parity {
            Parity::Even => 'e',
            Parity::Odd => 'o',
        };
        write!(f, "a({}({}))", tag, self.level)
    }
}

impl BasisKey for LambdaBasis {
    fn write_fields(&self, obj: &mut Map<String, Value>) {
        let parity = match self.parity {
            Parity::Even => "even",
            Parity::Odd => "odd",
        };
        obj.insert("parity".into(), parity.into());
        obj.insert("level".into(), self.level.into());
    }

    fn read_fields(obj: &Map<String, Value>) -> Result<Self> {
        let parity = match obj.get("parity").and_then(Value::as_str) {
            Some("even") => Parity::Even,
            Some("odd") => Parity::Odd,
            _ => return Err(Error::Json("\"parity\" must be \"even\" or \"odd\"".into())),
        };
        let level = read_i64(obj, "level")?;
        LambdaBasis::new(parity, level)
            .ok_or_else(|| Error::Json(format!("level {level} out of range for this parity")))
    }

    fn is_unit(&self) -> bool {
        *self == LambdaBasis::unit()
    }
}

pub type LambdaElement = LinComb<LambdaBasis>;

/// Bilinear extension of [`bullet`].
pub fn bullet_product(x: &LambdaElement, y: &LambdaElement) -> LambdaElement {
    x.bilinear(y, |a, b| LambdaElement::basis(bullet(*a, *b)))
}

/// `t[2k] -> a(e(k))`, `t[2k-1] -> a(o(k))`.
pub fn phi_basis(k: u64) -> LambdaBasis {
    let k = k as i64;
    if k % 2 == 0 {
        LambdaBasis::even(k / 2)
    } else {
        LambdaBasis::odd((k + 1) / 2)
    }
}

pub fn phi_inv_basis(b: LambdaBasis) -> u64 {
    match b.parity {
        Parity::Even => 2 * b.level as u64,
        Parity::Odd => 2 * b.level as u64 - 1,
    }
}

pub fn phi_iso(v: &SVector) -> LambdaElement {
    v.iter().map(|(b, c)| (phi_basis(b.0), c.clone())).collect()
}

pub fn phi_inv(w: &LambdaElement) -> SVector {
    w.iter().map(|(b, c)| (TBasis(phi_inv_basis(*b)), c.clone())).collect()
}

/// The multiplier label of an integer-labeled generator:
/// `Z_n^+ -> e(n)`, `Z_{-n}^+ -> o(n)`, `Z_n^- -> e(-n)`,
/// `Z_{-n}^- -> -exp(-n + 1/2) = o(1 - n)`.
fn multiplier(label: HeisLabel) -> (Parity, i64) {
    let n = label.n;
    match (label.side, n >= 0) {
        (Side::Plus, true) => (Parity::Even, n),
        (Side::Plus, false) => (Parity::Odd, -n),
        (Side::Minus, true) => (Parity::Even, -n),
        (Side::Minus, false) => (Parity::Odd, 1 + n),
    }
}

/// Action of `Z_n^{side}` on `Lambda` by formal multiplication. A product
/// whose label leaves the basis range is zero; this is exactly where the
/// mirrored elimination `Z[0,k]` kills the corresponding `t[j]`.
pub fn lambda_act(label: HeisLabel, w: &LambdaElement) -> LambdaElement {
    let mult = multiplier(label);
    w.iter()
        .filter_map(|(b, c)| {
            let (p, l) = formal_product(mult, (b.parity, b.level));
            LambdaBasis::new(p, l).map(|nb| (nb, c.clone()))
        })
        .collect()
}

/// The integer label of a generator of `l+` or `l-`. `Z[0,0]` lies in both
/// and is sent to `Z_0^+`; either choice acts as the identity.
pub fn translate(g: GenIndex) -> Result<HeisLabel> {
    if g.m == 0 {
        a_plus(g)
    } else if g.n == 0 {
        a_minus(g)
    } else {
        Err(Error::NotShiftGenerator { n: g.n, m: g.m })
    }
}

/// Whether `phi(Z t[k]) = lambda(translate(Z)) phi(t[k])`.
pub fn diagram_check(g: GenIndex, k: u64) -> Result<bool> {
    let label = translate(g)?;
    let via_s = phi_iso(&act(&LieElement::basis(g), &t(k)));
    let via_lambda = lambda_act(label, &phi_iso(&t(k)));
    Ok(via_s == via_lambda)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::standard_module::star;

    #[test]
    fn bullet_examples() {
        assert_eq!(bullet(LambdaBasis::odd(1), LambdaBasis::odd(1)), LambdaBasis::even(1));
        assert_eq!(bullet(LambdaBasis::unit(), LambdaBasis::odd(3)), LambdaBasis::odd(3));
        assert_eq!(bullet(LambdaBasis::even(2), LambdaBasis::even(3)), LambdaBasis::even(5));
    }

    #[test]
    fn label_range() {
        assert!(LambdaBasis::new(Parity::Odd, 0).is_none());
        assert!(LambdaBasis::new(Parity::Even, -1).is_none());
        assert!(LambdaBasis::new(Parity::Even, 0).is_some());
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi_iso(&t(4)), LambdaElement::basis(LambdaBasis::even(2)));
        assert_eq!(phi_iso(&t(3)), LambdaElement::basis(LambdaBasis::odd(2)));
        assert_eq!(phi_iso(&t(0)), LambdaElement::basis(LambdaBasis::unit()));
        for k in 0..30 {
            assert_eq!(phi_inv(&phi_iso(&t(k))), t(k));
        }
    }

    #[test]
    fn phi_is_multiplicative() {
        for a in 0..=12 {
            for b in 0..=12 {
                assert_eq!(
                    phi_iso(&star(&t(a), &t(b))),
                    bullet_product(&phi_iso(&t(a)), &phi_iso(&t(b)))
                );
            }
        }
    }

    #[test]
    fn lambda_act_examples() {
        for n in 1..6 {
            for k in n..10 {
                let w = LambdaElement::basis(LambdaBasis::odd(k));
                let out = lambda_act(HeisLabel::minus(-n), &w);
                assert_eq!(out, LambdaElement::basis(LambdaBasis::even(k - n)));
            }
            let w = LambdaElement::basis(LambdaBasis::odd(n));
            assert!(lambda_act(HeisLabel::minus(n), &w).is_zero());
        }
        let w = LambdaElement::basis(LambdaBasis::unit());
        assert_eq!(
            lambda_act(HeisLabel::plus(-1), &w),
            LambdaElement::basis(LambdaBasis::odd(1))
        );
    }

    #[test]
    fn diagram_examples() {
        for n in 1..6 {
            for k in 1..8 {
                assert!(diagram_check(GenIndex::new(0, 2 * n - 1), 2 * k - 1).unwrap());
            }
        }
        for n in 0..=10 {
            for k in 0..=10 {
                assert!(diagram_check(GenIndex::new(2 * n, 0), k).unwrap());
            }
        }
        assert!(diagram_check(GenIndex::new(0, 0), 5).unwrap());
        assert_eq!(
            diagram_check(GenIndex::new(1, 2), 0),
            Err(Error::NotShiftGenerator { n: 1, m: 2 })
        );
    }

    #[test]
    fn json_form() {
        let w = LambdaElement::basis(LambdaBasis::odd(2));
        assert_eq!(
            w.to_json().to_string(),
            r#"{"terms":[{"parity":"odd","level":2,"coeff":"1"}]}"#
        );
        assert_eq!(LambdaElement::from_json(&w.to_json()).unwrap(), w);
    }
}
