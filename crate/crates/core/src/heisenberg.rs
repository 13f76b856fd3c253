//! The abelian subalgebras `l+ = span{Z[n,0]}` and `l- = span{Z[0,n]}`,
//! their relabelings over the integers, and the Heisenberg central
//! extension defined by the cocycle `c(Z_n, Z_m) = n d(n,-m)`.

use std::fmt;

use serde_json::{Map, Value};

use crate::combination::{read_i64, BasisKey, LinComb};
use crate::error::{Error, Result};
use crate::lie::{GenIndex, LieElement};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Plus,
    Minus,
}

impl Side {
    fn sign(self) -> char {
        match self {
            Side::Plus => '+',
            Side::Minus => '-',
        }
    }
}

/// `Z_n^+` or `Z_n^-`, `n` any integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HeisLabel {
    pub side: Side,
    pub n: i64,
}

impl HeisLabel {
    pub const fn new(side: Side, n: i64) -> Self {
        HeisLabel { side, n }
    }

    pub const fn plus(n: i64) -> Self {
        HeisLabel::new(Side::Plus, n)
    }

    pub const fn minus(n: i64) -> Self {
        HeisLabel::new(Side::Minus, n)
    }
}

impl fmt::Display for HeisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z{}[{}]", self.side.sign(), self.n)
    }
}

impl BasisKey for HeisLabel {
    fn write_fields(&self, obj: &mut Map<String, Value>) {
        obj.insert("side".into(), self.side.sign().to_string().into());
        obj.insert("n".into(), self.n.into());
    }

    fn read_fields(obj: &Map<String, Value>) -> Result<Self> {
        let side = match obj.get("side").and_then(Value::as_str) {
            Some("+") => Side::Plus,
            Some("-") => Side::Minus,
            _ => return Err(Error::Json("\"side\" must be \"+\" or \"-\"".into())),
        };
        Ok(HeisLabel::new(side, read_i64(obj, "n")?))
    }
}

/// Interleaving of the non-negative loop count `k` onto the integers:
/// even `2n -> n`, odd `2n-1 -> -n`.
fn interleave(k: u64) -> i64 {
    let k = k as i64;
    if k % 2 == 0 {
        k / 2
    } else {
        -(k + 1) / 2
    }
}

fn deinterleave(n: i64) -> u64 {
    if n >= 0 {
        2 * n as u64
    } else {
        2 * n.unsigned_abs() - 1
    }
}

/// `Z[2n,0] -> Z_n^+`, `Z[2n-1,0] -> Z_{-n}^+`.
pub fn a_plus(g: GenIndex) -> Result<HeisLabel> {
    if g.m != 0 {
        return Err(Error::NotInPlus { n: g.n, m: g.m });
    }
    Ok(HeisLabel::plus(interleave(g.n)))
}

/// `Z[0,2n] -> Z_n^-`, `Z[0,2n-1] -> Z_{-n}^-`.
pub fn a_minus(g: GenIndex) -> Result<HeisLabel> {
    if g.n != 0 {
        return Err(Error::NotInMinus { n: g.n, m: g.m });
    }
    Ok(HeisLabel::minus(interleave(g.m)))
}

/// Inverse of [`a_plus`] / [`a_minus`], chosen by the label's side.
pub fn label_to_generator(label: HeisLabel) -> GenIndex {
    let k = deinterleave(label.n);
    match label.side {
        Side::Plus => GenIndex::new(k, 0),
        Side::Minus => GenIndex::new(0, k),
    }
}

/// The canonical isomorphism `Z_n^+ -> Z_n^-`.
pub fn d_map(label: HeisLabel) -> HeisLabel {
    HeisLabel::minus(label.n)
}

pub type HeisCombination = LinComb<HeisLabel>;

/// Linear extension of [`a_plus`] to an element of `l+`.
pub fn a_plus_element(x: &LieElement) -> Result<HeisCombination> {
    x.iter().map(|(g, c)| Ok((a_plus(*g)?, c.clone()))).collect()
}

/// Linear extension of [`a_minus`] to an element of `l-`.
pub fn a_minus_element(x: &LieElement) -> Result<HeisCombination> {
    x.iter().map(|(g, c)| Ok((a_minus(*g)?, c.clone()))).collect()
}

pub fn d_element(x: &HeisCombination) -> HeisCombination {
    x.iter().map(|(l, c)| (d_map(*l), c.clone())).collect()
}

/// `c(Z_n, Z_m) = n d(n,-m)` on labels of one side.
pub fn cocycle(a: HeisLabel, b: HeisLabel) -> Result<Scalar> {
    if a.side != b.side {
        return Err(Error::MixedSides);
    }
    Ok(if a.n == -b.n { Scalar::from(a.n) } else { Scalar::zero() })
}

/// Element of the Heisenberg algebra: labels plus a multiple of the central
/// element `C`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HeisenbergElement {
    pub terms: HeisCombination,
    pub central: Scalar,
}

impl HeisenbergElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn label(label: HeisLabel) -> Self {
        HeisenbergElement {
            terms: HeisCombination::basis(label),
            central: Scalar::zero(),
        }
    }

    pub fn central(coeff: Scalar) -> Self {
        HeisenbergElement {
            terms: HeisCombination::zero(),
            central: coeff,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero() && self.central.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        HeisenbergElement {
            terms: &self.terms + &other.terms,
            central: &self.central + &other.central,
        }
    }

    fn side(&self) -> Option<Side> {
        self.terms.keys().next().map(|l| l.side)
    }

    fn single_side(&self) -> Result<Option<Side>> {
        let side = self.side();
        if self.terms.keys().any(|l| Some(l.side) != side) {
            return Err(Error::MixedSides);
        }
        Ok(side)
    }
}

impl fmt::Display for HeisenbergElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.terms.is_zero(), self.central.is_zero()) {
            (_, true) => write!(f, "{}", self.terms),
            (true, false) => write!(f, "({})*C", self.central),
            (false, false) => write!(f, "{} + ({})*C", self.terms, self.central),
        }
    }
}

/// `[Z_n, Z_m] = n d(n,-m) C`, `C` central. The result is always central.
pub fn heis_bracket(x: &HeisenbergElement, y: &HeisenbergElement) -> Result<HeisenbergElement> {
    match (x.single_side()?, y.single_side()?) {
        (Some(a), Some(b)) if a != b => return Err(Error::MixedSides),
        _ => {}
    }
    let mut central = Scalar::zero();
    for (a, ca) in &x.terms {
        for (b, cb) in &y.terms {
            let c = cocycle(*a, *b)?;
            if !c.is_zero() {
                central += &(&(ca * cb) * &c);
            }
        }
    }
    Ok(HeisenbergElement::central(central))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{bracket, involution_c, z};

    fn h(n: i64) -> HeisenbergElement {
        HeisenbergElement::label(HeisLabel::plus(n))
    }

    #[test]
    fn relabel_examples() {
        assert_eq!(a_plus(GenIndex::new(4, 0)).unwrap(), HeisLabel::plus(2));
        assert_eq!(a_plus(GenIndex::new(3, 0)).unwrap(), HeisLabel::plus(-2));
        assert_eq!(a_plus(GenIndex::new(0, 0)).unwrap(), HeisLabel::plus(0));
        assert_eq!(a_minus(GenIndex::new(0, 1)).unwrap(), HeisLabel::minus(-1));
        assert_eq!(a_plus(GenIndex::new(1, 1)), Err(Error::NotInPlus { n: 1, m: 1 }));
        assert_eq!(a_minus(GenIndex::new(2, 0)), Err(Error::NotInMinus { n: 2, m: 0 }));
    }

    #[test]
    fn relabel_is_bijective() {
        for k in 0..50 {
            let g = GenIndex::new(k, 0);
            assert_eq!(label_to_generator(a_plus(g).unwrap()), g);
            let g = GenIndex::new(0, k);
            assert_eq!(label_to_generator(a_minus(g).unwrap()), g);
        }
        for n in -25..25 {
            let l = HeisLabel::plus(n);
            assert_eq!(a_plus(label_to_generator(l)).unwrap(), l);
        }
    }

    #[test]
    fn compatible_with_involution() {
        for k in 0..=20 {
            let x = z(k, 0);
            let lhs = d_element(&a_plus_element(&x).unwrap());
            let rhs = -a_minus_element(&involution_c(&x)).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn abelian_on_both_sides() {
        for a in 0..8 {
            for b in 0..8 {
                assert!(bracket(&z(a, 0), &z(b, 0)).is_zero());
                assert!(bracket(&z(0, a), &z(0, b)).is_zero());
            }
        }
    }

    #[test]
    fn cocycle_examples() {
        let p = HeisLabel::plus;
        assert_eq!(cocycle(p(3), p(-3)).unwrap(), Scalar::from(3));
        assert!(cocycle(p(2), p(5)).unwrap().is_zero());
        assert_eq!(cocycle(p(-4), p(4)).unwrap(), Scalar::from(-4));
        assert_eq!(cocycle(p(1), HeisLabel::minus(-1)), Err(Error::MixedSides));
    }

    #[test]
    fn bracket_examples() {
        let two_c = HeisenbergElement::central(Scalar::from(2));
        assert_eq!(heis_bracket(&h(2), &h(-2)).unwrap(), two_c);
        let c = HeisenbergElement::central(Scalar::one());
        assert!(heis_bracket(&h(2), &c).unwrap().is_zero());
        assert_eq!(heis_bracket(&h(1).add(&h(2)), &h(-2)).unwrap(), two_c);
        let mixed = h(1).add(&HeisenbergElement::label(HeisLabel::minus(1)));
        assert_eq!(heis_bracket(&mixed, &h(1)), Err(Error::MixedSides));
    }
}
