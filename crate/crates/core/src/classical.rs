//! `gl+(inf)`, its embedding into the ladder Lie algebra, and the Chevalley
//! data of `sl+(inf)` expressed through `Z` generators.

use std::fmt;

use serde_json::{Map, Value};

use crate::combination::{read_u64, BasisKey, LinComb};
use crate::error::{Error, Result};
use crate::lie::{bracket, z, GenIndex, LieElement};
use crate::scalar::Scalar;

/// Matrix unit `E[i,j]`, `i, j >= 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GlIndex {
    pub i: u64,
    pub j: u64,
}

impl GlIndex {
    pub const fn new(i: u64, j: u64) -> Self {
        GlIndex { i, j }
    }
}

impl fmt::Display for GlIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E[{},{}]", self.i, self.j)
    }
}

impl BasisKey for GlIndex {
    fn write_fields(&self, obj: &mut Map<String, Value>) {
        obj.insert("i".into(), self.i.into());
        obj.insert("j".into(), self.j.into());
    }

    fn read_fields(obj: &Map<String, Value>) -> Result<Self> {
        Ok(GlIndex::new(read_u64(obj, "i")?, read_u64(obj, "j")?))
    }
}

pub type GlElement = LinComb<GlIndex>;

pub fn unit(i: u64, j: u64) -> GlElement {
    GlElement::basis(GlIndex::new(i, j))
}

/// `[E[i,j], E[n,m]] = d(j,n) E[i,m] - d(m,i) E[n,j]`
pub fn gl_bracket_basis(a: GlIndex, b: GlIndex) -> GlElement {
    let mut out = GlElement::zero();
    if a.j == b.i {
        out.add_term(GlIndex::new(a.i, b.j), Scalar::one());
    }
    if b.j == a.i {
        out.add_term(GlIndex::new(b.i, a.j), Scalar::from(-1));
    }
    out
}

pub fn gl_bracket(x: &GlElement, y: &GlElement) -> GlElement {
    x.bilinear(y, |a, b| gl_bracket_basis(*a, *b))
}

/// `E[i,j] -> Z[i,j] - Z[i+1,j+1]`. On the standard module this operator
/// sends `t[j]` to `t[i]` and kills every other basis vector.
pub fn embed_phi(x: &GlElement) -> LieElement {
    x.map_linear(|e| &z(e.i, e.j) - &z(e.i + 1, e.j + 1))
}

pub fn trace(x: &GlElement) -> Scalar {
    x.iter().filter(|(e, _)| e.i == e.j).map(|(_, c)| c.clone()).sum()
}

/// `e_i = Z[i,i+1] - Z[i+1,i+2]`, the image of `E[i,i+1]`.
pub fn chevalley_e(i: u64) -> LieElement {
    &z(i, i + 1) - &z(i + 1, i + 2)
}

/// `f_i = Z[i+1,i] - Z[i+2,i+1]`, the image of `E[i+1,i]`.
pub fn chevalley_f(i: u64) -> LieElement {
    &z(i + 1, i) - &z(i + 2, i + 1)
}

/// Simple coroot `Z[i,i] - 2 Z[i+1,i+1] + Z[i+2,i+2]`, the image of
/// `E[i,i] - E[i+1,i+1]`.
pub fn coroot(i: u64) -> LieElement {
    let mut out = z(i, i);
    out.add_term(GenIndex::new(i + 1, i + 1), Scalar::from(-2));
    out.add_term(GenIndex::new(i + 2, i + 2), Scalar::one());
    out
}

/// Root functional `eps_i` on the diagonal part: the coefficient of `E[i,i]`.
pub fn epsilon(i: u64, h: &GlElement) -> Result<Scalar> {
    if let Some((e, _)) = h.iter().find(|(e, _)| e.i != e.j) {
        return Err(Error::NotDiagonal { i: e.i, j: e.j });
    }
    Ok(h.coeff(&GlIndex::new(i, i)))
}

/// The scalar `a` with `[coroot(i), e_j] = a e_j`, read off from the bracket.
pub fn cartan_pairing(i: u64, j: u64) -> Result<Scalar> {
    let e = chevalley_e(j);
    let image = bracket(&coroot(i), &e);
    let not_prop = || Error::NotProportional {
        i,
        j,
        got: image.to_string(),
    };
    if image.is_zero() {
        return Ok(Scalar::zero());
    }
    let (lead, c) = image.iter().next().expect("nonzero");
    let a = c.checked_div(&e.coeff(lead)).ok_or_else(not_prop)?;
    if e.scale(&a) == image {
        Ok(a)
    } else {
        Err(not_prop())
    }
}

/// `A_inf` Cartan matrix entry.
pub fn cartan_entry(i: u64, j: u64) -> i64 {
    match i.abs_diff(j) {
        0 => 2,
        1 => -1,
        _ => 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::involution_c;

    #[test]
    fn gl_bracket_examples() {
        assert_eq!(gl_bracket(&unit(1, 2), &unit(2, 3)), unit(1, 3));
        assert!(gl_bracket(&unit(1, 2), &unit(3, 4)).is_zero());
        assert_eq!(gl_bracket(&unit(0, 1), &unit(1, 0)), &unit(0, 0) - &unit(1, 1));
    }

    #[test]
    fn embed_examples() {
        assert_eq!(embed_phi(&unit(0, 0)), &z(0, 0) - &z(1, 1));
        assert!(embed_phi(&GlElement::zero()).is_zero());
        let x = &unit(0, 1) + &unit(1, 0);
        let expected = &(&(&z(0, 1) - &z(1, 2)) + &z(1, 0)) - &z(2, 1);
        assert_eq!(embed_phi(&x), expected);
    }

    #[test]
    fn trace_examples() {
        assert!(trace(&unit(2, 2)).is_one());
        assert!(trace(&unit(0, 1)).is_zero());
        assert!(trace(&(&unit(0, 0) - &unit(3, 3))).is_zero());
    }

    #[test]
    fn chevalley_examples() {
        assert_eq!(chevalley_e(0), &z(0, 1) - &z(1, 2));
        let expected = &(&z(2, 2) - &z(3, 3).scale(&Scalar::from(2))) + &z(4, 4);
        assert_eq!(coroot(2), expected);
        assert_eq!(bracket(&chevalley_e(0), &chevalley_f(0)), coroot(0));
        assert_eq!(coroot(3), embed_phi(&(&unit(3, 3) - &unit(4, 4))));
    }

    #[test]
    fn epsilon_examples() {
        assert!(epsilon(1, &unit(1, 1)).unwrap().is_one());
        assert!(epsilon(2, &unit(0, 0)).unwrap().is_zero());
        assert!(epsilon(1, &(&unit(1, 1) - &unit(2, 2))).unwrap().is_one());
        assert_eq!(epsilon(0, &unit(0, 1)), Err(Error::NotDiagonal { i: 0, j: 1 }));
    }

    #[test]
    fn pairing_examples() {
        assert_eq!(cartan_pairing(0, 0).unwrap(), Scalar::from(2));
        assert_eq!(cartan_pairing(0, 1).unwrap(), Scalar::from(-1));
        assert!(cartan_pairing(0, 5).unwrap().is_zero());
    }

    #[test]
    fn involution_on_chevalley_data() {
        for i in 0..6 {
            assert_eq!(involution_c(&chevalley_f(i)), -chevalley_e(i));
            assert_eq!(involution_c(&chevalley_e(i)), -chevalley_f(i));
            assert_eq!(involution_c(&coroot(i)), -coroot(i));
        }
    }
}
