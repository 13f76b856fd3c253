//! Gaussian-rational scalars.
//!
//! Every coefficient in the crate is a [`Scalar`]: a pair of exact rationals
//! `re + im·i`. Values are always reduced, so structural equality is
//! mathematical equality.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    re: BigRational,
    im: BigRational,
}

impl Scalar {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Scalar { re, im }
    }

    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::from(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Scalar {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    /// `num/den` as a real scalar. Panics if `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        Scalar {
            re: BigRational::new(BigInt::from(num), BigInt::from(den)),
            im: BigRational::zero(),
        }
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Scalar {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let norm = &self.re * &self.re + &self.im * &self.im;
        Some(Scalar {
            re: &self.re / &norm,
            im: -(&self.im / &norm),
        })
    }

    /// Exact division, `None` when `rhs` is zero.
    pub fn checked_div(&self, rhs: &Scalar) -> Option<Self> {
        rhs.inv().map(|r| self * &r)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Scalar::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Scalar {
            re: BigRational::from_integer(BigInt::from(v)),
            im: BigRational::zero(),
        }
    }
}

impl From<BigRational> for Scalar {
    fn from(re: BigRational) -> Self {
        Scalar {
            re,
            im: BigRational::zero(),
        }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        Scalar {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        Scalar {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        if self.im.is_zero() && rhs.im.is_zero() {
            return Scalar {
                re: &self.re * &rhs.re,
                im: BigRational::zero(),
            };
        }
        Scalar {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            re: -self.re,
            im: -self.im,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &'a Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        let mut acc = Scalar::zero();
        for v in iter {
            acc += &v;
        }
        acc
    }
}

/// Wire format: `a/b`, `c/d*i` or `a/b+c/d*i` (integers print without a
/// denominator). Zero prints as `0`.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}*i", self.im),
            (false, false) => {
                let sign = if self.im.is_negative() { '-' } else { '+' };
                write!(f, "{}{}{}*i", self.re, sign, self.im.abs())
            }
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let valid = |t: &str, signed: bool| {
        let digits = if signed {
            t.strip_prefix(['+', '-']).unwrap_or(t)
        } else {
            t
        };
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid(num, true) || !valid(den, false) {
        return None;
    }
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(BigRational::new(num, den))
}

impl FromStr for Scalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::InvalidScalar(s.to_string());
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let Some(body) = t.strip_suffix("*i") else {
            return parse_rational(&t).map(Scalar::from).ok_or_else(bad);
        };
        // split the real and imaginary parts at the last sign that is not
        // the leading one
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .last();
        let (re, im) = match split {
            Some(i) => (parse_rational(&body[..i]), parse_rational(&body[i..])),
            None => (Some(BigRational::zero()), parse_rational(body)),
        };
        match (re, im) {
            (Some(re), Some(im)) => Ok(Scalar::new(re, im)),
            _ => Err(bad()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gauss(a: i64, b: i64, c: i64, d: i64) -> Scalar {
        Scalar::ratio(a, b) + Scalar::ratio(c, d) * Scalar::i()
    }

    #[test]
    fn display_forms() {
        assert_eq!(Scalar::ratio(2, 4).to_string(), "1/2");
        assert_eq!(Scalar::from(-3).to_string(), "-3");
        assert_eq!(Scalar::zero().to_string(), "0");
        assert_eq!(gauss(0, 1, 2, 3).to_string(), "2/3*i");
        assert_eq!(gauss(1, 2, -1, 3).to_string(), "1/2-1/3*i");
        assert_eq!(gauss(-1, 2, 1, 3).to_string(), "-1/2+1/3*i");
    }

    #[test]
    fn parse_rejects_garbage() {
        for s in ["", "1/0", "a", "1//2", "*i", "1/-2", "1+"] {
            assert!(s.parse::<Scalar>().is_err(), "{s:?} should not parse");
        }
        assert_eq!("-2/4".parse::<Scalar>().unwrap(), Scalar::ratio(-1, 2));
        assert_eq!("-1*i".parse::<Scalar>().unwrap(), -Scalar::i());
    }

    #[test]
    fn i_squared() {
        assert_eq!(&Scalar::i() * &Scalar::i(), Scalar::from(-1));
        assert_eq!(Scalar::i().inv().unwrap(), -Scalar::i());
        assert!(Scalar::zero().inv().is_none());
    }

    proptest! {
        #[test]
        fn display_parse_roundtrip(a in -50i64..50, b in 1i64..20, c in -50i64..50, d in 1i64..20) {
            let x = gauss(a, b, c, d);
            prop_assert_eq!(x.to_string().parse::<Scalar>().unwrap(), x);
        }

        #[test]
        fn inverse_is_exact(a in -50i64..50, b in 1i64..20, c in -50i64..50, d in 1i64..20) {
            let x = gauss(a, b, c, d);
            prop_assume!(!x.is_zero());
            prop_assert!((&x * &x.inv().unwrap()).is_one());
        }
    }
}
