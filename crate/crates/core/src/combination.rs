//! Finitely supported linear combinations over an ordered basis.
//!
//! All element types of the crate ([`LieElement`](crate::lie::LieElement),
//! [`SVector`](crate::standard_module::SVector), ...) are `LinComb<K>` for a
//! suitable basis key `K`. The map never stores a zero coefficient, so the
//! zero element is the empty map and equality is structural.

use std::collections::btree_map::{self, Entry};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{Signed, Zero};
use serde::de::{self, Deserialize, Deserializer};
use serde::ser::{Serialize, Serializer};
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A basis symbol: ordered, printable, and encodable as JSON fields.
pub trait BasisKey: Ord + Clone + fmt::Display {
    fn write_fields(&self, obj: &mut Map<String, Value>);
    fn read_fields(obj: &Map<String, Value>) -> Result<Self>;

    /// True for the multiplicative unit of an algebra basis; its coefficient
    /// is printed bare.
    fn is_unit(&self) -> bool {
        false
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, Scalar>,
}

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(key: K) -> Self {
        Self::term(key, Scalar::one())
    }

    pub fn term(key: K, coeff: Scalar) -> Self {
        let mut out = Self::zero();
        out.add_term(key, coeff);
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (K, Scalar)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, Scalar> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, Scalar> {
        self.terms.keys()
    }

    pub fn coeff(&self, key: &K) -> Scalar {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, key: K, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += coeff * other`
    pub fn add_scaled(&mut self, other: &Self, coeff: &Scalar) {
        for (k, c) in other.iter() {
            self.add_term(k.clone(), c * coeff);
        }
    }

    pub fn scale(&self, coeff: &Scalar) -> Self {
        if coeff.is_zero() {
            return Self::zero();
        }
        LinComb {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), c * coeff)).collect(),
        }
    }

    /// Keep only the terms whose key satisfies `pred`.
    pub fn filter<F: Fn(&K) -> bool>(&self, pred: F) -> Self {
        LinComb {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| pred(k))
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// Linear extension of a map defined on basis keys.
    pub fn map_linear<K2: Ord + Clone, F: FnMut(&K) -> LinComb<K2>>(&self, mut f: F) -> LinComb<K2> {
        let mut out = LinComb::zero();
        for (k, c) in self.iter() {
            out.add_scaled(&f(k), c);
        }
        out
    }

    /// Bilinear extension of a map defined on pairs of basis keys.
    pub fn bilinear<K2, K3, F>(&self, other: &LinComb<K2>, mut f: F) -> LinComb<K3>
    where
        K2: Ord + Clone,
        K3: Ord + Clone,
        F: FnMut(&K, &K2) -> LinComb<K3>,
    {
        let mut out = LinComb::zero();
        for (a, ca) in self.iter() {
            for (b, cb) in other.iter() {
                out.add_scaled(&f(a, b), &(ca * cb));
            }
        }
        out
    }
}

impl<K: Ord + Clone> FromIterator<(K, Scalar)> for LinComb<K> {
    fn from_iter<I: IntoIterator<Item = (K, Scalar)>>(iter: I) -> Self {
        Self::from_terms(iter)
    }
}

impl<'a, K: Ord + Clone> IntoIterator for &'a LinComb<K> {
    type Item = (&'a K, &'a Scalar);
    type IntoIter = btree_map::Iter<'a, K, Scalar>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<'a, K: Ord + Clone> Add<&'a LinComb<K>> for &'a LinComb<K> {
    type Output = LinComb<K>;
    fn add(self, rhs: &'a LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        out.add_scaled(rhs, &Scalar::one());
        out
    }
}

impl<'a, K: Ord + Clone> Sub<&'a LinComb<K>> for &'a LinComb<K> {
    type Output = LinComb<K>;
    fn sub(self, rhs: &'a LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        out.add_scaled(rhs, &Scalar::from(-1));
        out
    }
}

impl<K: Ord + Clone> Add for LinComb<K> {
    type Output = LinComb<K>;
    fn add(self, rhs: LinComb<K>) -> LinComb<K> {
        &self + &rhs
    }
}

impl<K: Ord + Clone> Sub for LinComb<K> {
    type Output = LinComb<K>;
    fn sub(self, rhs: LinComb<K>) -> LinComb<K> {
        &self - &rhs
    }
}

impl<K: Ord + Clone> Neg for &LinComb<K> {
    type Output = LinComb<K>;
    fn neg(self) -> LinComb<K> {
        self.scale(&Scalar::from(-1))
    }
}

impl<K: Ord + Clone> Neg for LinComb<K> {
    type Output = LinComb<K>;
    fn neg(self) -> LinComb<K> {
        -&self
    }
}

/// Coefficient as it appears in the expression grammar: `2`, `-1/3`, `1/2i`.
fn write_coeff_term<K: BasisKey>(
    f: &mut fmt::Formatter<'_>,
    first: &mut bool,
    value: &Scalar,
    imaginary: bool,
    key: &K,
) -> fmt::Result {
    let negative = value.re().is_negative();
    let abs = if negative { -value } else { value.clone() };
    if *first {
        if negative {
            write!(f, "-")?;
        }
    } else {
        write!(f, " {} ", if negative { '-' } else { '+' })?;
    }
    *first = false;
    let suffix = if imaginary { "i" } else { "" };
    match (abs.is_one() && !imaginary, key.is_unit()) {
        (true, true) => write!(f, "1"),
        (true, false) => write!(f, "{key}"),
        (false, true) => write!(f, "{}{suffix}", abs.re()),
        (false, false) => write!(f, "{}{suffix}*{key}", abs.re()),
    }
}

/// Human-readable form in the CLI expression grammar, e.g.
/// `2*Z[1,1] - 1/3*Z[0,2] + 1/2i*Z[3,0]`. Zero prints as `0`.
impl<K: BasisKey> fmt::Display for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.iter() {
            if !c.re().is_zero() {
                write_coeff_term(f, &mut first, &Scalar::from(c.re().clone()), false, k)?;
            }
            if !c.im().is_zero() {
                write_coeff_term(f, &mut first, &Scalar::from(c.im().clone()), true, k)?;
            }
        }
        Ok(())
    }
}

impl<K: BasisKey> fmt::Debug for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<K: BasisKey> LinComb<K> {
    pub fn to_json(&self) -> Value {
        let terms = self
            .iter()
            .map(|(k, c)| {
                let mut obj = Map::new();
                k.write_fields(&mut obj);
                obj.insert("coeff".into(), Value::String(c.to_string()));
                Value::Object(obj)
            })
            .collect();
        let mut root = Map::new();
        root.insert("terms".into(), Value::Array(terms));
        Value::Object(root)
    }

    /// Parses `{"terms":[...]}`; duplicate keys are summed and zero
    /// coefficients dropped, so the result is canonical.
    pub fn from_json(value: &Value) -> Result<Self> {
        let terms = value
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Json("expected an object with a \"terms\" array".into()))?;
        let mut out = Self::zero();
        for t in terms {
            let obj = t
                .as_object()
                .ok_or_else(|| Error::Json("term is not an object".into()))?;
            let coeff = obj
                .get("coeff")
                .and_then(Value::as_str)
                .ok_or_else(|| Error::Json("term without a string \"coeff\"".into()))?
                .parse::<Scalar>()?;
            out.add_term(K::read_fields(obj)?, coeff);
        }
        Ok(out)
    }
}

impl<K: BasisKey> Serialize for LinComb<K> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(serializer)
    }
}

impl<'de, K: BasisKey> Deserialize<'de> for LinComb<K> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let v = Value::deserialize(deserializer)?;
        Self::from_json(&v).map_err(de::Error::custom)
    }
}

pub(crate) fn read_u64(obj: &Map<String, Value>, field: &str) -> Result<u64> {
    obj.get(field)
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Json(format!("missing non-negative integer field {field:?}")))
}

pub(crate) fn read_i64(obj: &Map<String, Value>, field: &str) -> Result<i64> {
    obj.get(field)
        .and_then(Value::as_i64)
        .ok_or_else(|| Error::Json(format!("missing integer field {field:?}")))
}

/// Reads a sorted multiset of positive integers stored under `field`.
pub(crate) fn read_multiset(obj: &Map<String, Value>, field: &str) -> Result<Vec<u64>> {
    let arr = obj
        .get(field)
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Json(format!("missing array field {field:?}")))?;
    let mut out = arr
        .iter()
        .map(|v| {
            v.as_u64()
                .filter(|&k| k >= 1)
                .ok_or_else(|| Error::Json(format!("{field:?} entries must be positive integers")))
        })
        .collect::<Result<Vec<_>>>()?;
    out.sort_unstable();
    Ok(out)
}
