//! Commutative monomials in variables indexed by positive integers, stored
//! as sorted multisets. Used for Fock-space monomials in `b[k]` and for
//! products of ladder generators `G[k]`.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::marker::PhantomData;

use serde_json::{Map, Value};

use crate::combination::{read_multiset, BasisKey};
use crate::error::Result;

/// Printed name of the variables of a monomial family.
pub trait Variable {
    const SYMBOL: &'static str;
}

pub struct Multiset<V> {
    factors: Vec<u64>,
    _var: PhantomData<V>,
}

impl<V> Multiset<V> {
    /// The empty product.
    pub fn unit() -> Self {
        Multiset {
            factors: Vec::new(),
            _var: PhantomData,
        }
    }

    /// Build from arbitrary positive indices. Panics on a zero index.
    pub fn new(mut factors: Vec<u64>) -> Self {
        assert!(factors.iter().all(|&k| k >= 1), "variable indices start at 1");
        factors.sort_unstable();
        Multiset {
            factors,
            _var: PhantomData,
        }
    }

    pub fn var(k: u64) -> Self {
        Self::new(vec![k])
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn is_unit(&self) -> bool {
        self.factors.is_empty()
    }

    /// Sum of variable indices.
    pub fn degree(&self) -> u64 {
        self.factors.iter().sum()
    }

    pub fn multiplicity(&self, k: u64) -> usize {
        self.factors.iter().filter(|&&f| f == k).count()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut factors = Vec::with_capacity(self.factors.len() + other.factors.len());
        factors.extend_from_slice(&self.factors);
        factors.extend_from_slice(&other.factors);
        factors.sort_unstable();
        Multiset {
            factors,
            _var: PhantomData,
        }
    }

    pub fn with(&self, k: u64) -> Self {
        let mut factors = self.factors.clone();
        let pos = factors.partition_point(|&f| f < k);
        factors.insert(pos, k);
        Multiset {
            factors,
            _var: PhantomData,
        }
    }

    /// Remove one copy of `k`, if present.
    pub fn without(&self, k: u64) -> Option<Self> {
        let pos = self.factors.iter().position(|&f| f == k)?;
        let mut factors = self.factors.clone();
        factors.remove(pos);
        Some(Multiset {
            factors,
            _var: PhantomData,
        })
    }
}

/// All monomials of exact degree `deg` (integer partitions of `deg`).
pub fn partitions<V>(deg: u64) -> Vec<Multiset<V>> {
    fn rec(remaining: u64, max_part: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=max_part.min(remaining)).rev() {
            prefix.push(part);
            rec(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut raw = Vec::new();
    rec(deg, deg, &mut Vec::new(), &mut raw);
    raw.into_iter().map(Multiset::new).collect()
}

/// All monomials of degree `<= deg`.
pub fn monomials_up_to<V>(deg: u64) -> Vec<Multiset<V>> {
    (0..=deg).flat_map(partitions).collect()
}

impl<V> Clone for Multiset<V> {
    fn clone(&self) -> Self {
        Multiset {
            factors: self.factors.clone(),
            _var: PhantomData,
        }
    }
}

impl<V> PartialEq for Multiset<V> {
    fn eq(&self, other: &Self) -> bool {
        self.factors == other.factors
    }
}

impl<V> Eq for Multiset<V> {}

impl<V> Hash for Multiset<V> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.factors.hash(state);
    }
}

/// Graded order: total degree first, then lexicographic on sorted factors.
impl<V> Ord for Multiset<V> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.factors.cmp(&other.factors))
    }
}

impl<V> PartialOrd for Multiset<V> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<V: Variable> fmt::Display for Multiset<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.factors.len() {
            let k = self.factors[i];
            let run = self.factors[i..].iter().take_while(|&&f| f == k).count();
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}[{}]", V::SYMBOL, k)?;
            if run > 1 {
                write!(f, "^{run}")?;
            }
            i += run;
        }
        Ok(())
    }
}

impl<V: Variable> fmt::Debug for Multiset<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<V: Variable> BasisKey for Multiset<V> {
    fn write_fields(&self, obj: &mut Map<String, Value>) {
        obj.insert("monomial".into(), self.factors.clone().into());
    }

    fn read_fields(obj: &Map<String, Value>) -> Result<Self> {
        read_multiset(obj, "monomial").map(Multiset::new)
    }

    fn is_unit(&self) -> bool {
        self.factors.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    struct X;
    impl Variable for X {
        const SYMBOL: &'static str = "x";
    }

    type M = Multiset<X>;

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=8).map(|d| partitions::<X>(d).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(monomials_up_to::<X>(6).len(), 30);
    }

    #[test]
    fn display_and_order() {
        assert_eq!(M::new(vec![3, 1, 1]).to_string(), "x[1]^2*x[3]");
        assert_eq!(M::unit().to_string(), "1");
        assert!(M::new(vec![3]) < M::new(vec![1, 1, 1, 1]));
        assert!(M::new(vec![1, 2]) < M::new(vec![3]));
    }

    #[test]
    fn insert_remove() {
        let m = M::new(vec![2, 5]);
        assert_eq!(m.with(3).factors(), &[2, 3, 5]);
        assert_eq!(m.without(5).unwrap().factors(), &[2]);
        assert!(m.without(4).is_none());
        assert_eq!(m.mul(&M::var(1)).factors(), &[1, 2, 5]);
    }
}
