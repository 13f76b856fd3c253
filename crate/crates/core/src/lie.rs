//! The insertion-elimination Lie algebra of ladder graphs.
//!
//! The algebra is spanned by generators `Z[n,m]` (`n, m >= 0`): insert an
//! `n`-loop ladder where an `m`-loop ladder was eliminated. The bracket of
//! two generators is the six-term formula implemented in [`bracket_basis`];
//! it is the operator commutator of the shift action on the standard module
//! (see [`crate::standard_module::act`]).

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{Map, Value};

use crate::combination::{read_u64, BasisKey, LinComb};
use crate::error::Result;
use crate::scalar::Scalar;

/// Index pair `(n, m)` of the generator `Z[n,m]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GenIndex {
    /// Inserted loop count.
    pub n: u64,
    /// Eliminated loop count.
    pub m: u64,
}

impl GenIndex {
    pub const fn new(n: u64, m: u64) -> Self {
        GenIndex { n, m }
    }

    /// Degree `n - m` in the Z-grading.
    pub fn degree(&self) -> i64 {
        self.n as i64 - self.m as i64
    }
}

impl fmt::Display for GenIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z[{},{}]", self.n, self.m)
    }
}

impl BasisKey for GenIndex {
    fn write_fields(&self, obj: &mut Map<String, Value>) {
        obj.insert("n".into(), self.n.into());
        obj.insert("m".into(), self.m.into());
    }

    fn read_fields(obj: &Map<String, Value>) -> Result<Self> {
        Ok(GenIndex::new(read_u64(obj, "n")?, read_u64(obj, "m")?))
    }
}

pub type LieElement = LinComb<GenIndex>;

/// Shorthand for the generator `Z[n,m]` as an element.
pub fn z(n: u64, m: u64) -> LieElement {
    LieElement::basis(GenIndex::new(n, m))
}

/// Step function: 1 for `d >= 0`, else 0.
pub fn theta(d: i64) -> i64 {
    i64::from(d >= 0)
}

fn delta(a: u64, b: u64) -> i64 {
    i64::from(a == b)
}

/// `a - b + c` for indices, guarded by the caller's step function.
fn shift(a: u64, b: u64, c: u64) -> u64 {
    debug_assert!(a >= b, "bracket produced a negative index");
    (a - b).checked_add(c).expect("generator index overflow")
}

/// `[Z[n,m], Z[l,s]]`.
pub fn bracket_basis(a: GenIndex, b: GenIndex) -> LieElement {
    let GenIndex { n, m } = a;
    let GenIndex { n: l, m: s } = b;
    let d = |x: u64, y: u64| x as i64 - y as i64;
    let mut out = LieElement::zero();
    let mut push = |coeff: i64, n: u64, m: u64| {
        if coeff != 0 {
            out.add_term(GenIndex::new(n, m), Scalar::from(coeff));
        }
    };
    if theta(d(l, m)) == 1 {
        push(1, shift(l, m, n), s);
    }
    if theta(d(s, n)) == 1 {
        push(-1, l, shift(s, n, m));
    }
    if theta(d(n, s)) == 1 {
        push(-1, shift(n, s, l), m);
    }
    if theta(d(m, l)) == 1 {
        push(1, n, shift(m, l, s));
    }
    push(-delta(m, l), n, s);
    push(delta(n, s), l, m);
    out
}

/// Bilinear extension of [`bracket_basis`].
pub fn bracket(x: &LieElement, y: &LieElement) -> LieElement {
    x.bilinear(y, |a, b| bracket_basis(*a, *b))
}

/// Split `x` into its homogeneous components, keyed by degree.
pub fn degree_decompose(x: &LieElement) -> BTreeMap<i64, LieElement> {
    let mut out: BTreeMap<i64, LieElement> = BTreeMap::new();
    for (g, c) in x {
        out.entry(g.degree()).or_default().add_term(*g, c.clone());
    }
    out
}

/// Whether `x` lies in a single graded piece (zero counts as homogeneous).
pub fn homogeneous_degree(x: &LieElement) -> Option<Option<i64>> {
    let mut degrees = x.keys().map(GenIndex::degree);
    match degrees.next() {
        None => Some(None),
        Some(d) => degrees.all(|e| e == d).then_some(Some(d)),
    }
}

/// The triangular pieces `L+ (deg > 0)`, `L0 (deg = 0)`, `L- (deg < 0)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Part {
    Plus,
    Zero,
    Minus,
}

impl Part {
    pub fn contains(self, degree: i64) -> bool {
        match self {
            Part::Plus => degree > 0,
            Part::Zero => degree == 0,
            Part::Minus => degree < 0,
        }
    }
}

pub fn project(x: &LieElement, part: Part) -> LieElement {
    x.filter(|g| part.contains(g.degree()))
}

/// The involution `Z[n,m] -> -Z[m,n]`, a Lie algebra automorphism.
///
/// On the embedded `sl+(inf)` it restricts to the Chevalley involution:
/// `C(f_i) = -e_i` and `C(coroot_i) = -coroot_i`.
pub fn involution_c(x: &LieElement) -> LieElement {
    x.iter().map(|(g, c)| (GenIndex::new(g.m, g.n), -c)).collect()
}
