//! The standard module: the graded span of `t[k]`, `k >= 0`, with
//! `Z[n,m] t[k] = t[k-m+n]` for `m <= k` and zero otherwise.

use std::fmt;

use serde_json::{json, Map, Value};

use crate::combination::{read_u64, BasisKey, LinComb};
use crate::error::{Error, Result};
use crate::lie::{GenIndex, LieElement};
use crate::scalar::Scalar;

/// Basis vector `t[k]` of degree `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TBasis(pub u64);

impl fmt::Display for TBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t[{}]", self.0)
    }
}

impl BasisKey for TBasis {
    fn write_fields(&self, obj: &mut Map<String, Value>) {
        obj.insert("k".into(), self.0.into());
    }

    fn read_fields(obj: &Map<String, Value>) -> Result<Self> {
        read_u64(obj, "k").map(TBasis)
    }
}

pub type SVector = LinComb<TBasis>;

pub fn t(k: u64) -> SVector {
    SVector::basis(TBasis(k))
}

/// Highest degree present in `v`, `None` for zero.
pub fn max_degree(v: &SVector) -> Option<u64> {
    v.keys().next_back().map(|b| b.0)
}

/// Action of a single generator on a basis vector.
pub fn act_basis(g: GenIndex, k: u64) -> Option<u64> {
    (g.m <= k).then(|| (k - g.m).checked_add(g.n).expect("module index overflow"))
}

pub fn act(x: &LieElement, v: &SVector) -> SVector {
    x.bilinear(v, |g, b| match act_basis(*g, b.0) {
        Some(k) => t(k),
        None => SVector::zero(),
    })
}

/// The commutative product `t[n] * t[m] = t[n+m]` with unit `t[0]`.
pub fn star(u: &SVector, v: &SVector) -> SVector {
    u.bilinear(v, |a, b| t(a.0 + b.0))
}

/// `v` is singular when every generator of negative degree kills it.
///
/// Only `Z[n,m]` with `m <= max_degree(v)` can act nontrivially, so the
/// check is finite.
pub fn is_singular(v: &SVector) -> Result<bool> {
    let top = max_degree(v).ok_or(Error::ZeroVector)?;
    for m in 1..=top {
        for n in 0..m {
            if !act(&LieElement::basis(GenIndex::new(n, m)), v).is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `Z[k,0] t[0] = t[k]`: the positive part generates the whole module from
/// the highest weight vector.
pub fn hw_generate(k: u64) -> SVector {
    act(&LieElement::basis(GenIndex::new(k, 0)), &t(0))
}

/// Square truncation of an operator on the standard module to
/// `t[0..=N]`. Row `r`, column `c` holds the coefficient of `t[r]` in the
/// image of `t[c]`.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedMatrix {
    size: usize,
    entries: Vec<Scalar>,
}

impl TruncatedMatrix {
    pub fn zeros(size: usize) -> Self {
        TruncatedMatrix {
            size,
            entries: vec![Scalar::zero(); size * size],
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, row: usize, col: usize) -> &Scalar {
        &self.entries[row * self.size + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Scalar) {
        self.entries[row * self.size + col] = value;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Scalar]> {
        self.entries.chunks(self.size)
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.size, other.size, "matrix size mismatch");
        let n = self.size;
        let mut out = Self::zeros(n);
        for r in 0..n {
            for k in 0..n {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        out.entries[r * n + c] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.size, other.size, "matrix size mismatch");
        TruncatedMatrix {
            size: self.size,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect(),
        }
    }

    /// `self * other - other * self`
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    /// Top-left `len x len` block.
    pub fn block(&self, len: usize) -> Self {
        let mut out = Self::zeros(len);
        for r in 0..len {
            for c in 0..len {
                out.set(r, c, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::new();
        for row in self.rows() {
            let line: Vec<String> = row.iter().map(Scalar::to_string).collect();
            s.push_str(&line.join(","));
            s.push('\n');
        }
        s
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Vec<String>> = self
            .rows()
            .map(|row| row.iter().map(Scalar::to_string).collect())
            .collect();
        json!({ "size": self.size, "rows": rows })
    }
}

/// Aligned plain-text grid.
impl fmt::Display for TruncatedMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(Scalar::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for row in cells.chunks(self.size) {
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for TruncatedMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncatedMatrix({}x{})\n{}", self.size, self.size, self)
    }
}

/// Truncation of the action of `x` to `t[0..=n]`; an `(n+1) x (n+1)` matrix.
pub fn matrix(x: &LieElement, n: usize) -> TruncatedMatrix {
    let size = n + 1;
    let mut out = TruncatedMatrix::zeros(size);
    for col in 0..size {
        for (b, c) in &act(x, &t(col as u64)) {
            let row = b.0 as usize;
            if row < size {
                out.set(row, col, c.clone());
            }
        }
    }
    out
}
