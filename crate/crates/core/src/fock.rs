//! Fock representation of the Heisenberg algebra and the Virasoro
//! operators built from it.
//!
//! Vectors are polynomials in creation variables `b[1], b[2], ...`. The
//! generator `Z_{-n}` (`n > 0`) multiplies by `b[n]`, `Z_n` acts as
//! `n d/db[n]`, `Z_0` multiplies by `mu`, and the central element acts as
//! the identity. This realizes `[Z_n, Z_m] = n d(n,-m)` exactly.
//!
//! With a deformation parameter `lambda`,
//!
//! ```text
//! L_0 = (mu^2 + lambda^2)/2 + sum_{n>0} Z_{-n} Z_n
//! L_n = 1/2 sum_j Z_{-j} Z_{j+n} + i lambda n Z_n      (n != 0)
//! ```
//!
//! satisfy the Virasoro relations with central charge `1 + 12 lambda^2`.

use crate::combination::LinComb;
use crate::multiset::{Multiset, Variable};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CreationVar;

impl Variable for CreationVar {
    const SYMBOL: &'static str = "b";
}

pub type FockMonomial = Multiset<CreationVar>;
pub type FockVector = LinComb<FockMonomial>;

/// The vacuum `1`.
pub fn vacuum() -> FockVector {
    FockVector::basis(FockMonomial::unit())
}

pub fn monomial(factors: Vec<u64>) -> FockVector {
    FockVector::basis(FockMonomial::new(factors))
}

/// Largest Fock degree among the monomials of `v` (0 for zero).
pub fn max_degree(v: &FockVector) -> u64 {
    v.keys().map(FockMonomial::degree).max().unwrap_or(0)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FockConfig {
    /// Eigenvalue of `Z_0`.
    pub mu: Scalar,
    /// Deformation parameter of the Virasoro operators.
    pub lambda: Scalar,
}

impl FockConfig {
    pub fn new(mu: Scalar, lambda: Scalar) -> Self {
        FockConfig { mu, lambda }
    }

    pub fn central_charge(&self) -> Scalar {
        &Scalar::one() + &(&Scalar::from(12) * &(&self.lambda * &self.lambda))
    }
}

/// Heisenberg generator acting on the Fock space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FockOp {
    /// `Z_n`, any integer `n`.
    Label(i64),
    /// The central element.
    Central,
}

fn apply_label(cfg: &FockConfig, n: i64, v: &FockVector) -> FockVector {
    match n {
        0 => v.scale(&cfg.mu),
        n if n < 0 => {
            let k = n.unsigned_abs();
            v.iter().map(|(m, c)| (m.with(k), c.clone())).collect()
        }
        n => {
            let k = n as u64;
            let mut out = FockVector::zero();
            for (m, c) in v {
                let mult = m.multiplicity(k);
                if let Some(rest) = m.without(k) {
                    out.add_term(rest, c * &Scalar::from(n * mult as i64));
                }
            }
            out
        }
    }
}

pub fn fock_apply(cfg: &FockConfig, op: FockOp, v: &FockVector) -> FockVector {
    match op {
        FockOp::Label(n) => apply_label(cfg, n, v),
        FockOp::Central => v.clone(),
    }
}

/// Summation window for `L_n` on `v`: outside `|j| <= |n| + maxdeg(v)` every
/// summand vanishes.
pub fn default_window(n: i64, v: &FockVector) -> u64 {
    n.unsigned_abs() + max_degree(v)
}

/// `L_n v` with an explicit window for the quadratic sum (ignored for
/// `n = 0`, whose sum is cut off by `maxdeg(v)`).
pub fn virasoro_l_window(cfg: &FockConfig, n: i64, v: &FockVector, window: u64) -> FockVector {
    if n == 0 {
        let shift = &(&(&cfg.mu * &cfg.mu) + &(&cfg.lambda * &cfg.lambda)) * &Scalar::ratio(1, 2);
        let mut out = v.scale(&shift);
        for k in 1..=max_degree(v) as i64 {
            out.add_scaled(&apply_label(cfg, -k, &apply_label(cfg, k, v)), &Scalar::one());
        }
        return out;
    }
    let w = window as i64;
    let mut quad = FockVector::zero();
    for j in -w..=w {
        let right = apply_label(cfg, j + n, v);
        if right.is_zero() {
            continue;
        }
        quad.add_scaled(&apply_label(cfg, -j, &right), &Scalar::one());
    }
    let mut out = quad.scale(&Scalar::ratio(1, 2));
    let linear = &(&Scalar::i() * &cfg.lambda) * &Scalar::from(n);
    out.add_scaled(&apply_label(cfg, n, v), &linear);
    out
}

pub fn virasoro_l(cfg: &FockConfig, n: i64, v: &FockVector) -> FockVector {
    virasoro_l_window(cfg, n, v, default_window(n, v))
}

/// `[L_n, L_m] v`.
pub fn virasoro_commutator(cfg: &FockConfig, n: i64, m: i64, v: &FockVector) -> FockVector {
    let nm = virasoro_l(cfg, n, &virasoro_l(cfg, m, v));
    let mn = virasoro_l(cfg, m, &virasoro_l(cfg, n, v));
    &nm - &mn
}

/// Central term `d(n,-m) (n^3 - n)/12 (1 + 12 lambda^2)`.
pub fn virasoro_central_term(cfg: &FockConfig, n: i64, m: i64) -> Scalar {
    if n + m != 0 {
        return Scalar::zero();
    }
    &Scalar::ratio(n * n * n - n, 12) * &cfg.central_charge()
}

/// `([L_n, L_m] - (n-m) L_{n+m} - central) v`; zero when the relation holds.
pub fn virasoro_residual(cfg: &FockConfig, n: i64, m: i64, v: &FockVector) -> FockVector {
    let mut out = virasoro_commutator(cfg, n, m, v);
    out.add_scaled(&virasoro_l(cfg, n + m, v), &Scalar::from(-(n - m)));
    out.add_scaled(v, &-virasoro_central_term(cfg, n, m));
    out
}
