//! The Hopf algebra of ladder graphs.
//!
//! As an algebra it is the free commutative polynomial algebra on the
//! ladders `G[k]`, `k >= 1`; the zero-loop ladder `G[0]` is identified with
//! the unit. The coproduct on generators is
//! `D(G[n]) = sum_{j=0..n} G[j] (x) G[n-j]`, extended multiplicatively, so
//! the algebra is commutative and cocommutative.
//!
//! Besides coproduct, counit and antipode this module carries the grading
//! derivation `Y`, the generator-level action of `Z[n,m]`, the derivations
//! `D1`, `D2`, `D3`, and two independent evaluations of `S*Y`.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{Map, Value};

use crate::combination::{read_multiset, BasisKey, LinComb};
use crate::error::{Error, Result};
use crate::lie::GenIndex;
use crate::multiset::{Multiset, Variable};
use crate::scalar::Scalar;
use crate::standard_module::act_basis;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LadderVar;

impl Variable for LadderVar {
    const SYMBOL: &'static str = "G";
}

/// Product of ladder generators; the empty product is the unit.
pub type Monomial = Multiset<LadderVar>;
pub type HopfElement = LinComb<Monomial>;

/// Basis of the tensor square.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tensor(pub Monomial, pub Monomial);

impl fmt::Display for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} (x) {})", self.0, self.1)
    }
}

impl BasisKey for Tensor {
    fn write_fields(&self, obj: &mut Map<String, Value>) {
        obj.insert("left".into(), self.0.factors().to_vec().into());
        obj.insert("right".into(), self.1.factors().to_vec().into());
    }

    fn read_fields(obj: &Map<String, Value>) -> Result<Self> {
        Ok(Tensor(
            Monomial::new(read_multiset(obj, "left")?),
            Monomial::new(read_multiset(obj, "right")?),
        ))
    }
}

pub type TensorElement = LinComb<Tensor>;

/// Basis of the triple tensor power, for coassociativity.
pub type Tensor3 = (Monomial, Monomial, Monomial);
pub type Tensor3Element = LinComb<Tensor3>;

pub fn one() -> HopfElement {
    HopfElement::basis(Monomial::unit())
}

/// `G[k]`, with `G[0]` the unit.
pub fn gamma(k: u64) -> HopfElement {
    if k == 0 {
        one()
    } else {
        HopfElement::basis(Monomial::var(k))
    }
}

pub fn monomial(factors: Vec<u64>) -> HopfElement {
    HopfElement::basis(Monomial::new(factors))
}

pub fn product(x: &HopfElement, y: &HopfElement) -> HopfElement {
    x.bilinear(y, |a, b| HopfElement::basis(a.mul(b)))
}

pub fn tensor_product(x: &TensorElement, y: &TensorElement) -> TensorElement {
    x.bilinear(y, |a, b| TensorElement::basis(Tensor(a.0.mul(&b.0), a.1.mul(&b.1))))
}

fn coproduct_generator(n: u64) -> TensorElement {
    (0..=n)
        .map(|j| {
            let left = if j == 0 { Monomial::unit() } else { Monomial::var(j) };
            let right = if j == n { Monomial::unit() } else { Monomial::var(n - j) };
            (Tensor(left, right), Scalar::one())
        })
        .collect()
}

fn coproduct_monomial(m: &Monomial) -> TensorElement {
    m.factors().iter().fold(
        TensorElement::basis(Tensor(Monomial::unit(), Monomial::unit())),
        |acc, &k| tensor_product(&acc, &coproduct_generator(k)),
    )
}

pub fn coproduct(x: &HopfElement) -> TensorElement {
    x.map_linear(coproduct_monomial)
}

pub fn counit(x: &HopfElement) -> Scalar {
    x.coeff(&Monomial::unit())
}

/// Multiplication `m: H (x) H -> H`.
pub fn multiply(t: &TensorElement) -> HopfElement {
    t.map_linear(|Tensor(a, b)| HopfElement::basis(a.mul(b)))
}

/// `m o (f (x) g) o D` for linear maps `f`, `g` given on basis monomials.
pub fn convolve<F, G>(x: &HopfElement, mut f: F, mut g: G) -> HopfElement
where
    F: FnMut(&Monomial) -> HopfElement,
    G: FnMut(&Monomial) -> HopfElement,
{
    coproduct(x).map_linear(|Tensor(a, b)| product(&f(a), &g(b)))
}

pub fn swap(t: &TensorElement) -> TensorElement {
    t.iter()
        .map(|(Tensor(a, b), c)| (Tensor(b.clone(), a.clone()), c.clone()))
        .collect()
}

/// `(D (x) id) D x`
pub fn coproduct_left_iterated(x: &HopfElement) -> Tensor3Element {
    coproduct(x).map_linear(|Tensor(a, b)| {
        coproduct_monomial(a)
            .iter()
            .map(|(Tensor(p, q), c)| ((p.clone(), q.clone(), b.clone()), c.clone()))
            .collect()
    })
}

/// `(id (x) D) D x`
pub fn coproduct_right_iterated(x: &HopfElement) -> Tensor3Element {
    coproduct(x).map_linear(|Tensor(a, b)| {
        coproduct_monomial(b)
            .iter()
            .map(|(Tensor(p, q), c)| ((a.clone(), p.clone(), q.clone()), c.clone()))
            .collect()
    })
}

/// Antipode values `S(G[0..=top])`, each obtained from the previous ones
/// through `m (S (x) id) D G[k] = 0`.
fn antipode_table(top: u64) -> Vec<HopfElement> {
    let mut table = vec![one()];
    for k in 1..=top {
        let mut rest = HopfElement::zero();
        for (Tensor(a, b), c) in &coproduct_generator(k) {
            // the G[k] (x) 1 term is the unknown
            if a.degree() == k {
                continue;
            }
            let s_a = table[a.degree() as usize].clone();
            rest.add_scaled(&product(&s_a, &HopfElement::basis(b.clone())), c);
        }
        table.push(-rest);
    }
    table
}

/// The antipode, the convolution inverse of the identity. An algebra
/// morphism since the algebra is commutative.
pub fn antipode(x: &HopfElement) -> HopfElement {
    let top = x.keys().flat_map(|m| m.factors().iter().copied()).max().unwrap_or(0);
    let table = antipode_table(top);
    x.map_linear(|m| {
        m.factors()
            .iter()
            .fold(one(), |acc, &k| product(&acc, &table[k as usize]))
    })
}

/// The grading derivation: each monomial scaled by its total degree.
pub fn grading_y(x: &HopfElement) -> HopfElement {
    x.iter()
        .map(|(m, c)| (m.clone(), c * &Scalar::from(m.degree() as i64)))
        .collect()
}

/// `Z[n,m] G[k] = G[k-m+n]` for `m <= k`, else zero; `G[0]` is the unit.
pub fn lie_act(g: GenIndex, k: u64) -> HopfElement {
    match act_basis(g, k) {
        Some(j) => gamma(j),
        None => HopfElement::zero(),
    }
}

/// Linear extension of `lie_act` to the span of the unit and the generators.
/// Returns `None` if `x` contains a product of two or more generators.
fn lie_act_linear(g: GenIndex, x: &HopfElement) -> Option<HopfElement> {
    let mut out = HopfElement::zero();
    for (m, c) in x {
        let k = match m.factors() {
            [] => 0,
            [k] => *k,
            _ => return None,
        };
        out.add_scaled(&lie_act(g, k), c);
    }
    Some(out)
}

/// `D1(G[m]) = sum_n G[n] Z[0,n](G[m])`.
pub fn d1(m: u64) -> HopfElement {
    let mut out = HopfElement::zero();
    for n in 0..=m {
        out.add_scaled(&product(&gamma(n), &lie_act(GenIndex::new(0, n), m)), &Scalar::one());
    }
    out
}

/// `D2(G[m]) = sum_{k>=1} Z[k,k](G[m])`, which is `m G[m]`.
pub fn d2(m: u64) -> HopfElement {
    let mut out = HopfElement::zero();
    for k in 1..=m {
        out.add_scaled(&lie_act(GenIndex::new(k, k), m), &Scalar::one());
    }
    out
}

fn d2_linear(x: &HopfElement) -> HopfElement {
    x.map_linear(|mono| match mono.factors() {
        [] => HopfElement::zero(),
        [k] => d2(*k),
        _ => unreachable!("D2 is only evaluated on generators"),
    })
}

/// Table of `D3(G[0..=top])` from
/// `D3(G[m]) = -Z[0,0](G[m]) - sum_n D3(G[n]) Z[1,n+1](G[m])`,
/// with `D3(G[0]) = 0` since a derivation kills the unit.
fn d3_table(top: u64) -> Vec<HopfElement> {
    let mut table = vec![HopfElement::zero()];
    for m in 1..=top {
        let mut value = -lie_act(GenIndex::new(0, 0), m);
        // Z[1,n+1] kills G[m] once n + 1 > m
        for n in 0..m {
            let shifted = lie_act(GenIndex::new(1, n + 1), m);
            value.add_scaled(&product(&table[n as usize], &shifted), &Scalar::from(-1));
        }
        table.push(value);
    }
    table
}

pub fn d3(m: u64) -> HopfElement {
    d3_table(m).pop().expect("table has m + 1 entries")
}

/// `S*Y (G[m]) = m o (S (x) Y) o D (G[m])`.
pub fn s_star_y_direct(m: u64) -> HopfElement {
    convolve(
        &gamma(m),
        |a| antipode(&HopfElement::basis(a.clone())),
        |b| grading_y(&HopfElement::basis(b.clone())),
    )
}

/// `S*Y (G[m]) = sum_n D3(G[n]) D2(Z[0,n] G[m])`, where the `n = 0` term
/// carries `S(1) = 1` in place of `D3(G[0])`.
pub fn s_star_y(m: u64) -> HopfElement {
    let table = d3_table(m);
    let mut out = HopfElement::zero();
    for n in 0..=m {
        let left = if n == 0 { one() } else { table[n as usize].clone() };
        let inner = lie_act_linear(GenIndex::new(0, n), &gamma(m)).expect("generator input");
        out.add_scaled(&product(&left, &d2_linear(&inner)), &Scalar::one());
    }
    out
}

/// Both evaluations of `S*Y (G[m])`, failing if they disagree.
pub fn s_star_y_checked(m: u64) -> Result<HopfElement> {
    let formula = s_star_y(m);
    let direct = s_star_y_direct(m);
    if formula != direct {
        return Err(Error::SStarYMismatch {
            m,
            formula: formula.to_string(),
            direct: direct.to_string(),
        });
    }
    Ok(formula)
}

/// A character: an algebra morphism to scalars, fixed by its values on
/// the generators. Unspecified generators map to zero; the unit maps to 1.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Character {
    values: BTreeMap<u64, Scalar>,
}

impl Character {
    /// The counit.
    pub fn counit() -> Self {
        Self::default()
    }

    pub fn new<I: IntoIterator<Item = (u64, Scalar)>>(values: I) -> Self {
        Character {
            values: values.into_iter().filter(|(k, _)| *k >= 1).collect(),
        }
    }

    /// Same value on every generator `G[1..=top]`.
    pub fn constant(value: Scalar, top: u64) -> Self {
        Self::new((1..=top).map(|k| (k, value.clone())))
    }

    pub fn on_generator(&self, k: u64) -> Scalar {
        if k == 0 {
            return Scalar::one();
        }
        self.values.get(&k).cloned().unwrap_or_default()
    }

    pub fn on_monomial(&self, m: &Monomial) -> Scalar {
        m.factors()
            .iter()
            .fold(Scalar::one(), |acc, &k| &acc * &self.on_generator(k))
    }

    pub fn eval(&self, x: &HopfElement) -> Scalar {
        x.iter().map(|(m, c)| c * &self.on_monomial(m)).sum()
    }
}

/// `(f*g)(x)` computed twice: through the coproduct, and through the
/// elimination action `sum_n f(G[n]) g(Z[0,n] G[m])` on each generator
/// (extended multiplicatively, as `f*g` is again a character).
pub fn char_convolve(f: &Character, g: &Character, x: &HopfElement) -> Result<Scalar> {
    let via_coproduct: Scalar = coproduct(x)
        .iter()
        .map(|(Tensor(a, b), c)| &(c * &f.on_monomial(a)) * &g.on_monomial(b))
        .sum();

    let on_generator = |m: u64| -> Scalar {
        (0..=m)
            .map(|n| &f.on_generator(n) * &g.eval(&lie_act(GenIndex::new(0, n), m)))
            .sum()
    };
    let via_elimination: Scalar = x
        .iter()
        .map(|(mono, c)| mono.factors().iter().fold(c.clone(), |acc, &k| &acc * &on_generator(k)))
        .sum();

    if via_coproduct != via_elimination {
        return Err(Error::ConvolutionMismatch {
            input: x.to_string(),
            coproduct: via_coproduct.to_string(),
            elimination: via_elimination.to_string(),
        });
    }
    Ok(via_coproduct)
}
