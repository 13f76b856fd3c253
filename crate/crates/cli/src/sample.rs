//! Seeded random inputs for the verification suites.
//!
//! Trial `i` of a run with seed `s` draws from `ChaCha8Rng` seeded with `s`
//! on stream `i`, so a trial's inputs depend only on `(s, i)` and never on
//! scheduling.

use ladder_core::classical::{GlElement, GlIndex};
use ladder_core::hopf::{Character, Monomial};
use ladder_core::lambda::{LambdaBasis, LambdaElement, Parity};
use ladder_core::lie::{GenIndex, LieElement};
use ladder_core::multiset::Multiset;
use ladder_core::standard_module::{SVector, TBasis};
use ladder_core::Scalar;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Small nonzero Gaussian rational with occasional imaginary part.
pub fn scalar(rng: &mut impl Rng) -> Scalar {
    let mut re = 0;
    while re == 0 {
        re = rng.gen_range(-4..=4);
    }
    let value = Scalar::ratio(re, rng.gen_range(1..=3));
    if rng.gen_bool(0.25) {
        &value + &(&Scalar::ratio(rng.gen_range(-2..=2), rng.gen_range(1..=3)) * &Scalar::i())
    } else {
        value
    }
}

pub fn generator(rng: &mut impl Rng, bound: u64) -> GenIndex {
    GenIndex::new(rng.gen_range(0..=bound), rng.gen_range(0..=bound))
}

/// One to three generator terms with random coefficients.
pub fn lie(rng: &mut impl Rng, bound: u64) -> LieElement {
    let terms = rng.gen_range(1..=3);
    (0..terms).map(|_| (generator(rng, bound), scalar(rng))).collect()
}

pub fn gl(rng: &mut impl Rng, bound: u64) -> GlElement {
    let terms = rng.gen_range(1..=3);
    (0..terms)
        .map(|_| {
            (
                GlIndex::new(rng.gen_range(0..=bound), rng.gen_range(0..=bound)),
                scalar(rng),
            )
        })
        .collect()
}

pub fn vector(rng: &mut impl Rng, bound: u64) -> SVector {
    let terms = rng.gen_range(1..=3);
    (0..terms)
        .map(|_| (TBasis(rng.gen_range(0..=bound)), scalar(rng)))
        .collect()
}

/// Monomial of total degree at most `max_degree` with factors drawn uniformly.
pub fn monomial<V>(rng: &mut impl Rng, max_degree: u64) -> Multiset<V> {
    let target = rng.gen_range(0..=max_degree);
    let mut factors = Vec::new();
    let mut left = target;
    while left > 0 {
        let k = rng.gen_range(1..=left);
        factors.push(k);
        left -= k;
    }
    Multiset::new(factors)
}

pub fn hopf_monomial(rng: &mut impl Rng, max_degree: u64) -> Monomial {
    monomial(rng, max_degree)
}

/// Character with values in `{-1, 0, 1, 1/2}` on `G[1..=top]`.
pub fn character(rng: &mut impl Rng, top: u64) -> Character {
    let values = [Scalar::from(-1), Scalar::zero(), Scalar::one(), Scalar::ratio(1, 2)];
    Character::new(
        (1..=top)
            .map(|k| (k, values[rng.gen_range(0..values.len())].clone()))
            .collect::<Vec<_>>(),
    )
}

pub fn lambda_element(rng: &mut impl Rng, max_level: i64) -> LambdaElement {
    let terms = rng.gen_range(1..=3);
    let mut out = LambdaElement::zero();
    for _ in 0..terms {
        let parity = if rng.gen_bool(0.5) { Parity::Even } else { Parity::Odd };
        let level = rng.gen_range(parity_floor(parity)..=max_level.max(1));
        let basis = LambdaBasis::new(parity, level).expect("level respects parity floor");
        out.add_term(basis, scalar(rng));
    }
    out
}

fn parity_floor(p: Parity) -> i64 {
    match p {
        Parity::Even => 0,
        Parity::Odd => 1,
    }
}
