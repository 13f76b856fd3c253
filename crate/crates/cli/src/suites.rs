//! The verification suites behind `ladder verify`.
//!
//! Every suite runs an exhaustive sweep up to its index bound followed by
//! `trials` seeded random trials. Reports are deterministic in
//! `(seed, trials, max_index)` apart from `elapsed_ms`.

use std::collections::BTreeMap;
use std::time::Instant;

use ladder_core::classical::{
    cartan_entry, cartan_pairing, chevalley_e, chevalley_f, coroot, embed_phi, gl_bracket, trace, GlElement, GlIndex,
};
use ladder_core::fock::{
    fock_apply, vacuum, virasoro_commutator, virasoro_l, virasoro_residual, CreationVar, FockConfig, FockOp, FockVector,
};
use ladder_core::heisenberg::{
    a_minus, a_plus, cocycle, heis_bracket, label_to_generator, HeisLabel, HeisenbergElement,
};
use ladder_core::hopf::{
    antipode, char_convolve, coproduct, coproduct_left_iterated, coproduct_right_iterated, counit, d1, d3, gamma,
    grading_y, monomial as hopf_monomial, multiply, one, product, s_star_y, s_star_y_checked, s_star_y_direct, swap,
    HopfElement, LadderVar, Monomial, Tensor,
};
use ladder_core::lambda::{bullet, bullet_product, diagram_check, lambda_act, phi_iso, LambdaBasis, Parity};
use ladder_core::lie::{
    bracket, degree_decompose, homogeneous_degree, involution_c, project, GenIndex, LieElement, Part,
};
use ladder_core::linalg::rank;
use ladder_core::multiset::monomials_up_to;
use ladder_core::standard_module::{act, hw_generate, is_singular, matrix, star, t, SVector};
use ladder_core::Scalar;
use rand::Rng;
use serde_json::json;

use crate::report::{sweep, trials, SuiteReport, Tally};
use crate::sample;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Jacobi,
    Antisymmetry,
    Grading,
    Module,
    Matrix,
    Embedding,
    Chevalley,
    Involution,
    Heisenberg,
    Virasoro,
    HopfAxioms,
    SyEquivalence,
    LambdaDiagrams,
    All,
}

impl Suite {
    /// Every concrete suite, in report order.
    pub const EACH: [Suite; 13] = [
        Suite::Jacobi,
        Suite::Antisymmetry,
        Suite::Grading,
        Suite::Module,
        Suite::Matrix,
        Suite::Embedding,
        Suite::Chevalley,
        Suite::Involution,
        Suite::Heisenberg,
        Suite::Virasoro,
        Suite::HopfAxioms,
        Suite::SyEquivalence,
        Suite::LambdaDiagrams,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Jacobi => "jacobi",
            Suite::Antisymmetry => "antisymmetry",
            Suite::Grading => "grading",
            Suite::Module => "module",
            Suite::Matrix => "matrix",
            Suite::Embedding => "embedding",
            Suite::Chevalley => "chevalley",
            Suite::Involution => "involution",
            Suite::Heisenberg => "heisenberg",
            Suite::Virasoro => "virasoro",
            Suite::HopfAxioms => "hopf-axioms",
            Suite::SyEquivalence => "sy-equivalence",
            Suite::LambdaDiagrams => "lambda-diagrams",
            Suite::All => "all",
        }
    }

    /// What `--max-index` bounds when it is not given.
    pub fn default_max_index(self) -> u64 {
        match self {
            Suite::Jacobi => 10,
            Suite::Antisymmetry => 12,
            Suite::Grading => 10,
            Suite::Module => 8,
            Suite::Matrix => 6,
            Suite::Embedding => 8,
            Suite::Chevalley => 10,
            Suite::Involution => 10,
            Suite::Heisenberg => 6,
            Suite::Virasoro => 4,
            Suite::HopfAxioms => 12,
            Suite::SyEquivalence => 12,
            Suite::LambdaDiagrams => 10,
            Suite::All => 0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Params {
    pub trials: u64,
    pub seed: u64,
    /// Overrides every suite's default bound when set.
    pub max_index: Option<u64>,
}

impl Default for Params {
    fn default() -> Self {
        Params {
            trials: 1000,
            seed: 0,
            max_index: None,
        }
    }
}

/// Runs `suite` (or every suite for `All`), one report per concrete suite.
pub fn run_suite(suite: Suite, params: &Params) -> Vec<SuiteReport> {
    match suite {
        Suite::All => Suite::EACH.iter().map(|&s| run_one(s, params)).collect(),
        s => vec![run_one(s, params)],
    }
}

fn run_one(suite: Suite, params: &Params) -> SuiteReport {
    let bound = params.max_index.unwrap_or_else(|| suite.default_max_index());
    let start = Instant::now();
    let (seed, n) = (params.seed, params.trials);
    let tally = match suite {
        Suite::Jacobi => jacobi(bound, seed, n),
        Suite::Antisymmetry => antisymmetry(bound, seed, n),
        Suite::Grading => grading(bound, seed, n),
        Suite::Module => module(bound, seed, n),
        Suite::Matrix => matrix_picture(bound, seed, n),
        Suite::Embedding => embedding(bound, seed, n),
        Suite::Chevalley => chevalley(bound, seed, n),
        Suite::Involution => involution(bound, seed, n),
        Suite::Heisenberg => heisenberg(bound, seed, n),
        Suite::Virasoro => virasoro(bound, seed, n),
        Suite::HopfAxioms => hopf_axioms(bound, seed, n),
        Suite::SyEquivalence => sy_equivalence(bound, seed, n),
        Suite::LambdaDiagrams => lambda_diagrams(bound, seed, n),
        Suite::All => unreachable!("expanded by run_suite"),
    };
    SuiteReport {
        suite: suite.name().into(),
        seed,
        trials: n,
        max_index: bound,
        checks: tally.checks,
        pass: tally.failure_count == 0,
        failure_count: tally.failure_count,
        failures: tally.failures,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}

fn gens(bound: u64) -> Vec<GenIndex> {
    (0..=bound)
        .flat_map(|n| (0..=bound).map(move |m| GenIndex::new(n, m)))
        .collect()
}

fn pairs<T: Copy>(items: &[T]) -> Vec<(T, T)> {
    items.iter().flat_map(|&a| items.iter().map(move |&b| (a, b))).collect()
}

fn basis(g: GenIndex) -> LieElement {
    LieElement::basis(g)
}

fn jacobi_check(t: &mut Tally, x: &LieElement, y: &LieElement, z: &LieElement) {
    let sum = &(&bracket(x, &bracket(y, z)) + &bracket(y, &bracket(z, x))) + &bracket(z, &bracket(x, y));
    t.check_eq(
        "jacobi",
        &sum,
        &LieElement::zero(),
        || json!({ "x": x.to_string(), "y": y.to_string(), "z": z.to_string() }),
    );
}

fn jacobi(bound: u64, seed: u64, n: u64) -> Tally {
    let small = gens(bound.min(3));
    let triples: Vec<(GenIndex, GenIndex, GenIndex)> = pairs(&small)
        .into_iter()
        .flat_map(|(a, b)| small.iter().map(move |&c| (a, b, c)))
        .collect();
    let mut out = sweep(&triples, |&(a, b, c), t| {
        jacobi_check(t, &basis(a), &basis(b), &basis(c))
    });
    out.merge(trials(seed, n, |rng, _, t| {
        let (x, y, z) = (
            sample::lie(rng, bound),
            sample::lie(rng, bound),
            sample::lie(rng, bound),
        );
        jacobi_check(t, &x, &y, &z);
    }));
    out
}

fn antisymmetry_check(t: &mut Tally, x: &LieElement, y: &LieElement) {
    t.check_eq(
        "antisymmetry",
        &bracket(x, y),
        &-bracket(y, x),
        || json!({ "x": x.to_string(), "y": y.to_string() }),
    );
}

fn antisymmetry(bound: u64, seed: u64, n: u64) -> Tally {
    let mut out = sweep(&pairs(&gens(bound)), |&(a, b), t| {
        antisymmetry_check(t, &basis(a), &basis(b));
    });
    out.merge(trials(seed, n, |rng, _, t| {
        let (x, y) = (sample::lie(rng, bound), sample::lie(rng, bound));
        antisymmetry_check(t, &x, &y);
        t.check_eq(
            "alternating",
            &bracket(&x, &x),
            &LieElement::zero(),
            || json!({ "x": x.to_string() }),
        );
    }));
    out
}

fn grading(bound: u64, seed: u64, n: u64) -> Tally {
    let mut out = sweep(&pairs(&gens(bound)), |&(a, b), t| {
        let br = bracket(&basis(a), &basis(b));
        let expected = a.degree() + b.degree();
        let ok = match homogeneous_degree(&br) {
            Some(None) => true,
            Some(Some(d)) => d == expected,
            None => false,
        };
        let inputs = || json!({ "a": a.to_string(), "b": b.to_string() });
        t.holds("bracket degree is additive", ok, inputs, || br.to_string());
        if a.degree() == 0 && b.degree() == 0 {
            t.check_eq("L0 is commutative", &br, &LieElement::zero(), inputs);
        }
    });
    out.merge(trials(seed, n, |rng, _, t| {
        let x = sample::lie(rng, bound);
        let inputs = || json!({ "x": x.to_string() });
        let pieces = degree_decompose(&x);
        let total = pieces.values().fold(LieElement::zero(), |acc, p| &acc + p);
        t.check_eq("decomposition sums back", &total, &x, inputs);
        let homogeneous = pieces.iter().all(|(&d, p)| homogeneous_degree(p) == Some(Some(d)));
        t.holds("pieces are homogeneous", homogeneous, inputs, || format!("{pieces:?}"));
        let parts = &(&project(&x, Part::Plus) + &project(&x, Part::Zero)) + &project(&x, Part::Minus);
        t.check_eq("triangular decomposition", &parts, &x, inputs);
        let h = project(&sample::lie(rng, bound), Part::Zero);
        for part in [Part::Plus, Part::Minus] {
            let p = project(&x, part);
            let br = bracket(&p, &h);
            t.check_eq(
                "L0 preserves the triangular parts",
                &project(&br, part),
                &br,
                || json!({ "x": p.to_string(), "h": h.to_string() }),
            );
        }
    }));
    out
}

fn representation_check(t: &mut Tally, x: &LieElement, y: &LieElement, v: &SVector) {
    let lhs = act(&bracket(x, y), v);
    let rhs = &act(x, &act(y, v)) - &act(y, &act(x, v));
    t.check_eq(
        "representation",
        &lhs,
        &rhs,
        || json!({ "x": x.to_string(), "y": y.to_string(), "v": v.to_string() }),
    );
}

fn module(bound: u64, seed: u64, n: u64) -> Tally {
    let top = 2 * bound;
    let mut out = sweep(&pairs(&gens(bound)), |&(a, b), t| {
        for k in 0..=top {
            representation_check(t, &basis(a), &basis(b), &t_vec(k));
        }
    });
    let ks: Vec<u64> = (0..=top).collect();
    out.merge(sweep(&ks, |&k, t| {
        let inputs = || json!({ "k": k });
        t.check_eq("highest weight generates", &hw_generate(k), &t_vec(k), inputs);
        let singular = is_singular(&t_vec(k)).unwrap_or(false);
        t.holds("singular iff multiple of t[0]", singular == (k == 0), inputs, || {
            singular.to_string()
        });
        if k >= 1 {
            let image = act(&basis(GenIndex::new(0, k)), &t_vec(0));
            t.check_eq("elimination kills t[0]", &image, &SVector::zero(), inputs);
        }
    }));
    out.merge(trials(seed, n, |rng, _, t| {
        let (x, y) = (sample::lie(rng, bound), sample::lie(rng, bound));
        let (u, v, w) = (
            sample::vector(rng, top),
            sample::vector(rng, top),
            sample::vector(rng, top),
        );
        representation_check(t, &x, &y, &v);
        let inputs = || json!({ "u": u.to_string(), "v": v.to_string(), "w": w.to_string() });
        t.check_eq("star is commutative", &star(&u, &v), &star(&v, &u), inputs);
        t.check_eq(
            "star is associative",
            &star(&star(&u, &v), &w),
            &star(&u, &star(&v, &w)),
            inputs,
        );
    }));
    out
}

fn t_vec(k: u64) -> SVector {
    t(k)
}

fn matrix_picture(bound: u64, seed: u64, n: u64) -> Tally {
    let size = 20usize.max(3 * bound as usize);
    let interior = size + 1 - 2 * bound as usize;
    let mut out = sweep(&gens(bound), |&g, t| {
        let mat = matrix(&basis(g), size);
        let mut ok = true;
        for r in 0..=size {
            for c in 0..=size {
                let expected = c as u64 >= g.m && r as i64 == c as i64 - g.m as i64 + g.n as i64;
                let e = mat.get(r, c);
                ok &= if expected { e.is_one() } else { e.is_zero() };
            }
        }
        t.holds(
            "closed form",
            ok,
            || json!({ "g": g.to_string(), "size": size }),
            || mat.to_string(),
        );
    });
    let commutator = |t: &mut Tally, x: &LieElement, y: &LieElement| {
        let lhs = matrix(&bracket(x, y), size).block(interior);
        let rhs = matrix(x, size).commutator(&matrix(y, size)).block(interior);
        t.check_eq(
            "commutator on interior block",
            &lhs,
            &rhs,
            || json!({ "x": x.to_string(), "y": y.to_string(), "size": size, "block": interior }),
        );
    };
    out.merge(sweep(&pairs(&gens(bound)), |&(a, b), t| {
        commutator(t, &basis(a), &basis(b))
    }));
    out.merge(trials(seed, n, |rng, _, t| {
        let (x, y) = (sample::lie(rng, bound), sample::lie(rng, bound));
        commutator(t, &x, &y);
    }));
    out
}

fn gl_units(bound: u64) -> Vec<GlIndex> {
    (0..=bound)
        .flat_map(|i| (0..=bound).map(move |j| GlIndex::new(i, j)))
        .collect()
}

fn homomorphism_check(t: &mut Tally, x: &GlElement, y: &GlElement) {
    let lhs = embed_phi(&gl_bracket(x, y));
    let rhs = bracket(&embed_phi(x), &embed_phi(y));
    t.check_eq(
        "phi is a homomorphism",
        &lhs,
        &rhs,
        || json!({ "x": x.to_string(), "y": y.to_string() }),
    );
}

fn embedding(bound: u64, seed: u64, n: u64) -> Tally {
    let mut out = sweep(&pairs(&gl_units(bound)), |&(a, b), t| {
        let (x, y) = (GlElement::basis(a), GlElement::basis(b));
        homomorphism_check(t, &x, &y);
        let tr = trace(&gl_bracket(&x, &y));
        t.check_eq(
            "brackets are traceless",
            &tr,
            &Scalar::zero(),
            || json!({ "a": a.to_string(), "b": b.to_string() }),
        );
    });
    let spans: Vec<u64> = (0..=bound.min(4)).collect();
    out.merge(sweep(&spans, |&b, t| {
        let rows: Vec<Vec<Scalar>> = gl_units(b)
            .into_iter()
            .map(|e| {
                matrix(&embed_phi(&GlElement::basis(e)), 2 * b as usize + 2)
                    .entries()
                    .to_vec()
            })
            .collect();
        let r = rank(&rows);
        t.check_eq("phi is injective", &r, &rows.len(), || json!({ "bound": b }));
    }));
    out.merge(trials(seed, n, |rng, _, t| {
        let (x, y) = (sample::gl(rng, bound), sample::gl(rng, bound));
        homomorphism_check(t, &x, &y);
        let c = sample::scalar(rng);
        t.check_eq(
            "phi is linear",
            &embed_phi(&(&x + &y.scale(&c))),
            &(&embed_phi(&x) + &embed_phi(&y).scale(&c)),
            || json!({ "x": x.to_string(), "y": y.to_string(), "c": c.to_string() }),
        );
    }));
    out
}

fn chevalley(bound: u64, seed: u64, n: u64) -> Tally {
    let idx: Vec<u64> = (0..=bound).collect();
    let mut out = sweep(&pairs(&idx), |&(i, j), t| {
        let inputs = || json!({ "i": i, "j": j });
        let expected = if i == j { coroot(i) } else { LieElement::zero() };
        t.check_eq(
            "[e_i,f_j]",
            &bracket(&chevalley_e(i), &chevalley_f(j)),
            &expected,
            inputs,
        );
        let a = Scalar::from(cartan_entry(i, j));
        t.check_eq(
            "[h_i,e_j]",
            &bracket(&coroot(i), &chevalley_e(j)),
            &chevalley_e(j).scale(&a),
            inputs,
        );
        t.check_eq(
            "[h_i,f_j]",
            &bracket(&coroot(i), &chevalley_f(j)),
            &chevalley_f(j).scale(&-&a),
            inputs,
        );
        t.check_eq(
            "[h_i,h_j]",
            &bracket(&coroot(i), &coroot(j)),
            &LieElement::zero(),
            inputs,
        );
        match cartan_pairing(i, j) {
            Ok(p) => t.check_eq("Cartan pairing", &p, &a, inputs),
            Err(e) => t.holds("Cartan pairing", false, inputs, || e.to_string()),
        }
    });
    out.merge(trials(seed, n, |rng, _, t| {
        let coeffs: Vec<(u64, Scalar)> = (0..3)
            .map(|_| (rng.gen_range(0..=bound), sample::scalar(rng)))
            .collect();
        let j = rng.gen_range(0..=bound);
        let h = coeffs
            .iter()
            .fold(LieElement::zero(), |acc, (i, c)| &acc + &coroot(*i).scale(c));
        let weight: Scalar = coeffs.iter().map(|(i, c)| c * &Scalar::from(cartan_entry(*i, j))).sum();
        t.check_eq(
            "Cartan weights are linear",
            &bracket(&h, &chevalley_e(j)),
            &chevalley_e(j).scale(&weight),
            || json!({ "h": h.to_string(), "j": j }),
        );
    }));
    out
}

fn involution_check(t: &mut Tally, x: &LieElement, y: &LieElement) {
    t.check_eq(
        "C is a homomorphism",
        &involution_c(&bracket(x, y)),
        &bracket(&involution_c(x), &involution_c(y)),
        || json!({ "x": x.to_string(), "y": y.to_string() }),
    );
}

fn involution(bound: u64, seed: u64, n: u64) -> Tally {
    let mut out = sweep(&pairs(&gens(bound)), |&(a, b), t| {
        involution_check(t, &basis(a), &basis(b));
    });
    let idx: Vec<u64> = (0..=bound).collect();
    out.merge(sweep(&idx, |&i, t| {
        let inputs = || json!({ "i": i });
        t.check_eq(
            "C(f_i) = -e_i",
            &involution_c(&chevalley_f(i)),
            &-chevalley_e(i),
            inputs,
        );
        t.check_eq(
            "C(e_i) = -f_i",
            &involution_c(&chevalley_e(i)),
            &-chevalley_f(i),
            inputs,
        );
        t.check_eq("C(h_i) = -h_i", &involution_c(&coroot(i)), &-coroot(i), inputs);
    }));
    out.merge(trials(seed, n, |rng, _, t| {
        let (x, y) = (sample::lie(rng, bound), sample::lie(rng, bound));
        involution_check(t, &x, &y);
        let inputs = || json!({ "x": x.to_string() });
        t.check_eq("C is an involution", &involution_c(&involution_c(&x)), &x, inputs);
        let cx = involution_c(&x);
        let reversed = degree_decompose(&x)
            .iter()
            .all(|(&d, p)| degree_decompose(&cx).get(&-d) == Some(&involution_c(p)));
        t.holds("C reverses degree", reversed, inputs, || cx.to_string());
    }));
    out
}

fn heisenberg(bound: u64, seed: u64, n: u64) -> Tally {
    let b = bound as i64;
    let labels: Vec<i64> = (-b..=b).collect();
    let mut out = sweep(&pairs(&labels), |&(p, q), t| {
        let inputs = || json!({ "n": p, "m": q });
        for side in [HeisLabel::plus as fn(i64) -> HeisLabel, HeisLabel::minus] {
            match (cocycle(side(p), side(q)), cocycle(side(q), side(p))) {
                (Ok(c), Ok(d)) => {
                    t.check_eq("cocycle is antisymmetric", &c, &-d, inputs);
                    let expected = if p == -q { Scalar::from(p) } else { Scalar::zero() };
                    t.check_eq("cocycle value", &c, &expected, inputs);
                }
                _ => t.holds("cocycle defined", false, inputs, || "error".into()),
            }
            let bracket = heis_bracket(&HeisenbergElement::label(side(p)), &HeisenbergElement::label(side(q)));
            let expected = if p == -q {
                HeisenbergElement::central(Scalar::from(p))
            } else {
                HeisenbergElement::zero()
            };
            t.holds("Heisenberg bracket", bracket.as_ref() == Ok(&expected), inputs, || {
                format!("{bracket:?}")
            });
        }
    });
    let span: Vec<i64> = (-2 * b..=2 * b).collect();
    out.merge(sweep(&span, |&k, t| {
        let inputs = || json!({ "label": k });
        let plus = label_to_generator(HeisLabel::plus(k));
        let minus = label_to_generator(HeisLabel::minus(k));
        t.holds(
            "a+ inverts its labelling",
            a_plus(plus) == Ok(HeisLabel::plus(k)),
            inputs,
            || plus.to_string(),
        );
        t.holds(
            "a- inverts its labelling",
            a_minus(minus) == Ok(HeisLabel::minus(k)),
            inputs,
            || minus.to_string(),
        );
    }));
    let cfg = FockConfig::new(Scalar::ratio(2, 3), Scalar::zero());
    let monos: Vec<FockVector> = monomials_up_to::<CreationVar>(8)
        .into_iter()
        .map(FockVector::basis)
        .collect();
    out.merge(sweep(&monos, |v, t| {
        for &p in &labels {
            for &q in &labels {
                let pq = fock_apply(&cfg, FockOp::Label(p), &fock_apply(&cfg, FockOp::Label(q), v));
                let qp = fock_apply(&cfg, FockOp::Label(q), &fock_apply(&cfg, FockOp::Label(p), v));
                let expected = if p == -q {
                    v.scale(&Scalar::from(p))
                } else {
                    FockVector::zero()
                };
                t.check_eq(
                    "Fock commutator",
                    &(&pq - &qp),
                    &expected,
                    || json!({ "n": p, "m": q, "v": v.to_string() }),
                );
            }
        }
    }));
    out.merge(trials(seed, n, |rng, _, t| {
        let cfg = FockConfig::new(sample::scalar(rng), sample::scalar(rng));
        let (p, q) = (rng.gen_range(-b..=b), rng.gen_range(-b..=b));
        let v = FockVector::basis(sample::monomial::<CreationVar>(rng, 8)).scale(&sample::scalar(rng));
        let pq = fock_apply(&cfg, FockOp::Label(p), &fock_apply(&cfg, FockOp::Label(q), &v));
        let qp = fock_apply(&cfg, FockOp::Label(q), &fock_apply(&cfg, FockOp::Label(p), &v));
        let expected = if p == -q {
            v.scale(&Scalar::from(p))
        } else {
            FockVector::zero()
        };
        t.check_eq(
            "Fock commutator",
            &(&pq - &qp),
            &expected,
            || json!({ "n": p, "m": q, "mu": cfg.mu.to_string(), "v": v.to_string() }),
        );
    }));
    out
}

/// The five fixed `(mu, lambda)` points; three have nonzero `lambda`.
pub fn parameter_points() -> Vec<FockConfig> {
    [
        ((0, 1), (0, 1)),
        ((1, 1), (0, 1)),
        ((0, 1), (1, 1)),
        ((1, 2), (1, 3)),
        ((2, 1), (3, 2)),
    ]
    .into_iter()
    .map(|((a, b), (c, d))| FockConfig::new(Scalar::ratio(a, b), Scalar::ratio(c, d)))
    .collect()
}

fn residual_check(t: &mut Tally, cfg: &FockConfig, p: i64, q: i64, v: &FockVector) {
    let r = virasoro_residual(cfg, p, q, v);
    t.check_eq(
        "Virasoro relation",
        &r,
        &FockVector::zero(),
        || json!({ "n": p, "m": q, "mu": cfg.mu.to_string(), "lambda": cfg.lambda.to_string(), "v": v.to_string() }),
    );
}

fn virasoro(bound: u64, seed: u64, n: u64) -> Tally {
    let b = bound as i64;
    let monos: Vec<FockVector> = monomials_up_to::<CreationVar>(6)
        .into_iter()
        .map(FockVector::basis)
        .collect();
    let points = parameter_points();
    let cases: Vec<(usize, i64, i64)> = (0..points.len())
        .flat_map(|c| (-b..=b).flat_map(move |p| (-b..=b).map(move |q| (c, p, q))))
        .collect();
    let mut out = sweep(&cases, |&(c, p, q), t| {
        for v in &monos {
            residual_check(t, &points[c], p, q, v);
        }
    });
    out.merge(sweep(&points, |cfg, t| {
        let mu2 = &cfg.mu * &cfg.mu;
        let la2 = &cfg.lambda * &cfg.lambda;
        let value = &(&(&Scalar::from(2) * &mu2) + &(&Scalar::from(8) * &la2)) + &Scalar::ratio(1, 2);
        let lhs = virasoro_commutator(cfg, 2, -2, &vacuum());
        let inputs = || json!({ "mu": cfg.mu.to_string(), "lambda": cfg.lambda.to_string() });
        t.check_eq("[L2,L-2] on the vacuum", &lhs, &vacuum().scale(&value), inputs);
        let via_l0 = &virasoro_l(cfg, 0, &vacuum()).scale(&Scalar::from(4))
            + &vacuum().scale(&(&Scalar::ratio(6, 12) * &cfg.central_charge()));
        t.check_eq("[L2,L-2] through L0", &lhs, &via_l0, inputs);
    }));
    out.merge(trials(seed, n, |rng, _, t| {
        let cfg = FockConfig::new(sample::scalar(rng), sample::scalar(rng));
        let (p, q) = (rng.gen_range(-b..=b), rng.gen_range(-b..=b));
        let v = FockVector::basis(sample::monomial::<CreationVar>(rng, 6));
        residual_check(t, &cfg, p, q, &v);
    }));
    out
}

fn hopf_axioms(bound: u64, seed: u64, n: u64) -> Tally {
    let monos: Vec<HopfElement> = monomials_up_to::<LadderVar>(bound)
        .into_iter()
        .map(HopfElement::basis)
        .collect();
    // every tensor leg of a coproduct below the bound is itself below it
    let s_table: BTreeMap<Monomial, HopfElement> = monos
        .iter()
        .map(|x| (x.keys().next().expect("basis element").clone(), antipode(x)))
        .collect();
    let mut out = sweep(&monos, |x, t| {
        let inputs = || json!({ "x": x.to_string() });
        let d = coproduct(x);
        t.holds(
            "coassociativity",
            coproduct_left_iterated(x) == coproduct_right_iterated(x),
            inputs,
            || d.to_string(),
        );
        t.check_eq("cocommutativity", &swap(&d), &d, inputs);
        let left: HopfElement = d
            .iter()
            .map(|(Tensor(a, b), c)| (b.clone(), c * &counit(&HopfElement::basis(a.clone()))))
            .collect();
        let right: HopfElement = d
            .iter()
            .map(|(Tensor(a, b), c)| (a.clone(), c * &counit(&HopfElement::basis(b.clone()))))
            .collect();
        t.check_eq("left counit", &left, x, inputs);
        t.check_eq("right counit", &right, x, inputs);
        let s_id = d.iter().fold(HopfElement::zero(), |acc, (Tensor(a, b), c)| {
            &acc + &product(&s_table[a], &HopfElement::basis(b.clone())).scale(c)
        });
        t.check_eq("antipode", &s_id, &one().scale(&counit(x)), inputs);
    });
    let ms: Vec<u64> = (0..=bound).collect();
    out.merge(sweep(&ms, |&m, t| {
        let inputs = || json!({ "m": m });
        if m >= 1 {
            t.check_eq("D3 = S", &d3(m), &antipode(&gamma(m)), inputs);
        }
        t.check_eq("D1 = m o Delta", &d1(m), &multiply(&coproduct(&gamma(m))), inputs);
    }));
    let mut fixed = Tally::default();
    let s2 = &hopf_monomial(vec![1, 1]) - &gamma(2);
    let s3 = &(&hopf_monomial(vec![1, 2]).scale(&Scalar::from(2)) - &gamma(3)) - &hopf_monomial(vec![1, 1, 1]);
    fixed.check_eq("S(G2)", &antipode(&gamma(2)), &s2, || json!({ "m": 2 }));
    fixed.check_eq("S(G3)", &antipode(&gamma(3)), &s3, || json!({ "m": 3 }));
    out.merge(fixed);
    out.merge(trials(seed, n, |rng, _, t| {
        let (u, v) = (
            HopfElement::basis(sample::hopf_monomial(rng, 8)),
            HopfElement::basis(sample::hopf_monomial(rng, 8)),
        );
        let inputs = || json!({ "u": u.to_string(), "v": v.to_string() });
        let lhs = grading_y(&product(&u, &v));
        let rhs = &product(&grading_y(&u), &v) + &product(&u, &grading_y(&v));
        t.check_eq("Y is a derivation", &lhs, &rhs, inputs);
        let (f, g) = (sample::character(rng, 8), sample::character(rng, 8));
        let x = HopfElement::basis(sample::hopf_monomial(rng, 8));
        let paths = char_convolve(&f, &g, &x);
        t.holds(
            "convolution paths agree",
            paths.is_ok(),
            || json!({ "f": format!("{f:?}"), "g": format!("{g:?}"), "x": x.to_string() }),
            || format!("{paths:?}"),
        );
        let (a, b) = (
            HopfElement::basis(sample::hopf_monomial(rng, 5)),
            HopfElement::basis(sample::hopf_monomial(rng, 5)),
        );
        t.check_eq(
            "S is multiplicative",
            &antipode(&product(&a, &b)),
            &product(&antipode(&a), &antipode(&b)),
            || json!({ "u": a.to_string(), "v": b.to_string() }),
        );
    }));
    out
}

fn sy_equivalence(bound: u64, seed: u64, n: u64) -> Tally {
    let ms: Vec<u64> = (0..=bound).collect();
    let mut out = sweep(&ms, |&m, t| {
        let inputs = || json!({ "m": m });
        t.check_eq("S*Y formula = convolution", &s_star_y(m), &s_star_y_direct(m), inputs);
        let checked = s_star_y_checked(m);
        t.holds("checked evaluation", checked.is_ok(), inputs, || format!("{checked:?}"));
    });
    let mut fixed = Tally::default();
    fixed.check_eq("S*Y(G1)", &s_star_y(1), &gamma(1), || json!({ "m": 1 }));
    let expected = &gamma(2).scale(&Scalar::from(2)) - &hopf_monomial(vec![1, 1]);
    fixed.check_eq("S*Y(G2)", &s_star_y(2), &expected, || json!({ "m": 2 }));
    out.merge(fixed);
    let tables: Vec<(HopfElement, HopfElement)> = ms.iter().map(|&m| (s_star_y(m), s_star_y_direct(m))).collect();
    out.merge(trials(seed, n, |rng, _, t| {
        let m = rng.gen_range(0..=bound);
        let chi = sample::character(rng, bound.max(1));
        let (formula, direct) = &tables[m as usize];
        t.check_eq(
            "characters agree on S*Y",
            &chi.eval(formula),
            &chi.eval(direct),
            || json!({ "m": m, "chi": format!("{chi:?}") }),
        );
    }));
    out
}

fn lambda_labels(max_level: i64) -> Vec<LambdaBasis> {
    (0..=max_level)
        .flat_map(|l| [LambdaBasis::new(Parity::Even, l), LambdaBasis::new(Parity::Odd, l)])
        .flatten()
        .collect()
}

fn lambda_diagrams(bound: u64, seed: u64, n: u64) -> Tally {
    let idx: Vec<u64> = (0..=bound).collect();
    let mut out = sweep(&pairs(&idx), |&(m, k), t| {
        let mut gens = vec![GenIndex::new(2 * m, 0), GenIndex::new(0, 2 * m)];
        if m >= 1 {
            gens.extend([GenIndex::new(2 * m - 1, 0), GenIndex::new(0, 2 * m - 1)]);
        }
        for g in gens {
            let result = diagram_check(g, k);
            t.holds(
                "diagram commutes",
                result == Ok(true),
                || json!({ "g": g.to_string(), "k": k }),
                || format!("{result:?}"),
            );
        }
    });
    let top = 2 * bound;
    let vs: Vec<u64> = (0..=top).collect();
    out.merge(sweep(&pairs(&vs), |&(u, v), t| {
        t.check_eq(
            "phi is multiplicative",
            &phi_iso(&star(&t_vec(u), &t_vec(v))),
            &bullet_product(&phi_iso(&t_vec(u)), &phi_iso(&t_vec(v))),
            || json!({ "u": u, "v": v }),
        );
    }));
    let labels = lambda_labels(top as i64);
    out.merge(sweep(&labels, |&a, t| {
        t.check_eq(
            "bullet unit",
            &bullet(LambdaBasis::unit(), a),
            &a,
            || json!({ "a": a.to_string() }),
        );
        for &b in &labels {
            t.check_eq(
                "bullet is commutative",
                &bullet(a, b),
                &bullet(b, a),
                || json!({ "a": a.to_string(), "b": b.to_string() }),
            );
        }
    }));
    out.merge(trials(seed, n, |rng, _, t| {
        let b = bound as i64;
        let w = sample::lambda_element(rng, top as i64);
        let side = if rng.gen_bool(0.5) {
            HeisLabel::plus
        } else {
            HeisLabel::minus
        };
        let (p, q) = (rng.gen_range(-b..=b), rng.gen_range(-b..=b));
        let pq = lambda_act(side(p), &lambda_act(side(q), &w));
        let qp = lambda_act(side(q), &lambda_act(side(p), &w));
        t.check_eq(
            "lambda operators commute",
            &pq,
            &qp,
            || json!({ "a": side(p).to_string(), "b": side(q).to_string(), "w": w.to_string() }),
        );
        let (x, y, z) = (
            sample::lambda_element(rng, b),
            sample::lambda_element(rng, b),
            sample::lambda_element(rng, b),
        );
        t.check_eq(
            "bullet is associative",
            &bullet_product(&bullet_product(&x, &y), &z),
            &bullet_product(&x, &bullet_product(&y, &z)),
            || json!({ "x": x.to_string(), "y": y.to_string(), "z": z.to_string() }),
        );
    }));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick(suite: Suite, bound: u64) -> SuiteReport {
        let params = Params {
            trials: 20,
            seed: 3,
            max_index: Some(bound),
        };
        run_suite(suite, &params).remove(0)
    }

    #[test]
    fn every_suite_passes_at_small_bounds() {
        for s in Suite::EACH {
            let r = quick(s, 3);
            assert!(r.pass, "{}: {:?}", r.suite, r.failures);
            assert!(r.checks > 0);
            assert_eq!(r.failures.is_empty(), r.pass);
        }
    }

    #[test]
    fn all_expands_in_order() {
        let params = Params {
            trials: 2,
            seed: 0,
            max_index: Some(2),
        };
        let names: Vec<String> = run_suite(Suite::All, &params).into_iter().map(|r| r.suite).collect();
        let expected: Vec<String> = Suite::EACH.iter().map(|s| s.name().to_string()).collect();
        assert_eq!(names, expected);
    }

    #[test]
    fn reports_are_deterministic() {
        let mut a = quick(Suite::Jacobi, 4);
        let mut b = quick(Suite::Jacobi, 4);
        a.elapsed_ms = 0;
        b.elapsed_ms = 0;
        assert_eq!(a.to_json_line(), b.to_json_line());
    }
}
