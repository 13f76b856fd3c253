use ladder_core::heisenberg::HeisLabel;
use ladder_core::lambda::{
    bullet, bullet_product, diagram_check, lambda_act, phi_basis, phi_iso, LambdaBasis, LambdaElement, Parity,
};
use ladder_core::lie::GenIndex;
use ladder_core::standard_module::{star, t};

fn labels(max_level: i64) -> Vec<LambdaBasis> {
    let mut out = Vec::new();
    for level in 0..=max_level {
        out.extend(LambdaBasis::new(Parity::Even, level));
        out.extend(LambdaBasis::new(Parity::Odd, level));
    }
    out
}

#[test]
fn bullet_is_a_commutative_monoid() {
    let ls = labels(20);
    for &a in &ls {
        assert_eq!(bullet(LambdaBasis::unit(), a), a);
        for &b in &ls {
            assert_eq!(bullet(a, b), bullet(b, a));
        }
    }
    let small = labels(8);
    for &a in &small {
        for &b in &small {
            for &c in &small {
                assert_eq!(bullet(bullet(a, b), c), bullet(a, bullet(b, c)));
            }
        }
    }
}

#[test]
fn phi_is_an_algebra_isomorphism() {
    for u in 0..=20 {
        for v in 0..=20 {
            assert_eq!(
                phi_iso(&star(&t(u), &t(v))),
                bullet_product(&phi_iso(&t(u)), &phi_iso(&t(v)))
            );
        }
    }
    let mut seen: Vec<LambdaBasis> = (0..=40).map(phi_basis).collect();
    seen.sort();
    seen.dedup();
    assert_eq!(seen.len(), 41);
}

#[test]
fn all_four_diagrams_commute() {
    for n in 0..=10u64 {
        for k in 0..=10u64 {
            assert!(
                diagram_check(GenIndex::new(2 * n, 0), k).unwrap(),
                "Z[{},0] t[{k}]",
                2 * n
            );
            assert!(
                diagram_check(GenIndex::new(0, 2 * n), k).unwrap(),
                "Z[0,{}] t[{k}]",
                2 * n
            );
            if n >= 1 {
                assert!(diagram_check(GenIndex::new(2 * n - 1, 0), k).unwrap());
                assert!(diagram_check(GenIndex::new(0, 2 * n - 1), k).unwrap());
            }
        }
    }
}

#[test]
fn out_of_range_products_vanish() {
    for n in 1..=10 {
        let w = LambdaElement::basis(LambdaBasis::odd(n));
        assert!(lambda_act(HeisLabel::minus(n), &w).is_zero());
        let w = LambdaElement::basis(LambdaBasis::even(n - 1));
        assert!(lambda_act(HeisLabel::minus(-n), &w).is_zero());
    }
}

#[test]
fn operators_commute() {
    let inputs: Vec<LambdaElement> = labels(10).into_iter().map(LambdaElement::basis).collect();
    for make in [HeisLabel::plus as fn(i64) -> HeisLabel, HeisLabel::minus] {
        for a in -6..=6 {
            for b in -6..=6 {
                for w in &inputs {
                    let ab = lambda_act(make(a), &lambda_act(make(b), w));
                    let ba = lambda_act(make(b), &lambda_act(make(a), w));
                    assert_eq!(ab, ba);
                }
            }
        }
    }
}
