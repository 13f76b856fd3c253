use ladder_core::hopf::{
    antipode, char_convolve, coproduct, coproduct_left_iterated, coproduct_right_iterated, counit, d1, d3, gamma,
    grading_y, multiply, one, product, s_star_y, s_star_y_direct, swap, Character, HopfElement, LadderVar, Tensor,
};
use ladder_core::multiset::{monomials_up_to, Multiset};
use ladder_core::Scalar;
use proptest::prelude::*;

fn basis_monomials(deg: u64) -> Vec<HopfElement> {
    monomials_up_to::<LadderVar>(deg)
        .into_iter()
        .map(HopfElement::basis)
        .collect()
}

#[test]
fn coassociative_and_cocommutative() {
    for x in basis_monomials(10) {
        assert!(coproduct_left_iterated(&x) == coproduct_right_iterated(&x), "{x}");
        let d = coproduct(&x);
        assert_eq!(swap(&d), d, "{x}");
    }
}

#[test]
fn counit_axioms() {
    for x in basis_monomials(10) {
        let d = coproduct(&x);
        let left: HopfElement = d
            .iter()
            .map(|(Tensor(a, b), c)| (b.clone(), c * &counit(&HopfElement::basis(a.clone()))))
            .collect();
        let right: HopfElement = d
            .iter()
            .map(|(Tensor(a, b), c)| (a.clone(), c * &counit(&HopfElement::basis(b.clone()))))
            .collect();
        assert_eq!(left, x);
        assert_eq!(right, x);
    }
}

#[test]
fn antipode_axiom() {
    for x in basis_monomials(12) {
        let d = coproduct(&x);
        let s_id: HopfElement = d
            .iter()
            .map(|(Tensor(a, b), c)| {
                product(
                    &antipode(&HopfElement::basis(a.clone())),
                    &HopfElement::basis(b.clone()),
                )
                .scale(c)
            })
            .fold(HopfElement::zero(), |acc, v| &acc + &v);
        assert_eq!(s_id, one().scale(&counit(&x)), "{x}");
    }
}

#[test]
fn d3_reproduces_the_antipode() {
    for m in 1..=12 {
        assert_eq!(d3(m), antipode(&gamma(m)), "m = {m}");
    }
}

#[test]
fn d1_is_multiplied_coproduct() {
    for m in 0..=12 {
        assert_eq!(d1(m), multiply(&coproduct(&gamma(m))));
    }
}

#[test]
fn s_star_y_two_routes() {
    for m in 0..=12 {
        assert_eq!(s_star_y(m), s_star_y_direct(m), "m = {m}");
    }
}

fn monomial_of_degree_at_most(deg: u64) -> impl Strategy<Value = Multiset<LadderVar>> {
    let all = monomials_up_to::<LadderVar>(deg);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

fn character() -> impl Strategy<Value = Character> {
    let values = [Scalar::from(-1), Scalar::zero(), Scalar::one(), Scalar::ratio(1, 2)];
    prop::collection::vec(0usize..4, 8).prop_map(move |idx| {
        Character::new(
            idx.into_iter()
                .enumerate()
                .map(|(k, i)| (k as u64 + 1, values[i].clone())),
        )
    })
}

proptest! {
    #[test]
    fn grading_is_a_derivation(u in monomial_of_degree_at_most(8), v in monomial_of_degree_at_most(8)) {
        let (u, v) = (HopfElement::basis(u), HopfElement::basis(v));
        let lhs = grading_y(&product(&u, &v));
        let rhs = &product(&grading_y(&u), &v) + &product(&u, &grading_y(&v));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn convolution_paths_agree(f in character(), g in character(), x in monomial_of_degree_at_most(8)) {
        let x = HopfElement::basis(x);
        prop_assert!(char_convolve(&f, &g, &x).is_ok());
    }

    #[test]
    fn antipode_is_multiplicative(u in monomial_of_degree_at_most(6), v in monomial_of_degree_at_most(6)) {
        let (u, v) = (HopfElement::basis(u), HopfElement::basis(v));
        prop_assert_eq!(antipode(&product(&u, &v)), product(&antipode(&u), &antipode(&v)));
    }
}
