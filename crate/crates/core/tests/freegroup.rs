mod common;

use common::poly;
use num_bigint::BigInt;
use proptest::prelude::*;
use rplink_core::freegroup::{fox_derivative, fox_derivative_projected, FreeGroupError, FreeRingElem, Letter};
use rplink_core::homology::abelian_invariants;
use rplink_core::invariants::{alexander_fox, gcd_of_minors};
use rplink_core::ring::{GroupRingElem, HElement};
use rplink_core::{FreeWord, Presentation, SignedMonomial};

fn word(s: &[(usize, i64)]) -> FreeWord {
    FreeWord::from_powers(s)
}

fn names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("x{i}")).collect()
}

/// ⟨b1, c | c⁻¹ b1 c³ b1⟩ with b1 ↦ t and c ↦ u t⁻¹.
fn knot_2_1() -> (Presentation, Vec<HElement>) {
    let p = Presentation::new(vec!["b1".into(), "c".into()], vec![word(&[(1, -1), (0, 1), (1, 3), (0, 1)])]).unwrap();
    let images = vec![HElement { exponents: vec![1], torsion: false }, HElement { exponents: vec![-1], torsion: true }];
    (p, images)
}

#[test]
fn words_are_freely_reduced() {
    let w = word(&[(0, 2), (1, 1), (1, -1), (0, -1)]);
    assert_eq!(w, word(&[(0, 1)]));
    assert!(w.concat(&w.inverse()).is_empty());
    assert_eq!(word(&[(1, -1), (0, 2), (1, 1)]).cyclically_reduced(), word(&[(0, 2)]));
    assert_eq!(word(&[(0, 3), (1, -2)]).exponent_sum(1), -2);
}

#[test]
fn fox_basic_rules() {
    let x = FreeWord::generator(0);
    assert_eq!(fox_derivative(&x, 0, 1).unwrap(), FreeRingElem::from_word(FreeWord::empty()));
    let mut want = FreeRingElem::zero();
    want.add_term(x.inverse(), BigInt::from(-1));
    assert_eq!(fox_derivative(&x.inverse(), 0, 1).unwrap(), want);
    assert!(fox_derivative(&x, 0, 2).is_ok());
    assert!(fox_derivative(&FreeWord::generator(1), 0, 2).unwrap().is_zero());
    assert_eq!(fox_derivative(&x, 3, 2).unwrap_err(), FreeGroupError::GeneratorOutOfRange { index: 3, count: 2 });
}

#[test]
fn twisted_derivatives_of_2_1() {
    let (p, images) = knot_2_1();
    let phi = [SignedMonomial::new(1, vec![1])];
    let r = &p.relators()[0];
    let dc = fox_derivative_projected(r, 1, &images, true).substitute(&phi, 1, -1);
    assert!(dc.equal_up_to_unit(&poly("t^2 - 2*t + 1")), "{dc}");
    let db = fox_derivative_projected(r, 0, &images, true).substitute(&phi, 1, -1);
    assert!(db.equal_up_to_unit(&poly("t^2 - 1")), "{db}");
}

#[test]
fn projection_is_a_ring_map() {
    let (_, images) = knot_2_1();
    let c_inv = word(&[(1, -1)]);
    let mut e = FreeRingElem::from_word(c_inv.clone());
    e.add_term(c_inv.concat(&word(&[(0, 1), (1, 3)])), BigInt::from(1));
    let phi = [SignedMonomial::new(1, vec![1])];
    assert_eq!(e.project(&images, true).substitute(&phi, 1, -1), poly("t^-1 - t"));
    let one = FreeRingElem::from_word(FreeWord::empty());
    assert_eq!(one.project(&images, true), GroupRingElem::one(1, true));
}

#[test]
fn polynomials_of_the_one_relator_form() {
    let (p, images) = knot_2_1();
    let fox = alexander_fox(&p, &images, true).unwrap();
    for (sign, want) in [(-1, "t - 1"), (1, "t^2 + 1")] {
        let m = fox.specialize(|e| e.substitute(&[SignedMonomial::new(1, vec![1])], 1, sign));
        assert_eq!(gcd_of_minors(&m, 2, 1).to_string(), want);
    }
}

#[test]
fn tietze_examples() {
    let p = Presentation::new(names(2), vec![word(&[(0, 1), (1, -1)]), word(&[(0, 3)])]).unwrap();
    let q = p.tietze_eliminate(0, 0).unwrap();
    assert_eq!(q.num_generators(), 1);
    assert_eq!(q.relators(), &[word(&[(0, 3)])]);
    assert_eq!(q.to_string(), "<x1 | x1^3>");
    let single = Presentation::new(names(1), vec![]).unwrap();
    assert_eq!(single.tietze_eliminate(0, 0).unwrap_err(), FreeGroupError::RelatorOutOfRange { index: 0, count: 0 });
    let p = Presentation::new(names(2), vec![word(&[(0, 2), (1, 1)])]).unwrap();
    assert_eq!(p.tietze_eliminate(0, 0).unwrap_err(), FreeGroupError::NotDefiningRelator { generator: 0, relator: 0 });
}

#[test]
fn printer() {
    let p = Presentation::new(vec!["a1".into(), "b1".into(), "c".into()], vec![word(&[(2, -1), (1, 1), (2, 3), (1, 1)])]).unwrap();
    assert_eq!(p.to_string(), "<a1,b1,c | c^-1 b1 c^3 b1>");
    assert_eq!(Presentation::new(vec!["c".into()], vec![]).unwrap().to_string(), "<c |>");
}

fn arb_word(n: usize, len: usize) -> impl Strategy<Value = FreeWord> {
    prop::collection::vec((0..n, prop_oneof![Just(1i8), Just(-1i8)]), 0..len)
        .prop_map(|ls| FreeWord::from_letters(ls.into_iter().map(|(generator, exponent)| Letter { generator, exponent })))
}

fn arb_images(n: usize, v: usize) -> impl Strategy<Value = Vec<HElement>> {
    prop::collection::vec(
        (prop::collection::vec(-2i64..=2, v), any::<bool>()).prop_map(|(exponents, torsion)| HElement { exponents, torsion }),
        n,
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn product_rule(u in arb_word(3, 8), w in arb_word(3, 8), j in 0usize..3) {
        let lhs = fox_derivative(&u.concat(&w), j, 3).unwrap();
        let rhs = fox_derivative(&u, j, 3).unwrap().add(&fox_derivative(&w, j, 3).unwrap().left_mul(&u));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn inverse_cancels(u in arb_word(3, 12)) {
        prop_assert!(u.concat(&u.inverse()).is_empty());
        prop_assert!(u.inverse().concat(&u).is_empty());
    }

    #[test]
    fn projected_derivative_matches_free_derivative(u in arb_word(3, 10), images in arb_images(3, 2), j in 0usize..3) {
        let free = fox_derivative(&u, j, 3).unwrap().project(&images, true);
        prop_assert_eq!(fox_derivative_projected(&u, j, &images, true), free);
    }

    #[test]
    fn fundamental_identity(u in arb_word(3, 10), images in arb_images(3, 2)) {
        // Σ_j pr(∂u/∂x_j)(pr(x_j) − 1) = pr(u) − 1 for every word
        let one = GroupRingElem::one(2, true);
        let mut sum = GroupRingElem::zero(2, true);
        for (j, h) in images.iter().enumerate() {
            let d = fox_derivative_projected(&u, j, &images, true);
            sum = &sum + &(&d * &(&GroupRingElem::from_element(h.clone(), true) - &one));
        }
        let want = &GroupRingElem::from_element(u.image(&images), true) - &one;
        prop_assert_eq!(sum, want);
    }

    #[test]
    fn tietze_preserves_the_abelianization(
        rels in prop::collection::vec(arb_word(4, 6), 1..4),
        solution in arb_word(3, 5),
    ) {
        // x3 = solution(x0, x1, x2) is a defining relator for x3
        let defining = FreeWord::generator(3).inverse().concat(&solution);
        let mut relators = rels;
        relators.push(defining);
        let p = Presentation::new(names(4), relators).unwrap();
        let r = p.relators().len() - 1;
        let q = p.tietze_eliminate(3, r).unwrap();
        prop_assert_eq!(abelian_invariants(&p), abelian_invariants(&q));
        prop_assert_eq!(q.num_generators(), 3);
    }
}
