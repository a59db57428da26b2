mod common;

use common::checks::*;
use common::*;
use proptest::prelude::*;
use rplink_core::diagram::{parse_s3d, SkeinCase};
use rplink_core::invariants::*;
use rplink_core::ring::TorsionFn;
use rplink_core::{NablaFn, ProjectiveDiagram, SignedMonomial, TorsionClass};

fn nab(s: &str) -> NablaFn {
    NablaFn::new(poly(s), 0)
}

#[test]
fn knot_2_1() {
    let r = full_report(&load("2_1")).unwrap();
    assert_eq!(r.torsion_class, TorsionClass::Nontorsion);
    assert_eq!((r.v, r.deltas.clone()), (1, vec![-2]));
    assert_eq!(r.delta_phi.to_string(), "t - 1");
    assert_eq!(r.delta.to_string(), "t^2 + 1");
    assert_eq!(r.tau, TorsionFn::new(poly("t - 1"), 0));
    assert_eq!(r.nabla.to_string(), "t - t^-1");
    assert_eq!(r.r, -1);
}

#[test]
fn affine_links_twice_the_classical_polynomial() {
    let r = full_report(&load("affine_unknot")).unwrap();
    assert!(r.delta_phi.is_zero());
    assert_eq!(r.delta.to_string(), "2");
    assert!(r.tau.is_zero() && r.nabla.is_zero());
    let r = full_report(&load("affine_trefoil")).unwrap();
    assert!(r.delta_phi.is_zero());
    assert_eq!(r.delta.to_string(), "2*t^2 - 2*t + 2");
}

#[test]
fn projective_line() {
    let r = full_report(&load("line_1_1")).unwrap();
    assert_eq!(r.torsion_class, TorsionClass::Torsion);
    assert_eq!((r.delta_phi.to_string(), r.delta.to_string()), ("1".into(), "1".into()));
    assert_eq!(r.tau.to_string(), "(1) / (t - 1)");
    assert_eq!(r.nabla.to_string(), "(1) / (t - t^-1)");
    assert_eq!(r.r, 1);
}

#[test]
fn twisted_equals_untwisted_for_torsion_links() {
    for (name, d) in corpus() {
        if d.torsion_class() == TorsionClass::Torsion {
            assert_eq!(twisted_alexander(&d).unwrap(), alexander(&d).unwrap(), "{name}");
        }
    }
}

#[test]
fn s3_polynomials() {
    let trefoil = parse_s3d("crossing 1 +\ncrossing 2 +\ncrossing 3 +\ncomponent X1o X2u X3o X1u X2o X3u\n").unwrap();
    assert_eq!(s3_alexander(&trefoil).to_string(), "t^2 - t + 1");
    let unknot = parse_s3d("component\n").unwrap();
    assert!(s3_alexander(&unknot).is_one());
    let lift = load("2_1").lift().unwrap();
    assert_eq!(s3_alexander(&lift.diagram).to_string(), "t1*t2 + 1");
    for omit in 0..4 {
        assert_eq!(s3_alexander_with(&lift.diagram, Some(omit)).to_string(), "t1*t2 + 1");
    }
}

#[test]
fn cover_examples() {
    let c = verify_cover(&load("2_1")).unwrap();
    assert!(c.holds);
    assert_eq!(c.lift_alexander.to_string(), "t1*t2 + 1");
    assert_eq!(c.lhs, poly("t^3 - t^2 + t - 1"));
    for name in ["affine_unknot", "affine_trefoil", "unknot_wall_twice"] {
        let c = verify_cover(&load(name)).unwrap();
        assert!(c.holds && c.lhs.is_zero() && c.rhs.is_zero(), "{name}");
    }
    assert!(verify_cover(&load("line_1_1")).is_err());
}

fn skein_values(d: &ProjectiveDiagram, id: u32) -> SkeinReport {
    verify_skein(&d.skein_triple(id).unwrap()).unwrap()
}

#[test]
fn skein_3_1() {
    let r = skein_values(&load("3_1"), 3);
    assert_eq!(r.case, SkeinCase::Case2);
    assert!(r.nabla[0].eq_up_to_sign(&nab("t - t^-1")));
    assert!(r.nabla[1].eq_up_to_sign(&nab("t - t^-1")));
    assert!(r.nabla[2].is_zero());
    assert!(r.refined_holds && r.unrefined_holds);
}

#[test]
fn skein_5_6() {
    let plus = load("5_6").flip_crossing(1).unwrap();
    let r = skein_values(&plus, 1);
    assert_eq!(r.case, SkeinCase::Case2);
    assert!(r.nabla[0].eq_up_to_sign(&nab("t - t^-1")));
    assert!(r.nabla[1].eq_up_to_sign(&nab("t^3 - 2*t + 2*t^-1 - t^-3")));
    assert!(r.nabla[2].eq_up_to_sign(&nab("t^2 - 2 + t^-2")));
    assert!(r.refined_holds && r.unrefined_holds);
}

#[test]
fn skein_4_2_2_both_crossings() {
    let d = load("4_2_2");
    // the link is L+ at the positive crossing and L- at the negative one
    let first = skein_values(&d, 1);
    let second = skein_values(&d.flip_crossing(3).unwrap(), 3);
    for (r, big) in [(first, 0), (second, 1)] {
        assert_eq!(r.case, SkeinCase::Case3);
        assert!(r.nabla[big].eq_up_to_sign(&nab("t^2 - 2 + t^-2")));
        assert!(r.nabla[1 - big].is_zero());
        assert!(r.nabla[2].eq_up_to_sign(&nab("t - t^-1")));
        assert!(r.refined_holds && r.unrefined_holds);
    }
}

#[test]
fn incompatible_triple_is_reported_not_checked() {
    let r = skein_values(&load("two_lines"), 1);
    assert!(!r.compatible && !r.refined_holds && r.refined_witness.is_none());
}

#[test]
fn all_affine_triple_holds_trivially() {
    let d = load("affine_trefoil");
    let r = skein_values(&d, 1);
    assert!(r.nabla.iter().all(|n| n.is_zero()));
    assert!(r.refined_holds && r.unrefined_holds);
}

#[test]
fn torsion_value_of_nontorsion_knots() {
    for (name, d) in corpus() {
        if d.torsion_class() == TorsionClass::Nontorsion && d.num_components() == 1 {
            let at_one = alexander(&d).unwrap().substitute(&[SignedMonomial::new(1, vec![0])], 1);
            assert_eq!(at_one.coeff(&[0]).magnitude().to_string(), "2", "{name}");
        }
    }
}

#[test]
fn corpus_properties() {
    for (_, d) in corpus() {
        check_fox_identity(&d).unwrap();
        check_chain_condition(&d).unwrap();
        check_tietze_invariance(&d).unwrap();
        check_omission_invariance(&d).unwrap();
        check_symmetry(&d).unwrap();
        check_nabla_representatives(&d, 3, true).unwrap();
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn random_fox_identity_and_chain_condition(d in arb_diagram(3)) {
        check_fox_identity(&d)?;
        check_chain_condition(&d)?;
    }

    #[test]
    fn random_presentation_invariance(d in arb_diagram(3)) {
        check_tietze_invariance(&d)?;
        check_omission_invariance(&d)?;
    }

    #[test]
    fn random_symmetry_and_nabla(d in arb_diagram(3), m in -4i64..=4, negate in any::<bool>()) {
        check_symmetry(&d)?;
        check_nabla_representatives(&d, m, negate)?;
    }

    #[test]
    fn random_cover_formula(d in arb_diagram(3)) {
        prop_assume!(d.torsion_class() == TorsionClass::Nontorsion);
        let c = verify_cover(&d).unwrap();
        prop_assert!(c.holds, "{:?}\n{}", c, d);
    }

    #[test]
    fn random_nontorsion_skein(d in arb_diagram(3)) {
        prop_assume!(d.torsion_class() == TorsionClass::Nontorsion);
        for c in d.crossings() {
            let plus = if c.sign == rplink_core::Sign::Positive { d.clone() } else { d.flip_crossing(c.id).unwrap() };
            let tr = plus.skein_triple(c.id).unwrap();
            if tr.case == SkeinCase::Incompatible {
                continue;
            }
            let r = verify_skein(&tr).unwrap();
            prop_assert!(r.unrefined_holds && r.refined_holds, "crossing {}: {:?}\n{}", c.id, r, d);
        }
    }

    #[test]
    fn random_nontorsion_knots_have_torsion_value_two(d in arb_diagram(3)) {
        prop_assume!(d.torsion_class() == TorsionClass::Nontorsion && d.num_components() == 1);
        let at_one = alexander(&d).unwrap().substitute(&[SignedMonomial::new(1, vec![0])], 1);
        prop_assert_eq!(at_one.coeff(&[0]).magnitude().to_string(), "2");
    }
}
