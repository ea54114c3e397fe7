use std::time::Instant;

use qgalilei_core::induction::{
    casimir_action, casimir_element, check_casimir, check_classical_limit, check_equivalence_alpha, check_equivariance,
    check_relations_on_module, check_star_consistency, classical_limit, induced_action, induced_generator,
    reduced_casimir_action, star, CarrierElement, Character,
};
use qgalilei_core::{preset, NCPolynomial, Preset, Report, Scalar, Var, VarSet, WaveFunction};

fn xt(p: u32, q: u32) -> WaveFunction {
    WaveFunction::from_powers(VarSet::XT, &[(Var::X, p), (Var::T, q)], Scalar::one()).unwrap()
}

fn assert_passed(r: &Report) {
    assert!(r.passed(), "{:?}", r.first_failure());
}

#[test]
fn k_on_x_cubed_with_alpha_zero() {
    let r = induced_generator(&Character::reduced(), "K", &xt(3, 0)).unwrap();
    assert_eq!(r.to_string(), "-beta*x^4 - 3*x^2*t - a^2*t");
}

#[test]
fn classical_limit_examples() {
    let ch = Character::reduced();
    let k = classical_limit(&induced_generator(&ch, "K", &xt(3, 0)).unwrap()).unwrap();
    assert_eq!(k.to_string(), "-beta*x^4 - 3*x^2*t");
    let c = classical_limit(&reduced_casimir_action(&ch, &xt(4, 0)).unwrap()).unwrap();
    assert_eq!(c.to_string(), "-6*beta^-1*x^2");
}

#[test]
fn relations_hold_to_degree_eight() {
    let t = Instant::now();
    for ch in [Character::symbolic(), Character::reduced()] {
        let r = check_relations_on_module(&ch, 8);
        assert_passed(&r);
        assert!(r.check("relations.PK").unwrap().cases >= 45);
    }
    assert!(t.elapsed().as_secs() < 60);
}

#[test]
fn casimir_agrees_and_is_central() {
    assert_passed(&check_casimir(&Character::reduced(), 6));
    assert_passed(&check_casimir(&Character::symbolic(), 4));
}

#[test]
fn casimir_element_acts_like_closed_form() {
    let ch = Character::symbolic();
    let c = casimir_element();
    for (p, q) in [(0, 0), (2, 1), (5, 1), (3, 3)] {
        assert_eq!(induced_action(&ch, &c, &xt(p, q)).unwrap(), casimir_action(&ch, &xt(p, q)).unwrap());
    }
}

#[test]
fn classical_limit_to_degree_six() {
    assert_passed(&check_classical_limit(6));
}

#[test]
fn star_is_consistent() {
    assert_passed(&check_star_consistency());
}

#[test]
fn star_preserves_casimir() {
    let c = casimir_element();
    assert_eq!(star(&c).unwrap(), c);
}

#[test]
fn alpha_is_an_equivalence() {
    assert_passed(&check_equivalence_alpha(6));
}

#[test]
fn equivariance_in_the_full_algebra() {
    let r = check_equivariance(&Character::symbolic(), 6);
    assert_passed(&r);
    assert!(r.check("equivariance.restriction").unwrap().note.as_deref().unwrap().contains("truncation order 6"));
}

#[test]
fn carrier_elements_compose() {
    let p = preset(Preset::UqKmph);
    let ch = Character::symbolic();
    let f = CarrierElement::new(ch.clone(), xt(2, 1)).unwrap();
    let kp = NCPolynomial::from_word(&p, &[("K", 1), ("P", 1)], Scalar::one()).unwrap();
    let once = f.act(&kp).unwrap();
    let twice = f.act(&NCPolynomial::gen(&p, "P")).unwrap().act(&NCPolynomial::gen(&p, "K")).unwrap();
    assert_eq!(once, twice);
}

#[test]
fn wrong_presentation_is_rejected() {
    let p = preset(Preset::UqIphn);
    let n = NCPolynomial::gen(&p, "N");
    assert!(induced_action(&Character::reduced(), &n, &xt(1, 0)).is_err());
    assert!(star(&n).is_err());
    assert!(CarrierElement::new(Character::reduced(), WaveFunction::var(VarSet::ALL, Var::V).unwrap()).is_err());
}
