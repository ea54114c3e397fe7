use qgalilei_core::hopf::{
    check_hopf_axioms, check_pairing_bilinear, check_pairing_diagonal, hopf_pairing, hopf_suite, PairingEngine,
};
use qgalilei_core::{preset, AntipodeVariant, HopfData, NCPolynomial, PairingError, Preset, Scalar, Status, TensorElement};

fn word(p: Preset, w: &[(&str, i32)]) -> NCPolynomial {
    NCPolynomial::from_word(&preset(p), w, Scalar::one()).unwrap()
}

#[test]
fn coproduct_examples() {
    let hd = HopfData::uq_kmph();
    let p = hd.presentation().clone();
    let one = NCPolynomial::one(&p);
    let pp = NCPolynomial::gen(&p, "P");
    let d = hd.coproduct(&(&pp * &pp)).unwrap();
    let expected = TensorElement::pure(&(&pp * &pp), &one)
        .checked_add(&TensorElement::pure(&pp, &pp).scale(&Scalar::int(2)))
        .unwrap()
        .checked_add(&TensorElement::pure(&one, &(&pp * &pp)))
        .unwrap();
    assert_eq!(d, expected);

    let k = NCPolynomial::gen(&p, "K");
    let dk = hd.coproduct(&k).unwrap();
    assert_eq!(dk.to_string(), "K ⊗ E^-1 + E ⊗ K");

    let fq = HopfData::for_preset(Preset::Fq);
    let t = NCPolynomial::gen(fq.presentation(), "t");
    assert_eq!(fq.coproduct(&t).unwrap().to_string(), "t ⊗ 1 + 1 ⊗ t");
}

#[test]
fn counit_and_antipode_examples() {
    let hd = HopfData::uq_kmph();
    let p = hd.presentation().clone();
    let km = word(Preset::UqKmph, &[("K", 1), ("M", 1)]);
    assert!(hd.counit(&km).unwrap().is_zero());
    let x = &NCPolynomial::one(&p) + &NCPolynomial::gen(&p, "M").scale(&(Scalar::int(2) * Scalar::a()));
    assert_eq!(hd.counit(&x).unwrap(), Scalar::one());
    assert_eq!(hd.counit(&NCPolynomial::grouplike_power(&p, -3)).unwrap(), Scalar::one());

    let k = NCPolynomial::gen(&p, "K");
    assert_eq!(hd.antipode(&k).unwrap().to_string(), "-K - a*M");
    let pk = word(Preset::UqKmph, &[("P", 1), ("K", 1)]);
    // S(PK) = S(K)S(P) = K·P + a·M·P
    let expected = &word(Preset::UqKmph, &[("K", 1), ("P", 1)])
        + &word(Preset::UqKmph, &[("M", 1), ("P", 1)]).scale(&Scalar::a());
    assert_eq!(hd.antipode(&pk).unwrap(), expected);
}

#[test]
fn antipode_axiom_on_k_by_hand() {
    // (−K − aM)E⁻¹ + E⁻¹K = 0
    let hd = HopfData::uq_kmph();
    let p = hd.presentation().clone();
    let k = NCPolynomial::gen(&p, "K");
    let em = NCPolynomial::grouplike_power(&p, -1);
    let s = hd.antipode(&k).unwrap();
    assert!((&(&s * &em) + &(&em * &k)).is_zero());
}

#[test]
fn coassociativity_on_m_by_hand() {
    let hd = HopfData::uq_kmph();
    let p = hd.presentation().clone();
    let m = NCPolynomial::gen(&p, "M");
    let d = hd.coproduct(&m).unwrap();
    // both sides: M⊗E⁻¹⊗E⁻¹ + E⊗M⊗E⁻¹ + E⊗E⊗M
    let mut left = Vec::new();
    let mut right = Vec::new();
    for (l, r, c) in d.terms() {
        let dl = hd.monomial_coproduct(l).unwrap();
        for (a, b, c1) in dl.terms() {
            left.push((a.display(&p).to_string(), b.display(&p).to_string(), r.display(&p).to_string(), (c * c1).to_string()));
        }
        let dr = hd.monomial_coproduct(r).unwrap();
        for (a, b, c2) in dr.terms() {
            right.push((l.display(&p).to_string(), a.display(&p).to_string(), b.display(&p).to_string(), (c * c2).to_string()));
        }
    }
    left.sort();
    right.sort();
    assert_eq!(left, right);
    let expected: Vec<(String, String, String, String)> = vec![
        ("E".into(), "E".into(), "M".into(), "1".into()),
        ("E".into(), "M".into(), "E^-1".into(), "1".into()),
        ("M".into(), "E^-1".into(), "E^-1".into(), "1".into()),
    ];
    assert_eq!(left, expected);
}

#[test]
fn axioms_pass_at_degree_three() {
    for which in Preset::ALL {
        let r = check_hopf_axioms(&HopfData::for_preset(which), 3);
        assert!(r.passed(), "{}", r);
    }
}

#[test]
fn printed_s_mu_fails_and_corrected_passes() {
    let printed = check_hopf_axioms(&HopfData::fq(AntipodeVariant::Printed), 1);
    let c = printed.check("fq.antipode").unwrap();
    assert_eq!(c.status, Status::Fail);
    assert!(c.failures.iter().any(|f| f.element == "mu"));
    let corrected = check_hopf_axioms(&HopfData::fq(AntipodeVariant::Corrected), 1);
    assert!(corrected.passed());

    // m(S⊗id)Δμ with the printed value leaves v·x − x.
    let hd = HopfData::fq(AntipodeVariant::Printed);
    let p = hd.presentation().clone();
    let d = hd.coproduct(&NCPolynomial::gen(&p, "mu")).unwrap();
    let residual = d.contract(|l| hd.antipode(l), |r| Ok(r.clone())).unwrap();
    assert_eq!(residual.to_string(), "-v*x + x");
}

#[test]
fn suite_marks_printed_value_xfail() {
    let r = hopf_suite(2);
    assert!(r.passed(), "{}", r);
    assert_eq!(r.check("fq.antipode.printed").unwrap().status, Status::ExpectedFail);
}

#[test]
fn pairing_examples() {
    let ip = word(Preset::UqIphn, &[("I", 1), ("P", 1)]);
    let mux = word(Preset::Fq, &[("mu", 1), ("x", 1)]);
    assert_eq!(hopf_pairing(&ip, &mux).unwrap(), Scalar::one());
    let n2 = word(Preset::UqIphn, &[("N", 2)]);
    let v2 = word(Preset::Fq, &[("v", 2)]);
    assert_eq!(hopf_pairing(&n2, &v2).unwrap(), Scalar::int(2));
    let e = word(Preset::UqIphn, &[("E", 1)]);
    let x2 = word(Preset::Fq, &[("x", 2)]);
    assert_eq!(hopf_pairing(&e, &x2).unwrap(), Scalar::a() * Scalar::a());
    let i = word(Preset::UqIphn, &[("I", 1)]);
    let x = word(Preset::Fq, &[("x", 1)]);
    assert!(hopf_pairing(&i, &x).unwrap().is_zero());
    let one_u = NCPolynomial::one(&preset(Preset::UqIphn));
    let one_f = NCPolynomial::one(&preset(Preset::Fq));
    assert_eq!(hopf_pairing(&one_u, &one_f).unwrap(), Scalar::one());
}

#[test]
fn grouplike_pairing_closed_form() {
    // ⟨E^z, x^q⟩ = (z a)^q, and zero once any other variable appears
    let mut engine = PairingEngine::new(6);
    for z in -2..=2 {
        let ez = word(Preset::UqIphn, &[("E", z)]);
        for q in 0..=4 {
            let xq = word(Preset::Fq, &[("x", q)]);
            let mut expected = Scalar::one();
            for _ in 0..q {
                expected = expected * (Scalar::int(z as i64) * Scalar::a());
            }
            assert_eq!(engine.pair(&ez, &xq).unwrap(), expected);
        }
        let tx = word(Preset::Fq, &[("x", 1), ("t", 1)]);
        assert!(engine.pair(&ez, &tx).unwrap().is_zero());
    }
}

#[test]
fn pairing_degree_cap() {
    let mut engine = PairingEngine::new(2);
    let i3 = word(Preset::UqIphn, &[("I", 3)]);
    let mu = word(Preset::Fq, &[("mu", 1)]);
    assert!(matches!(engine.pair(&i3, &mu), Err(PairingError::DegreeCap { degree: 3, cap: 2 })));
}

#[test]
fn pairing_diagonal_small() {
    let r = check_pairing_diagonal(2);
    assert!(r.passed(), "{}", r);
}

#[test]
fn pairing_bilinear_and_coproduct() {
    let r = check_pairing_bilinear(20, 2, 5);
    assert!(r.passed(), "{}", r);
}
