use qgalilei_core::freealg::checks::{
    check_associativity, check_grouplike_rule, check_jacobi, check_termination,
};
use qgalilei_core::freealg::{
    convert_basis, exp_truncated, normal_order, verify_flow_lemma, NCPolynomial, SeriesInS,
    TensorElement,
};
use qgalilei_core::{preset, AlgebraError, Preset, Presentation, Scalar, Symbol};

fn g(p: &std::sync::Arc<Presentation>, name: &str) -> NCPolynomial {
    NCPolynomial::gen(p, name)
}

fn e(p: &std::sync::Arc<Presentation>, z: i32) -> NCPolynomial {
    NCPolynomial::grouplike_power(p, z)
}

fn inv_2a() -> Scalar {
    Scalar::ratio(1, 2) * Scalar::power(Symbol::A, -1)
}

#[test]
fn pk_rewrites_to_kp_minus_m() {
    let p = preset(Preset::UqKmph);
    let pk = NCPolynomial::from_word(&p, &[("P", 1), ("K", 1)], Scalar::one()).unwrap();
    assert_eq!(pk, &(&g(&p, "K") * &g(&p, "P")) - &g(&p, "M"));
    assert_eq!(pk.to_string(), "K*P - M");
}

#[test]
fn fq_x_mu_and_x_v() {
    let p = preset(Preset::Fq);
    let two_a = Scalar::int(2) * Scalar::a();
    let xmu = &g(&p, "x") * &g(&p, "mu");
    assert_eq!(xmu, &(&g(&p, "mu") * &g(&p, "x")) + &g(&p, "mu").scale(&two_a));
    let xv = &g(&p, "x") * &g(&p, "v");
    assert_eq!(xv, &(&g(&p, "v") * &g(&p, "x")) + &g(&p, "v").scale(&two_a));
    assert_eq!(xv.to_string(), "v*x + 2*a*v");
}

#[test]
fn m_is_central() {
    let p = preset(Preset::UqKmph);
    assert_eq!(&g(&p, "M") * &g(&p, "K"), &g(&p, "K") * &g(&p, "M"));
    assert!(g(&p, "M").commutator(&g(&p, "H")).unwrap().is_zero());
}

#[test]
fn hk_produces_sinh() {
    let p = preset(Preset::UqKmph);
    let hk = &g(&p, "H") * &g(&p, "K");
    let expected = &(&(&g(&p, "K") * &g(&p, "H")) - &e(&p, 1).scale(&inv_2a())) + &e(&p, -1).scale(&inv_2a());
    assert_eq!(hk, expected);
    let comm = g(&p, "H").commutator(&g(&p, "K")).unwrap();
    assert_eq!(comm.to_string(), "-1/2*a^-1*E + 1/2*a^-1*E^-1");
}

#[test]
fn reordering_identity_instance() {
    // M P H K = K M P H − M² H − (1/(2a)) M P (E − E⁻¹)
    let p = preset(Preset::UqKmph);
    let lhs = NCPolynomial::from_word(&p, &[("M", 1), ("P", 1), ("H", 1), ("K", 1)], Scalar::one()).unwrap();
    let kmph = NCPolynomial::from_word(&p, &[("K", 1), ("M", 1), ("P", 1), ("H", 1)], Scalar::one()).unwrap();
    let m2h = NCPolynomial::from_word(&p, &[("M", 2), ("H", 1)], Scalar::one()).unwrap();
    let mp = &g(&p, "M") * &g(&p, "P");
    let sinh = (&e(&p, 1) - &e(&p, -1)).scale(&inv_2a());
    assert_eq!(lhs, &(&kmph - &m2h) - &(&mp * &sinh));
    assert_eq!(lhs.to_string(), "K*M*P*H - M^2*H - 1/2*a^-1*M*P*E + 1/2*a^-1*M*P*E^-1");
}

#[test]
fn general_reordering_identity() {
    // M^n P^p H^q K = K M^n P^p H^q − p M^{n+1} P^{p−1} H^q − q M^n (sinh(aP)/a) P^p H^{q−1}
    let p = preset(Preset::UqKmph);
    let sinh = (&e(&p, 1) - &e(&p, -1)).scale(&inv_2a());
    for n in 0..3 {
        for pp in 0..3 {
            for q in 0..3 {
                let w = |k: i32, n: i32, pp: i32, q: i32| {
                    NCPolynomial::from_word(&p, &[("K", k), ("M", n), ("P", pp), ("H", q)], Scalar::one()).unwrap()
                };
                let lhs = &w(0, n, pp, q) * &g(&p, "K");
                let mut rhs = w(1, n, pp, q);
                if pp > 0 {
                    rhs = &rhs - &w(0, n + 1, pp - 1, q).scale(&Scalar::int(pp as i64));
                }
                if q > 0 {
                    let t = &(&w(0, n, 0, 0) * &sinh) * &w(0, 0, pp, q - 1);
                    rhs = &rhs - &t.scale(&Scalar::int(q as i64));
                }
                assert_eq!(lhs, rhs, "n={} p={} q={}", n, pp, q);
            }
        }
    }
}

#[test]
fn multiply_examples() {
    let p = preset(Preset::UqKmph);
    assert_eq!(g(&p, "P").commutator(&g(&p, "K")).unwrap(), -g(&p, "M"));
    assert_eq!(&e(&p, 1) * &e(&p, -1), NCPolynomial::one(&p));
    let (k, pp) = (g(&p, "K"), g(&p, "P"));
    assert_eq!(&k * &(&k * &pp), &(&k * &k) * &pp);
}

#[test]
fn ek_commutator_matches_series_oracle() {
    // [E, K] = −a M E. Oracle: [Pⁿ, K] = −n M Pⁿ⁻¹, so
    // [Σ (aP)ⁿ/n!, K] = −a M Σ (aP)ⁿ⁻¹/(n−1)!; compare coefficients of a^k P^j
    // by expanding E = e^{aP} on both sides to order a⁶.
    let p = preset(Preset::UqKmph);
    let comm = e(&p, 1).commutator(&g(&p, "K")).unwrap();
    let expected = (&g(&p, "M") * &e(&p, 1)).scale(&-Scalar::a());
    assert_eq!(comm, expected);

    let fact = |n: i64| (1..=n).product::<i64>();
    let pp = g(&p, "P");
    let k = g(&p, "K");
    let mut lhs = NCPolynomial::zero(&p);
    let mut rhs = NCPolynomial::zero(&p);
    for n in 0..=6i64 {
        let coef = Scalar::power(Symbol::A, n as i32) * Scalar::ratio(1, fact(n));
        let pn = pp.pow(n as u32).unwrap();
        lhs = &lhs + &pn.commutator(&k).unwrap().scale(&coef);
        if n < 6 {
            // −a M (aP)ⁿ/n!
            let c = -(Scalar::power(Symbol::A, n as i32 + 1) * Scalar::ratio(1, fact(n)));
            rhs = &rhs + &(&g(&p, "M") * &pn).scale(&c);
        }
    }
    assert_eq!(lhs, rhs);
}

#[test]
fn convert_basis_examples() {
    let kmph = preset(Preset::UqKmph);
    let iphn = preset(Preset::UqIphn);
    let k = convert_basis(&g(&kmph, "K"), &iphn).unwrap();
    assert_eq!(k, &e(&iphn, 1) * &g(&iphn, "N"));
    assert_eq!(k.to_string(), "E*N");
    // [P, K] computed in uq_iphn is −E⁻¹ I, which converts back to −M.
    let comm = g(&iphn, "P").commutator(&k).unwrap();
    assert_eq!(comm, -(&e(&iphn, -1) * &g(&iphn, "I")));
    assert_eq!(convert_basis(&comm, &kmph).unwrap(), -g(&kmph, "M"));
    assert_eq!(convert_basis(&NCPolynomial::one(&kmph), &iphn).unwrap(), NCPolynomial::one(&iphn));
    let fq = preset(Preset::Fq);
    assert!(matches!(
        convert_basis(&g(&kmph, "K"), &fq),
        Err(AlgebraError::UnsupportedConversion { .. })
    ));
}

#[test]
fn convert_round_trip_and_homomorphism() {
    let kmph = preset(Preset::UqKmph);
    let iphn = preset(Preset::UqIphn);
    let words: [&[(&str, i32)]; 5] = [
        &[("K", 1), ("H", 2)],
        &[("K", 2), ("M", 1), ("E", -1)],
        &[("P", 1), ("E", 2), ("H", 1)],
        &[("H", 1), ("K", 1), ("M", 1)],
        &[("K", 1), ("P", 2), ("E", 1), ("H", 1)],
    ];
    for w1 in words {
        let u = NCPolynomial::from_word(&kmph, w1, Scalar::a()).unwrap();
        let there = convert_basis(&u, &iphn).unwrap();
        assert_eq!(convert_basis(&there, &kmph).unwrap(), u);
        for w2 in words {
            let v = NCPolynomial::from_word(&kmph, w2, Scalar::one()).unwrap();
            let lhs = convert_basis(&(&u * &v), &iphn).unwrap();
            let rhs = &there * &convert_basis(&v, &iphn).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn tensor_examples() {
    let p = preset(Preset::UqKmph);
    let one = NCPolynomial::one(&p);
    let t1 = TensorElement::pure(&g(&p, "K"), &e(&p, -1));
    let t2 = TensorElement::pure(&one, &e(&p, 1));
    assert_eq!(t1.multiply(&t2).unwrap(), TensorElement::pure(&g(&p, "K"), &one));

    let (m, ep, em) = (g(&p, "M"), e(&p, 1), e(&p, -1));
    let delta_m = TensorElement::pure(&m, &em).checked_add(&TensorElement::pure(&ep, &m)).unwrap();
    let sq = delta_m.multiply(&delta_m).unwrap();
    let expected = TensorElement::pure(&(&m * &m), &e(&p, -2))
        .checked_add(&TensorElement::pure(&(&m * &ep), &(&m * &em)).scale(&Scalar::int(2)))
        .unwrap()
        .checked_add(&TensorElement::pure(&e(&p, 2), &(&m * &m)))
        .unwrap();
    assert_eq!(sq, expected);

    let pp = g(&p, "P");
    let a = TensorElement::pure(&pp, &one);
    let b = TensorElement::pure(&one, &pp);
    assert_eq!(a.multiply(&b).unwrap(), TensorElement::pure(&pp, &pp));
}

#[test]
fn exp_truncated_examples() {
    let p = preset(Preset::UqKmph);
    let k = g(&p, "K");
    let s = exp_truncated(&k, 2).unwrap();
    assert_eq!(s.coefficient(0), &NCPolynomial::one(&p));
    assert_eq!(s.coefficient(1), &k);
    assert_eq!(s.coefficient(2), &(&k * &k).scale(&Scalar::ratio(1, 2)));

    // P·(1 + sK) = P + s(KP − M)
    let s1 = exp_truncated(&k, 1).unwrap();
    let prod = SeriesInS::constant(g(&p, "P"), 1).multiply(&s1).unwrap();
    assert_eq!(prod.coefficient(0), &g(&p, "P"));
    assert_eq!(prod.coefficient(1), &(&(&k * &g(&p, "P")) - &g(&p, "M")));

    let z = exp_truncated(&NCPolynomial::zero(&p), 3).unwrap();
    assert_eq!(z.order(), 3);
    assert_eq!(z.coefficient(0), &NCPolynomial::one(&p));
    assert!((1..=3).all(|n| z.coefficient(n).is_zero()));
}

#[test]
fn flow_lemma_low_orders() {
    let p = preset(Preset::UqKmph);
    let r = verify_flow_lemma(&p, 1);
    assert!(r.passed(), "{}", r);
    let r = verify_flow_lemma(&p, 4);
    assert!(r.passed(), "{}", r);
    assert_eq!(r.check("lemma.H").unwrap().cases, 5);
}

#[test]
fn engine_checks_pass_for_presets() {
    for which in Preset::ALL {
        let p = preset(which);
        assert!(check_jacobi(&p).passed());
        let r = check_associativity(&p, 40, 3, 7);
        assert!(r.passed(), "{}", r);
        let r = check_termination(&p, 40, 8, 11);
        assert!(r.passed(), "{}", r);
        let r = check_grouplike_rule(&p, 4);
        assert!(r.passed(), "{}", r);
    }
}

#[test]
fn fuel_exhaustion_names_the_word() {
    let p = preset(Preset::UqKmph).with_fuel(3);
    let err = normal_order(&p, &[(4, 2), (0, 2)], &Scalar::one()).unwrap_err();
    match err {
        AlgebraError::FuelExhausted { word, steps } => {
            assert_eq!(word, "H^2*K^2");
            assert_eq!(steps, 3);
        }
        other => panic!("unexpected {:?}", other),
    }
}

#[test]
fn presentation_mismatch_is_an_error() {
    let a = preset(Preset::UqKmph);
    let b = preset(Preset::UqIphn);
    assert!(matches!(
        g(&a, "P").multiply(&g(&b, "P")),
        Err(AlgebraError::PresentationMismatch { .. })
    ));
}

#[test]
fn inconsistent_presentation_is_rejected() {
    // [x,y] = z, [x,z] = x: the Jacobi sum for (x, y, z) is −z.
    let bad = Presentation::builder("bad", &["x", "y", "z"])
        .relation("x", "y", &[(Scalar::one(), &[("z", 1)])])
        .relation("x", "z", &[(Scalar::one(), &[("x", 1)])])
        .build();
    assert!(matches!(bad, Err(AlgebraError::InvalidPresentation(_))), "{:?}", bad.map(|p| p.name().to_string()));
}

#[test]
fn classical_limit_of_relations() {
    // Expanding E^z = Σ (z a P)^k / k! to order 2 and letting a → 0:
    // [H,K] → −P and [P,K] → −M.
    let p = preset(Preset::UqKmph);
    let comm = g(&p, "H").commutator(&g(&p, "K")).unwrap();
    let pp = g(&p, "P");
    let mut expanded = NCPolynomial::zero(&p);
    for (m, c) in comm.terms() {
        let z = m.exponents()[3];
        let mut rest = m.exponents().to_vec();
        rest[3] = 0;
        let base = NCPolynomial::term(&p, qgalilei_core::Monomial::new(rest), c.clone());
        let mut series = NCPolynomial::zero(&p);
        let mut power = NCPolynomial::one(&p);
        let mut fact = 1i64;
        for k in 0..=2 {
            if k > 0 {
                power = &power * &pp;
                fact *= k;
            }
            let coef = Scalar::power(Symbol::A, k as i32) * Scalar::int((z as i64).pow(k as u32)) * Scalar::ratio(1, fact);
            series = &series + &power.scale(&coef);
        }
        expanded = &expanded + &(&base * &series);
    }
    let limit = expanded.map_coefficients(|c| c.at_a_zero()).unwrap();
    assert_eq!(limit, -pp);
    let pk = g(&p, "P").commutator(&g(&p, "K")).unwrap();
    assert_eq!(pk.map_coefficients(|c| c.at_a_zero()).unwrap(), -g(&p, "M"));
}
