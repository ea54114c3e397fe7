use proptest::prelude::*;
use qgalilei::parse::{parse_element, parse_scalar, parse_wavefunction, ParseError};
use qgalilei_core::opcalc::VarExponents;
use qgalilei_core::scalar::ScalarExponents;
use qgalilei_core::{preset, GaussRational, Monomial, NCPolynomial, Preset, Scalar, VarSet, WaveFunction};

fn coefficient() -> impl Strategy<Value = Scalar> {
    let rational = (-20i64..20, 1i64..6, -20i64..20, 1i64..6);
    let exps = (-2i32..3, 0i32..3, -2i32..3);
    prop::collection::vec((rational, exps), 1..3).prop_map(|terms| {
        terms.into_iter().fold(Scalar::zero(), |acc, ((rn, rd, im, id), (a, al, b))| {
            let c = GaussRational::from_ints(rn, rd, im, id);
            &acc + &Scalar::monomial(c, ScalarExponents([a, al, b]))
        })
    })
}

fn element(which: Preset) -> impl Strategy<Value = NCPolynomial> {
    let p = preset(which);
    let n = p.len();
    let grouplike = p.grouplike();
    let monomial = (prop::collection::vec(0i32..3, n), -2i32..3).prop_map(move |(mut exps, z)| {
        if let Some(g) = grouplike {
            exps[g] = z;
        }
        Monomial::new(exps)
    });
    prop::collection::vec((monomial, coefficient()), 0..5).prop_map(move |terms| {
        terms
            .into_iter()
            .fold(NCPolynomial::zero(&p), |acc, (m, c)| acc.checked_add(&NCPolynomial::term(&p, m, c)).unwrap())
    })
}

fn wavefunction(vars: VarSet) -> impl Strategy<Value = WaveFunction> {
    let exps = prop::array::uniform4(0u32..4);
    prop::collection::vec((exps, coefficient()), 0..5).prop_map(move |terms| {
        terms.into_iter().fold(WaveFunction::zero(vars), |acc, (mut e, c)| {
            for v in qgalilei_core::Var::ALL {
                if !vars.contains(v) {
                    e[v.index()] = 0;
                }
            }
            &acc + &WaveFunction::monomial(vars, VarExponents(e), c).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn kmph_round_trip(u in element(Preset::UqKmph)) {
        prop_assert_eq!(parse_element(&u.to_string(), &preset(Preset::UqKmph)).unwrap(), u);
    }

    #[test]
    fn iphn_round_trip(u in element(Preset::UqIphn)) {
        prop_assert_eq!(parse_element(&u.to_string(), &preset(Preset::UqIphn)).unwrap(), u);
    }

    #[test]
    fn fq_round_trip(u in element(Preset::Fq)) {
        prop_assert_eq!(parse_element(&u.to_string(), &preset(Preset::Fq)).unwrap(), u);
    }

    #[test]
    fn wavefunction_round_trip(w in wavefunction(VarSet::ALL)) {
        prop_assert_eq!(parse_wavefunction(&w.to_string(), VarSet::ALL).unwrap(), w);
    }

    #[test]
    fn carrier_round_trip(w in wavefunction(VarSet::XT)) {
        prop_assert_eq!(parse_wavefunction(&w.to_string(), VarSet::XT).unwrap(), w);
    }

    #[test]
    fn scalar_round_trip(c in coefficient()) {
        prop_assert_eq!(parse_scalar(&c.to_string()).unwrap(), c);
    }

    #[test]
    fn garbage_never_panics(s in "[ -~]{0,24}") {
        let _ = parse_element(&s, &preset(Preset::UqKmph));
    }

    #[test]
    fn error_offsets_are_in_range(s in "[KMPHEax0-9*+^()/ -]{0,16}") {
        if let Err(e) = parse_element(&s, &preset(Preset::UqKmph)) {
            prop_assert!(e.offset() <= s.len());
        }
    }
}

#[test]
fn unbound_symbols_depend_on_context() {
    assert!(matches!(parse_element("x", &preset(Preset::UqKmph)), Err(ParseError::Unbound { .. })));
    assert!(parse_element("x", &preset(Preset::Fq)).is_ok());
    assert!(matches!(parse_element("N", &preset(Preset::UqKmph)), Err(ParseError::Unbound { .. })));
    assert!(parse_scalar("K").is_err());
}

#[test]
fn products_normal_order() {
    let p = preset(Preset::UqKmph);
    let hk = parse_element("H*K", &p).unwrap();
    assert_eq!(hk.to_string(), "K*H - 1/2*a^-1*E + 1/2*a^-1*E^-1");
    assert_eq!(parse_element("-(K*H) + H*K", &p).unwrap().to_string(), "-1/2*a^-1*E + 1/2*a^-1*E^-1");
}
