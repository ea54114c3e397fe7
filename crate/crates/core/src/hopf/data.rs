use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::AlgebraError;
use crate::freealg::{preset, Monomial, NCPolynomial, Preset, Presentation, TensorElement};
use crate::scalar::Scalar;

/// Which value of `S(μ)` an `F_q` instance carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AntipodeVariant {
    /// `S(μ) = −μ + v·x − ½v²t`, the value satisfying the antipode axiom.
    Corrected,
    /// `S(μ) = −μ + x − ½v²t`, kept to show that it fails.
    Printed,
}

/// Coproduct, counit and antipode on the generators of a presentation,
/// extended (anti-)multiplicatively. The grouplike generator is handled
/// implicitly: `Δ(E^z) = E^z ⊗ E^z`, `ε(E^z) = 1`, `S(E^z) = E^-z`.
#[derive(Clone, Debug)]
pub struct HopfData {
    pres: Arc<Presentation>,
    delta: Vec<TensorElement>,
    epsilon: Vec<Scalar>,
    antipode: Vec<NCPolynomial>,
    variant: Option<AntipodeVariant>,
}

type Word<'a> = &'a [(&'a str, i32)];

impl HopfData {
    /// Hopf data on `p` from per-generator images. `delta` entries are
    /// sums of `c · left ⊗ right`. Missing generators (other than `E`)
    /// are an error.
    pub fn from_tables(
        p: &Arc<Presentation>,
        entries: &[(&str, &[(Scalar, Word<'_>, Word<'_>)], Scalar, &[(Scalar, Word<'_>)])],
    ) -> Result<HopfData, AlgebraError> {
        let n = p.len();
        let mut delta = alloc::vec![TensorElement::zero(p); n];
        let mut epsilon = alloc::vec![Scalar::zero(); n];
        let mut antipode = alloc::vec![NCPolynomial::zero(p); n];
        let mut seen = alloc::vec![false; n];
        if let Some(e) = p.grouplike() {
            delta[e] = TensorElement::pure(&NCPolynomial::grouplike_power(p, 1), &NCPolynomial::grouplike_power(p, 1));
            epsilon[e] = Scalar::one();
            antipode[e] = NCPolynomial::grouplike_power(p, -1);
            seen[e] = true;
        }
        for (name, d, eps, s) in entries {
            let g = p.index_of(name).ok_or_else(|| AlgebraError::UnknownGenerator((*name).into()))?;
            let mut t = TensorElement::zero(p);
            for (c, l, r) in d.iter() {
                let l = NCPolynomial::from_word(p, l, c.clone())?;
                let r = NCPolynomial::from_word(p, r, Scalar::one())?;
                t = t.checked_add(&TensorElement::pure(&l, &r))?;
            }
            let mut sg = NCPolynomial::zero(p);
            for (c, w) in s.iter() {
                sg = sg.checked_add(&NCPolynomial::from_word(p, w, c.clone())?)?;
            }
            delta[g] = t;
            epsilon[g] = eps.clone();
            antipode[g] = sg;
            seen[g] = true;
        }
        if let Some(g) = seen.iter().position(|s| !s) {
            return Err(AlgebraError::UnknownGenerator(alloc::format!("no Hopf data for {}", p.generator_name(g))));
        }
        Ok(HopfData { pres: p.clone(), delta, epsilon, antipode, variant: None })
    }

    /// Hopf data of a bundled preset; `F_q` gets the corrected antipode.
    pub fn for_preset(which: Preset) -> HopfData {
        match which {
            Preset::UqKmph => Self::uq_kmph(),
            Preset::UqIphn => Self::uq_iphn(),
            Preset::Fq => Self::fq(AntipodeVariant::Corrected),
        }
    }

    pub fn uq_kmph() -> HopfData {
        let p = preset(Preset::UqKmph);
        let one = Scalar::one();
        let m1 = -Scalar::one();
        let z = Scalar::zero;
        Self::from_tables(
            &p,
            &[
                ("K", &[(one.clone(), &[("K", 1)], &[("E", -1)]), (one.clone(), &[("E", 1)], &[("K", 1)])], z(), &[(m1.clone(), &[("K", 1)]), (-Scalar::a(), &[("M", 1)])]),
                ("M", &[(one.clone(), &[("M", 1)], &[("E", -1)]), (one.clone(), &[("E", 1)], &[("M", 1)])], z(), &[(m1.clone(), &[("M", 1)])]),
                ("P", &[(one.clone(), &[("P", 1)], &[]), (one.clone(), &[], &[("P", 1)])], z(), &[(m1.clone(), &[("P", 1)])]),
                ("H", &[(one.clone(), &[("H", 1)], &[]), (one.clone(), &[], &[("H", 1)])], z(), &[(m1, &[("H", 1)])]),
            ],
        )
        .expect("bundled Hopf data")
    }

    pub fn uq_iphn() -> HopfData {
        let p = preset(Preset::UqIphn);
        let one = Scalar::one();
        let m1 = -Scalar::one();
        let z = Scalar::zero;
        Self::from_tables(
            &p,
            &[
                ("I", &[(one.clone(), &[("I", 1)], &[]), (one.clone(), &[("E", 2)], &[("I", 1)])], z(), &[(m1.clone(), &[("I", 1), ("E", -2)])]),
                ("P", &[(one.clone(), &[("P", 1)], &[]), (one.clone(), &[], &[("P", 1)])], z(), &[(m1.clone(), &[("P", 1)])]),
                ("H", &[(one.clone(), &[("H", 1)], &[]), (one.clone(), &[], &[("H", 1)])], z(), &[(m1.clone(), &[("H", 1)])]),
                (
                    "N",
                    &[(one.clone(), &[("N", 1)], &[("E", -2)]), (one.clone(), &[], &[("N", 1)])],
                    z(),
                    &[(m1, &[("E", 2), ("N", 1)]), (Scalar::int(-2) * Scalar::a(), &[("I", 1)])],
                ),
            ],
        )
        .expect("bundled Hopf data")
    }

    pub fn fq(variant: AntipodeVariant) -> HopfData {
        let p = preset(Preset::Fq);
        let one = Scalar::one();
        let m1 = -Scalar::one();
        let half = Scalar::ratio(1, 2);
        let z = Scalar::zero;
        let s_mu: &[(Scalar, Word<'_>)] = match variant {
            AntipodeVariant::Corrected => &[(m1.clone(), &[("mu", 1)]), (one.clone(), &[("v", 1), ("x", 1)]), (-half.clone(), &[("v", 2), ("t", 1)])],
            AntipodeVariant::Printed => &[(m1.clone(), &[("mu", 1)]), (one.clone(), &[("x", 1)]), (-half.clone(), &[("v", 2), ("t", 1)])],
        };
        let mut hd = Self::from_tables(
            &p,
            &[
                ("v", &[(one.clone(), &[("v", 1)], &[]), (one.clone(), &[], &[("v", 1)])], z(), &[(m1.clone(), &[("v", 1)])]),
                (
                    "mu",
                    &[
                        (one.clone(), &[("mu", 1)], &[]),
                        (one.clone(), &[], &[("mu", 1)]),
                        (one.clone(), &[("v", 1)], &[("x", 1)]),
                        (half, &[("v", 2)], &[("t", 1)]),
                    ],
                    z(),
                    s_mu,
                ),
                (
                    "x",
                    &[(one.clone(), &[("x", 1)], &[]), (one.clone(), &[], &[("x", 1)]), (one.clone(), &[("v", 1)], &[("t", 1)])],
                    z(),
                    &[(m1.clone(), &[("x", 1)]), (one.clone(), &[("v", 1), ("t", 1)])],
                ),
                ("t", &[(one.clone(), &[("t", 1)], &[]), (one, &[], &[("t", 1)])], z(), &[(m1, &[("t", 1)])]),
            ],
        )
        .expect("bundled Hopf data");
        hd.variant = Some(variant);
        hd
    }

    pub fn presentation(&self) -> &Arc<Presentation> {
        &self.pres
    }

    /// `None` unless this is `F_q` data.
    pub fn variant(&self) -> Option<AntipodeVariant> {
        self.variant
    }

    pub fn generator_coproduct(&self, g: usize) -> &TensorElement {
        &self.delta[g]
    }

    pub fn generator_counit(&self, g: usize) -> &Scalar {
        &self.epsilon[g]
    }

    pub fn generator_antipode(&self, g: usize) -> &NCPolynomial {
        &self.antipode[g]
    }

    fn check(&self, u: &NCPolynomial) -> Result<(), AlgebraError> {
        if self.pres.same_as(u.presentation()) {
            Ok(())
        } else {
            Err(AlgebraError::PresentationMismatch {
                left: self.pres.name().into(),
                right: u.presentation().name().into(),
            })
        }
    }

    fn letter_coproduct(&self, g: usize, e: i32) -> Result<TensorElement, AlgebraError> {
        if Some(g) == self.pres.grouplike() {
            let ez = NCPolynomial::grouplike_power(&self.pres, e);
            return Ok(TensorElement::pure(&ez, &ez));
        }
        let mut acc = TensorElement::one(&self.pres);
        for _ in 0..e {
            acc = acc.multiply(&self.delta[g])?;
        }
        Ok(acc)
    }

    /// `Δ` of a single normal-ordered monomial.
    pub fn monomial_coproduct(&self, m: &Monomial) -> Result<TensorElement, AlgebraError> {
        let mut acc = TensorElement::one(&self.pres);
        for (g, e) in m.to_word() {
            acc = acc.multiply(&self.letter_coproduct(g as usize, e)?)?;
        }
        Ok(acc)
    }

    pub fn coproduct(&self, u: &NCPolynomial) -> Result<TensorElement, AlgebraError> {
        self.check(u)?;
        let mut out = TensorElement::zero(&self.pres);
        for (m, c) in u.terms() {
            out = out.checked_add(&self.monomial_coproduct(m)?.scale(c))?;
        }
        Ok(out)
    }

    pub fn monomial_counit(&self, m: &Monomial) -> Scalar {
        let mut acc = Scalar::one();
        for (g, e) in m.to_word() {
            let g = g as usize;
            if Some(g) == self.pres.grouplike() {
                continue;
            }
            for _ in 0..e {
                acc = &acc * &self.epsilon[g];
            }
        }
        acc
    }

    pub fn counit(&self, u: &NCPolynomial) -> Result<Scalar, AlgebraError> {
        self.check(u)?;
        let mut out = Scalar::zero();
        for (m, c) in u.terms() {
            out += &(c * &self.monomial_counit(m));
        }
        Ok(out)
    }

    pub fn antipode(&self, u: &NCPolynomial) -> Result<NCPolynomial, AlgebraError> {
        self.check(u)?;
        let p = &self.pres;
        u.map_letters(p, true, |g, e| {
            if Some(g) == p.grouplike() {
                Ok(NCPolynomial::grouplike_power(p, -e))
            } else {
                self.antipode[g].pow(e as u32)
            }
        })
    }
}
