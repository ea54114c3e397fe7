//! Local representations of `U_q` induced from characters of `⟨M, K⟩`,
//! the q-Casimir, the star structure and the classical limit.

mod checks;

pub use checks::{
    check_casimir, check_classical_limit, check_equivalence_alpha, check_equivariance, check_relations_on_module,
    check_star_consistency,
};

use alloc::string::ToString;

use crate::error::{ActionError, AlgebraError, ScalarError};
use crate::freealg::{preset, NCPolynomial, Preset};
use crate::opcalc::{one_minus_cosh_over_a2, LinearOperator, Var, VarSet, WaveFunction};
use crate::scalar::{Scalar, Symbol};

/// A character of `⟨M, K⟩`: `K ↦ α`, `M ↦ β`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    pub alpha: Scalar,
    pub beta: Scalar,
}

impl Character {
    pub fn new(alpha: Scalar, beta: Scalar) -> Self {
        Character { alpha, beta }
    }

    /// `α` and `β` left symbolic.
    pub fn symbolic() -> Self {
        Character { alpha: Scalar::alpha(), beta: Scalar::beta() }
    }

    /// `α = 0`, `β` symbolic.
    pub fn reduced() -> Self {
        Character { alpha: Scalar::zero(), beta: Scalar::beta() }
    }
}

impl Default for Character {
    fn default() -> Self {
        Self::reduced()
    }
}

/// `e^{αv} e^{βμ} φ(x,t)`; only `φ` is stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CarrierElement {
    pub character: Character,
    pub phi: WaveFunction,
}

impl CarrierElement {
    pub fn new(character: Character, phi: WaveFunction) -> Result<Self, ActionError> {
        Ok(CarrierElement { character, phi: phi.with_vars(VarSet::XT)? })
    }

    pub fn act(&self, u: &NCPolynomial) -> Result<CarrierElement, ActionError> {
        Ok(CarrierElement { character: self.character.clone(), phi: induced_action(&self.character, u, &self.phi)? })
    }
}

/// The operator of a single generator letter in the induced module.
pub fn induced_letter_operator(ch: &Character, g: &str, e: i32) -> Result<LinearOperator, ActionError> {
    if g == "E" {
        return Ok(LinearOperator::shift(Var::X, e));
    }
    if e < 0 {
        return Err(AlgebraError::NegativeExponent(g.to_string()).into());
    }
    let op = match g {
        // α − βx̄ − t̄·sinh(a∂x)/a
        "K" => LinearOperator::scalar(ch.alpha.clone())
            - LinearOperator::mult(Var::X).scale(&ch.beta)
            - LinearOperator::mult(Var::T).compose(&crate::opcalc::sinh_operator(Var::X)),
        "M" => LinearOperator::scalar(ch.beta.clone()),
        "P" => LinearOperator::deriv(Var::X),
        "H" => LinearOperator::deriv(Var::T),
        _ => return Err(ActionError::UnsupportedGenerator(g.to_string())),
    };
    Ok(op.pow(e as u32))
}

fn check_kmph(u: &NCPolynomial) -> Result<(), ActionError> {
    if u.presentation().name() == Preset::UqKmph.name() {
        Ok(())
    } else {
        Err(AlgebraError::PresentationMismatch { left: Preset::UqKmph.name().into(), right: u.presentation().name().into() }.into())
    }
}

/// `u ⊢ φ`; each monomial acts letter by letter, rightmost first.
pub fn induced_action(ch: &Character, u: &NCPolynomial, phi: &WaveFunction) -> Result<WaveFunction, ActionError> {
    check_kmph(u)?;
    let phi = phi.with_vars(VarSet::XT)?;
    let p = u.presentation();
    let mut out = WaveFunction::zero(VarSet::XT);
    for (m, c) in u.terms() {
        let mut g = phi.clone();
        for (x, e) in m.to_word().into_iter().rev() {
            g = induced_letter_operator(ch, p.generator_name(x as usize), e)?.apply(&g)?;
        }
        out = &out + &g.scale(c);
    }
    Ok(out)
}

/// `g ⊢ φ` for a generator name.
pub fn induced_generator(ch: &Character, g: &str, phi: &WaveFunction) -> Result<WaveFunction, ActionError> {
    induced_letter_operator(ch, g, 1)?.apply(&phi.with_vars(VarSet::XT)?)
}

/// `C_a = M·H + (1 − (E + E⁻¹)/2)/a²`, reading the time generator as `H`.
pub fn casimir_element() -> NCPolynomial {
    let p = preset(Preset::UqKmph);
    let inv_a2 = Scalar::power(Symbol::A, -2);
    let mh = NCPolynomial::from_word(&p, &[("M", 1), ("H", 1)], Scalar::one()).expect("kmph word");
    let one = NCPolynomial::constant(&p, inv_a2.clone());
    let e = NCPolynomial::grouplike_power(&p, 1).scale(&(&inv_a2 * &Scalar::ratio(-1, 2)));
    let em = NCPolynomial::grouplike_power(&p, -1).scale(&(&inv_a2 * &Scalar::ratio(-1, 2)));
    &(&(&mh + &one) + &e) + &em
}

/// `C_a ⊢ φ = [β∂t + (1 − cosh(a∂x))/a²] φ`.
pub fn casimir_action(ch: &Character, phi: &WaveFunction) -> Result<WaveFunction, ActionError> {
    let phi = phi.with_vars(VarSet::XT)?;
    let time = LinearOperator::deriv(Var::T).apply(&phi)?.scale(&ch.beta);
    Ok(&time + &one_minus_cosh_over_a2(Var::X, &phi)?)
}

/// `C'_a ⊢ φ = [∂t + β⁻¹(1 − cosh(a∂x))/a²] φ`; needs `β` invertible.
pub fn reduced_casimir_action(ch: &Character, phi: &WaveFunction) -> Result<WaveFunction, ActionError> {
    if ch.beta.is_zero() {
        return Err(ActionError::BetaNotInvertible);
    }
    let inv = ch.beta.recip()?;
    let phi = phi.with_vars(VarSet::XT)?;
    let time = LinearOperator::deriv(Var::T).apply(&phi)?;
    Ok(&time + &one_minus_cosh_over_a2(Var::X, &phi)?.scale(&inv))
}

/// Coefficientwise `a → 0`.
pub fn classical_limit(w: &WaveFunction) -> Result<WaveFunction, ScalarError> {
    w.at_a_zero()
}

/// The anti-linear anti-automorphism with `K* = −K`, `M* = −M`,
/// `P* = −P`, `H* = −H`, `E* = E⁻¹`.
pub fn star(u: &NCPolynomial) -> Result<NCPolynomial, AlgebraError> {
    check_kmph(u).map_err(|e| match e {
        ActionError::Algebra(a) => a,
        _ => unreachable!(),
    })?;
    let p = u.presentation();
    let e_index = p.grouplike();
    let conj = u.map_coefficients(|c| Ok::<_, AlgebraError>(c.conj()))?;
    conj.map_letters(p, true, |g, e| {
        if Some(g) == e_index {
            Ok(NCPolynomial::grouplike_power(p, -e))
        } else {
            let sign = if e % 2 == 0 { Scalar::one() } else { -Scalar::one() };
            NCPolynomial::generator(p, p.generator_name(g), e).map(|x| x.scale(&sign))
        }
    })
}
