use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{ActionError, AlgebraError};
use crate::freealg::{preset, Monomial, NCPolynomial, Preset};
use crate::report::{Check, Report};
use crate::scalar::Scalar;

use super::operator::{cosh_diff_over_a2_dmu, exp_shift_dx_minus_v_dmu, sinh_operator, LinearOperator};
use super::wavefunction::{Var, VarExponents, VarSet, WaveFunction};

fn require_all(f: &WaveFunction) -> Result<(), ActionError> {
    Var::ALL.into_iter().try_for_each(|v| f.require(v))
}

fn check_kmph(u: &NCPolynomial) -> Result<(), ActionError> {
    if u.presentation().name() == Preset::UqKmph.name() {
        Ok(())
    } else {
        Err(AlgebraError::PresentationMismatch { left: Preset::UqKmph.name().into(), right: u.presentation().name().into() }.into())
    }
}

/// `K▷ = ∂v − x̄∂μ − t̄·sinh(a∂x)/a`.
pub fn k_triangleright_operator() -> LinearOperator {
    LinearOperator::deriv(Var::V)
        - LinearOperator::mult(Var::X).compose(&LinearOperator::deriv(Var::Mu))
        - LinearOperator::mult(Var::T).compose(&sinh_operator(Var::X))
}

/// `g^e ▷ f` for a single letter of `uq_kmph` (`e` may be negative only for `E`).
pub fn triangleright_letter(g: &str, e: i32, f: &WaveFunction) -> Result<WaveFunction, ActionError> {
    require_all(f)?;
    if g == "E" {
        return LinearOperator::shift(Var::X, e).apply(f);
    }
    if e < 0 {
        return Err(AlgebraError::NegativeExponent(g.into()).into());
    }
    let op = match g {
        "K" => k_triangleright_operator(),
        "M" => LinearOperator::deriv(Var::Mu),
        "P" => LinearOperator::deriv(Var::X),
        "H" => LinearOperator::deriv(Var::T),
        _ => return Err(ActionError::UnsupportedGenerator(g.into())),
    };
    (0..e).try_fold(f.clone(), |acc, _| op.apply(&acc))
}

/// `f ◁ g^e` for a single letter of `uq_kmph`.
pub fn triangleleft_letter(g: &str, e: i32, f: &WaveFunction) -> Result<WaveFunction, ActionError> {
    require_all(f)?;
    if g == "E" {
        return exp_shift_dx_minus_v_dmu(e, f);
    }
    if e < 0 {
        return Err(AlgebraError::NegativeExponent(g.into()).into());
    }
    let step = |acc: &WaveFunction| -> Result<WaveFunction, ActionError> {
        match g {
            "K" => LinearOperator::deriv(Var::V).apply(acc),
            "M" => LinearOperator::deriv(Var::Mu).apply(acc),
            "P" => (LinearOperator::deriv(Var::X) - LinearOperator::mult(Var::V).compose(&LinearOperator::deriv(Var::Mu))).apply(acc),
            "H" => Ok(&LinearOperator::deriv(Var::T).apply(acc)? + &cosh_diff_over_a2_dmu(acc)?),
            _ => Err(ActionError::UnsupportedGenerator(g.into())),
        }
    };
    (0..e).try_fold(f.clone(), |acc, _| step(&acc))
}

/// `g ▷ f` for a generator name of `uq_kmph` (`E` means `E¹`).
pub fn act_triangleright(g: &str, f: &WaveFunction) -> Result<WaveFunction, ActionError> {
    triangleright_letter(g, 1, f)
}

/// `f ◁ g` for a generator name of `uq_kmph`.
pub fn act_triangleleft(g: &str, f: &WaveFunction) -> Result<WaveFunction, ActionError> {
    triangleleft_letter(g, 1, f)
}

/// `u ▷ f`; letters of each monomial act rightmost first.
pub fn triangleright(u: &NCPolynomial, f: &WaveFunction) -> Result<WaveFunction, ActionError> {
    check_kmph(u)?;
    let p = u.presentation();
    let mut out = WaveFunction::zero(f.vars());
    for (m, c) in u.terms() {
        let mut g = f.clone();
        for (x, e) in m.to_word().into_iter().rev() {
            g = triangleright_letter(p.generator_name(x as usize), e, &g)?;
        }
        out = &out + &g.scale(c);
    }
    Ok(out)
}

/// `f ◁ u`; letters of each monomial act leftmost first.
pub fn triangleleft(u: &NCPolynomial, f: &WaveFunction) -> Result<WaveFunction, ActionError> {
    check_kmph(u)?;
    let p = u.presentation();
    let mut out = WaveFunction::zero(f.vars());
    for (m, c) in u.terms() {
        let mut g = f.clone();
        for (x, e) in m.to_word() {
            g = triangleleft_letter(p.generator_name(x as usize), e, &g)?;
        }
        out = &out + &g.scale(c);
    }
    Ok(out)
}

fn factorial(n: u32) -> Scalar {
    Scalar::from((1..=n as i64).product::<i64>())
}

/// `⟨K^m M^n P^p E^z H^q, v^m' μ^n' x^p' t^q'⟩` on basis elements: with
/// `E^z = Σ (za)^k P^k / k!` only `k = p' − p` survives.
pub fn pairing_a_monomial(u: &Monomial, f: &VarExponents) -> Scalar {
    let ex = u.exponents();
    let (m, n, p, z, q) = (ex[0], ex[1], ex[2], ex[3], ex[4]);
    let (m2, n2, p2, q2) = (f.get(Var::V) as i32, f.get(Var::Mu) as i32, f.get(Var::X) as i32, f.get(Var::T) as i32);
    if m != m2 || n != n2 || q != q2 || p2 < p {
        return Scalar::zero();
    }
    let k = (p2 - p) as u32;
    if k > 0 && z == 0 {
        return Scalar::zero();
    }
    let mut value = &(&factorial(m as u32) * &factorial(n as u32)) * &factorial(q as u32);
    value = &(&value * &factorial(p2 as u32)) * &factorial(k).recip().expect("nonzero");
    let step = Scalar::int(z as i64) * Scalar::a();
    for _ in 0..k {
        value = &value * &step;
    }
    value
}

/// The bilinear form between `uq_kmph` and the wavefunctions over all four variables.
pub fn pairing_a(u: &NCPolynomial, f: &WaveFunction) -> Result<Scalar, ActionError> {
    check_kmph(u)?;
    let mut out = Scalar::zero();
    for (m, c) in u.terms() {
        for (e, d) in f.terms() {
            let v = pairing_a_monomial(m, e);
            if !v.is_zero() {
                out += &(&(c * d) * &v);
            }
        }
    }
    Ok(out)
}

/// All monomials `v^m μ^n x^p t^q` of total degree at most `cap`.
pub(crate) fn wave_monomials(cap: u32) -> Vec<VarExponents> {
    let mut out = Vec::new();
    for m in 0..=cap {
        for n in 0..=cap - m {
            for p in 0..=cap - m - n {
                for q in 0..=cap - m - n - p {
                    out.push(VarExponents([m, n, p, q]));
                }
            }
        }
    }
    out
}

/// `⟨h▷f, u⟩ = ⟨f, u·h⟩` and `⟨f◁h, u⟩ = ⟨f, h·u⟩` for every basis monomial
/// `u` and `f` of total degree at most `degree_cap` and every generator `h`
/// (including `E⁻¹`).
pub fn check_duality(degree_cap: u32) -> Report {
    let p = preset(Preset::UqKmph);
    let hs: Vec<(&str, i32)> = alloc::vec![("K", 1), ("M", 1), ("P", 1), ("H", 1), ("E", 1), ("E", -1)];
    let us = crate::hopf::enumerate_monomials(&p, degree_cap);
    let fs = wave_monomials(degree_cap);
    let mut right = Check::new("duality.triangleright");
    let mut left = Check::new("duality.triangleleft");
    for &(h, e) in &hs {
        let hpoly = NCPolynomial::generator(&p, h, e).expect("kmph generator");
        let label_h = || if e == 1 { h.to_string() } else { format!("{}^{}", h, e) };
        let products: Vec<Result<(NCPolynomial, NCPolynomial), AlgebraError>> = us
            .iter()
            .map(|m| {
                let u = NCPolynomial::term(&p, m.clone(), Scalar::one());
                Ok((u.multiply(&hpoly)?, hpoly.multiply(&u)?))
            })
            .collect();
        for fe in &fs {
            let f = WaveFunction::monomial(VarSet::ALL, *fe, Scalar::one()).expect("full variable set");
            let acted = (triangleright_letter(h, e, &f), triangleleft_letter(h, e, &f));
            for (m, prod) in us.iter().zip(&products) {
                let label = || format!("h={}, u={}, f={}", label_h(), m.display(&p), f);
                let (uh, hu) = match prod {
                    Ok(x) => x,
                    Err(err) => {
                        right.error(label(), err);
                        continue;
                    }
                };
                match &acted.0 {
                    Ok(hf) => {
                        let lhs = pairing_a_monomial_poly(m, hf);
                        let rhs = pairing_poly_monomial(uh, fe);
                        right.case(lhs == rhs, || (label(), format!("<h▷f, u> = {}, <f, u·h> = {}", lhs, rhs)));
                    }
                    Err(err) => right.error(label(), err),
                }
                match &acted.1 {
                    Ok(fh) => {
                        let lhs = pairing_a_monomial_poly(m, fh);
                        let rhs = pairing_poly_monomial(hu, fe);
                        left.case(lhs == rhs, || (label(), format!("<f◁h, u> = {}, <f, h·u> = {}", lhs, rhs)));
                    }
                    Err(err) => left.error(label(), err),
                }
            }
        }
    }
    let mut report = Report::new("duality");
    report.push(right);
    report.push(left);
    report
}

fn pairing_a_monomial_poly(m: &Monomial, f: &WaveFunction) -> Scalar {
    let mut out = Scalar::zero();
    for (e, c) in f.terms() {
        out += &(c * &pairing_a_monomial(m, e));
    }
    out
}

fn pairing_poly_monomial(u: &NCPolynomial, f: &VarExponents) -> Scalar {
    let mut out = Scalar::zero();
    for (m, c) in u.terms() {
        out += &(c * &pairing_a_monomial(m, f));
    }
    out
}

/// `(h₁h₂)▷f = h₁▷(h₂▷f)` and `f◁(h₁h₂) = (f◁h₁)◁h₂` for random generator
/// pairs and random `f` of degree at most `max_degree`.
pub fn check_representations(samples: usize, max_degree: u32, seed: u64) -> Report {
    let p = preset(Preset::UqKmph);
    let hs: [(&str, i32); 6] = [("K", 1), ("M", 1), ("P", 1), ("H", 1), ("E", 1), ("E", -1)];
    let fs = wave_monomials(max_degree);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut right = Check::new("representation.triangleright");
    let mut left = Check::new("representation.triangleleft");
    for _ in 0..samples {
        let (h1, e1) = hs[rng.gen_range(0..hs.len())];
        let (h2, e2) = hs[rng.gen_range(0..hs.len())];
        let mut f = WaveFunction::zero(VarSet::ALL);
        for _ in 0..2 {
            let e = fs[rng.gen_range(0..fs.len())];
            let c = Scalar::ratio(rng.gen_range(-3..=3), rng.gen_range(1..=3));
            f = &f + &WaveFunction::monomial(VarSet::ALL, e, c).expect("full variable set");
        }
        let label = || format!("h1={}^{}, h2={}^{}, f={}", h1, e1, h2, e2, f);
        let res = (|| {
            let prod = NCPolynomial::generator(&p, h1, e1)?.multiply(&NCPolynomial::generator(&p, h2, e2)?)?;
            let r1 = triangleright(&prod, &f)?;
            let r2 = triangleright_letter(h1, e1, &triangleright_letter(h2, e2, &f)?)?;
            let l1 = triangleleft(&prod, &f)?;
            let l2 = triangleleft_letter(h2, e2, &triangleleft_letter(h1, e1, &f)?)?;
            Ok::<_, ActionError>((&r1 - &r2, &l1 - &l2))
        })();
        match res {
            Ok((dr, dl)) => {
                right.case(dr.is_zero(), || (label(), dr.to_string()));
                left.case(dl.is_zero(), || (label(), dl.to_string()));
            }
            Err(err) => {
                right.error(label(), &err);
                left.error(label(), &err);
            }
        }
    }
    let mut report = Report::new("duality");
    report.push(right);
    report.push(left);
    report
}
