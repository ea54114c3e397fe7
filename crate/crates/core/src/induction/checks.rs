use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{ActionError, AlgebraError};
use crate::freealg::checks::random_monomial;
use crate::freealg::{preset, NCPolynomial, Preset};
use crate::opcalc::{
    sinh_shift_over_a, triangleleft_letter, triangleright_letter, LinearOperator, Var, VarExponents, VarSet,
    WaveFunction,
};
use crate::report::{Check, Report};
use crate::scalar::{Bindings, GaussRational, Scalar, Symbol};

use super::{
    casimir_action, casimir_element, classical_limit, induced_action, induced_generator, induced_letter_operator,
    reduced_casimir_action, star, Character,
};

/// `x^p t^q` with `p + q <= cap`.
fn carrier_monomials(cap: u32) -> Vec<WaveFunction> {
    let mut out = Vec::new();
    for d in 0..=cap {
        for p in (0..=d).rev() {
            out.push(WaveFunction::from_powers(VarSet::XT, &[(Var::X, p), (Var::T, d - p)], Scalar::one()).expect("xt"));
        }
    }
    out
}

/// Generators of `uq_kmph` plus `E^z` for `z = ±1, ±2`.
fn relation_letters() -> Vec<(&'static str, i32)> {
    alloc::vec![("K", 1), ("M", 1), ("P", 1), ("E", -2), ("E", -1), ("E", 1), ("E", 2), ("H", 1)]
}

fn order_of(g: &str) -> usize {
    ["K", "M", "P", "E", "H"].iter().position(|x| *x == g).expect("kmph generator")
}

/// `[P⊢, K⊢] = −β` and `[H⊢, K⊢] = −sinh(a∂x)/a` on every `x^p t^q`,
/// `p + q <= degree_cap`, plus every defining relation (including the
/// `E^z` rules for `z = ±1, ±2`) as an operator identity.
pub fn check_relations_on_module(ch: &Character, degree_cap: u32) -> Report {
    let p = preset(Preset::UqKmph);
    let mut pk = Check::new("relations.PK");
    let mut hk = Check::new("relations.HK");
    let mut all = Check::new("relations.module");
    let phis = carrier_monomials(degree_cap);
    let act = |g: &str, f: &WaveFunction| induced_generator(ch, g, f);
    for phi in &phis {
        let label = || phi.to_string();
        let res = (|| {
            let comm = &act("P", &act("K", phi)?)? - &act("K", &act("P", phi)?)?;
            let r1 = &comm + &phi.scale(&ch.beta);
            let comm = &act("H", &act("K", phi)?)? - &act("K", &act("H", phi)?)?;
            let r2 = &comm + &sinh_shift_over_a(Var::X, phi)?;
            Ok::<_, ActionError>((r1, r2))
        })();
        match res {
            Ok((r1, r2)) => {
                pk.case(r1.is_zero(), || (label(), r1.to_string()));
                hk.case(r2.is_zero(), || (label(), r2.to_string()));
            }
            Err(e) => {
                pk.error(label(), &e);
                hk.error(label(), &e);
            }
        }
    }
    let letters = relation_letters();
    for &(g, e) in &letters {
        for &(h, f) in &letters {
            if order_of(g) <= order_of(h) {
                continue;
            }
            let prod = (|| NCPolynomial::generator(&p, g, e)?.multiply(&NCPolynomial::generator(&p, h, f)?))();
            let prod = match prod {
                Ok(x) => x,
                Err(err) => {
                    all.error(format!("{}^{} {}^{}", g, e, h, f), err);
                    continue;
                }
            };
            for phi in &phis {
                let label = || format!("{}^{} * {}^{} on {}", g, e, h, f, phi);
                let res = (|| {
                    let lhs = induced_letter_operator(ch, g, e)?.apply(&induced_letter_operator(ch, h, f)?.apply(phi)?)?;
                    Ok::<_, ActionError>(&lhs - &induced_action(ch, &prod, phi)?)
                })();
                match res {
                    Ok(r) => all.case(r.is_zero(), || (label(), r.to_string())),
                    Err(err) => all.error(label(), err),
                }
            }
        }
    }
    let mut report = Report::new("relations");
    report.push(pk);
    report.push(hk);
    report.push(all);
    report
}

fn factorial(n: u32) -> Scalar {
    Scalar::from((1..=n as i64).product::<i64>())
}

/// `Σ_{j+k <= n} α^j β^k v^j μ^k / (j! k!) · φ` over all four variables.
fn truncated_carrier(ch: &Character, phi: &WaveFunction, n: u32) -> WaveFunction {
    let mut prefactor = WaveFunction::zero(VarSet::ALL);
    for j in 0..=n {
        for k in 0..=n - j {
            let mut c = &factorial(j).recip().expect("nonzero") * &factorial(k).recip().expect("nonzero");
            for _ in 0..j {
                c = &c * &ch.alpha;
            }
            for _ in 0..k {
                c = &c * &ch.beta;
            }
            prefactor = &prefactor
                + &WaveFunction::monomial(VarSet::ALL, VarExponents([j, k, 0, 0]), c).expect("full variable set");
        }
    }
    let phi = phi.with_vars(VarSet::ALL).expect("xt inside full set");
    &prefactor * &phi
}

/// Terms of `(v, μ)`-order below `n`, and the count of discarded ones.
fn below_order(f: &WaveFunction, n: u32) -> (WaveFunction, usize) {
    let mut dropped = 0;
    let kept = f.clone();
    let mut out = WaveFunction::zero(f.vars());
    for (e, c) in kept.terms() {
        if e.get(Var::V) + e.get(Var::Mu) < n {
            out = &out + &WaveFunction::monomial(f.vars(), *e, c.clone()).expect("same variables");
        } else {
            dropped += 1;
        }
    }
    (out, dropped)
}

/// With `f = e^{αv} e^{βμ} φ` truncated at total `(v, μ)`-order `n`:
/// `f ◁ K = αf` and `f ◁ M = βf`, and `g ▷ f = e^{αv} e^{βμ} (g ⊢ φ)` for
/// every generator `g`, all compared below order `n`.
pub fn check_equivariance(ch: &Character, n: u32) -> Report {
    let n = n.max(2);
    let mut phis = carrier_monomials(3);
    phis.push(WaveFunction::zero(VarSet::XT));
    let mut right_k = Check::new("equivariance.K");
    let mut right_m = Check::new("equivariance.M");
    let mut restriction = Check::new("equivariance.restriction");
    let mut boundary = 0usize;
    for phi in &phis {
        let f = truncated_carrier(ch, phi, n);
        for (check, g, value) in [(&mut right_k, "K", &ch.alpha), (&mut right_m, "M", &ch.beta)] {
            let label = || format!("f ◁ {} with φ = {}", g, phi);
            match triangleleft_letter(g, 1, &f) {
                Ok(fg) => {
                    let (r, d) = below_order(&(&fg - &f.scale(value)), n);
                    boundary += d;
                    check.case(r.is_zero(), || (label(), r.to_string()));
                }
                Err(e) => check.error(label(), e),
            }
        }
        for (g, e) in [("K", 1), ("M", 1), ("P", 1), ("H", 1), ("E", 1), ("E", -1)] {
            let label = || format!("{}^{} ▷ f with φ = {}", g, e, phi);
            let res = (|| {
                let lhs = triangleright_letter(g, e, &f)?;
                let induced = induced_letter_operator(ch, g, e)?.apply(phi)?;
                let rhs = truncated_carrier(ch, &induced, n);
                Ok::<_, ActionError>(below_order(&(&lhs - &rhs), n))
            })();
            match res {
                Ok((r, d)) => {
                    boundary += d;
                    restriction.case(r.is_zero(), || (label(), r.to_string()));
                }
                Err(err) => restriction.error(label(), err),
            }
        }
    }
    let note = format!("truncation order {}; {} boundary terms of order >= {} ignored", n, boundary, n);
    let mut report = Report::new("equivalence");
    report.push(right_k.with_note(note.clone()));
    report.push(right_m.with_note(note.clone()));
    report.push(restriction.with_note(note));
    report
}

/// Centrality of `C_a`, `ε(C_a) = 0`, and agreement of the closed-form
/// Casimir actions with the induced action of `C_a` on `p + q <= degree_cap`.
pub fn check_casimir(ch: &Character, degree_cap: u32) -> Report {
    let p = preset(Preset::UqKmph);
    let c = casimir_element();
    let mut central = Check::new("casimir.central").with_note("time generator in C_a read as H");
    for g in ["K", "M", "P", "H"] {
        let label = || format!("[C_a, {}]", g);
        match c.commutator(&NCPolynomial::gen(&p, g)) {
            Ok(r) => central.case(r.is_zero(), || (label(), r.to_string())),
            Err(e) => central.error(label(), e),
        }
    }
    for z in [-1, 1] {
        let label = || format!("[C_a, E^{}]", z);
        match c.commutator(&NCPolynomial::grouplike_power(&p, z)) {
            Ok(r) => central.case(r.is_zero(), || (label(), r.to_string())),
            Err(e) => central.error(label(), e),
        }
    }
    let mut counit = Check::new("casimir.counit");
    match crate::hopf::HopfData::uq_kmph().counit(&c) {
        Ok(e) => counit.case(e.is_zero(), || ("C_a".into(), e.to_string())),
        Err(e) => counit.error("C_a", e),
    }
    let mut action = Check::new("casimir.action");
    let mut reduced = Check::new("casimir.reduced");
    for phi in carrier_monomials(degree_cap) {
        let label = || phi.to_string();
        let res = (|| {
            let closed = casimir_action(ch, &phi)?;
            let r1 = &closed - &induced_action(ch, &c, &phi)?;
            let r2 = if ch.beta.is_zero() {
                WaveFunction::zero(VarSet::XT)
            } else {
                &reduced_casimir_action(ch, &phi)?.scale(&ch.beta) - &closed
            };
            Ok::<_, ActionError>((r1, r2))
        })();
        match res {
            Ok((r1, r2)) => {
                action.case(r1.is_zero(), || (label(), r1.to_string()));
                reduced.case(r2.is_zero(), || (label(), r2.to_string()));
            }
            Err(e) => {
                action.error(label(), &e);
                reduced.error(label(), &e);
            }
        }
    }
    let mut report = Report::new("relations");
    for chk in [central, counit, action, reduced] {
        report.push(chk);
    }
    report
}

/// `a → 0` of the induced actions with `α = 0` against the undeformed table
/// `K = −βx̄ − t̄∂x`, `M = β`, `P = ∂x`, `H = ∂t`, `C' = ∂t − (1/(2β))∂x²`,
/// symbolically in `β` and after `β = −i` (`m = ħ = 1`).
pub fn check_classical_limit(degree_cap: u32) -> Report {
    let ch = Character::reduced();
    let beta = Scalar::beta();
    let table: [(&str, LinearOperator); 4] = [
        ("K", -(LinearOperator::mult(Var::X).scale(&beta)) - LinearOperator::mult(Var::T).compose(&LinearOperator::deriv(Var::X))),
        ("M", LinearOperator::scalar(beta.clone())),
        ("P", LinearOperator::deriv(Var::X)),
        ("H", LinearOperator::deriv(Var::T)),
    ];
    let schrodinger = LinearOperator::deriv(Var::T)
        - LinearOperator::deriv(Var::X).pow(2).scale(&(Scalar::ratio(1, 2) * Scalar::power(Symbol::Beta, -1)));
    let units = Bindings::new().bind(Symbol::Beta, -GaussRational::i());
    let mut generators = Check::new("classical_limit.generators");
    let mut casimir = Check::new("classical_limit.casimir");
    let mut units_check = Check::new("classical_limit.units").with_note("beta = -i m/hbar with m = hbar = 1");
    // K with β = −i becomes (i x − t∂x), M becomes −i
    let units_table: [(&str, LinearOperator); 2] = [
        (
            "K",
            LinearOperator::mult(Var::X).scale(&Scalar::i()) - LinearOperator::mult(Var::T).compose(&LinearOperator::deriv(Var::X)),
        ),
        ("M", LinearOperator::scalar(-Scalar::i())),
    ];
    for phi in carrier_monomials(degree_cap) {
        for (g, op) in &table {
            let label = || format!("{} on {}", g, phi);
            let res = (|| {
                let lim = classical_limit(&induced_generator(&ch, g, &phi)?)?;
                Ok::<_, ActionError>(&lim - &op.apply(&phi)?)
            })();
            match res {
                Ok(r) => generators.case(r.is_zero(), || (label(), r.to_string())),
                Err(e) => generators.error(label(), e),
            }
        }
        let label = || format!("C' on {}", phi);
        let res = (|| {
            let lim = classical_limit(&reduced_casimir_action(&ch, &phi)?)?;
            Ok::<_, ActionError>(&lim - &schrodinger.apply(&phi)?)
        })();
        match res {
            Ok(r) => casimir.case(r.is_zero(), || (label(), r.to_string())),
            Err(e) => casimir.error(label(), e),
        }
        for (g, op) in &units_table {
            let label = || format!("{} on {} at beta = -i", g, phi);
            let res = (|| {
                let lim = classical_limit(&induced_generator(&ch, g, &phi)?)?;
                let lim = lim.map_coefficients(|c| c.eval(&units))?;
                Ok::<_, ActionError>(&lim - &op.apply(&phi)?)
            })();
            match res {
                Ok(r) => units_check.case(r.is_zero(), || (label(), r.to_string())),
                Err(e) => units_check.error(label(), e),
            }
        }
    }
    let mut report = Report::new("relations");
    report.push(generators);
    report.push(casimir);
    report.push(units_check);
    report
}

/// `star` is an involution, anti-multiplicative and anti-linear, and maps
/// each defining relation (including the `E^z` rules, `z = ±1, ±2`) to a
/// valid relation.
pub fn check_star_consistency() -> Report {
    let p = preset(Preset::UqKmph);
    let mut involution = Check::new("star.involution");
    let mut relations = Check::new("star.relations");
    let mut anti = Check::new("star.anti_multiplicative");
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let coefs = [Scalar::one(), Scalar::i(), Scalar::constant(GaussRational::from_ints(1, 2, -3, 1)) * Scalar::a()];
    for m in crate::hopf::enumerate_monomials(&p, 3) {
        for c in &coefs {
            let u = NCPolynomial::term(&p, m.clone(), c.clone());
            let label = || u.to_string();
            match star(&u).and_then(|s| star(&s)) {
                Ok(r) => involution.case(r == u, || (label(), r.to_string())),
                Err(e) => involution.error(label(), e),
            }
        }
    }
    let letters = relation_letters();
    for &(g, e) in &letters {
        for &(h, f) in &letters {
            if order_of(g) <= order_of(h) {
                continue;
            }
            let label = || format!("({}^{} * {}^{})*", g, e, h, f);
            let res = (|| {
                let x = NCPolynomial::generator(&p, g, e)?;
                let y = NCPolynomial::generator(&p, h, f)?;
                star(&x.multiply(&y)?)?.checked_sub(&star(&y)?.multiply(&star(&x)?)?)
            })();
            match res {
                Ok(r) => relations.case(r.is_zero(), || (label(), r.to_string())),
                Err(err) => relations.error(label(), err),
            }
        }
    }
    for _ in 0..100 {
        let u = NCPolynomial::term(&p, random_monomial(&p, &mut rng, 3), coefs[rng.gen_range(0..coefs.len())].clone());
        let v = NCPolynomial::term(&p, random_monomial(&p, &mut rng, 3), coefs[rng.gen_range(0..coefs.len())].clone());
        let label = || format!("({}) ({})", u, v);
        let res = (|| star(&u.multiply(&v)?)?.checked_sub(&star(&v)?.multiply(&star(&u)?)?))();
        match res {
            Ok(r) => anti.case(r.is_zero(), || (label(), r.to_string())),
            Err(e) => anti.error(label(), e),
        }
    }
    let mut report = Report::new("star");
    report.push(involution);
    report.push(relations);
    report.push(anti);
    report
}

/// `(α, β)` and `(0, β)` give the same action of `M, P, H, E^±1`, and
/// `K` differs by `α·id`, on `x^p t^q`, `p + q <= degree_cap`.
pub fn check_equivalence_alpha(degree_cap: u32) -> Report {
    let full = Character::symbolic();
    let zero = Character::reduced();
    let mut check = Check::new("equivalence.alpha");
    for phi in carrier_monomials(degree_cap) {
        for (g, e) in [("K", 1), ("M", 1), ("P", 1), ("H", 1), ("E", 1), ("E", -1)] {
            let label = || format!("{}^{} on {}", g, e, phi);
            let res = (|| {
                let a = induced_letter_operator(&full, g, e)?.apply(&phi)?;
                let mut b = induced_letter_operator(&zero, g, e)?.apply(&phi)?;
                if g == "K" {
                    b = &b + &phi.scale(&full.alpha);
                }
                Ok::<_, ActionError>(&a - &b)
            })();
            match res {
                Ok(r) => check.case(r.is_zero(), || (label(), r.to_string())),
                Err(err) => check.error(label(), err),
            }
        }
    }
    let mut report = Report::new("equivalence");
    report.push(check);
    report
}

#[allow(dead_code)]
fn _assert_error_conversions(e: AlgebraError) -> ActionError {
    e.into()
}
