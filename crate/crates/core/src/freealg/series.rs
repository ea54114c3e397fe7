//! Truncated formal power series in a central parameter `s` with
//! noncommutative coefficients, and the exact check of the conjugation
//! identities for `e^{sK}`.

use alloc::format;
use alloc::string::ToString;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::AlgebraError;
use crate::report::{Check, Report};
use crate::scalar::{Scalar, Symbol};

use super::poly::NCPolynomial;
use super::presentation::Presentation;

/// `Σ_{n ≤ order} sⁿ · coefficients[n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesInS {
    coefficients: Vec<NCPolynomial>,
}

impl SeriesInS {
    pub fn zero(p: &Arc<Presentation>, order: usize) -> Self {
        SeriesInS { coefficients: alloc::vec![NCPolynomial::zero(p); order + 1] }
    }

    /// `u · s^power`, truncated at `order`.
    pub fn monomial(u: NCPolynomial, power: usize, order: usize) -> Self {
        let mut out = Self::zero(u.presentation(), order);
        if power <= order {
            out.coefficients[power] = u;
        }
        out
    }

    pub fn constant(u: NCPolynomial, order: usize) -> Self {
        Self::monomial(u, 0, order)
    }

    pub fn order(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficient(&self, n: usize) -> &NCPolynomial {
        &self.coefficients[n]
    }

    pub fn coefficients(&self) -> &[NCPolynomial] {
        &self.coefficients
    }

    pub fn checked_add(&self, other: &SeriesInS) -> Result<SeriesInS, AlgebraError> {
        let order = self.order().min(other.order());
        let coefficients = (0..=order)
            .map(|n| self.coefficients[n].checked_add(&other.coefficients[n]))
            .collect::<Result<_, _>>()?;
        Ok(SeriesInS { coefficients })
    }

    pub fn checked_sub(&self, other: &SeriesInS) -> Result<SeriesInS, AlgebraError> {
        self.checked_add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, c: &Scalar) -> SeriesInS {
        SeriesInS { coefficients: self.coefficients.iter().map(|u| u.scale(c)).collect() }
    }

    /// Cauchy product truncated at the smaller order.
    pub fn multiply(&self, other: &SeriesInS) -> Result<SeriesInS, AlgebraError> {
        let order = self.order().min(other.order());
        let p = self.coefficients[0].presentation();
        let mut coefficients = alloc::vec![NCPolynomial::zero(p); order + 1];
        for i in 0..=order {
            if self.coefficients[i].is_zero() {
                continue;
            }
            for j in 0..=(order - i) {
                if other.coefficients[j].is_zero() {
                    continue;
                }
                let prod = self.coefficients[i].multiply(&other.coefficients[j])?;
                coefficients[i + j] = coefficients[i + j].checked_add(&prod)?;
            }
        }
        Ok(SeriesInS { coefficients })
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(NCPolynomial::is_zero)
    }
}

/// `Σ_{n ≤ order} sⁿ uⁿ / n!`.
pub fn exp_truncated(u: &NCPolynomial, order: usize) -> Result<SeriesInS, AlgebraError> {
    let p = u.presentation();
    let mut coefficients = Vec::with_capacity(order + 1);
    let mut term = NCPolynomial::one(p);
    for n in 0..=order {
        if n > 0 {
            term = term.multiply(u)?.scale(&Scalar::ratio(1, n as i64));
        }
        coefficients.push(term.clone());
    }
    Ok(SeriesInS { coefficients })
}

fn factorial(n: usize) -> i64 {
    (1..=n as i64).product()
}

/// `(cosh(a(P − sM)) − cosh(aP)) / (a² M)` as a series in `s`:
/// `Σ_{k≥1} sᵏ a^{k−2} M^{k−1} ((−1)ᵏ E + E⁻¹) / (2·k!)`.
pub fn cosh_difference_series(p: &Arc<Presentation>, order: usize) -> Result<SeriesInS, AlgebraError> {
    let mut out = SeriesInS::zero(p, order);
    let m = NCPolynomial::gen(p, "M");
    let e = NCPolynomial::grouplike_power(p, 1);
    let e_inv = NCPolynomial::grouplike_power(p, -1);
    for k in 1..=order {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let bracket = e.scale(&Scalar::int(sign)).checked_add(&e_inv)?;
        let coef = Scalar::power(Symbol::A, k as i32 - 2) * Scalar::ratio(1, 2 * factorial(k));
        out.coefficients[k] = m.pow(k as u32 - 1)?.multiply(&bracket)?.scale(&coef);
    }
    Ok(out)
}

/// `Σ sⁿ adⁿ(φ)/n!` with `ad(x) = x·K − K·x`.
fn ad_exponential(phi: &NCPolynomial, k: &NCPolynomial, order: usize) -> Result<SeriesInS, AlgebraError> {
    let p = phi.presentation();
    let mut out = SeriesInS::zero(p, order);
    let mut cur = phi.clone();
    for n in 0..=order {
        if n > 0 {
            cur = cur.commutator(k)?.scale(&Scalar::ratio(1, n as i64));
        }
        out.coefficients[n] = cur.clone();
    }
    Ok(out)
}

fn compare(check: &mut Check, lhs: &SeriesInS, rhs: &SeriesInS) {
    for n in 0..=lhs.order().min(rhs.order()) {
        let residual = lhs.coefficient(n).checked_sub(rhs.coefficient(n));
        match residual {
            Ok(r) => check.case(r.is_zero(), || (format!("order s^{}", n), r.to_string())),
            Err(e) => check.error(format!("order s^{}", n), e),
        }
    }
}

/// Verifies, coefficient by coefficient up to `s^order` in `uq_kmph`:
///
/// * `M e^{sK} = e^{sK} M`
/// * `P e^{sK} = e^{sK} (P − sM)`
/// * `H e^{sK} = e^{sK} (H + (cosh(a(P − sM)) − cosh(aP)) / (a² M))`
/// * `φ e^{sK} = e^{sK} e^{s·ad_K}(φ)` for `φ ∈ {M, P, H}`, `ad_K(x) = xK − Kx`.
pub fn verify_flow_lemma(p: &Arc<Presentation>, order: usize) -> Report {
    let mut report = Report::new("lemma");
    let result = (|| -> Result<(), AlgebraError> {
        let k = NCPolynomial::gen(p, "K");
        let m = NCPolynomial::gen(p, "M");
        let pp = NCPolynomial::gen(p, "P");
        let h = NCPolynomial::gen(p, "H");
        let exp_k = exp_truncated(&k, order)?;
        let c = |u: &NCPolynomial| SeriesInS::constant(u.clone(), order);

        let mut check = Check::new("lemma.M");
        compare(&mut check, &c(&m).multiply(&exp_k)?, &exp_k.multiply(&c(&m))?);
        report.push(check);

        let mut check = Check::new("lemma.P");
        let shifted = c(&pp).checked_sub(&SeriesInS::monomial(m.clone(), 1, order))?;
        compare(&mut check, &c(&pp).multiply(&exp_k)?, &exp_k.multiply(&shifted)?);
        report.push(check);

        let mut check = Check::new("lemma.H");
        let shifted = c(&h).checked_add(&cosh_difference_series(p, order)?)?;
        compare(&mut check, &c(&h).multiply(&exp_k)?, &exp_k.multiply(&shifted)?);
        report.push(check);

        let mut check = Check::new("lemma.ad_conjugation");
        for phi in [&m, &pp, &h] {
            compare(&mut check, &c(phi).multiply(&exp_k)?, &exp_k.multiply(&ad_exponential(phi, &k, order)?)?);
        }
        report.push(check);
        Ok(())
    })();
    if let Err(e) = result {
        let mut check = Check::new("lemma.error");
        check.error(format!("order {}", order), e);
        report.push(check);
    }
    report
}
