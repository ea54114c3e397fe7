use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::ActionError;
use crate::scalar::{Scalar, Symbol};

use super::wavefunction::{Var, VarSet, WaveFunction};

/// Elementary operators on wavefunctions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Primitive {
    /// Multiplication by the variable.
    Mult(Var),
    /// Formal partial derivative.
    Deriv(Var),
    /// Substitution `var → var + c·a`.
    Shift(Var, i32),
}

impl Primitive {
    pub fn var(self) -> Var {
        match self {
            Primitive::Mult(v) | Primitive::Deriv(v) | Primitive::Shift(v, _) => v,
        }
    }

    pub fn apply(self, f: &WaveFunction) -> Result<WaveFunction, ActionError> {
        f.require(self.var())?;
        Ok(match self {
            Primitive::Mult(v) => f.flat_map(|e, c, out| {
                let mut e = *e;
                e.0[v.index()] += 1;
                out.add_term(e, c.clone());
            }),
            Primitive::Deriv(v) => f.flat_map(|e, c, out| {
                let k = e.get(v);
                if k > 0 {
                    let mut e = *e;
                    e.0[v.index()] -= 1;
                    out.add_term(e, c * &Scalar::int(k as i64));
                }
            }),
            Primitive::Shift(_, 0) => f.clone(),
            Primitive::Shift(v, s) => {
                let step = Scalar::int(s as i64) * Scalar::a();
                f.flat_map(|e, c, out| {
                    // (v + step)^k = Σ C(k,j) v^(k-j) step^j
                    let k = e.get(v);
                    let mut binom = Scalar::one();
                    let mut power = Scalar::one();
                    for j in 0..=k {
                        let mut ex = *e;
                        ex.0[v.index()] = k - j;
                        out.add_term(ex, &(c * &binom) * &power);
                        binom = &binom * &Scalar::ratio((k - j) as i64, (j + 1) as i64);
                        power = &power * &step;
                    }
                })
            }
        })
    }
}

/// Finite sum of `c · p₁∘p₂∘…` (rightmost primitive applied first).
#[derive(Clone, Debug, Default, PartialEq)]
pub struct LinearOperator {
    terms: Vec<(Scalar, Vec<Primitive>)>,
}

impl LinearOperator {
    pub fn zero() -> Self {
        LinearOperator { terms: Vec::new() }
    }

    pub fn identity() -> Self {
        Self::scalar(Scalar::one())
    }

    pub fn scalar(c: Scalar) -> Self {
        LinearOperator { terms: alloc::vec![(c, Vec::new())] }
    }

    pub fn primitive(p: Primitive) -> Self {
        LinearOperator { terms: alloc::vec![(Scalar::one(), alloc::vec![p])] }
    }

    pub fn mult(v: Var) -> Self {
        Self::primitive(Primitive::Mult(v))
    }

    pub fn deriv(v: Var) -> Self {
        Self::primitive(Primitive::Deriv(v))
    }

    pub fn shift(v: Var, c: i32) -> Self {
        Self::primitive(Primitive::Shift(v, c))
    }

    pub fn terms(&self) -> &[(Scalar, Vec<Primitive>)] {
        &self.terms
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        LinearOperator { terms: self.terms.iter().map(|(k, p)| (k * c, p.clone())).collect() }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &LinearOperator) -> Self {
        let mut terms = Vec::new();
        for (c1, p1) in &self.terms {
            for (c2, p2) in &other.terms {
                let mut p = p1.clone();
                p.extend_from_slice(p2);
                terms.push((c1 * c2, p));
            }
        }
        LinearOperator { terms }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::identity(), |acc, _| acc.compose(self))
    }

    /// Variables touched by any primitive.
    pub fn vars(&self) -> VarSet {
        let vs: Vec<Var> = self.terms.iter().flat_map(|(_, p)| p.iter().map(|q| q.var())).collect();
        VarSet::of(&vs)
    }

    pub fn apply(&self, f: &WaveFunction) -> Result<WaveFunction, ActionError> {
        if let Some(v) = self.vars().iter().find(|v| !f.vars().contains(*v)) {
            return Err(ActionError::UnknownVariable(v.name().into()));
        }
        let mut out = WaveFunction::zero(f.vars());
        for (c, prims) in &self.terms {
            if c.is_zero() {
                continue;
            }
            let mut g = f.clone();
            for p in prims.iter().rev() {
                g = p.apply(&g)?;
                if g.is_zero() {
                    break;
                }
            }
            out = &out + &g.scale(c);
        }
        Ok(out)
    }
}

impl Add for LinearOperator {
    type Output = LinearOperator;
    fn add(mut self, rhs: LinearOperator) -> LinearOperator {
        self.terms.extend(rhs.terms);
        self
    }
}

impl Sub for LinearOperator {
    type Output = LinearOperator;
    fn sub(self, rhs: LinearOperator) -> LinearOperator {
        self + (-rhs)
    }
}

impl Neg for LinearOperator {
    type Output = LinearOperator;
    fn neg(self) -> LinearOperator {
        self.scale(&-Scalar::one())
    }
}

impl Mul for LinearOperator {
    type Output = LinearOperator;
    fn mul(self, rhs: LinearOperator) -> LinearOperator {
        self.compose(&rhs)
    }
}

/// `(shift(+1) − shift(−1)) / (2a)`, the exact `sinh(a∂)/a`.
pub fn sinh_operator(v: Var) -> LinearOperator {
    (LinearOperator::shift(v, 1) - LinearOperator::shift(v, -1)).scale(&(Scalar::ratio(1, 2) * Scalar::power(Symbol::A, -1)))
}

/// `(2 − shift(+1) − shift(−1)) / (2a²)`, the exact `(1 − cosh(a∂))/a²`.
pub fn one_minus_cosh_operator(v: Var) -> LinearOperator {
    (LinearOperator::scalar(Scalar::int(2)) - LinearOperator::shift(v, 1) - LinearOperator::shift(v, -1))
        .scale(&(Scalar::ratio(1, 2) * Scalar::power(Symbol::A, -2)))
}

fn assert_no_new_poles(input: &WaveFunction, output: &WaveFunction) {
    assert!(
        input.min_a_exponent() < 0 || output.min_a_exponent() >= 0,
        "q-difference quotient left a pole in a"
    );
}

/// `sinh(a∂_var)/a` applied to `f`.
pub fn sinh_shift_over_a(v: Var, f: &WaveFunction) -> Result<WaveFunction, ActionError> {
    let out = sinh_operator(v).apply(f)?;
    assert_no_new_poles(f, &out);
    Ok(out)
}

/// `(1 − cosh(a∂_var))/a²` applied to `f`.
pub fn one_minus_cosh_over_a2(v: Var, f: &WaveFunction) -> Result<WaveFunction, ActionError> {
    let out = one_minus_cosh_operator(v).apply(f)?;
    assert_no_new_poles(f, &out);
    Ok(out)
}

fn factorial(n: u32) -> Scalar {
    Scalar::from((1..=n as i64).product::<i64>())
}

fn binomial(n: u32, k: u32) -> Scalar {
    let mut acc = Scalar::one();
    for j in 0..k {
        acc = &acc * &Scalar::ratio((n - j) as i64, (j + 1) as i64);
    }
    acc
}

/// `[cosh(a(∂x − v̄∂μ)) − cosh(a∂x)] / (a²∂μ)` as the finite series
/// `Σ_{m even ≥ 2} a^{m−2}/m! Σ_{n=1..m} C(m,n)(−1)ⁿ v̄ⁿ ∂μ^{n−1} ∂x^{m−n}`.
pub fn cosh_diff_over_a2_dmu(f: &WaveFunction) -> Result<WaveFunction, ActionError> {
    for v in [Var::V, Var::Mu, Var::X] {
        f.require(v)?;
    }
    let max_m = f.degree_in(Var::X) + f.degree_in(Var::Mu) + 1;
    let mut out = WaveFunction::zero(f.vars());
    let mut m = 2;
    while m <= max_m {
        let outer = &Scalar::power(Symbol::A, m as i32 - 2) * &factorial(m).recip().expect("nonzero");
        for n in 1..=m {
            let sign = if n % 2 == 0 { Scalar::one() } else { -Scalar::one() };
            let c = &(&outer * &binomial(m, n)) * &sign;
            let op = LinearOperator::mult(Var::V)
                .pow(n)
                .compose(&LinearOperator::deriv(Var::Mu).pow(n - 1))
                .compose(&LinearOperator::deriv(Var::X).pow(m - n))
                .scale(&c);
            out = &out + &op.apply(f)?;
        }
        m += 2;
    }
    Ok(out)
}

/// `exp(z·a·D) f` for the nilpotent operator `D = ∂x − v̄∂μ`; the series
/// stops once `D^k f = 0`.
pub fn exp_shift_dx_minus_v_dmu(z: i32, f: &WaveFunction) -> Result<WaveFunction, ActionError> {
    for v in [Var::V, Var::Mu, Var::X] {
        f.require(v)?;
    }
    let d = LinearOperator::deriv(Var::X) - LinearOperator::mult(Var::V).compose(&LinearOperator::deriv(Var::Mu));
    let step = Scalar::int(z as i64) * Scalar::a();
    let mut out = f.clone();
    let mut term = f.clone();
    let mut k = 1u32;
    loop {
        term = d.apply(&term)?.scale(&(&step * &Scalar::ratio(1, k as i64)));
        if term.is_zero() {
            break;
        }
        out = &out + &term;
        k += 1;
    }
    Ok(out)
}
