use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::display::write_sum;
use crate::error::{ActionError, ScalarError};
use crate::scalar::{power_string, Scalar};

/// A variable of the commutative algebra of wavefunctions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    V,
    Mu,
    X,
    T,
}

impl Var {
    pub const ALL: [Var; 4] = [Var::V, Var::Mu, Var::X, Var::T];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::V => "v",
            Var::Mu => "mu",
            Var::X => "x",
            Var::T => "t",
        }
    }

    pub fn from_name(name: &str) -> Option<Var> {
        Var::ALL.into_iter().find(|v| v.name() == name)
    }
}

/// A subset of `{v, mu, x, t}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VarSet(u8);

impl VarSet {
    pub const ALL: VarSet = VarSet(0b1111);
    /// `{x, t}`, the carrier of the induced representations.
    pub const XT: VarSet = VarSet(0b1100);
    pub const EMPTY: VarSet = VarSet(0);

    pub fn of(vars: &[Var]) -> VarSet {
        VarSet(vars.iter().fold(0, |m, v| m | (1 << v.index())))
    }

    pub fn contains(self, v: Var) -> bool {
        self.0 & (1 << v.index()) != 0
    }

    pub fn union(self, other: VarSet) -> VarSet {
        VarSet(self.0 | other.0)
    }

    pub fn is_subset(self, other: VarSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = Var> {
        Var::ALL.into_iter().filter(move |v| self.contains(*v))
    }
}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.iter().map(Var::name).collect();
        write!(f, "{{{}}}", names.join(", "))
    }
}

/// Exponents of `v, mu, x, t`, ordered by total degree, then lexicographically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct VarExponents(pub [u32; 4]);

impl VarExponents {
    pub fn of(v: Var, e: u32) -> Self {
        let mut x = [0; 4];
        x[v.index()] = e;
        VarExponents(x)
    }

    pub fn get(&self, v: Var) -> u32 {
        self.0[v.index()]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn support(&self) -> VarSet {
        VarSet::of(&Var::ALL.into_iter().filter(|v| self.get(*v) > 0).collect::<Vec<_>>())
    }

    pub(crate) fn factors(&self) -> Vec<String> {
        Var::ALL
            .into_iter()
            .filter_map(|v| power_string(v.name(), self.get(v) as i32))
            .collect()
    }
}

impl Ord for VarExponents {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for VarExponents {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Commutative polynomial in a subset of `{v, mu, x, t}` with [`Scalar`]
/// coefficients. Displayed highest term first, e.g. `3*x^2*t - a^2*t`.
#[derive(Clone, PartialEq, Eq)]
pub struct WaveFunction {
    vars: VarSet,
    terms: BTreeMap<VarExponents, Scalar>,
}

impl WaveFunction {
    pub fn zero(vars: VarSet) -> Self {
        WaveFunction { vars, terms: BTreeMap::new() }
    }

    pub fn one(vars: VarSet) -> Self {
        Self::constant(vars, Scalar::one())
    }

    pub fn constant(vars: VarSet, c: Scalar) -> Self {
        let mut w = Self::zero(vars);
        w.add_term(VarExponents::default(), c);
        w
    }

    pub fn monomial(vars: VarSet, exps: VarExponents, c: Scalar) -> Result<Self, ActionError> {
        if let Some(v) = exps.support().iter().find(|v| !vars.contains(*v)) {
            return Err(ActionError::UnknownVariable(v.name().into()));
        }
        let mut w = Self::zero(vars);
        w.add_term(exps, c);
        Ok(w)
    }

    /// The coordinate function `v`.
    pub fn var(vars: VarSet, v: Var) -> Result<Self, ActionError> {
        Self::monomial(vars, VarExponents::of(v, 1), Scalar::one())
    }

    /// `c · v^e · …` from a list of `(variable, exponent)` pairs.
    pub fn from_powers(vars: VarSet, powers: &[(Var, u32)], c: Scalar) -> Result<Self, ActionError> {
        let mut e = VarExponents::default();
        for &(v, k) in powers {
            e.0[v.index()] += k;
        }
        Self::monomial(vars, e, c)
    }

    pub fn vars(&self) -> VarSet {
        self.vars
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&VarExponents, &Scalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, e: &VarExponents) -> Scalar {
        self.terms.get(e).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|e| e.get(v)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.degree()).max().unwrap_or(0)
    }

    pub(crate) fn add_term(&mut self, e: VarExponents, c: Scalar) {
        if c.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Same polynomial over a different variable set.
    pub fn with_vars(&self, vars: VarSet) -> Result<Self, ActionError> {
        for e in self.terms.keys() {
            if let Some(v) = e.support().iter().find(|v| !vars.contains(*v)) {
                return Err(ActionError::UnknownVariable(v.name().into()));
            }
        }
        Ok(WaveFunction { vars, terms: self.terms.clone() })
    }

    pub fn require(&self, v: Var) -> Result<(), ActionError> {
        if self.vars.contains(v) {
            Ok(())
        } else {
            Err(ActionError::UnknownVariable(v.name().into()))
        }
    }

    pub fn scale(&self, c: &Scalar) -> WaveFunction {
        let mut out = WaveFunction::zero(self.vars);
        for (e, x) in &self.terms {
            out.add_term(*e, x * c);
        }
        out
    }

    pub fn map_coefficients<F>(&self, mut f: F) -> Result<WaveFunction, ScalarError>
    where
        F: FnMut(&Scalar) -> Result<Scalar, ScalarError>,
    {
        let mut out = WaveFunction::zero(self.vars);
        for (e, c) in &self.terms {
            out.add_term(*e, f(c)?);
        }
        Ok(out)
    }

    /// Coefficientwise `a → 0`; fails on a pole.
    pub fn at_a_zero(&self) -> Result<WaveFunction, ScalarError> {
        self.map_coefficients(Scalar::at_a_zero)
    }

    pub fn multiply(&self, other: &WaveFunction) -> WaveFunction {
        let mut out = WaveFunction::zero(self.vars.union(other.vars));
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let mut e = e1.0;
                for (k, x) in e.iter_mut().enumerate() {
                    *x += e2.0[k];
                }
                out.add_term(VarExponents(e), c1 * c2);
            }
        }
        out
    }

    /// Map on terms: every `(e, c)` contributes `f(e, c)`.
    pub(crate) fn flat_map<F>(&self, mut f: F) -> WaveFunction
    where
        F: FnMut(&VarExponents, &Scalar, &mut WaveFunction),
    {
        let mut out = WaveFunction::zero(self.vars);
        for (e, c) in &self.terms {
            f(e, c, &mut out);
        }
        out
    }

    /// Smallest exponent of `a` among all coefficients (0 for the zero polynomial).
    pub fn min_a_exponent(&self) -> i32 {
        self.terms
            .values()
            .map(|c| c.min_exponent(crate::scalar::Symbol::A))
            .min()
            .unwrap_or(0)
    }
}

impl fmt::Display for WaveFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut flat = Vec::new();
        for (e, c) in self.terms.iter().rev() {
            let vf = e.factors();
            for (gc, mut sf) in c.display_terms() {
                sf.extend(vf.iter().cloned());
                flat.push((gc, sf));
            }
        }
        write_sum(f, flat)
    }
}

impl fmt::Debug for WaveFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.vars, self)
    }
}

impl<'b> Add<&'b WaveFunction> for &WaveFunction {
    type Output = WaveFunction;
    fn add(self, rhs: &'b WaveFunction) -> WaveFunction {
        let mut out = WaveFunction { vars: self.vars.union(rhs.vars), terms: self.terms.clone() };
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<'b> Sub<&'b WaveFunction> for &WaveFunction {
    type Output = WaveFunction;
    fn sub(self, rhs: &'b WaveFunction) -> WaveFunction {
        self + &(-rhs)
    }
}

impl Neg for &WaveFunction {
    type Output = WaveFunction;
    fn neg(self) -> WaveFunction {
        self.scale(&-Scalar::one())
    }
}

impl<'b> Mul<&'b WaveFunction> for &WaveFunction {
    type Output = WaveFunction;
    fn mul(self, rhs: &'b WaveFunction) -> WaveFunction {
        self.multiply(rhs)
    }
}

impl Add for WaveFunction {
    type Output = WaveFunction;
    fn add(self, rhs: WaveFunction) -> WaveFunction {
        &self + &rhs
    }
}

impl Sub for WaveFunction {
    type Output = WaveFunction;
    fn sub(self, rhs: WaveFunction) -> WaveFunction {
        &self - &rhs
    }
}
