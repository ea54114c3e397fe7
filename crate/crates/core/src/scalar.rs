//! Exact coefficients: Gaussian rationals and Laurent polynomials in the
//! formal symbols `a` (deformation parameter), `alpha` and `beta` (character
//! parameters).
//!
//! `a` and `beta` admit negative exponents; `alpha` is kept polynomial.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::ScalarError;

/// Gaussian rational `re + im·i`, both parts reduced with positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussRational {
    re: BigRational,
    im: BigRational,
}

impl GaussRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussRational { re, im }
    }

    pub fn from_ints(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> Self {
        GaussRational {
            re: BigRational::new(re_num.into(), re_den.into()),
            im: BigRational::new(im_num.into(), im_den.into()),
        }
    }

    pub fn real(r: BigRational) -> Self {
        GaussRational { re: r, im: BigRational::zero() }
    }

    pub fn int(n: i64) -> Self {
        Self::real(BigRational::from_integer(n.into()))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Self::real(BigRational::new(num.into(), den.into()))
    }

    /// Real rational from decimal digit strings; `None` on malformed input
    /// or a zero denominator.
    pub fn from_decimal(num: &str, den: Option<&str>) -> Option<Self> {
        let parse = |d: &str| BigInt::parse_bytes(d.as_bytes(), 10);
        let n = parse(num)?;
        let d = match den {
            Some(d) => parse(d)?,
            None => BigInt::one(),
        };
        if d.is_zero() {
            return None;
        }
        Some(Self::real(BigRational::new(n, d)))
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussRational { re: BigRational::zero(), im: BigRational::one() }
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRational { re: self.re.clone(), im: -self.im.clone() }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let norm = &self.re * &self.re + &self.im * &self.im;
        Some(GaussRational { re: &self.re / &norm, im: -(&self.im / &norm) })
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (rational_to_f64(&self.re), rational_to_f64(&self.im))
    }
}

fn rational_to_f64(r: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

impl Zero for GaussRational {
    fn zero() -> Self {
        GaussRational::default()
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussRational {
    fn one() -> Self {
        GaussRational::int(1)
    }
}

impl From<i64> for GaussRational {
    fn from(n: i64) -> Self {
        GaussRational::int(n)
    }
}

impl From<BigRational> for GaussRational {
    fn from(r: BigRational) -> Self {
        GaussRational::real(r)
    }
}

impl Add for GaussRational {
    type Output = GaussRational;
    fn add(self, rhs: Self) -> Self {
        GaussRational { re: self.re + rhs.re, im: self.im + rhs.im }
    }
}

impl<'b> Add<&'b GaussRational> for &GaussRational {
    type Output = GaussRational;
    fn add(self, rhs: &'b GaussRational) -> GaussRational {
        GaussRational { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl Sub for GaussRational {
    type Output = GaussRational;
    fn sub(self, rhs: Self) -> Self {
        GaussRational { re: self.re - rhs.re, im: self.im - rhs.im }
    }
}

impl Neg for GaussRational {
    type Output = GaussRational;
    fn neg(self) -> Self {
        GaussRational { re: -self.re, im: -self.im }
    }
}

impl<'b> Mul<&'b GaussRational> for &GaussRational {
    type Output = GaussRational;
    fn mul(self, rhs: &'b GaussRational) -> GaussRational {
        if self.im.is_zero() && rhs.im.is_zero() {
            return GaussRational::real(&self.re * &rhs.re);
        }
        GaussRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Mul for GaussRational {
    type Output = GaussRational;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl fmt::Debug for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for GaussRational {
    /// `3/2`, `-i`, `1/2*i`, `(3/2 - 1/2*i)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write_imag(f, &self.im)
        } else {
            write!(f, "({}", self.re)?;
            if self.im.is_negative() {
                f.write_str(" - ")?;
                write_imag(f, &-self.im.clone())?;
            } else {
                f.write_str(" + ")?;
                write_imag(f, &self.im)?;
            }
            f.write_str(")")
        }
    }
}

fn write_imag(f: &mut fmt::Formatter<'_>, im: &BigRational) -> fmt::Result {
    if im.is_one() {
        f.write_str("i")
    } else if (-im.clone()).is_one() {
        f.write_str("-i")
    } else {
        write!(f, "{}*i", im)
    }
}

/// A coefficient symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    A,
    Alpha,
    Beta,
}

impl Symbol {
    pub const ALL: [Symbol; 3] = [Symbol::A, Symbol::Alpha, Symbol::Beta];

    pub fn index(self) -> usize {
        match self {
            Symbol::A => 0,
            Symbol::Alpha => 1,
            Symbol::Beta => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Symbol::A => "a",
            Symbol::Alpha => "alpha",
            Symbol::Beta => "beta",
        }
    }

    pub fn from_name(name: &str) -> Option<Symbol> {
        match name {
            "a" => Some(Symbol::A),
            "alpha" => Some(Symbol::Alpha),
            "beta" => Some(Symbol::Beta),
            _ => None,
        }
    }

    /// Only `a` and `beta` may carry negative exponents.
    pub fn admits_negative_powers(self) -> bool {
        !matches!(self, Symbol::Alpha)
    }
}

/// Exponent vector over `(a, alpha, beta)`, ordered graded-lexicographically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct ScalarExponents(pub [i32; 3]);

impl ScalarExponents {
    pub fn of(symbol: Symbol, power: i32) -> Self {
        let mut e = [0; 3];
        e[symbol.index()] = power;
        ScalarExponents(e)
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    pub fn get(&self, symbol: Symbol) -> i32 {
        self.0[symbol.index()]
    }

    pub fn is_zero(&self) -> bool {
        self.0 == [0; 3]
    }

    fn combine(&self, other: &Self, sign: i32) -> Option<Self> {
        let mut out = [0; 3];
        for k in 0..3 {
            out[k] = self.0[k].checked_add(other.0[k].checked_mul(sign)?)?;
        }
        Some(ScalarExponents(out))
    }

    /// Factors as display strings, e.g. `["a^-1", "beta^2"]`.
    pub fn factors(&self) -> Vec<String> {
        Symbol::ALL
            .iter()
            .filter_map(|&s| power_string(s.name(), self.get(s)))
            .collect()
    }
}

pub(crate) fn power_string(name: &str, exp: i32) -> Option<String> {
    match exp {
        0 => None,
        1 => Some(name.to_string()),
        e => Some(alloc::format!("{}^{}", name, e)),
    }
}

impl Ord for ScalarExponents {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ScalarExponents {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Laurent polynomial in `a`, `beta` (polynomial in `alpha`) with Gaussian
/// rational coefficients. No zero coefficients are ever stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    terms: BTreeMap<ScalarExponents, GaussRational>,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::constant(GaussRational::one())
    }

    pub fn int(n: i64) -> Self {
        Scalar::constant(GaussRational::int(n))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Scalar::constant(GaussRational::ratio(num, den))
    }

    pub fn i() -> Self {
        Scalar::constant(GaussRational::i())
    }

    pub fn constant(c: GaussRational) -> Self {
        Scalar::monomial(c, ScalarExponents::default())
    }

    /// `c · a^e0 · alpha^e1 · beta^e2`.
    ///
    /// Panics if the `alpha` exponent is negative.
    pub fn monomial(c: GaussRational, exps: ScalarExponents) -> Self {
        assert!(exps.get(Symbol::Alpha) >= 0, "alpha must not carry a negative exponent");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        Scalar { terms }
    }

    pub fn symbol(s: Symbol) -> Self {
        Scalar::power(s, 1)
    }

    pub fn power(s: Symbol, exp: i32) -> Self {
        Scalar::monomial(GaussRational::one(), ScalarExponents::of(s, exp))
    }

    pub fn a() -> Self {
        Scalar::symbol(Symbol::A)
    }

    pub fn alpha() -> Self {
        Scalar::symbol(Symbol::Alpha)
    }

    pub fn beta() -> Self {
        Scalar::symbol(Symbol::Beta)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ScalarExponents, &GaussRational)> {
        self.terms.iter()
    }

    /// The coefficient if `self` has no symbolic part (zero counts as constant).
    pub fn as_constant(&self) -> Option<GaussRational> {
        match self.terms.len() {
            0 => Some(GaussRational::zero()),
            1 => self.terms.get(&ScalarExponents::default()).cloned(),
            _ => None,
        }
    }

    pub fn single_term(&self) -> Option<(&ScalarExponents, &GaussRational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// Smallest exponent of `s` over all terms (0 for the zero scalar).
    pub fn min_exponent(&self, s: Symbol) -> i32 {
        self.terms.keys().map(|e| e.get(s)).min().unwrap_or(0)
    }

    pub fn max_exponent(&self, s: Symbol) -> i32 {
        self.terms.keys().map(|e| e.get(s)).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &GaussRational) -> Scalar {
        if c.is_zero() {
            return Scalar::zero();
        }
        Scalar { terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect() }
    }

    /// Complex conjugation of the coefficients; the symbols are treated as real.
    pub fn conj(&self) -> Scalar {
        Scalar { terms: self.terms.iter().map(|(e, v)| (*e, v.conj())).collect() }
    }

    fn add_term(&mut self, exps: ScalarExponents, c: GaussRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Exact division by a single-term scalar.
    pub fn div_monomial(&self, m: &Scalar) -> Result<Scalar, ScalarError> {
        let (mexp, mc) = m.single_term().ok_or(ScalarError::NotMonomial { len: m.len() })?;
        let inv = mc.recip().ok_or(ScalarError::DivisionByZero)?;
        let mut out = Scalar::zero();
        for (e, c) in &self.terms {
            let q = e.combine(mexp, -1).ok_or(ScalarError::ExponentOverflow)?;
            if q.get(Symbol::Alpha) < 0 {
                return Err(ScalarError::NegativeAlpha);
            }
            out.add_term(q, c * &inv);
        }
        Ok(out)
    }

    /// Inverse of a single-term scalar.
    pub fn recip(&self) -> Result<Scalar, ScalarError> {
        Scalar::one().div_monomial(self)
    }

    /// Substitutes symbols according to `bindings` and re-canonicalizes.
    pub fn eval(&self, bindings: &Bindings) -> Result<Scalar, ScalarError> {
        let mut out = Scalar::zero();
        for (e, c) in &self.terms {
            let mut acc = Scalar::constant(c.clone());
            let mut kept = [0i32; 3];
            for s in Symbol::ALL {
                let exp = e.get(s);
                if exp == 0 {
                    continue;
                }
                match bindings.get(s) {
                    None => {
                        let cur = kept[s.index()];
                        kept[s.index()] = cur.checked_add(exp).ok_or(ScalarError::ExponentOverflow)?;
                    }
                    Some(Binding::Value(v)) => {
                        if v.is_zero() {
                            if exp < 0 {
                                return Err(ScalarError::Pole {
                                    symbol: s.name(),
                                    term: term_string(e, c),
                                });
                            }
                            acc = Scalar::zero();
                        } else {
                            acc = acc.scale(&gauss_pow(v, exp));
                        }
                    }
                    Some(Binding::Symbol(t)) => {
                        let cur = kept[t.index()];
                        kept[t.index()] = cur.checked_add(exp).ok_or(ScalarError::ExponentOverflow)?;
                    }
                }
            }
            if acc.is_zero() {
                continue;
            }
            if kept[Symbol::Alpha.index()] < 0 {
                return Err(ScalarError::NegativeAlpha);
            }
            let kept = ScalarExponents(kept);
            for (ae, ac) in acc.terms {
                let ne = ae.combine(&kept, 1).ok_or(ScalarError::ExponentOverflow)?;
                out.add_term(ne, ac);
            }
        }
        Ok(out)
    }

    /// Convenience: evaluate `a → 0`.
    pub fn at_a_zero(&self) -> Result<Scalar, ScalarError> {
        self.eval(&Bindings::new().bind(Symbol::A, GaussRational::zero()))
    }

    /// Display strings for each term, highest graded-lex first: `(coefficient, symbol factors)`.
    pub(crate) fn display_terms(&self) -> impl Iterator<Item = (&GaussRational, Vec<String>)> {
        self.terms.iter().rev().map(|(e, c)| (c, e.factors()))
    }
}

fn term_string(e: &ScalarExponents, c: &GaussRational) -> String {
    let mut s = String::new();
    crate::display::write_sum(&mut s, core::iter::once((c, e.factors()))).ok();
    s
}

fn gauss_pow(v: &GaussRational, exp: i32) -> GaussRational {
    let base = if exp < 0 { v.recip().expect("nonzero base") } else { v.clone() };
    let mut acc = GaussRational::one();
    for _ in 0..exp.unsigned_abs() {
        acc = &acc * &base;
    }
    acc
}

/// Value assigned to a symbol by [`Scalar::eval`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Binding {
    Value(GaussRational),
    Symbol(Symbol),
}

/// Partial map from symbols to values or other symbols.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Bindings {
    map: [Option<Binding>; 3],
}

impl Bindings {
    pub fn new() -> Self {
        Bindings::default()
    }

    pub fn bind(mut self, s: Symbol, v: GaussRational) -> Self {
        self.map[s.index()] = Some(Binding::Value(v));
        self
    }

    pub fn rename(mut self, s: Symbol, to: Symbol) -> Self {
        self.map[s.index()] = Some(Binding::Symbol(to));
        self
    }

    pub fn get(&self, s: Symbol) -> Option<&Binding> {
        self.map[s.index()].as_ref()
    }
}

impl From<GaussRational> for Scalar {
    fn from(c: GaussRational) -> Self {
        Scalar::constant(c)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl From<BigInt> for Scalar {
    fn from(n: BigInt) -> Self {
        Scalar::constant(GaussRational::real(BigRational::from_integer(n)))
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c.clone());
        }
    }
}

impl<'b> Add<&'b Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'b Scalar) -> Scalar {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(mut self, rhs: Scalar) -> Scalar {
        self += &rhs;
        self
    }
}

impl<'b> Sub<&'b Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'b Scalar) -> Scalar {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(mut self, rhs: Scalar) -> Scalar {
        self -= &rhs;
        self
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect() }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -self.clone()
    }
}

impl<'b> Mul<&'b Scalar> for &Scalar {
    type Output = Scalar;
    /// Panics on exponent overflow.
    fn mul(self, rhs: &'b Scalar) -> Scalar {
        let mut out = Scalar::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e = e1.combine(e2, 1).expect("scalar exponent overflow");
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl<'b> Div<&'b Scalar> for &Scalar {
    type Output = Scalar;
    /// Division by a single-term scalar; panics otherwise. See [`Scalar::div_monomial`].
    fn div(self, rhs: &'b Scalar) -> Scalar {
        self.div_monomial(rhs).expect("division by a non-monomial scalar")
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::display::write_sum(f, self.display_terms())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
