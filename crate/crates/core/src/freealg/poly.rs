use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::display::write_sum;
use crate::error::AlgebraError;
use crate::scalar::{power_string, Scalar};

use super::presentation::Presentation;
use super::rewrite;

/// A letter of a word: generator index and exponent. Only the grouplike
/// generator may carry a negative exponent.
pub type Letter = (u8, i32);

/// Exponent per generator in presentation order; normal-ordered by construction.
///
/// Ordered by total degree (sum of absolute exponents), then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<i32>);

impl Monomial {
    pub fn new(exps: Vec<i32>) -> Self {
        Monomial(exps)
    }

    pub fn one(n: usize) -> Self {
        Monomial(alloc::vec![0; n])
    }

    pub fn exponents(&self) -> &[i32] {
        &self.0
    }

    pub fn exponent(&self, g: usize) -> i32 {
        self.0.get(g).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|e| e.unsigned_abs()).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Generators with nonzero exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e != 0).map(|(k, _)| k)
    }

    pub fn to_word(&self) -> Vec<Letter> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(k, &e)| (k as u8, e))
            .collect()
    }

    pub(crate) fn factors(&self, p: &Presentation) -> Vec<String> {
        self.0
            .iter()
            .enumerate()
            .filter_map(|(k, &e)| power_string(p.generator_name(k), e))
            .collect()
    }

    pub fn display<'a>(&'a self, p: &'a Presentation) -> impl fmt::Display + 'a {
        MonomialDisplay(self, p)
    }
}

struct MonomialDisplay<'a>(&'a Monomial, &'a Presentation);

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factors = self.0.factors(self.1);
        if factors.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&factors.join("*"))
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Finite linear combination of normal-ordered monomials with [`Scalar`]
/// coefficients. No zero coefficients are stored.
#[derive(Clone)]
pub struct NCPolynomial {
    pres: Arc<Presentation>,
    terms: BTreeMap<Monomial, Scalar>,
}

impl NCPolynomial {
    pub fn zero(p: &Arc<Presentation>) -> Self {
        NCPolynomial { pres: p.clone(), terms: BTreeMap::new() }
    }

    pub fn one(p: &Arc<Presentation>) -> Self {
        Self::constant(p, Scalar::one())
    }

    pub fn constant(p: &Arc<Presentation>, c: Scalar) -> Self {
        Self::term(p, Monomial::one(p.len()), c)
    }

    pub fn term(p: &Arc<Presentation>, m: Monomial, c: Scalar) -> Self {
        let mut out = Self::zero(p);
        out.add_term(m, c);
        out
    }

    /// The generator named `name` to the power `exp`.
    pub fn generator(p: &Arc<Presentation>, name: &str, exp: i32) -> Result<Self, AlgebraError> {
        let g = p.index_of(name).ok_or_else(|| AlgebraError::UnknownGenerator(name.to_string()))?;
        if exp < 0 && p.grouplike() != Some(g) {
            return Err(AlgebraError::NegativeExponent(name.to_string()));
        }
        let mut exps = alloc::vec![0; p.len()];
        exps[g] = exp;
        Ok(Self::term(p, Monomial::new(exps), Scalar::one()))
    }

    /// Shorthand for [`NCPolynomial::generator`] with exponent 1; panics on unknown names.
    pub fn gen(p: &Arc<Presentation>, name: &str) -> Self {
        Self::generator(p, name, 1).expect("unknown generator")
    }

    /// `E^z` for the presentation's grouplike generator.
    pub fn grouplike_power(p: &Arc<Presentation>, z: i32) -> Self {
        let e = p.grouplike().expect("presentation has no grouplike generator");
        let mut exps = alloc::vec![0; p.len()];
        exps[e] = z;
        Self::term(p, Monomial::new(exps), Scalar::one())
    }

    /// Normal-orders `coefficient · g1^e1 · g2^e2 ⋯` given by generator names.
    pub fn from_word(p: &Arc<Presentation>, word: &[(&str, i32)], coefficient: Scalar) -> Result<Self, AlgebraError> {
        let letters = word
            .iter()
            .map(|(n, e)| {
                let g = p.index_of(n).ok_or_else(|| AlgebraError::UnknownGenerator(n.to_string()))?;
                if *e < 0 && p.grouplike() != Some(g) {
                    return Err(AlgebraError::NegativeExponent(n.to_string()));
                }
                Ok((g as u8, *e))
            })
            .collect::<Result<Vec<_>, _>>()?;
        rewrite::normal_order_word(p, &letters, &coefficient)
    }

    pub(crate) fn from_terms(p: &Arc<Presentation>, terms: BTreeMap<Monomial, Scalar>) -> Self {
        debug_assert!(terms.values().all(|c| !c.is_zero()));
        NCPolynomial { pres: p.clone(), terms }
    }

    pub fn presentation(&self) -> &Arc<Presentation> {
        &self.pres
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

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Maximum total degree over the terms (0 for zero).
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(m) {
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

    fn check_same(&self, other: &NCPolynomial) -> Result<(), AlgebraError> {
        if self.pres.same_as(&other.pres) {
            Ok(())
        } else {
            Err(AlgebraError::PresentationMismatch {
                left: self.pres.name().to_string(),
                right: other.pres.name().to_string(),
            })
        }
    }

    pub fn scale(&self, c: &Scalar) -> NCPolynomial {
        let mut out = NCPolynomial::zero(&self.pres);
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v * c);
        }
        out
    }

    /// Applies `f` to every coefficient, dropping terms that become zero.
    pub fn map_coefficients<F, E>(&self, mut f: F) -> Result<NCPolynomial, E>
    where
        F: FnMut(&Scalar) -> Result<Scalar, E>,
    {
        let mut out = NCPolynomial::zero(&self.pres);
        for (m, v) in &self.terms {
            out.add_term(m.clone(), f(v)?);
        }
        Ok(out)
    }

    pub fn checked_add(&self, other: &NCPolynomial) -> Result<NCPolynomial, AlgebraError> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &NCPolynomial) -> Result<NCPolynomial, AlgebraError> {
        self.checked_add(&-other)
    }

    /// Associative product, normal-ordered.
    pub fn multiply(&self, other: &NCPolynomial) -> Result<NCPolynomial, AlgebraError> {
        self.check_same(other)?;
        let mut out = NCPolynomial::zero(&self.pres);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let prod = rewrite::multiply_monomials(&self.pres, m1, m2)?;
                let c = c1 * c2;
                for (m, v) in prod.terms {
                    out.add_term(m, &v * &c);
                }
            }
        }
        Ok(out)
    }

    /// `self·other − other·self`.
    pub fn commutator(&self, other: &NCPolynomial) -> Result<NCPolynomial, AlgebraError> {
        let uw = self.multiply(other)?;
        let wu = other.multiply(self)?;
        uw.checked_sub(&wu)
    }

    pub fn pow(&self, n: u32) -> Result<NCPolynomial, AlgebraError> {
        let mut acc = NCPolynomial::one(&self.pres);
        for _ in 0..n {
            acc = acc.multiply(self)?;
        }
        Ok(acc)
    }

    /// Image under a (anti-)multiplicative map given on letters. `image(g, e)`
    /// must return the image of the single letter `g^e`.
    pub fn map_letters<F>(
        &self,
        target: &Arc<Presentation>,
        anti: bool,
        mut image: F,
    ) -> Result<NCPolynomial, AlgebraError>
    where
        F: FnMut(usize, i32) -> Result<NCPolynomial, AlgebraError>,
    {
        let mut out = NCPolynomial::zero(target);
        for (m, c) in &self.terms {
            let mut acc = NCPolynomial::constant(target, c.clone());
            let mut letters = m.to_word();
            if anti {
                letters.reverse();
            }
            for (g, e) in letters {
                acc = acc.multiply(&image(g as usize, e)?)?;
            }
            out = out.checked_add(&acc)?;
        }
        Ok(out)
    }
}

impl PartialEq for NCPolynomial {
    fn eq(&self, other: &Self) -> bool {
        self.pres.same_as(&other.pres) && self.terms == other.terms
    }
}

impl Eq for NCPolynomial {}

impl fmt::Display for NCPolynomial {
    /// Highest monomial first; each scalar term is written out separately,
    /// coefficient symbols before generators.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut flat = Vec::new();
        for (m, c) in self.terms.iter().rev() {
            let mf = m.factors(&self.pres);
            for (gc, mut sf) in c.display_terms() {
                sf.extend(mf.iter().cloned());
                flat.push((gc, sf));
            }
        }
        write_sum(f, flat)
    }
}

impl fmt::Debug for NCPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.pres.name(), self)
    }
}

impl<'b> Add<&'b NCPolynomial> for &NCPolynomial {
    type Output = NCPolynomial;
    /// Panics on presentation mismatch; see [`NCPolynomial::checked_add`].
    fn add(self, rhs: &'b NCPolynomial) -> NCPolynomial {
        self.checked_add(rhs).expect("presentation mismatch")
    }
}

impl<'b> Sub<&'b NCPolynomial> for &NCPolynomial {
    type Output = NCPolynomial;
    fn sub(self, rhs: &'b NCPolynomial) -> NCPolynomial {
        self.checked_sub(rhs).expect("presentation mismatch")
    }
}

impl Add for NCPolynomial {
    type Output = NCPolynomial;
    fn add(self, rhs: NCPolynomial) -> NCPolynomial {
        &self + &rhs
    }
}

impl Sub for NCPolynomial {
    type Output = NCPolynomial;
    fn sub(self, rhs: NCPolynomial) -> NCPolynomial {
        &self - &rhs
    }
}

impl Neg for &NCPolynomial {
    type Output = NCPolynomial;
    fn neg(self) -> NCPolynomial {
        self.scale(&-Scalar::one())
    }
}

impl Neg for NCPolynomial {
    type Output = NCPolynomial;
    fn neg(self) -> NCPolynomial {
        -&self
    }
}

impl<'b> Mul<&'b NCPolynomial> for &NCPolynomial {
    type Output = NCPolynomial;
    /// Panics on presentation mismatch or fuel exhaustion; see [`NCPolynomial::multiply`].
    fn mul(self, rhs: &'b NCPolynomial) -> NCPolynomial {
        self.multiply(rhs).expect("noncommutative product failed")
    }
}

impl Mul for NCPolynomial {
    type Output = NCPolynomial;
    fn mul(self, rhs: NCPolynomial) -> NCPolynomial {
        &self * &rhs
    }
}

impl Mul<&Scalar> for &NCPolynomial {
    type Output = NCPolynomial;
    fn mul(self, rhs: &Scalar) -> NCPolynomial {
        self.scale(rhs)
    }
}
