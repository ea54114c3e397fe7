use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::display::write_sum;
use crate::error::AlgebraError;
use crate::scalar::Scalar;

use super::poly::{Monomial, NCPolynomial};
use super::presentation::Presentation;

/// Finite sum of `c · left ⊗ right` with normal-ordered legs.
#[derive(Clone)]
pub struct TensorElement {
    pres: Arc<Presentation>,
    terms: BTreeMap<(Monomial, Monomial), Scalar>,
}

impl TensorElement {
    pub fn zero(p: &Arc<Presentation>) -> Self {
        TensorElement { pres: p.clone(), terms: BTreeMap::new() }
    }

    pub fn one(p: &Arc<Presentation>) -> Self {
        let mut t = Self::zero(p);
        t.add_term(Monomial::one(p.len()), Monomial::one(p.len()), Scalar::one());
        t
    }

    /// `left ⊗ right` expanded bilinearly.
    pub fn pure(left: &NCPolynomial, right: &NCPolynomial) -> Self {
        let mut t = Self::zero(left.presentation());
        for (l, cl) in left.terms() {
            for (r, cr) in right.terms() {
                t.add_term(l.clone(), r.clone(), cl * cr);
            }
        }
        t
    }

    pub fn presentation(&self) -> &Arc<Presentation> {
        &self.pres
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Monomial, &Scalar)> {
        self.terms.iter().map(|((l, r), c)| (l, r, c))
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

    pub(crate) fn add_term(&mut self, l: Monomial, r: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry((l, r)) {
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

    fn check_same(&self, other: &TensorElement) -> Result<(), AlgebraError> {
        if self.pres.same_as(&other.pres) {
            Ok(())
        } else {
            Err(AlgebraError::PresentationMismatch {
                left: self.pres.name().to_string(),
                right: other.pres.name().to_string(),
            })
        }
    }

    pub fn checked_add(&self, other: &TensorElement) -> Result<TensorElement, AlgebraError> {
        self.check_same(other)?;
        let mut out = self.clone();
        for ((l, r), c) in &other.terms {
            out.add_term(l.clone(), r.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &TensorElement) -> Result<TensorElement, AlgebraError> {
        self.checked_add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, c: &Scalar) -> TensorElement {
        let mut out = TensorElement::zero(&self.pres);
        for ((l, r), v) in &self.terms {
            out.add_term(l.clone(), r.clone(), v * c);
        }
        out
    }

    /// Legwise product `(a ⊗ b)(c ⊗ d) = ac ⊗ bd`.
    pub fn multiply(&self, other: &TensorElement) -> Result<TensorElement, AlgebraError> {
        self.check_same(other)?;
        let p = &self.pres;
        let mut out = TensorElement::zero(p);
        for ((l1, r1), c1) in &self.terms {
            for ((l2, r2), c2) in &other.terms {
                let left = NCPolynomial::term(p, l1.clone(), Scalar::one())
                    .multiply(&NCPolynomial::term(p, l2.clone(), Scalar::one()))?;
                let right = NCPolynomial::term(p, r1.clone(), Scalar::one())
                    .multiply(&NCPolynomial::term(p, r2.clone(), Scalar::one()))?;
                let c = c1 * c2;
                for (lm, lc) in left.terms() {
                    let lc = lc * &c;
                    for (rm, rc) in right.terms() {
                        out.add_term(lm.clone(), rm.clone(), &lc * rc);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Applies `f ⊗ g` and multiplies the legs: `Σ c · f(l) · g(r)`.
    pub fn contract<F, G>(&self, mut f: F, mut g: G) -> Result<NCPolynomial, AlgebraError>
    where
        F: FnMut(&NCPolynomial) -> Result<NCPolynomial, AlgebraError>,
        G: FnMut(&NCPolynomial) -> Result<NCPolynomial, AlgebraError>,
    {
        let p = &self.pres;
        let mut out = NCPolynomial::zero(p);
        for ((l, r), c) in &self.terms {
            let fl = f(&NCPolynomial::term(p, l.clone(), c.clone()))?;
            let gr = g(&NCPolynomial::term(p, r.clone(), Scalar::one()))?;
            out = out.checked_add(&fl.multiply(&gr)?)?;
        }
        Ok(out)
    }
}

impl PartialEq for TensorElement {
    fn eq(&self, other: &Self) -> bool {
        self.pres.same_as(&other.pres) && self.terms == other.terms
    }
}

impl Eq for TensorElement {}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut flat = Vec::new();
        for ((l, r), c) in self.terms.iter().rev() {
            let leg = alloc::format!("{} ⊗ {}", l.display(&self.pres), r.display(&self.pres));
            for (gc, mut sf) in c.display_terms() {
                sf.push(leg.clone());
                flat.push((gc, sf));
            }
        }
        write_sum(f, flat)
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
