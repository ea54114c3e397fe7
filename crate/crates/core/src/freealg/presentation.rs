use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::error::AlgebraError;
use crate::scalar::Scalar;

use super::poly::Monomial;

/// Default cap on rewrite steps per normal-ordering call.
pub const DEFAULT_FUEL: u64 = 1_000_000;

/// Normal-ordered terms without a presentation attached; used for rule tails.
pub(crate) type Terms = Vec<(Monomial, Scalar)>;

/// Rewrite rule for an out-of-order adjacent pair.
#[derive(Clone, Debug)]
pub(crate) enum Rule {
    /// `g·h = h·g + tail` for `g` after `h` in the generator order.
    Swap(Terms),
    /// Pair involving the grouplike generator `E`: `E g E⁻¹ = g + delta`,
    /// with `delta` commuting with `E`, hence `E^z g E^-z = g + z·delta`.
    Conjugation(Terms),
}

/// A finitely presented associative algebra with an ordered set of
/// generators, one optional grouplike generator `E` (carrying integer
/// exponents), and a rewrite rule for every noncommuting generator pair.
/// Pairs without a rule commute.
pub struct Presentation {
    name: String,
    generators: Vec<String>,
    grouplike: Option<usize>,
    rules: BTreeMap<(usize, usize), Rule>,
    fuel: u64,
}

impl fmt::Debug for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Presentation")
            .field("name", &self.name)
            .field("generators", &self.generators)
            .field("grouplike", &self.grouplike)
            .finish()
    }
}

impl Presentation {
    pub fn builder(name: &str, generators: &[&str]) -> PresentationBuilder {
        PresentationBuilder {
            name: name.to_string(),
            generators: generators.iter().map(|g| g.to_string()).collect(),
            grouplike: None,
            relations: Vec::new(),
            fuel: DEFAULT_FUEL,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn grouplike(&self) -> Option<usize> {
        self.grouplike
    }

    pub fn fuel(&self) -> u64 {
        self.fuel
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    pub fn generator_name(&self, g: usize) -> &str {
        &self.generators[g]
    }

    pub(crate) fn rule(&self, later: usize, earlier: usize) -> Option<&Rule> {
        self.rules.get(&(later, earlier))
    }

    /// Same algebra: equal names and generator lists.
    pub fn same_as(&self, other: &Presentation) -> bool {
        core::ptr::eq(self, other) || (self.name == other.name && self.generators == other.generators)
    }

    /// A copy of this presentation with a different rewrite step cap.
    pub fn with_fuel(&self, fuel: u64) -> Arc<Presentation> {
        Arc::new(Presentation {
            name: self.name.clone(),
            generators: self.generators.clone(),
            grouplike: self.grouplike,
            rules: self.rules.clone(),
            fuel,
        })
    }
}

/// Collects relations; [`PresentationBuilder::build`] validates them.
pub struct PresentationBuilder {
    name: String,
    generators: Vec<String>,
    grouplike: Option<String>,
    relations: Vec<(String, String, Vec<(Scalar, Vec<(String, i32)>)>)>,
    fuel: u64,
}

impl PresentationBuilder {
    pub fn grouplike(mut self, name: &str) -> Self {
        self.grouplike = Some(name.to_string());
        self
    }

    pub fn fuel(mut self, fuel: u64) -> Self {
        self.fuel = fuel;
        self
    }

    /// Declares `[g, h] = tail`, where `tail` is a list of
    /// `(coefficient, normal-ordered word)`. Exactly one of `g`, `h` may be
    /// the grouplike generator, in which case `tail` is read as `delta` in
    /// `E h E⁻¹ = h + delta` (the bracket `[E, h]` is then `delta·E`).
    pub fn relation(mut self, g: &str, h: &str, tail: &[(Scalar, &[(&str, i32)])]) -> Self {
        let tail = tail
            .iter()
            .map(|(c, w)| (c.clone(), w.iter().map(|(n, e)| (n.to_string(), *e)).collect()))
            .collect();
        self.relations.push((g.to_string(), h.to_string(), tail));
        self
    }

    pub fn build(self) -> Result<Arc<Presentation>, AlgebraError> {
        let p = self.build_unchecked()?;
        let report = super::checks::check_jacobi(&p);
        if !report.passed() {
            return Err(AlgebraError::InvalidPresentation(format!(
                "{}: Jacobi identity fails ({})",
                p.name,
                report.first_failure().unwrap_or_default()
            )));
        }
        Ok(p)
    }

    /// Builds without the Jacobi check; rule-shape checks still apply.
    pub fn build_unchecked(self) -> Result<Arc<Presentation>, AlgebraError> {
        let n = self.generators.len();
        if n > u8::MAX as usize {
            return Err(AlgebraError::InvalidPresentation("too many generators".into()));
        }
        for (i, g) in self.generators.iter().enumerate() {
            if self.generators[..i].contains(g) {
                return Err(AlgebraError::InvalidPresentation(format!("duplicate generator {}", g)));
            }
        }
        let index = |name: &str| {
            self.generators
                .iter()
                .position(|g| g == name)
                .ok_or_else(|| AlgebraError::UnknownGenerator(name.to_string()))
        };
        let grouplike = match &self.grouplike {
            Some(e) => Some(index(e)?),
            None => None,
        };
        let mut rules = BTreeMap::new();
        for (g, h, tail) in &self.relations {
            let (gi, hi) = (index(g)?, index(h)?);
            if gi == hi {
                return Err(AlgebraError::InvalidPresentation(format!("relation [{}, {}]", g, h)));
            }
            let mut terms: Terms = Vec::new();
            for (c, word) in tail {
                let mut exps = alloc::vec![0i32; n];
                let mut last: Option<usize> = None;
                for (name, e) in word {
                    let k = index(name)?;
                    if last.is_some_and(|l| l >= k) {
                        return Err(AlgebraError::InvalidPresentation(format!(
                            "tail of [{}, {}] is not normal-ordered",
                            g, h
                        )));
                    }
                    if *e < 0 && Some(k) != grouplike {
                        return Err(AlgebraError::NegativeExponent(name.clone()));
                    }
                    last = Some(k);
                    exps[k] = *e;
                }
                if !c.is_zero() {
                    terms.push((Monomial::new(exps), c.clone()));
                }
            }
            let involves_e = grouplike == Some(gi) || grouplike == Some(hi);
            let (later, earlier) = if gi > hi { (gi, hi) } else { (hi, gi) };
            let rule = if involves_e {
                // delta is given for `E h E⁻¹ = h + delta` with h the non-grouplike member.
                let other = if grouplike == Some(gi) { hi } else { gi };
                if terms.iter().any(|(m, _)| m.exponent(other) != 0) {
                    return Err(AlgebraError::InvalidPresentation(format!(
                        "conjugation delta for {} contains {}",
                        self.generators[other], self.generators[other]
                    )));
                }
                Rule::Conjugation(terms)
            } else {
                // [g, h] = tail  =>  later·earlier = earlier·later ± tail
                let sign = if gi > hi { Scalar::one() } else { -Scalar::one() };
                if terms.iter().any(|(m, _)| m.exponent(later) != 0) {
                    return Err(AlgebraError::InvalidPresentation(format!(
                        "tail of [{}, {}] contains the moved generator {}",
                        g, h, self.generators[later]
                    )));
                }
                Rule::Swap(terms.into_iter().map(|(m, c)| (m, &c * &sign)).collect())
            };
            if rules.insert((later, earlier), rule).is_some() {
                return Err(AlgebraError::InvalidPresentation(format!("duplicate relation [{}, {}]", g, h)));
            }
        }
        // Conjugation deltas must commute with E.
        if let Some(e) = grouplike {
            for ((l, r), rule) in &rules {
                if let Rule::Conjugation(delta) = rule {
                    for (m, _) in delta {
                        for k in m.support() {
                            if k == e {
                                continue;
                            }
                            let key = if k > e { (k, e) } else { (e, k) };
                            if matches!(rules.get(&key), Some(Rule::Conjugation(d)) if !d.is_empty()) {
                                return Err(AlgebraError::InvalidPresentation(format!(
                                    "conjugation delta for pair ({}, {}) does not commute with {}",
                                    self.generators[*l], self.generators[*r], self.generators[e]
                                )));
                            }
                        }
                    }
                }
            }
        }
        Ok(Arc::new(Presentation {
            name: self.name,
            generators: self.generators,
            grouplike,
            rules,
            fuel: self.fuel,
        }))
    }
}
