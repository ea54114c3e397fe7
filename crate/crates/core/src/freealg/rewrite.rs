//! Normal ordering by repeated rewriting of the leftmost out-of-order pair.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::AlgebraError;
use crate::scalar::Scalar;

use super::poly::{Letter, Monomial, NCPolynomial};
use super::presentation::{Presentation, Rule};

/// Appends a letter, merging with an equal trailing generator and dropping
/// zero exponents.
fn push(word: &mut Vec<Letter>, (g, e): Letter) {
    if e == 0 {
        return;
    }
    if let Some(last) = word.last_mut() {
        if last.0 == g {
            last.1 = last.1.checked_add(e).expect("generator exponent overflow");
            if last.1 == 0 {
                word.pop();
            }
            return;
        }
    }
    word.push((g, e));
}

fn extend(word: &mut Vec<Letter>, letters: &[Letter]) {
    for &l in letters {
        push(word, l);
    }
}

fn first_violation(word: &[Letter]) -> Option<usize> {
    word.windows(2).position(|w| w[0].0 > w[1].0)
}

pub(crate) fn word_string(p: &Presentation, word: &[Letter]) -> String {
    if word.is_empty() {
        return "1".to_string();
    }
    word.iter()
        .map(|&(g, e)| crate::scalar::power_string(p.generator_name(g as usize), e).unwrap_or_default())
        .collect::<Vec<_>>()
        .join("*")
}

fn validate(p: &Presentation, word: &[Letter]) -> Result<(), AlgebraError> {
    for &(g, e) in word {
        let g = g as usize;
        if g >= p.len() {
            return Err(AlgebraError::UnknownGenerator(alloc::format!("#{}", g)));
        }
        if e < 0 && p.grouplike() != Some(g) {
            return Err(AlgebraError::NegativeExponent(p.generator_name(g).to_string()));
        }
    }
    Ok(())
}

/// Normal-orders `coefficient · word`.
///
/// Fails with [`AlgebraError::FuelExhausted`] after the presentation's step cap.
pub fn normal_order(p: &Arc<Presentation>, word: &[Letter], coefficient: &Scalar) -> Result<NCPolynomial, AlgebraError> {
    normal_order_word(p, word, coefficient)
}

pub(crate) fn normal_order_word(
    p: &Arc<Presentation>,
    word: &[Letter],
    coefficient: &Scalar,
) -> Result<NCPolynomial, AlgebraError> {
    validate(p, word)?;
    let mut start = Vec::with_capacity(word.len());
    extend(&mut start, word);
    let terms = normal_order_terms(p, start, coefficient.clone(), word)?;
    Ok(NCPolynomial::from_terms(p, terms))
}

pub(crate) fn multiply_monomials(
    p: &Arc<Presentation>,
    m1: &Monomial,
    m2: &Monomial,
) -> Result<NCPolynomial, AlgebraError> {
    let mut word = m1.to_word();
    extend(&mut word, &m2.to_word());
    if first_violation(&word).is_none() {
        return Ok(NCPolynomial::term(p, to_monomial(p, &word), Scalar::one()));
    }
    let original = word.clone();
    let terms = normal_order_terms(p, word, Scalar::one(), &original)?;
    Ok(NCPolynomial::from_terms(p, terms))
}

fn to_monomial(p: &Presentation, word: &[Letter]) -> Monomial {
    let mut exps = alloc::vec![0; p.len()];
    for &(g, e) in word {
        exps[g as usize] = e;
    }
    Monomial::new(exps)
}

fn accumulate(pending: &mut BTreeMap<Vec<Letter>, Scalar>, word: Vec<Letter>, c: Scalar) {
    if c.is_zero() {
        return;
    }
    use alloc::collections::btree_map::Entry;
    match pending.entry(word) {
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

fn normal_order_terms(
    p: &Arc<Presentation>,
    start: Vec<Letter>,
    coefficient: Scalar,
    original: &[Letter],
) -> Result<BTreeMap<Monomial, Scalar>, AlgebraError> {
    let mut pending: BTreeMap<Vec<Letter>, Scalar> = BTreeMap::new();
    let mut out: BTreeMap<Monomial, Scalar> = BTreeMap::new();
    accumulate(&mut pending, start, coefficient);
    let mut steps: u64 = 0;
    let grouplike = p.grouplike().map(|e| e as u8);

    while let Some((word, c)) = pending.pop_first() {
        let Some(i) = first_violation(&word) else {
            let m = to_monomial(p, &word);
            use alloc::collections::btree_map::Entry;
            match out.entry(m) {
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
            continue;
        };
        steps += 1;
        if steps > p.fuel() {
            return Err(AlgebraError::FuelExhausted { word: word_string(p, original), steps: p.fuel() });
        }

        let (g, m) = word[i];
        let (h, n) = word[i + 1];
        let prefix = &word[..i];
        let rest = &word[i + 2..];
        let build = |middle: &[Letter]| {
            let mut w = prefix.to_vec();
            extend(&mut w, middle);
            extend(&mut w, rest);
            w
        };

        match p.rule(g as usize, h as usize) {
            Some(Rule::Conjugation(delta)) if !delta.is_empty() && Some(g) == grouplike => {
                // E^m h = h E^m + m·delta·E^m
                accumulate(&mut pending, build(&[(h, 1), (g, m), (h, n - 1)]), c.clone());
                let zc = &c * &Scalar::int(m as i64);
                for (dm, dc) in delta {
                    let mut mid = dm.to_word();
                    extend(&mut mid, &[(g, m), (h, n - 1)]);
                    accumulate(&mut pending, build(&mid), &zc * dc);
                }
            }
            Some(Rule::Conjugation(delta)) if !delta.is_empty() => {
                // g E^n = E^n g − n·E^n·delta
                debug_assert_eq!(Some(h), grouplike);
                accumulate(&mut pending, build(&[(g, m - 1), (h, n), (g, 1)]), c.clone());
                let zc = &c * &Scalar::int(-(n as i64));
                for (dm, dc) in delta {
                    let mut mid = alloc::vec![(g, m - 1), (h, n)];
                    extend(&mut mid, &dm.to_word());
                    accumulate(&mut pending, build(&mid), &zc * dc);
                }
            }
            Some(Rule::Swap(tail)) if !tail.is_empty() => {
                // g h = h g + tail, one letter at a time
                accumulate(&mut pending, build(&[(g, m - 1), (h, 1), (g, 1), (h, n - 1)]), c.clone());
                for (tm, tc) in tail {
                    let mut mid = alloc::vec![(g, m - 1)];
                    extend(&mut mid, &tm.to_word());
                    push(&mut mid, (h, n - 1));
                    accumulate(&mut pending, build(&mid), &c * tc);
                }
            }
            _ => {
                // commuting pair: swap whole blocks
                accumulate(&mut pending, build(&[(h, n), (g, m)]), c);
            }
        }
    }
    Ok(out)
}
