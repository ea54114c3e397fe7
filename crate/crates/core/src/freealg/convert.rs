//! Basis change between the two U_q presentations: `M = E⁻¹ I`, `K = E N`.

use alloc::string::ToString;
use alloc::sync::Arc;

use crate::error::AlgebraError;

use super::poly::NCPolynomial;
use super::presentation::Presentation;

/// Rewrites `u` (in `uq_kmph` or `uq_iphn`) in the other presentation `to`.
pub fn convert_basis(u: &NCPolynomial, to: &Arc<Presentation>) -> Result<NCPolynomial, AlgebraError> {
    let from = u.presentation().clone();
    let unsupported = || AlgebraError::UnsupportedConversion {
        from: from.name().to_string(),
        to: to.name().to_string(),
    };
    let forward = match (from.name(), to.name()) {
        ("uq_kmph", "uq_iphn") => true,
        ("uq_iphn", "uq_kmph") => false,
        _ => return Err(unsupported()),
    };
    u.map_letters(to, false, |g, e| {
        let name = from.generator_name(g);
        let image = |word: &[(&str, i32)]| NCPolynomial::from_word(to, word, crate::scalar::Scalar::one());
        let single = match (forward, name) {
            (_, "E") => return NCPolynomial::generator(to, "E", e),
            (true, "K") => image(&[("E", 1), ("N", 1)])?,
            (true, "M") => image(&[("E", -1), ("I", 1)])?,
            (false, "I") => image(&[("E", 1), ("M", 1)])?,
            (false, "N") => image(&[("E", -1), ("K", 1)])?,
            (_, "P") | (_, "H") => NCPolynomial::generator(to, name, 1)?,
            _ => return Err(unsupported()),
        };
        single.pow(e as u32)
    })
}
