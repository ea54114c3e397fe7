//! Shared rendering of signed sums of terms.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write};

use num_traits::{One, Zero};

use crate::scalar::GaussRational;

/// Renders a single term `c*f1*f2*...` with the sign folded into the text.
pub(crate) fn term_text(c: &GaussRational, factors: &[String]) -> String {
    let mut out = String::new();
    let body = factors.join("*");
    if factors.is_empty() {
        let _ = write!(out, "{}", c);
        return out;
    }
    if c.is_real() {
        let re = c.re();
        if re.is_one() {
            out.push_str(&body);
        } else if (-re.clone()).is_one() {
            out.push('-');
            out.push_str(&body);
        } else {
            let _ = write!(out, "{}*{}", re, body);
        }
    } else {
        let _ = write!(out, "{}*{}", c, body);
    }
    out
}

/// Writes `t1 + t2 - t3 ...`; the empty sum renders as `0`.
pub(crate) fn write_sum<'c, W, I>(w: &mut W, terms: I) -> fmt::Result
where
    W: Write,
    I: IntoIterator<Item = (&'c GaussRational, Vec<String>)>,
{
    let mut first = true;
    for (c, factors) in terms {
        debug_assert!(!c.is_zero());
        let t = term_text(c, &factors);
        if first {
            w.write_str(&t)?;
            first = false;
        } else if let Some(rest) = t.strip_prefix('-') {
            w.write_str(" - ")?;
            w.write_str(rest)?;
        } else {
            w.write_str(" + ")?;
            w.write_str(&t)?;
        }
    }
    if first {
        w.write_str("0")?;
    }
    Ok(())
}

