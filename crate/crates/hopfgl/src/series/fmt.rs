use std::fmt;

use num_traits::One;

use crate::exactalg::rat::{format_rat, is_negative};
use crate::exactalg::PolyElement;

/// Writes one series term `coeff * varpart` with the sign pulled out front
/// when the coefficient is a single monomial. Multi-term coefficients are
/// parenthesized verbatim.
pub(crate) fn write_term(
    f: &mut fmt::Formatter<'_>,
    first: bool,
    coeff: &PolyElement,
    varpart: &str,
) -> fmt::Result {
    debug_assert!(!coeff.is_zero());
    if coeff.term_count() > 1 {
        if !first {
            f.write_str(" + ")?;
        }
        return write!(f, "({coeff})*{varpart}");
    }
    let (mono, q) = coeff.terms().next().expect("single term");
    let neg = is_negative(q);
    if first {
        if neg {
            f.write_str("-")?;
        }
    } else if neg {
        f.write_str(" - ")?;
    } else {
        f.write_str(" + ")?;
    }
    let abs = if neg { -q } else { q.clone() };
    let mut parts: Vec<String> = Vec::new();
    if !abs.is_one() {
        parts.push(format_rat(&abs));
    }
    if !mono.is_unit() {
        parts.push(coeff.format_monomial(mono));
    }
    parts.push(varpart.to_string());
    f.write_str(&parts.join("*"))
}

pub(crate) fn power_str(var: &str, e: u32) -> String {
    if e == 1 {
        var.to_string()
    } else {
        format!("{var}^{e}")
    }
}

pub(crate) fn biv_power_str(i: u32, j: u32) -> String {
    match (i, j) {
        (_, 0) => power_str("u", i),
        (0, _) => power_str("v", j),
        _ => format!("{}*{}", power_str("u", i), power_str("v", j)),
    }
}
