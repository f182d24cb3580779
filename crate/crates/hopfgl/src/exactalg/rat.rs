//! Exact rational scalars.
//!
//! Every coefficient in the crate is a [`Rat`]: an arbitrary-precision
//! fraction kept in lowest terms with a positive denominator. Serialized
//! form is `p/q`, with `/q` omitted when the denominator is one.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{AlgError, AlgResult};

pub type Rat = BigRational;

pub fn rat_zero() -> Rat {
    Rat::zero()
}

pub fn rat_one() -> Rat {
    Rat::one()
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `p/q`; panics on `q == 0`.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Binomial coefficient C(n, k) for any integer n and k >= 0,
/// as in the generalized binomial series.
pub fn rat_binomial(n: i64, k: u32) -> Rat {
    let mut acc = rat_one();
    for i in 0..k as i64 {
        acc *= rat(n - i, i + 1);
    }
    acc
}

pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p` or `p/q` with optional leading sign.
pub fn parse_rat(s: &str) -> AlgResult<Rat> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let p: BigInt = num
        .parse()
        .map_err(|_| AlgError::Parse(format!("bad rational `{s}`")))?;
    let q: BigInt = match den {
        Some(d) => d
            .parse()
            .map_err(|_| AlgError::Parse(format!("bad rational `{s}`")))?,
        None => BigInt::one(),
    };
    if q.is_zero() {
        return Err(AlgError::Parse(format!("zero denominator in `{s}`")));
    }
    Ok(Rat::new(p, q))
}

/// True when the rational is negative; used by the printers to pick signs.
pub fn is_negative(r: &Rat) -> bool {
    r.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_sign() {
        let r = rat(4, -6);
        assert_eq!(format_rat(&r), "-2/3");
        assert_eq!(format_rat(&rat(0, 5)), "0");
        assert_eq!(format_rat(&rat(7, 1)), "7");
    }

    #[test]
    fn parse_round_trip() {
        for s in ["3", "-3", "5/7", "-5/7", "0"] {
            assert_eq!(format_rat(&parse_rat(s).unwrap()), s);
        }
        assert_eq!(parse_rat(" 4/6 ").unwrap(), rat(2, 3));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(rat_binomial(5, 2), rat_int(10));
        assert_eq!(rat_binomial(-1, 3), rat_int(-1));
        assert_eq!(rat_binomial(-2, 2), rat_int(3));
        assert_eq!(rat_binomial(3, 0), rat_int(1));
    }
}
