//! Exact rational scalars and their canonical `p/q` text form.
//!
//! All numeric payloads in this crate (JSON, CLI output, reports) carry
//! rationals as strings in lowest terms with a positive denominator, e.g.
//! `"108"`, `"-8"`, `"8/5"`. [`num_rational::BigRational`] already maintains
//! the reduced-form invariant, so this module only adds parsing and
//! formatting.

use crate::error::Error;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational `n/d`. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Canonical text form: `p` when integral, else `p/q` with `q > 0`.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p` or `p/q` (optionally signed). Rejects `q = 0` and garbage.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let s = s.trim();
    let (numer_str, denom_str) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let numer: BigInt = numer_str
        .parse()
        .map_err(|_| Error::parse(0, format!("invalid rational {s:?}")))?;
    let denom: BigInt = match denom_str {
        Some(d) => d
            .parse()
            .map_err(|_| Error::parse(0, format!("invalid rational {s:?}")))?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(Error::parse(0, format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(numer, denom))
}

/// `gcd`-reduced sign-normalized integer vector test helper: true when `r`
/// is a (non-negative) integer.
pub fn is_nonneg_integer(r: &Rational) -> bool {
    r.denom().is_one() && !r.is_negative()
}
