//! Exact rational scalars.
//!
//! All linear algebra in this crate runs over the field of rational numbers
//! with arbitrary-precision integers, so row reduction, ranks, and kernels
//! are exact: no tolerance thresholds appear anywhere. Values are kept in
//! canonical reduced form (coprime numerator/denominator, positive
//! denominator) by the underlying representation, which makes printing and
//! reparsing lossless.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Exact rational scalar, always in canonical reduced form.
pub type Scalar = num_rational::BigRational;

/// Builds a scalar from an integer.
pub fn s_int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// Builds a scalar from a numerator/denominator pair.
///
/// Errors if the denominator is zero.
pub fn s_ratio(num: i64, den: i64) -> Result<Scalar> {
    if den == 0 {
        return Err(Error::Parse("zero denominator".into()));
    }
    Ok(Scalar::new(BigInt::from(num), BigInt::from(den)))
}

/// Parses a scalar written as `p` or `p/q` with optional sign.
///
/// Rejects empty input, a zero denominator, and any trailing garbage; the
/// grammar is exactly what [`format_scalar`] prints, so parse/print round
/// trips.
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let s = text.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty scalar".into()));
    }
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let num: BigInt = num_str
        .parse()
        .map_err(|_| Error::Parse(format!("bad integer `{num_str}` in scalar `{s}`")))?;
    let den: BigInt = match den_str {
        Some(d) => d
            .parse()
            .map_err(|_| Error::Parse(format!("bad integer `{d}` in scalar `{s}`")))?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in scalar `{s}`")));
    }
    Ok(Scalar::new(num, den))
}

/// Formats a scalar as `p` (integer) or `p/q` (reduced, positive `q`).
pub fn format_scalar(x: &Scalar) -> String {
    x.to_string()
}

/// True if the scalar is a (possibly negative) integer.
pub fn is_integer(x: &Scalar) -> bool {
    x.denom().is_one()
}

/// Absolute value.
pub fn s_abs(x: &Scalar) -> Scalar {
    x.abs()
}
