//! Exact rational scalars.
//!
//! `Rational` is an arbitrary-precision fraction, always reduced, denominator
//! positive, canonical zero `0/1`. Values print as `p/q` (or `p` when the
//! denominator is one) and parse back exactly.

use num_bigint::BigInt;

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// `num/den` as an exact rational. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// The integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parse `"p/q"` or `"p"`. Round-trips exactly with `Display`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    if let Some(pos) = t.find('/') {
        let num: BigInt = t[..pos]
            .parse()
            .map_err(|_| Error::Parse(format!("bad numerator in {s:?} (before byte {pos})")))?;
        let den: BigInt = t[pos + 1..]
            .parse()
            .map_err(|_| Error::Parse(format!("bad denominator in {s:?} (after byte {pos})")))?;
        if den == BigInt::from(0) {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        Ok(Rational::new(num, den))
    } else {
        let num: BigInt = t
            .parse()
            .map_err(|_| Error::Parse(format!("not an integer or p/q fraction: {s:?}")))?;
        Ok(Rational::from_integer(num))
    }
}
