//! Exact rational scalars.
//!
//! All coefficients in this crate are arbitrary-precision rationals.
//! `num-rational` keeps every value in canonical form (positive
//! denominator, numerator and denominator coprime) after each arithmetic
//! operation, which is exactly the invariant the rest of the crate
//! relies on for `==` comparisons and sign tests.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use std::fmt;

/// Exact rational scalar in canonical reduced form.
pub type Rational = BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for the rational `n/d`. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Error produced when a rational token does not match the text form
/// `p`, `-p`, or `p/q` with `q > 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRationalError {
    token: String,
    reason: &'static str,
}

impl ParseRationalError {
    fn new(token: &str, reason: &'static str) -> Self {
        Self {
            token: token.to_string(),
            reason,
        }
    }
}

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid rational `{}`: {}", self.token, self.reason)
    }
}

impl std::error::Error for ParseRationalError {}

/// Parses the text form `p`, `-p`, or `p/q` with `q > 0`.
///
/// A zero or negative denominator is rejected rather than normalized;
/// the text format only admits positive denominators.
pub fn parse_rational(token: &str) -> Result<Rational, ParseRationalError> {
    let token = token.trim();
    if token.is_empty() {
        return Err(ParseRationalError::new(token, "empty token"));
    }
    match token.split_once('/') {
        None => {
            let numer: BigInt = token
                .parse()
                .map_err(|_| ParseRationalError::new(token, "not an integer"))?;
            Ok(Rational::from_integer(numer))
        }
        Some((p, q)) => {
            let numer: BigInt = p
                .parse()
                .map_err(|_| ParseRationalError::new(token, "numerator is not an integer"))?;
            let denom: BigInt = q
                .parse()
                .map_err(|_| ParseRationalError::new(token, "denominator is not an integer"))?;
            if denom.is_zero() {
                return Err(ParseRationalError::new(token, "denominator is zero"));
            }
            if denom.is_negative() {
                return Err(ParseRationalError::new(token, "denominator must be positive"));
            }
            Ok(Rational::new(numer, denom))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse_rational("3").unwrap(), rat(3));
        assert_eq!(parse_rational("-7").unwrap(), rat(-7));
        assert_eq!(parse_rational("1/2").unwrap(), ratio(1, 2));
        assert_eq!(parse_rational("-4/6").unwrap(), ratio(-2, 3));
    }

    #[test]
    fn rejects_zero_and_negative_denominators() {
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("3/-2").is_err());
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_rational("").is_err());
        assert!(parse_rational("1.5").is_err());
        assert!(parse_rational("a/b").is_err());
        assert!(parse_rational("1/2/3").is_err());
    }

    #[test]
    fn display_round_trips_canonical_form() {
        for tok in ["0", "5", "-5", "2/3", "-2/3", "22/7"] {
            let r = parse_rational(tok).unwrap();
            assert_eq!(r.to_string(), tok);
            assert_eq!(parse_rational(&r.to_string()).unwrap(), r);
        }
    }

    #[test]
    fn arithmetic_stays_reduced() {
        let a = ratio(1, 2) + ratio(1, 3);
        assert_eq!(a, ratio(5, 6));
        let b = ratio(2, 4) * ratio(2, 1);
        assert!(b.is_one());
        assert_eq!(b.to_string(), "1");
    }
}
