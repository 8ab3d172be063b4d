//! Arbitrary-precision rational scalars.
//!
//! Backed by `num_rational::BigRational`, which keeps values in canonical
//! form (positive denominator, gcd 1) and already prints and parses the
//! `"a/b"` / `"a"` format used by every serialization in this crate.

use num_bigint::BigInt;

use crate::{Error, Result};

pub type Rat = num_rational::BigRational;

/// Integer as a rational.
pub fn rat(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

/// `n/d` in lowest terms; panics on a zero denominator.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"a/b"` or `"a"`.
pub fn parse_rat(s: &str) -> Result<Rat> {
    s.trim()
        .parse::<Rat>()
        .map_err(|_| Error::ParseRational(s.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_and_formatting() {
        assert_eq!(ratio(2, 4).to_string(), "1/2");
        assert_eq!(ratio(3, -9).to_string(), "-1/3");
        assert_eq!(rat(7).to_string(), "7");
        assert_eq!(ratio(0, 5).to_string(), "0");
    }

    #[test]
    fn parses_both_forms() {
        assert_eq!(parse_rat("-7/45").unwrap(), ratio(-7, 45));
        assert_eq!(parse_rat("3").unwrap(), rat(3));
        assert_eq!(parse_rat(" 6/4 ").unwrap(), ratio(3, 2));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn large_denominators_stay_exact() {
        let todd_like = ratio(1, 30240);
        assert_eq!((&todd_like * rat(30240)).to_string(), "1");
    }
}
