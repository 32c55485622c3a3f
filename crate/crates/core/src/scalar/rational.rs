use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Arbitrary-precision rational; `num_rational` keeps it reduced with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// `p/q` as a [`Rational`]. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p"` or `"p/q"` (optional sign, surrounding whitespace ignored).
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    if t.is_empty() {
        return Err(Error::ParseRational(s.to_string()));
    }
    let r = Rational::from_str(t).map_err(|_| Error::ParseRational(s.to_string()))?;
    // from_str accepts "1/0" on some versions by panicking later; guard explicitly
    if r.denom().is_zero() {
        return Err(Error::ParseRational(s.to_string()));
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse_rational("3").unwrap(), rat(3, 1));
        assert_eq!(parse_rational("-2/4").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational(" 1/2 ").unwrap(), rat(1, 2));
    }

    #[test]
    fn rejects_garbage() {
        for s in ["", "1/0", "a/b", "1.5", "1//2"] {
            assert!(parse_rational(s).is_err(), "{s:?} accepted");
        }
    }
}
