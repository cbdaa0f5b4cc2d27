//! Exact arithmetic: big counts, rationals, semirings and polynomials.

mod poly;
mod semiring;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub use poly::{poly_eval, poly_interpolate, Polynomial};
pub use semiring::{semiring_instance, Semiring, SemiringKind, TableSemiring};

/// Arbitrary-precision homomorphism count.
pub type BigCount = BigUint;

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = BigRational;

/// `"p/q"`, or the bare integer when `q = 1`.
pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Accepts `"p"` or `"p/q"` with optional sign on `p`.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let bad = |msg: &str| Error::Parse { offset: 0, message: format!("{msg}: {text:?}") };
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad("bad numerator"))?;
    let den: BigInt = den.parse().map_err(|_| bad("bad denominator"))?;
    if den.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(BigRational::new(num, den))
}

pub fn rational(p: i64, q: i64) -> BigRational {
    BigRational::new(p.into(), q.into())
}

pub fn count_to_rational(c: &BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(c.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_text_forms() {
        assert_eq!(format_rational(&rational(6, 4)), "3/2");
        assert_eq!(format_rational(&rational(-4, 2)), "-2");
        assert_eq!(format_rational(&rational(3, -9)), "-1/3");
        assert_eq!(parse_rational("10/4").unwrap(), rational(5, 2));
        assert_eq!(parse_rational(" -7 ").unwrap(), rational(-7, 1));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a/2").is_err());
    }
}
