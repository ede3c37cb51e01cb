//! Exact scalar types.
//!
//! Everything in this crate is generic over [`Scalar`], an exact ordered
//! field. Floating point types are deliberately not implementors: vertex
//! deduplication, tight-set detection and circuit supports all rely on exact
//! equality with zero.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, ToPrimitive, Zero};

/// An exact ordered field element.
///
/// `BigRational` is the reference implementation. The fixed-width
/// `Ratio<i64>` and `Ratio<i128>` implementations are faster but panic on
/// overflow in debug builds; use them only when coefficients stay small.
pub trait Scalar: Clone + Ord + Hash + Debug + Display + Signed + Send + Sync + 'static {
    /// Builds `numer / denom`, or `None` if the value is not representable
    /// (zero denominator or out of range).
    fn from_ratio(numer: &BigInt, denom: &BigInt) -> Option<Self>;

    /// The value as an arbitrary-precision rational.
    fn to_ratio(&self) -> BigRational;

    fn from_integer(n: &BigInt) -> Option<Self> {
        Self::from_ratio(n, &BigInt::one())
    }

    fn from_i64(n: i64) -> Self {
        Self::from_integer(&BigInt::from(n)).expect("every scalar type holds an i64")
    }

    fn from_big_ratio(q: &BigRational) -> Option<Self> {
        Self::from_ratio(q.numer(), q.denom())
    }
}

impl Scalar for BigRational {
    fn from_ratio(numer: &BigInt, denom: &BigInt) -> Option<Self> {
        if denom.is_zero() {
            None
        } else {
            Some(Ratio::new(numer.clone(), denom.clone()))
        }
    }

    fn to_ratio(&self) -> BigRational {
        self.clone()
    }
}

macro_rules! fixed_width_scalar {
    ($int:ty, $to:ident) => {
        impl Scalar for Ratio<$int> {
            fn from_ratio(numer: &BigInt, denom: &BigInt) -> Option<Self> {
                if denom.is_zero() {
                    return None;
                }
                let g = numer.gcd(denom);
                let (n, d) = (numer / &g, denom / &g);
                Some(Ratio::new(n.$to()?, d.$to()?))
            }

            fn to_ratio(&self) -> BigRational {
                Ratio::new(BigInt::from(*self.numer()), BigInt::from(*self.denom()))
            }
        }
    };
}

fixed_width_scalar!(i64, to_i64);
fixed_width_scalar!(i128, to_i128);

/// Parses an exact rational literal: `-7`, `3/4`, `+2.05`, `.5`.
///
/// Decimal literals are converted exactly (`3.2` becomes `16/5`).
pub fn parse_rational(token: &str) -> Result<BigRational, String> {
    let (sign, body) = match token.as_bytes().first() {
        Some(b'-') => (-1, &token[1..]),
        Some(b'+') => (1, &token[1..]),
        _ => (1, token),
    };
    if body.is_empty() {
        return Err(format!("malformed number {token:?}"));
    }
    let value = if let Some((p, q)) = body.split_once('/') {
        let p = parse_digits(p).ok_or_else(|| format!("malformed number {token:?}"))?;
        let q = parse_digits(q).ok_or_else(|| format!("malformed number {token:?}"))?;
        if q.is_zero() {
            return Err(format!("zero denominator in {token:?}"));
        }
        Ratio::new(p, q)
    } else if let Some((int, frac)) = body.split_once('.') {
        if int.is_empty() && frac.is_empty() {
            return Err(format!("malformed number {token:?}"));
        }
        let int = if int.is_empty() {
            BigInt::zero()
        } else {
            parse_digits(int).ok_or_else(|| format!("malformed number {token:?}"))?
        };
        let (frac_value, scale) = if frac.is_empty() {
            (BigInt::zero(), BigInt::one())
        } else {
            let digits = parse_digits(frac).ok_or_else(|| format!("malformed number {token:?}"))?;
            (digits, num_traits::pow(BigInt::from(10), frac.len()))
        };
        Ratio::new(int * &scale + frac_value, scale)
    } else {
        Ratio::from_integer(
            parse_digits(body).ok_or_else(|| format!("malformed number {token:?}"))?,
        )
    };
    Ok(if sign < 0 { -value } else { value })
}

fn parse_digits(s: &str) -> Option<BigInt> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Lowest-terms `p/q` text, always with an explicit denominator.
pub fn format_rational(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Compact text: integers without a denominator, everything else as `p/q`.
pub fn format_compact(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format_rational(q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        Ratio::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn decimals_are_exact() {
        assert_eq!(parse_rational("3.2").unwrap(), q(16, 5));
        assert_eq!(parse_rational("1.05").unwrap(), q(21, 20));
        assert_eq!(parse_rational("-2.05").unwrap(), q(-41, 20));
        assert_eq!(parse_rational(".5").unwrap(), q(1, 2));
        assert_eq!(parse_rational("2.").unwrap(), q(2, 1));
    }

    #[test]
    fn fractions_and_integers() {
        assert_eq!(parse_rational("-6/4").unwrap(), q(-3, 2));
        assert_eq!(parse_rational("+7").unwrap(), q(7, 1));
        assert_eq!(parse_rational("0").unwrap(), q(0, 1));
    }

    #[test]
    fn malformed_numbers_rejected() {
        for bad in ["", "-", "1/0", "a", "1.2.3", "1/", "/2", "1e3", "--1", "."] {
            assert!(parse_rational(bad).is_err(), "{bad:?} should fail");
        }
        assert!(parse_rational("1/0")
            .unwrap_err()
            .contains("zero denominator"));
    }

    #[test]
    fn formatting() {
        assert_eq!(format_rational(&q(4, 1)), "4/1");
        assert_eq!(format_rational(&q(-3, 6)), "-1/2");
        assert_eq!(format_compact(&q(4, 1)), "4");
        assert_eq!(format_compact(&q(16, 5)), "16/5");
    }

    #[test]
    fn fixed_width_conversions() {
        let big = BigInt::from(i64::MAX) * 4;
        assert!(<Ratio<i64> as Scalar>::from_integer(&big).is_none());
        assert!(<Ratio<i128> as Scalar>::from_integer(&big).is_some());
        let half = <Ratio<i64> as Scalar>::from_ratio(&BigInt::from(2), &BigInt::from(4)).unwrap();
        assert_eq!(half.to_ratio(), q(1, 2));
        assert!(<BigRational as Scalar>::from_ratio(&BigInt::one(), &BigInt::zero()).is_none());
    }
}
