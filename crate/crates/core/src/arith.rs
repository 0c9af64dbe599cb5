//! Exact rational arithmetic helpers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn floor_i64(r: &Rational) -> Result<i64> {
    r.floor().to_integer().to_i64().ok_or(Error::Overflow)
}

pub fn ceil_i64(r: &Rational) -> Result<i64> {
    r.ceil().to_integer().to_i64().ok_or(Error::Overflow)
}

pub fn to_i64(n: &BigInt) -> Result<i64> {
    n.to_i64().ok_or(Error::Overflow)
}

pub fn is_positive(r: &Rational) -> bool {
    r.is_positive()
}

/// `true` when the denominator is one.
pub fn is_integral(r: &Rational) -> bool {
    r.denom().is_one()
}

pub fn gcd_i64(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

pub fn lcm_big(a: &BigInt, b: &BigInt) -> BigInt {
    if a.is_zero() || b.is_zero() {
        return BigInt::zero();
    }
    a.lcm(b)
}

/// Parses `3`, `-2`, `5/6` or ` 1 / 2 `.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("invalid rational `{s}`"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

pub fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn checked_dot(a: &[i64], b: &[i64]) -> Result<i64> {
    a.iter().zip(b).try_fold(0i64, |acc, (x, y)| {
        x.checked_mul(*y)
            .and_then(|p| acc.checked_add(p))
            .ok_or(Error::Overflow)
    })
}

pub fn dot_rational(a: &[Rational], b: &[i64]) -> Rational {
    a.iter()
        .zip(b)
        .fold(Rational::zero(), |acc, (x, y)| acc + x * BigInt::from(*y))
}

pub fn checked_pow(base: u64, e: u32) -> Result<u64> {
    base.checked_pow(e).ok_or(Error::Overflow)
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut k = 2;
    while k * k <= p {
        if p.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        assert_eq!(parse_rational("10/12").unwrap(), rat(5, 6));
        assert_eq!(fmt_rational(&parse_rational(" 4 ").unwrap()), "4");
        assert_eq!(fmt_rational(&rat(-3, 6)), "-1/2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn rounding() {
        assert_eq!(floor_i64(&rat(-1, 2)).unwrap(), -1);
        assert_eq!(ceil_i64(&rat(-1, 2)).unwrap(), 0);
        assert_eq!(ceil_i64(&rat(35, 6)).unwrap(), 6);
    }

    #[test]
    fn primes() {
        let small: Vec<u64> = (0..20).filter(|&p| is_prime(p)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19]);
    }
}
