//! Arbitrary-precision rationals.
//!
//! [`Rational`] is `num_rational::BigRational`, which already keeps every value
//! in lowest terms with a positive denominator. This module adds the few
//! helpers the rest of the crate needs on top of it.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

/// Builds `n/d` from machine integers. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses an integer (`12`), a fraction (`3/4`) or a finite decimal (`2.40`)
/// exactly. A leading `-` is accepted.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let (negative, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    if body.is_empty() {
        return None;
    }
    let value = if let Some((num, den)) = body.split_once('/') {
        let num = parse_digits(num)?;
        let den = parse_digits(den)?;
        if den.is_zero() {
            return None;
        }
        Rational::new(num, den)
    } else if let Some((whole, frac)) = body.split_once('.') {
        if whole.is_empty() || frac.is_empty() {
            return None;
        }
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let digits = parse_digits(whole)? * &scale + parse_digits(frac)?;
        Rational::new(digits, scale)
    } else {
        Rational::from_integer(parse_digits(body)?)
    };
    Some(if negative { -value } else { value })
}

fn parse_digits(s: &str) -> Option<BigInt> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Exact square root of a rational, when it has one.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = exact_isqrt(q.numer())?;
    let d = exact_isqrt(q.denom())?;
    Some(Rational::new(n, d))
}

fn exact_isqrt(n: &BigInt) -> Option<BigInt> {
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Splits a positive integer as `s² · rest`, pulling out square factors of
/// small primes. `rest` is not guaranteed square-free for inputs with large
/// repeated prime factors; callers only rely on `s² · rest == n`.
pub fn split_square_factor(n: &BigInt) -> (BigInt, BigInt) {
    debug_assert!(n.is_positive());
    let mut rest = n.clone();
    let mut root = BigInt::one();
    let mut p = BigInt::from(2u32);
    let limit = BigInt::from(1u32 << 16);
    while p <= limit && &p * &p <= rest {
        let sq = &p * &p;
        while rest.is_multiple_of(&sq) {
            rest /= &sq;
            root *= &p;
        }
        p += if p == BigInt::from(2u32) { 1u32 } else { 2u32 };
    }
    if let Some(r) = exact_isqrt(&rest) {
        root *= &r;
        rest = BigInt::one();
    }
    (root, rest)
}
