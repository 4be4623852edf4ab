//! Binary floating-point values `m · 2^e` with arbitrary-size mantissas, and
//! outward-rounded intervals over them.
//!
//! All arithmetic on [`Dyadic`] is exact except where a rounding direction is
//! passed explicitly. [`Interval`] operations round their lower endpoint down
//! and their upper endpoint up, so the exact result of the operation on any
//! points of the operand intervals lies in the result.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Round {
    Down,
    Up,
}

/// `mantissa · 2^exponent`.
#[derive(Clone, Debug)]
pub struct Dyadic {
    mantissa: BigInt,
    exponent: i64,
}

impl Dyadic {
    pub fn new(mantissa: BigInt, exponent: i64) -> Self {
        Dyadic { mantissa, exponent }
    }

    pub fn zero() -> Self {
        Dyadic::new(BigInt::zero(), 0)
    }

    pub fn from_int(n: i64) -> Self {
        Dyadic::new(BigInt::from(n), 0)
    }

    /// `2^e`.
    pub fn pow2(e: i64) -> Self {
        Dyadic::new(BigInt::one(), e)
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn exponent(&self) -> i64 {
        self.exponent
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn signum(&self) -> i32 {
        if self.mantissa.is_positive() {
            1
        } else if self.mantissa.is_negative() {
            -1
        } else {
            0
        }
    }

    pub fn abs(&self) -> Dyadic {
        Dyadic::new(self.mantissa.abs(), self.exponent)
    }

    pub fn neg(&self) -> Dyadic {
        Dyadic::new(-&self.mantissa, self.exponent)
    }

    pub fn to_rational(&self) -> Rational {
        if self.exponent >= 0 {
            Rational::from_integer(&self.mantissa << self.exponent as usize)
        } else {
            Rational::new(self.mantissa.clone(), BigInt::one() << (-self.exponent) as usize)
        }
    }

    /// Rounds a rational to `precision` significant bits.
    pub fn from_rational(q: &Rational, precision: u32, dir: Round) -> Dyadic {
        let num = Dyadic::new(q.numer().clone(), 0);
        let den = Dyadic::new(q.denom().clone(), 0);
        num.div(&den, precision, dir)
    }

    fn bits(&self) -> u64 {
        self.mantissa.bits()
    }

    /// Exponent of the leading bit, or `None` for zero: `2^m ≤ |x| < 2^(m+1)`.
    pub fn magnitude(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.exponent + self.bits() as i64 - 1)
    }

    pub fn add(&self, other: &Dyadic) -> Dyadic {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let e = self.exponent.min(other.exponent);
        let a = &self.mantissa << (self.exponent - e) as usize;
        let b = &other.mantissa << (other.exponent - e) as usize;
        Dyadic::new(a + b, e)
    }

    pub fn sub(&self, other: &Dyadic) -> Dyadic {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Dyadic) -> Dyadic {
        Dyadic::new(&self.mantissa * &other.mantissa, self.exponent + other.exponent)
    }

    pub fn half(&self) -> Dyadic {
        Dyadic::new(self.mantissa.clone(), self.exponent - 1)
    }

    /// Rounds to at most `precision` significant bits in direction `dir`.
    pub fn round(&self, precision: u32, dir: Round) -> Dyadic {
        let bits = self.bits();
        if bits <= precision as u64 {
            return self.clone();
        }
        let shift = (bits - precision as u64) as usize;
        // `>>` on BigInt rounds toward negative infinity
        let floor = &self.mantissa >> shift;
        let exact = (&floor << shift) == self.mantissa;
        let m = match dir {
            Round::Down => floor,
            Round::Up if exact => floor,
            Round::Up => floor + 1,
        };
        Dyadic::new(m, self.exponent + shift as i64)
    }

    /// Quotient rounded to `precision` significant bits. Panics on a zero divisor.
    pub fn div(&self, other: &Dyadic, precision: u32, dir: Round) -> Dyadic {
        assert!(!other.is_zero(), "dyadic division by zero");
        if self.is_zero() {
            return Dyadic::zero();
        }
        // scale the numerator so the integer quotient carries enough bits
        let shift = (precision as i64 + other.bits() as i64 - self.bits() as i64 + 2).max(0);
        let num = &self.mantissa << shift as usize;
        let q = match dir {
            Round::Down => num.div_floor(&other.mantissa),
            Round::Up => -(-num).div_floor(&other.mantissa),
        };
        Dyadic::new(q, self.exponent - other.exponent - shift).round(precision, dir)
    }

    /// Square root rounded to `precision` significant bits. Panics if negative.
    pub fn sqrt(&self, precision: u32, dir: Round) -> Dyadic {
        assert!(!self.mantissa.is_negative(), "dyadic sqrt of a negative value");
        if self.is_zero() {
            return Dyadic::zero();
        }
        let want = 2 * (precision as i64 + 2);
        let mut shift = (want - self.bits() as i64).max(0);
        if (self.exponent - shift).rem_euclid(2) != 0 {
            shift += 1;
        }
        let m = &self.mantissa << shift as usize;
        let e = self.exponent - shift;
        let r = m.sqrt();
        let r = match dir {
            Round::Up if &r * &r != m => r + 1,
            _ => r,
        };
        Dyadic::new(r, e / 2).round(precision, dir)
    }
}

impl PartialEq for Dyadic {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Dyadic {}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sub(other).signum().cmp(&0)
    }
}

/// Why an interval operation could not produce a bounded result.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IntervalFault {
    /// The divisor interval straddles zero; more precision may help.
    DivisorStraddlesZero,
    /// The radicand interval lies entirely below zero.
    NegativeRadicand,
}

/// A closed interval `[lo, hi]` with dyadic endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: Dyadic,
    pub hi: Dyadic,
}

impl Interval {
    pub fn point(x: Dyadic) -> Self {
        Interval { lo: x.clone(), hi: x }
    }

    pub fn from_rational(q: &Rational, precision: u32) -> Self {
        Interval {
            lo: Dyadic::from_rational(q, precision, Round::Down),
            hi: Dyadic::from_rational(q, precision, Round::Up),
        }
    }

    pub fn contains_zero(&self) -> bool {
        self.lo.signum() <= 0 && self.hi.signum() >= 0
    }

    pub fn width(&self) -> Dyadic {
        self.hi.sub(&self.lo)
    }

    pub fn neg(&self) -> Self {
        Interval { lo: self.hi.neg(), hi: self.lo.neg() }
    }

    pub fn add(&self, other: &Self, precision: u32) -> Self {
        Interval {
            lo: self.lo.add(&other.lo).round(precision, Round::Down),
            hi: self.hi.add(&other.hi).round(precision, Round::Up),
        }
    }

    pub fn sub(&self, other: &Self, precision: u32) -> Self {
        self.add(&other.neg(), precision)
    }

    pub fn mul(&self, other: &Self, precision: u32) -> Self {
        let products = [
            self.lo.mul(&other.lo),
            self.lo.mul(&other.hi),
            self.hi.mul(&other.lo),
            self.hi.mul(&other.hi),
        ];
        let lo = products.iter().min().cloned().unwrap_or_else(Dyadic::zero);
        let hi = products.iter().max().cloned().unwrap_or_else(Dyadic::zero);
        Interval { lo: lo.round(precision, Round::Down), hi: hi.round(precision, Round::Up) }
    }

    pub fn div(&self, other: &Self, precision: u32) -> Result<Self, IntervalFault> {
        if other.contains_zero() {
            return Err(IntervalFault::DivisorStraddlesZero);
        }
        let mut lo: Option<Dyadic> = None;
        let mut hi: Option<Dyadic> = None;
        for n in [&self.lo, &self.hi] {
            for d in [&other.lo, &other.hi] {
                let down = n.div(d, precision, Round::Down);
                let up = n.div(d, precision, Round::Up);
                lo = Some(match lo {
                    Some(cur) if cur <= down => cur,
                    _ => down,
                });
                hi = Some(match hi {
                    Some(cur) if cur >= up => cur,
                    _ => up,
                });
            }
        }
        Ok(Interval { lo: lo.unwrap_or_else(Dyadic::zero), hi: hi.unwrap_or_else(Dyadic::zero) })
    }

    /// Square root of the nonnegative part. The caller vouches that the exact
    /// operand is ≥ 0, so a lower endpoint below zero is clamped.
    pub fn sqrt(&self, precision: u32) -> Result<Self, IntervalFault> {
        if self.hi.signum() < 0 {
            return Err(IntervalFault::NegativeRadicand);
        }
        let lo = if self.lo.signum() <= 0 {
            Dyadic::zero()
        } else {
            self.lo.sqrt(precision, Round::Down)
        };
        Ok(Interval { lo, hi: self.hi.sqrt(precision, Round::Up) })
    }
}
