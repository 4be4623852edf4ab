//! Round-half-even decimal rendering of exact rationals.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::Rational;

/// A rational rounded to a fixed number of significant decimal digits:
/// `digits · 10^exp10`, where `digits` has exactly the requested number of
/// decimal digits (or is zero).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decimal {
    negative: bool,
    digits: BigInt,
    exp10: i64,
    sig: u32,
}

fn pow10(n: u64) -> BigInt {
    num_traits::pow(BigInt::from(10u32), n as usize)
}

fn scale10(q: &Rational, e: i64) -> Rational {
    if e >= 0 {
        q * Rational::from_integer(pow10(e as u64))
    } else {
        q / Rational::from_integer(pow10((-e) as u64))
    }
}

/// `floor(log10(q))` for `q > 0`.
fn floor_log10(q: &Rational) -> i64 {
    // digit-count estimate, then correct by at most a step or two
    let est = q.numer().to_string().len() as i64 - q.denom().to_string().len() as i64;
    let mut k = est;
    loop {
        let scaled = scale10(q, -k);
        if scaled < Rational::one() {
            k -= 1;
        } else if scaled >= Rational::from_integer(BigInt::from(10u32)) {
            k += 1;
        } else {
            return k;
        }
    }
}

fn round_half_even(q: &Rational) -> BigInt {
    let floor = q.floor().to_integer();
    let frac = q - Rational::from_integer(floor.clone());
    let half = Rational::new(BigInt::one(), BigInt::from(2u32));
    match frac.cmp(&half) {
        Ordering::Less => floor,
        Ordering::Greater => floor + 1,
        Ordering::Equal if floor.is_even() => floor,
        Ordering::Equal => floor + 1,
    }
}

impl Decimal {
    /// Rounds `q` to `sig` significant digits, ties to even. `sig` must be ≥ 1.
    pub fn round(q: &Rational, sig: u32) -> Decimal {
        assert!(sig >= 1, "at least one significant digit is required");
        if q.is_zero() {
            return Decimal { negative: false, digits: BigInt::zero(), exp10: 0, sig };
        }
        let mag = q.abs();
        let mut k = floor_log10(&mag);
        let mut digits = round_half_even(&scale10(&mag, sig as i64 - 1 - k));
        if digits == pow10(sig as u64) {
            digits = pow10(sig as u64 - 1);
            k += 1;
        }
        Decimal { negative: q.is_negative(), digits, exp10: k - (sig as i64 - 1), sig }
    }

    pub fn to_rational(&self) -> Rational {
        let v = scale10(&Rational::from_integer(self.digits.clone()), self.exp10);
        if self.negative {
            -v
        } else {
            v
        }
    }

    /// Unit in the last place of this rounding.
    pub fn ulp(&self) -> Rational {
        scale10(&Rational::one(), self.exp10)
    }

    /// Positional notation keeping every significant digit, e.g. `0.820`.
    pub fn to_fixed_string(&self) -> String {
        self.render(false)
    }

    /// Positional notation with trailing fractional zeros removed, e.g. `2.4`, `900`.
    pub fn to_trimmed_string(&self) -> String {
        self.render(true)
    }

    fn render(&self, trim: bool) -> String {
        if self.digits.is_zero() {
            return if trim || self.sig == 1 {
                "0".to_string()
            } else {
                format!("0.{}", "0".repeat(self.sig as usize - 1))
            };
        }
        let raw = self.digits.to_string();
        let mut out = String::new();
        if self.negative {
            out.push('-');
        }
        let body = if self.exp10 >= 0 {
            format!("{raw}{}", "0".repeat(self.exp10 as usize))
        } else {
            let frac_len = (-self.exp10) as usize;
            let (int_part, frac_part) = if raw.len() > frac_len {
                let (i, f) = raw.split_at(raw.len() - frac_len);
                (i.to_string(), f.to_string())
            } else {
                ("0".to_string(), format!("{}{raw}", "0".repeat(frac_len - raw.len())))
            };
            let frac_part = if trim { frac_part.trim_end_matches('0').to_string() } else { frac_part };
            if frac_part.is_empty() {
                int_part
            } else {
                format!("{int_part}.{frac_part}")
            }
        };
        out.push_str(&body);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational::{int, parse_rational, ratio};

    fn fixed(q: Rational, sig: u32) -> String {
        Decimal::round(&q, sig).to_fixed_string()
    }

    #[test]
    fn significant_digit_rounding() {
        assert_eq!(fixed(ratio(1, 3), 3), "0.333");
        assert_eq!(fixed(ratio(2, 3), 3), "0.667");
        assert_eq!(fixed(int(900), 12), "900.000000000");
        assert_eq!(Decimal::round(&int(900), 12).to_trimmed_string(), "900");
        assert_eq!(Decimal::round(&ratio(12, 5), 6).to_trimmed_string(), "2.4");
        assert_eq!(fixed(ratio(-1, 8), 2), "-0.12");
        assert_eq!(fixed(int(0), 3), "0.00");
        assert_eq!(fixed(int(12345), 3), "12300");
        assert_eq!(fixed(ratio(999, 1000), 2), "1.0");
    }

    #[test]
    fn ties_go_to_even() {
        assert_eq!(fixed(ratio(125, 1000), 2), "0.12");
        assert_eq!(fixed(ratio(135, 1000), 2), "0.14");
        assert_eq!(fixed(ratio(5, 2), 1), "2");
        assert_eq!(fixed(ratio(7, 2), 1), "4");
    }

    #[test]
    fn ulp_and_back() {
        let d = Decimal::round(&parse_rational("1.801707").unwrap(), 6);
        assert_eq!(d.to_fixed_string(), "1.80171");
        assert_eq!(d.ulp(), ratio(1, 100_000));
        assert_eq!(d.to_rational(), parse_rational("1.80171").unwrap());
    }
}
