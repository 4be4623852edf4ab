use std::fmt;

use super::decimal::Decimal;
use super::dyadic::{Dyadic, Interval};
use super::golden::Sign;
use super::rational::Rational;

/// A rigorous enclosure `[center − radius, center + radius]` of a real value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ball {
    center: Dyadic,
    radius: Dyadic,
}

impl Ball {
    /// Panics if `radius` is negative.
    pub fn new(center: Dyadic, radius: Dyadic) -> Self {
        assert!(radius.signum() >= 0, "ball radius must be nonnegative");
        Ball { center, radius }
    }

    pub fn from_interval(iv: &Interval) -> Self {
        Ball { center: iv.lo.add(&iv.hi).half(), radius: iv.hi.sub(&iv.lo).half() }
    }

    pub fn center(&self) -> &Dyadic {
        &self.center
    }

    pub fn radius(&self) -> &Dyadic {
        &self.radius
    }

    pub fn lower(&self) -> Dyadic {
        self.center.sub(&self.radius)
    }

    pub fn upper(&self) -> Dyadic {
        self.center.add(&self.radius)
    }

    pub fn contains(&self, q: &Rational) -> bool {
        let lo = self.lower().to_rational();
        let hi = self.upper().to_rational();
        &lo <= q && q <= &hi
    }

    /// The sign of every point in the ball, if they all agree and are nonzero.
    pub fn sign(&self) -> Option<Sign> {
        if self.lower().signum() > 0 {
            Some(Sign::Positive)
        } else if self.upper().signum() < 0 {
            Some(Sign::Negative)
        } else {
            None
        }
    }

    /// Both endpoints rounded to `sig` digits, when they agree.
    pub fn to_decimal(&self, sig: u32) -> Option<Decimal> {
        let lo = Decimal::round(&self.lower().to_rational(), sig);
        let hi = Decimal::round(&self.upper().to_rational(), sig);
        (lo == hi).then_some(lo)
    }
}

impl fmt::Display for Ball {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = Decimal::round(&self.center.to_rational(), 20).to_fixed_string();
        let r = Decimal::round(&self.radius.to_rational(), 3).to_fixed_string();
        write!(f, "[{c} +/- {r}]")
    }
}
