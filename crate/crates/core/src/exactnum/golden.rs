//! The quadratic field ℚ(√5).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rational::{rational_sqrt, Rational};
use super::ExactError;

/// Three-way sign classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of_rational(q: &Rational) -> Sign {
        match q.cmp(&Rational::zero()) {
            Ordering::Less => Sign::Negative,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Positive,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }

    pub fn times(self, other: Sign) -> Sign {
        match (self, other) {
            (Sign::Zero, _) | (_, Sign::Zero) => Sign::Zero,
            (a, b) if a == b => Sign::Positive,
            _ => Sign::Negative,
        }
    }
}

/// An element `a + b·√5` of ℚ(√5).
///
/// The pair `(a, b)` is the unique representation of the value, so derived
/// equality and hashing are value equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GoldenNumber {
    pub a: Rational,
    pub b: Rational,
}

impl GoldenNumber {
    pub fn new(a: Rational, b: Rational) -> Self {
        GoldenNumber { a, b }
    }

    pub fn from_rational(a: Rational) -> Self {
        GoldenNumber { a, b: Rational::zero() }
    }

    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn sqrt5() -> Self {
        GoldenNumber { a: Rational::zero(), b: Rational::one() }
    }

    /// φ = (1 + √5)/2.
    pub fn phi() -> Self {
        let half = Rational::new(1.into(), 2.into());
        GoldenNumber { a: half.clone(), b: half }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn conjugate(&self) -> Self {
        GoldenNumber { a: self.a.clone(), b: -&self.b }
    }

    /// Field norm `a² − 5b²`, i.e. the product with the conjugate.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - Rational::from_integer(5.into()) * &self.b * &self.b
    }

    pub fn scale(&self, k: &Rational) -> Self {
        GoldenNumber { a: &self.a * k, b: &self.b * k }
    }

    /// Exact sign, decided by comparing `a²` with `5b²`.
    pub fn sign(&self) -> Sign {
        let sa = Sign::of_rational(&self.a);
        let sb = Sign::of_rational(&self.b);
        match (sa, sb) {
            (s, Sign::Zero) => s,
            (Sign::Zero, s) => s,
            (x, y) if x == y => x,
            _ => {
                let a2 = &self.a * &self.a;
                let b2 = Rational::from_integer(5.into()) * &self.b * &self.b;
                // a² = 5b² has no nonzero rational solution
                if a2 > b2 {
                    sa
                } else {
                    sb
                }
            }
        }
    }

    pub fn recip(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        // 1/(a + b√5) = (a − b√5)/(a² − 5b²); the norm of a nonzero element is nonzero
        let n = self.norm();
        Ok(GoldenNumber { a: &self.a / &n, b: -&self.b / &n })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ExactError> {
        Ok(self * &rhs.recip()?)
    }

    /// The nonnegative square root inside ℚ(√5), if there is one.
    pub fn sqrt(&self) -> Option<Self> {
        match self.sign() {
            Sign::Negative => return None,
            Sign::Zero => return Some(Self::zero()),
            Sign::Positive => {}
        }
        if self.b.is_zero() {
            if let Some(r) = rational_sqrt(&self.a) {
                return Some(Self::from_rational(r));
            }
            let fifth = &self.a / Rational::from_integer(5.into());
            return rational_sqrt(&fifth).map(|y| GoldenNumber { a: Rational::zero(), b: y });
        }
        // (x + y√5)² = a + b√5  ⇔  x² + 5y² = a, 2xy = b, so x² = (a ± √norm)/2
        let n = rational_sqrt(&self.norm())?;
        let two = Rational::from_integer(2.into());
        for cand in [(&self.a + &n) / &two, (&self.a - &n) / &two] {
            let Some(x) = rational_sqrt(&cand) else { continue };
            if x.is_zero() {
                continue;
            }
            let y = &self.b / (&two * &x);
            let root = GoldenNumber { a: x, b: y };
            if &(&root * &root) == self {
                return Some(if root.sign() == Sign::Negative { -root } else { root });
            }
        }
        None
    }

    /// Nearest `f64`, for diagnostics only.
    pub fn approx_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.a.to_f64().unwrap_or(f64::NAN) + self.b.to_f64().unwrap_or(f64::NAN) * 5f64.sqrt()
    }
}

impl From<Rational> for GoldenNumber {
    fn from(a: Rational) -> Self {
        Self::from_rational(a)
    }
}

impl Add for &GoldenNumber {
    type Output = GoldenNumber;
    fn add(self, rhs: &GoldenNumber) -> GoldenNumber {
        GoldenNumber { a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }
}

impl Sub for &GoldenNumber {
    type Output = GoldenNumber;
    fn sub(self, rhs: &GoldenNumber) -> GoldenNumber {
        GoldenNumber { a: &self.a - &rhs.a, b: &self.b - &rhs.b }
    }
}

impl Mul for &GoldenNumber {
    type Output = GoldenNumber;
    fn mul(self, rhs: &GoldenNumber) -> GoldenNumber {
        let five = Rational::from_integer(5.into());
        GoldenNumber {
            a: &self.a * &rhs.a + five * &self.b * &rhs.b,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
        }
    }
}

impl Neg for &GoldenNumber {
    type Output = GoldenNumber;
    fn neg(self) -> GoldenNumber {
        GoldenNumber { a: -&self.a, b: -&self.b }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for GoldenNumber {
            type Output = GoldenNumber;
            fn $m(self, rhs: GoldenNumber) -> GoldenNumber { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for GoldenNumber {
    type Output = GoldenNumber;
    fn neg(self) -> GoldenNumber {
        -&self
    }
}

impl fmt::Display for GoldenNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}√5", self.b),
            (false, false) if self.b.is_negative() => write!(f, "{} - {}√5", self.a, -&self.b),
            (false, false) => write!(f, "{} + {}√5", self.a, self.b),
        }
    }
}
