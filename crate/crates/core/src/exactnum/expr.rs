//! Constructible numbers as shared expression DAGs.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock};

use num_traits::{One, Signed, Zero};

use super::ball::Ball;
use super::decimal::Decimal;
use super::dyadic::{Dyadic, Interval, IntervalFault};
use super::golden::{GoldenNumber, Sign};
use super::radical::RadicalForm;
use super::rational::Rational;
use super::{ExactError, CAP_BITS, START_BITS};

#[derive(Debug)]
pub enum ExprKind {
    Literal(Rational),
    Add(ConstructibleExpr, ConstructibleExpr),
    Sub(ConstructibleExpr, ConstructibleExpr),
    Mul(ConstructibleExpr, ConstructibleExpr),
    Div(ConstructibleExpr, ConstructibleExpr),
    Sqrt(ConstructibleExpr),
    Neg(ConstructibleExpr),
}

#[derive(Debug)]
struct Node {
    kind: ExprKind,
    radical: OnceLock<Option<RadicalForm>>,
}

/// A real number built from rationals with `+ − × ÷ √`.
///
/// Nodes are reference counted and may be shared between expressions. Every
/// `Sqrt` operand has been certified nonnegative and every `Div` divisor
/// certified nonzero when the node was built, which is why [`checked_div`]
/// and [`sqrt`] are fallible while `+ − ×` are not.
///
/// [`checked_div`]: ConstructibleExpr::checked_div
/// [`sqrt`]: ConstructibleExpr::sqrt
#[derive(Clone, Debug)]
pub struct ConstructibleExpr(Arc<Node>);

impl ConstructibleExpr {
    fn make(kind: ExprKind) -> Self {
        ConstructibleExpr(Arc::new(Node { kind, radical: OnceLock::new() }))
    }

    pub fn literal(q: Rational) -> Self {
        Self::make(ExprKind::Literal(q))
    }

    pub fn int(n: i64) -> Self {
        Self::literal(Rational::from_integer(n.into()))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Self::literal(Rational::new(n.into(), d.into()))
    }

    pub fn zero() -> Self {
        Self::int(0)
    }

    pub fn one() -> Self {
        Self::int(1)
    }

    /// `√5`.
    pub fn sqrt5() -> Self {
        Self::make(ExprKind::Sqrt(Self::int(5)))
    }

    /// φ as `(1 + √5) / 2`.
    pub fn phi() -> Self {
        Self::make(ExprKind::Div(Self::one() + Self::sqrt5(), Self::int(2)))
    }

    /// `a + b·√5`, collapsing to a literal when `b = 0`.
    pub fn from_golden(g: &GoldenNumber) -> Self {
        if g.b.is_zero() {
            return Self::literal(g.a.clone());
        }
        let irr = Self::literal(g.b.clone()) * Self::sqrt5();
        if g.a.is_zero() {
            irr
        } else {
            Self::literal(g.a.clone()) + irr
        }
    }

    pub fn kind(&self) -> &ExprKind {
        &self.0.kind
    }

    pub fn as_literal(&self) -> Option<&Rational> {
        match self.kind() {
            ExprKind::Literal(q) => Some(q),
            _ => None,
        }
    }

    /// Division, after certifying the divisor is nonzero.
    pub fn checked_div(&self, divisor: &Self) -> Result<Self, ExactError> {
        match divisor.sign()? {
            Sign::Zero => Err(ExactError::DivisionByZero),
            _ => Ok(Self::make(ExprKind::Div(self.clone(), divisor.clone()))),
        }
    }

    /// Square root, after certifying the operand is nonnegative. `√0` is allowed.
    pub fn sqrt(&self) -> Result<Self, ExactError> {
        match self.sign()? {
            Sign::Negative => Err(ExactError::NegativeRadicand),
            _ => Ok(Self::make(ExprKind::Sqrt(self.clone()))),
        }
    }

    /// `|self|`, using the certified sign.
    pub fn abs(&self) -> Result<Self, ExactError> {
        Ok(match self.sign()? {
            Sign::Negative => -self,
            _ => self.clone(),
        })
    }

    /// Scalar multiple by a rational.
    pub fn scale(&self, k: &Rational) -> Self {
        Self::literal(k.clone()) * self
    }

    /// Halves the value; never fails.
    pub fn half(&self) -> Self {
        Self::make(ExprKind::Div(self.clone(), Self::int(2)))
    }

    /// Exact normal form, when the expression stays within the radical
    /// fragment the normalizer understands.
    pub fn radical_form(&self) -> Option<&RadicalForm> {
        self.0
            .radical
            .get_or_init(|| {
                use ExprKind::*;
                match self.kind() {
                    Literal(q) => Some(RadicalForm::constant(GoldenNumber::from_rational(q.clone()))),
                    Add(a, b) => a.radical_form()?.add(b.radical_form()?),
                    Sub(a, b) => a.radical_form()?.sub(b.radical_form()?),
                    Mul(a, b) => a.radical_form()?.mul(b.radical_form()?),
                    Div(a, b) => a.radical_form()?.mul(&b.radical_form()?.recip()?),
                    Neg(a) => Some(a.radical_form()?.neg()),
                    Sqrt(a) => a.radical_form()?.sqrt(),
                }
            })
            .as_ref()
    }

    /// The exact value in ℚ(√5), or `NotInField` when a subterm leaves the field.
    pub fn to_golden(&self) -> Result<GoldenNumber, ExactError> {
        self.radical_form().and_then(RadicalForm::as_golden).ok_or(ExactError::NotInField)
    }

    /// Certified sign: exact when the normal form decides it, otherwise by
    /// interval refinement up to the precision cap.
    pub fn sign(&self) -> Result<Sign, ExactError> {
        if let Some(s) = self.radical_form().and_then(RadicalForm::sign) {
            return Ok(s);
        }
        let mut bits = START_BITS;
        while bits <= CAP_BITS {
            if let Ok(iv) = self.interval(bits) {
                if iv.lo.signum() > 0 {
                    return Ok(Sign::Positive);
                }
                if iv.hi.signum() < 0 {
                    return Ok(Sign::Negative);
                }
            }
            bits *= 2;
        }
        Err(ExactError::PrecisionExhausted { bits: CAP_BITS })
    }

    /// One outward-rounded evaluation pass at working precision `bits`.
    pub fn interval(&self, bits: u32) -> Result<Interval, IntervalFault> {
        let mut memo = HashMap::new();
        self.interval_memo(bits, &mut memo)
    }

    fn interval_memo(
        &self,
        bits: u32,
        memo: &mut HashMap<*const Node, Interval>,
    ) -> Result<Interval, IntervalFault> {
        let key = Arc::as_ptr(&self.0);
        if let Some(iv) = memo.get(&key) {
            return Ok(iv.clone());
        }
        use ExprKind::*;
        let iv = match self.kind() {
            Literal(q) => Interval::from_rational(q, bits),
            Add(a, b) => a.interval_memo(bits, memo)?.add(&b.interval_memo(bits, memo)?, bits),
            Sub(a, b) => a.interval_memo(bits, memo)?.sub(&b.interval_memo(bits, memo)?, bits),
            Mul(a, b) => a.interval_memo(bits, memo)?.mul(&b.interval_memo(bits, memo)?, bits),
            Div(a, b) => a.interval_memo(bits, memo)?.div(&b.interval_memo(bits, memo)?, bits)?,
            Neg(a) => a.interval_memo(bits, memo)?.neg(),
            Sqrt(a) => a.interval_memo(bits, memo)?.sqrt(bits)?,
        };
        memo.insert(key, iv.clone());
        Ok(iv)
    }

    /// A ball containing the exact value with
    /// `radius ≤ 2^(−precision_bits) · max(1, |center|)`.
    pub fn eval(&self, precision_bits: u32) -> Result<Ball, ExactError> {
        let cap = CAP_BITS.max(precision_bits.saturating_mul(4));
        let mut bits = START_BITS.max(precision_bits + 32);
        loop {
            if let Ok(iv) = self.interval(bits) {
                let ball = Ball::from_interval(&iv);
                let abs_c = ball.center().abs();
                let scale = if abs_c > Dyadic::from_int(1) { abs_c } else { Dyadic::from_int(1) };
                let bound = scale.mul(&Dyadic::pow2(-(precision_bits as i64)));
                if *ball.radius() <= bound {
                    return Ok(ball);
                }
            }
            if bits >= cap {
                return Err(ExactError::PrecisionExhausted { bits: cap });
            }
            bits = (bits * 2).min(cap);
        }
    }

    /// Rounds the exact value to `sig` significant digits (ties to even),
    /// refining until both ends of the enclosure round the same way.
    pub fn to_decimal(&self, sig: u32) -> Result<Decimal, ExactError> {
        self.to_decimal_from(sig, START_BITS)
    }

    /// As [`to_decimal`](Self::to_decimal), starting refinement at
    /// `start_bits` of working precision instead of the default.
    pub fn to_decimal_from(&self, sig: u32, start_bits: u32) -> Result<Decimal, ExactError> {
        if let Some(q) = self.to_golden().ok().filter(GoldenNumber::is_rational) {
            return Ok(Decimal::round(&q.a, sig));
        }
        let mut bits = start_bits.max(START_BITS).max(4 * sig + 32);
        let cap = CAP_BITS.max(16 * sig).max(start_bits);
        loop {
            if let Ok(iv) = self.interval(bits) {
                let lo = Decimal::round(&iv.lo.to_rational(), sig);
                let hi = Decimal::round(&iv.hi.to_rational(), sig);
                if lo == hi {
                    return Ok(lo);
                }
            }
            if bits >= cap {
                return Err(ExactError::PrecisionExhausted { bits: cap });
            }
            bits = (bits * 2).min(cap);
        }
    }

    /// Structural equality of the two trees (shared nodes compare by pointer).
    pub fn structurally_eq(&self, other: &Self) -> bool {
        if Arc::ptr_eq(&self.0, &other.0) {
            return true;
        }
        use ExprKind::*;
        match (self.kind(), other.kind()) {
            (Literal(a), Literal(b)) => a == b,
            (Add(a, b), Add(c, d))
            | (Sub(a, b), Sub(c, d))
            | (Mul(a, b), Mul(c, d))
            | (Div(a, b), Div(c, d)) => a.structurally_eq(c) && b.structurally_eq(d),
            (Sqrt(a), Sqrt(b)) | (Neg(a), Neg(b)) => a.structurally_eq(b),
            _ => false,
        }
    }

    /// An expression for `self²` that strips square roots where the
    /// structure allows: `(√x)² → x`, `(a·b)² → a²·b²`, `(a/b)² → a²/b²`.
    pub fn square(&self) -> Self {
        use ExprKind::*;
        match self.kind() {
            Literal(q) => Self::literal(q * q),
            Neg(a) => a.square(),
            Mul(a, b) => a.square() * b.square(),
            // b ≠ 0 was certified, hence b² ≠ 0
            Div(a, b) => Self::make(Div(a.square(), b.square())),
            Sqrt(a) => a.clone(),
            Add(..) | Sub(..) => self * self,
        }
    }

    /// Number of distinct nodes in the DAG.
    pub fn node_count(&self) -> usize {
        fn walk(e: &ConstructibleExpr, seen: &mut std::collections::HashSet<*const Node>) {
            if !seen.insert(Arc::as_ptr(&e.0)) {
                return;
            }
            use ExprKind::*;
            match e.kind() {
                Literal(_) => {}
                Add(a, b) | Sub(a, b) | Mul(a, b) | Div(a, b) => {
                    walk(a, seen);
                    walk(b, seen);
                }
                Sqrt(a) | Neg(a) => walk(a, seen),
            }
        }
        let mut seen = std::collections::HashSet::new();
        walk(self, &mut seen);
        seen.len()
    }
}

impl From<Rational> for ConstructibleExpr {
    fn from(q: Rational) -> Self {
        Self::literal(q)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $kind:ident) => {
        impl $tr for &ConstructibleExpr {
            type Output = ConstructibleExpr;
            fn $m(self, rhs: &ConstructibleExpr) -> ConstructibleExpr {
                ConstructibleExpr::make(ExprKind::$kind(self.clone(), rhs.clone()))
            }
        }
        impl $tr for ConstructibleExpr {
            type Output = ConstructibleExpr;
            fn $m(self, rhs: ConstructibleExpr) -> ConstructibleExpr {
                ConstructibleExpr::make(ExprKind::$kind(self, rhs))
            }
        }
        impl $tr<&ConstructibleExpr> for ConstructibleExpr {
            type Output = ConstructibleExpr;
            fn $m(self, rhs: &ConstructibleExpr) -> ConstructibleExpr {
                ConstructibleExpr::make(ExprKind::$kind(self, rhs.clone()))
            }
        }
        impl $tr<ConstructibleExpr> for &ConstructibleExpr {
            type Output = ConstructibleExpr;
            fn $m(self, rhs: ConstructibleExpr) -> ConstructibleExpr {
                ConstructibleExpr::make(ExprKind::$kind(self.clone(), rhs))
            }
        }
    };
}

binop!(Add, add, Add);
binop!(Sub, sub, Sub);
binop!(Mul, mul, Mul);

impl Neg for &ConstructibleExpr {
    type Output = ConstructibleExpr;
    fn neg(self) -> ConstructibleExpr {
        ConstructibleExpr::make(ExprKind::Neg(self.clone()))
    }
}

impl Neg for ConstructibleExpr {
    type Output = ConstructibleExpr;
    fn neg(self) -> ConstructibleExpr {
        ConstructibleExpr::make(ExprKind::Neg(self))
    }
}

impl fmt::Display for ConstructibleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ExprKind::*;
        match self.kind() {
            Literal(q) if q.is_negative() || !q.denom().is_one() => write!(f, "({q})"),
            Literal(q) => write!(f, "{q}"),
            Add(a, b) => write!(f, "({a} + {b})"),
            Sub(a, b) => write!(f, "({a} - {b})"),
            Mul(a, b) => write!(f, "{a}*{b}"),
            Div(a, b) => write!(f, "{a}/{b}"),
            Sqrt(a) => write!(f, "sqrt({a})"),
            Neg(a) => write!(f, "-{a}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational::{int, ratio};

    type E = ConstructibleExpr;

    fn tan36() -> E {
        let radicand = E::int(10) - E::int(2) * E::sqrt5();
        radicand.sqrt().unwrap().checked_div(&(E::one() + E::sqrt5())).unwrap()
    }

    #[test]
    fn phi_normalizes() {
        assert_eq!(E::phi().to_golden().unwrap(), GoldenNumber::phi());
    }

    #[test]
    fn sqrt_twenty_is_two_sqrt_five() {
        let e = E::int(20).sqrt().unwrap();
        assert_eq!(e.to_golden().unwrap(), GoldenNumber::new(int(0), int(2)));
    }

    #[test]
    fn nested_radical_leaves_the_field() {
        let e = (E::int(10) - E::int(2) * E::sqrt5()).sqrt().unwrap();
        assert_eq!(e.to_golden(), Err(ExactError::NotInField));
    }

    #[test]
    fn literal_ball_is_exact() {
        let b = E::ratio(3, 2).eval(17).unwrap();
        assert_eq!(b.center().to_rational(), ratio(3, 2));
        assert!(b.radius().is_zero());
    }

    #[test]
    fn tan36_ball() {
        let b = tan36().eval(64).unwrap();
        let c = b.center().to_rational();
        assert!(c > ratio(7265425280, 10_000_000_000) && c < ratio(7265425281, 10_000_000_000));
        assert!(b.radius() <= &Dyadic::pow2(-64));
    }

    #[test]
    fn certification_rejects_bad_operands() {
        assert_eq!((E::zero() - E::one()).sqrt().unwrap_err(), ExactError::NegativeRadicand);
        let zero = E::phi() * E::phi() - E::phi() - E::one();
        assert_eq!(E::one().checked_div(&zero).unwrap_err(), ExactError::DivisionByZero);
        assert!(E::zero().sqrt().is_ok());
    }

    #[test]
    fn sign_falls_back_to_intervals() {
        // √2 + √3 − √7 is not decided by the normal form alone
        let s = |n| E::int(n).sqrt().unwrap();
        let e = s(2) + s(3) - s(7);
        assert!(e.radical_form().unwrap().sign().is_none());
        assert_eq!(e.sign().unwrap(), Sign::Positive);
    }

    #[test]
    fn exhausted_when_zero_is_invisible_to_the_normalizer() {
        // √(1+√2)² − (1+√2) is zero, but the square root of a non-constant form is opaque
        let inner = E::one() + E::int(2).sqrt().unwrap();
        let e = inner.sqrt().unwrap() * inner.sqrt().unwrap() - &inner;
        assert!(matches!(e.sign(), Err(ExactError::PrecisionExhausted { .. })));
    }

    #[test]
    fn decimal_rounding_of_tan36() {
        assert_eq!(tan36().to_decimal(3).unwrap().to_fixed_string(), "0.727");
        assert_eq!(tan36().to_decimal(10).unwrap().to_fixed_string(), "0.7265425280");
    }

    #[test]
    fn squaring_strips_radicals() {
        let sq = tan36().square();
        assert_eq!(sq.to_golden().unwrap(), GoldenNumber::new(int(5), int(-2)));
    }

    #[test]
    fn shared_subterms_are_counted_once() {
        let p = E::phi();
        let e = &p * &p;
        assert_eq!(e.node_count(), p.node_count() + 1);
    }
}
