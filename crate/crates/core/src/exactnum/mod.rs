//! Exact scalar arithmetic: rationals, the field ℚ(√5), constructible
//! expressions with rigorous ball evaluation, and an identity prover.

mod ball;
mod decimal;
mod dyadic;
mod expr;
mod golden;
mod identity;
mod radical;
mod rational;

pub use ball::Ball;
pub use decimal::Decimal;
pub use dyadic::{Dyadic, Interval, IntervalFault, Round};
pub use expr::{ConstructibleExpr, ExprKind};
pub use golden::{GoldenNumber, Sign};
pub use identity::{verify_identity, Verdict};
pub use radical::{Atom, RadicalForm};
pub use rational::{int, parse_rational, ratio, rational_sqrt, Rational};

/// First working precision of every refinement loop, in bits.
pub const START_BITS: u32 = 64;
/// Precision at which refinement loops give up (doubling from [`START_BITS`]).
pub const CAP_BITS: u32 = 4096;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("value is not in Q(sqrt 5)")]
    NotInField,
    #[error("square root of a negative value")]
    NegativeRadicand,
    #[error("precision exhausted at {bits} bits")]
    PrecisionExhausted { bits: u32 },
    #[error("the two sides have opposite signs")]
    SignMismatch,
}
