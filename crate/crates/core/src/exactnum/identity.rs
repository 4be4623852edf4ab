//! Deciding equality of constructible expressions.

use std::fmt;

use super::expr::ConstructibleExpr;
use super::golden::Sign;
use super::radical::RadicalForm;
use super::{ExactError, CAP_BITS, START_BITS};

/// How many times both sides are squared before giving up on an exact answer.
const MAX_SQUARINGS: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    ProvedEqual,
    ProvedUnequal,
    Undecided,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::ProvedEqual => "ProvedEqual",
            Verdict::ProvedUnequal => "ProvedUnequal",
            Verdict::Undecided => "Undecided",
        })
    }
}

/// Compares two normal forms. `None` when the forms cannot settle it.
fn compare_forms(lhs: Option<&RadicalForm>, rhs: Option<&RadicalForm>) -> Option<Verdict> {
    let diff = lhs?.sub(rhs?)?;
    match diff.sign()? {
        Sign::Zero => Some(Verdict::ProvedEqual),
        _ => Some(Verdict::ProvedUnequal),
    }
}

/// Decides `lhs = rhs`.
///
/// Exact routes come first: structural identity, then the radical normal
/// form of both sides, then the same after squaring both sides (up to
/// [`MAX_SQUARINGS`] times). Squaring needs both sides on the same side of
/// zero, so opposite certified signs are rejected with `SignMismatch`. If no
/// exact route applies, interval refinement may still separate the values;
/// otherwise the answer is `Undecided`.
pub fn verify_identity(lhs: &ConstructibleExpr, rhs: &ConstructibleExpr) -> Result<Verdict, ExactError> {
    if lhs.structurally_eq(rhs) {
        return Ok(Verdict::ProvedEqual);
    }
    let signs = (lhs.sign().ok(), rhs.sign().ok());
    if let (Some(a), Some(b)) = signs {
        if a.times(b) == Sign::Negative {
            return Err(ExactError::SignMismatch);
        }
    }
    if let Some(v) = compare_forms(lhs.radical_form(), rhs.radical_form()) {
        return Ok(v);
    }
    if let (Some(_), Some(_)) = signs {
        let (mut l, mut r) = (lhs.clone(), rhs.clone());
        for _ in 0..MAX_SQUARINGS {
            l = l.square();
            r = r.square();
            if let Some(v) = compare_forms(l.radical_form(), r.radical_form()) {
                return Ok(v);
            }
        }
    }
    let diff = lhs - rhs;
    let mut bits = START_BITS;
    while bits <= CAP_BITS {
        if let Ok(iv) = diff.interval(bits) {
            if !iv.contains_zero() {
                return Ok(Verdict::ProvedUnequal);
            }
        }
        bits *= 2;
    }
    Ok(Verdict::Undecided)
}
