use num_traits::Signed;

use super::layout::{ColorRole, FlagLayout, Region, Star};
use super::ConstructionError;
use crate::exactnum::{ConstructibleExpr as Expr, Rational};
use crate::geometry::{Pentagram, Point, Rect};

fn positive(param: &Rational, what: &'static str) -> Result<Expr, ConstructionError> {
    if !param.is_positive() {
        return Err(ConstructionError::InvalidDimension(what));
    }
    Ok(Expr::literal(param.clone()))
}

fn rect(x: Expr, y: Expr, w: Expr, h: Expr) -> Result<Rect, ConstructionError> {
    Ok(Rect::new(Point::new(x, y), w, h)?)
}

fn star_at(center: Point, diameter: &Expr) -> Result<Star, ConstructionError> {
    Ok(Star { color: ColorRole::White, pentagram: Pentagram::new(center, diameter.half())? })
}

/// `tan 36° = √(10 − 2√5) / (1 + √5)`.
pub fn tan36_radical_form() -> Expr {
    let root = (Expr::int(10) - Expr::int(2) * Expr::sqrt5()).sqrt().expect("10 − 2√5 > 0");
    root.checked_div(&(Expr::one() + Expr::sqrt5())).expect("1 + √5 ≠ 0")
}

/// `tan 36° = ⁴√5 / √(2 + √5)`.
pub fn tan36_fourth_root_form() -> Expr {
    let fourth_root = Expr::sqrt5().sqrt().expect("√5 > 0");
    let den = (Expr::int(2) + Expr::sqrt5()).sqrt().expect("2 + √5 > 0");
    fourth_root.checked_div(&den).expect("√(2 + √5) ≠ 0")
}

/// `tan 72° = sin 72° / cos 72° = √(10 + 2√5) / (√5 − 1)`.
pub fn tan72_radical_form() -> Expr {
    let root = (Expr::int(10) + Expr::int(2) * Expr::sqrt5()).sqrt().expect("10 + 2√5 > 0");
    root.checked_div(&(Expr::sqrt5() - Expr::one())).expect("√5 − 1 ≠ 0")
}

/// The 1818 flag with every band of height `h`: blue canton of width
/// `h / tan 36°`, white field `φ` times wider, red band across the bottom,
/// and a white star of circumdiameter `h / φ` on the canton's centre.
pub fn build_independence_flag(h: &Rational) -> Result<FlagLayout, ConstructionError> {
    let h = positive(h, "region height")?;
    let w_blue = h.checked_div(&tan36_radical_form())?;
    let w_white = Expr::phi() * &w_blue;
    let width = &w_blue + &w_white;

    let red = rect(Expr::zero(), Expr::zero(), width.clone(), h.clone())?;
    let blue = rect(Expr::zero(), h.clone(), w_blue.clone(), h.clone())?;
    let white = rect(w_blue, h.clone(), w_white, h.clone())?;
    let diameter = h.checked_div(&Expr::phi())?;
    let star = star_at(blue.diagonal_intersection(), &diameter)?;
    Ok(FlagLayout {
        name: "chile-1818".into(),
        provenance: "builtin chile-1818".into(),
        canvas: rect(Expr::zero(), Expr::zero(), width, Expr::int(2) * &h)?,
        regions: vec![
            Region::new("red", ColorRole::Red, red),
            Region::new("blue", ColorRole::Blue, blue),
            Region::new("white", ColorRole::White, white),
        ],
        stars: vec![star],
    })
}

/// The current flag on a grid of six `s × s` squares.
pub fn build_current_flag(s: &Rational) -> Result<FlagLayout, ConstructionError> {
    let s = positive(s, "square side")?;
    let red = rect(Expr::zero(), Expr::zero(), Expr::int(3) * &s, s.clone())?;
    let blue = rect(Expr::zero(), s.clone(), s.clone(), s.clone())?;
    let white = rect(s.clone(), s.clone(), Expr::int(2) * &s, s.clone())?;
    let star = star_at(blue.diagonal_intersection(), &s.half())?;
    Ok(FlagLayout {
        name: "chile-current".into(),
        provenance: "builtin chile-current".into(),
        canvas: rect(Expr::zero(), Expr::zero(), Expr::int(3) * &s, Expr::int(2) * &s)?,
        regions: vec![
            Region::new("red", ColorRole::Red, red),
            Region::new("blue", ColorRole::Blue, blue),
            Region::new("white", ColorRole::White, white),
        ],
        stars: vec![star],
    })
}

/// Togo at height `H`: width `φH`, five stripes of height `H/5` numbered
/// from the top, a red square canton covering the hoist end of the top
/// three, and a star of circumdiameter `4/5` of the canton side.
pub fn build_togo(height: &Rational) -> Result<FlagLayout, ConstructionError> {
    let h = positive(height, "flag height")?;
    let width = Expr::phi() * &h;
    let stripe = h.scale(&Rational::new(1.into(), 5.into()));
    let side = Expr::int(3) * &stripe;
    let fly = &width - &side;

    let mut regions = Vec::with_capacity(6);
    for k in 0..5i64 {
        let (name, color) = match k {
            0 => ("stripe1", ColorRole::Green),
            1 => ("stripe2", ColorRole::Yellow),
            2 => ("stripe3", ColorRole::Green),
            3 => ("stripe4", ColorRole::Yellow),
            _ => ("stripe5", ColorRole::Green),
        };
        let y = Expr::int(4 - k) * &stripe;
        let r = if k < 3 {
            rect(side.clone(), y, fly.clone(), stripe.clone())?
        } else {
            rect(Expr::zero(), y, width.clone(), stripe.clone())?
        };
        regions.push(Region::new(name, color, r));
    }
    let canton = rect(Expr::zero(), Expr::int(2) * &stripe, side.clone(), side.clone())?;
    let diameter = side.scale(&Rational::new(4.into(), 5.into()));
    let star = star_at(canton.diagonal_intersection(), &diameter)?;
    regions.push(Region::new("canton", ColorRole::Red, canton));
    Ok(FlagLayout {
        name: "togo".into(),
        provenance: "builtin togo".into(),
        canvas: rect(Expr::zero(), Expr::zero(), width, h)?,
        regions,
        stars: vec![star],
    })
}

/// The Nepal width-height ratio, transcribed term for term:
///
/// ```text
///      24 + k·(1 + (8 − 3√2) / (√(118 − 48√2) − 6))
///   ──────────────────────────────────────────────────────────
///   32 + k·(1 + 6 / ((8 − 3√2)·(√(1 + 18/(41 − 24√2)) − 1)))
/// ```
///
/// with `k = (297 − 180√2) / (92 − 36√2)`.
pub fn nepal_ratio_expr() -> Expr {
    try_nepal_ratio_expr().expect("every divisor and radicand of the Nepal formula certifies")
}

fn try_nepal_ratio_expr() -> Result<Expr, crate::exactnum::ExactError> {
    let n = Expr::int;
    let r2 = || n(2).sqrt().expect("2 > 0");
    let k = || -> Result<Expr, crate::exactnum::ExactError> {
        (n(297) - n(180) * r2()).checked_div(&(n(92) - n(36) * r2()))
    };
    let eight_minus = || n(8) - n(3) * r2();

    let inner_num = (n(118) - n(48) * r2()).sqrt()? - n(6);
    let num = n(24) + k()? * (n(1) + eight_minus().checked_div(&inner_num)?);

    let nested = (n(1) + n(18).checked_div(&(n(41) - n(24) * r2()))?).sqrt()? - n(1);
    let den = n(32) + k()? * (n(1) + n(6).checked_div(&(eight_minus() * nested))?);
    num.checked_div(&den)
}

/// Ratio-only pseudo-flag: a canvas of width `nepal_ratio_expr()` and unit
/// height, with no regions or stars.
pub fn nepal_ratio_layout() -> Result<FlagLayout, ConstructionError> {
    Ok(FlagLayout {
        name: "nepal-ratio".into(),
        provenance: "builtin nepal-ratio".into(),
        canvas: rect(Expr::zero(), Expr::zero(), nepal_ratio_expr(), Expr::one())?,
        regions: Vec::new(),
        stars: Vec::new(),
    })
}
