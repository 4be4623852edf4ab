use std::collections::HashMap;

use super::ast::{BinOp, ExprAst, ExprAstKind, Item, Pos, SpecAst, StarCenter};
use super::{CertificationError, SemanticError, SpecError};
use crate::constructions::{FlagLayout, Region, Star};
use crate::exactnum::{ConstructibleExpr as Expr, ExactError};
use crate::geometry::{GeometryError, Pentagram, Point, Rect};

pub type Bindings = HashMap<String, Expr>;

fn certification(pos: Pos, message: impl Into<String>) -> SpecError {
    SpecError::Certification(CertificationError { line: pos.line, col: pos.col, message: message.into() })
}

fn semantic(pos: Pos, message: impl Into<String>) -> SpecError {
    SpecError::Semantic(SemanticError { line: pos.line, col: pos.col, message: message.into() })
}

fn exact_failure(pos: Pos, what: &str, e: ExactError) -> SpecError {
    match e {
        ExactError::DivisionByZero => certification(pos, "division by zero"),
        ExactError::NegativeRadicand => certification(pos, "square root of a negative number"),
        ExactError::PrecisionExhausted { bits } => {
            certification(pos, format!("could not certify {what} within {bits} bits"))
        }
        other => certification(pos, other.to_string()),
    }
}

fn geometry_failure(pos: Pos, e: GeometryError) -> SpecError {
    match e {
        GeometryError::NonPositive(what) => certification(pos, format!("{what} is not positive")),
        GeometryError::Exact(e) => exact_failure(pos, "a sign", e),
        other => certification(pos, other.to_string()),
    }
}

/// Converts an expression tree, certifying every division and square root.
/// Identifiers resolve against `bindings`; a bound name reuses one shared node.
pub fn lower_expr(e: &ExprAst, bindings: &Bindings) -> Result<Expr, SpecError> {
    Ok(match &e.kind {
        ExprAstKind::Number(q) => Expr::literal(q.clone()),
        ExprAstKind::Phi => Expr::phi(),
        ExprAstKind::Ident(name) => bindings
            .get(name)
            .cloned()
            .ok_or_else(|| semantic(e.pos, format!("unbound name `{name}`")))?,
        ExprAstKind::Neg(x) => -lower_expr(x, bindings)?,
        ExprAstKind::Sqrt(x) => lower_expr(x, bindings)?
            .sqrt()
            .map_err(|err| exact_failure(e.pos, "a radicand's sign", err))?,
        ExprAstKind::Binary(op, l, r) => {
            let (l, r) = (lower_expr(l, bindings)?, lower_expr(r, bindings)?);
            match op {
                BinOp::Add => l + r,
                BinOp::Sub => l - r,
                BinOp::Mul => l * r,
                BinOp::Div => l.checked_div(&r).map_err(|err| exact_failure(e.pos, "a divisor's sign", err))?,
            }
        }
    })
}

/// Resolves bindings in order and assembles the layout.
pub fn lower(ast: &SpecAst) -> Result<FlagLayout, SpecError> {
    let mut bindings = Bindings::new();
    let canvas_pos = ast.canvas_w.pos;
    let canvas = Rect::new(
        Point::ints(0, 0),
        lower_expr(&ast.canvas_w, &bindings)?,
        lower_expr(&ast.canvas_h, &bindings)?,
    )
    .map_err(|e| geometry_failure(canvas_pos, e))?;

    let mut regions: Vec<Region> = Vec::new();
    let mut stars = Vec::new();
    for item in &ast.items {
        match item {
            Item::Let(l) => {
                if bindings.contains_key(&l.name) {
                    return Err(semantic(l.pos, format!("`{}` is already bound", l.name)));
                }
                let value = lower_expr(&l.value, &bindings)?;
                bindings.insert(l.name.clone(), value);
            }
            Item::Region(r) => {
                if regions.iter().any(|existing| existing.name == r.name) {
                    return Err(semantic(r.pos, format!("region `{}` is already declared", r.name)));
                }
                let origin = Point::new(lower_expr(&r.x, &bindings)?, lower_expr(&r.y, &bindings)?);
                let rect = Rect::new(origin, lower_expr(&r.w, &bindings)?, lower_expr(&r.h, &bindings)?)
                    .map_err(|e| geometry_failure(r.w.pos, e))?;
                regions.push(Region::new(r.name.clone(), r.color, rect));
            }
            Item::Star(s) => {
                let center = match &s.center {
                    StarCenter::Point(x, y) => Point::new(lower_expr(x, &bindings)?, lower_expr(y, &bindings)?),
                    StarCenter::DiagonalIntersection { region, pos } => regions
                        .iter()
                        .find(|r| &r.name == region)
                        .map(|r| r.rect.diagonal_intersection())
                        .ok_or_else(|| semantic(*pos, format!("no region named `{region}` declared before this star")))?,
                };
                let radius = lower_expr(&s.diameter, &bindings)?.half();
                let pentagram = Pentagram::new(center, radius).map_err(|e| geometry_failure(s.diameter.pos, e))?;
                stars.push(Star { color: s.color, pentagram });
            }
        }
    }
    Ok(FlagLayout {
        name: ast.name.clone(),
        provenance: format!("spec \"{}\"", ast.name),
        canvas,
        regions,
        stars,
    })
}
