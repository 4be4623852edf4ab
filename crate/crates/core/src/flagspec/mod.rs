//! The `.flag` description language.
//!
//! ```text
//! spec    := "flag" STRING "{" canvas { let | region | star } "}"
//! canvas  := "canvas" expr "x" expr ";"
//! let     := "let" IDENT "=" expr ";"
//! region  := "region" IDENT COLOR "rect" expr expr expr expr ";"
//! star    := "star" COLOR ( "at" expr expr
//!                         | "at" "diagonal_intersection" "of" IDENT )
//!            "diameter" expr ";"
//! COLOR   := "red" | "white" | "blue" | "green" | "yellow"
//! expr    := term { ("+" | "-") term }
//! term    := unary { ("*" | "/") unary }
//! unary   := "-" unary | primary
//! primary := NUMBER | IDENT | "phi" | "sqrt" "(" expr ")" | "(" expr ")"
//! ```
//!
//! Rectangles are `x y width height` with `(x, y)` the lower-left corner in
//! y-up canvas units. Because operands are juxtaposed, a negative operand
//! after the first needs parentheses: `rect 0 (-1) 2 1`. Names must be bound
//! before use, and `x` is only special between the two canvas expressions.

mod ast;
mod lexer;
mod lower;
mod parser;

pub use ast::{BinOp, ExprAst, ExprAstKind, Item, LetDecl, Pos, RegionDecl, SpecAst, StarCenter, StarDecl};
pub use lexer::{tokenize, Token, TokenKind, KEYWORDS};
pub use lower::{lower, lower_expr, Bindings};
pub use parser::{parse, parse_expression, MAX_DEPTH};

use crate::constructions::FlagLayout;
use crate::exactnum::ConstructibleExpr;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{line}:{col}: {message}")]
pub struct LexError {
    pub line: u32,
    pub col: u32,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{line}:{col}: expected {expected}, found {found}")]
pub struct ParseError {
    pub line: u32,
    pub col: u32,
    pub expected: String,
    pub found: String,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{line}:{col}: {message}")]
pub struct SemanticError {
    pub line: u32,
    pub col: u32,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{line}:{col}: {message}")]
pub struct CertificationError {
    pub line: u32,
    pub col: u32,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SpecError {
    #[error("lex error at {0}")]
    Lex(#[from] LexError),
    #[error("parse error at {0}")]
    Parse(#[from] ParseError),
    #[error("semantic error at {0}")]
    Semantic(#[from] SemanticError),
    #[error("certification error at {0}")]
    Certification(#[from] CertificationError),
}

impl SpecError {
    pub fn position(&self) -> (u32, u32) {
        match self {
            SpecError::Lex(e) => (e.line, e.col),
            SpecError::Parse(e) => (e.line, e.col),
            SpecError::Semantic(e) => (e.line, e.col),
            SpecError::Certification(e) => (e.line, e.col),
        }
    }
}

pub fn parse_source(source: &str) -> Result<SpecAst, SpecError> {
    Ok(parse(&tokenize(source)?)?)
}

/// Tokenizes, parses and lowers a `.flag` document.
pub fn load(source: &str) -> Result<FlagLayout, SpecError> {
    lower(&parse_source(source)?)
}

/// Lowers a standalone expression such as `sqrt(10-2*sqrt(5))/(1+sqrt(5))`.
pub fn eval_source(source: &str) -> Result<ConstructibleExpr, SpecError> {
    let ast = parse_expression(&tokenize(source)?)?;
    lower_expr(&ast, &Bindings::new())
}
