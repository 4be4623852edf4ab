use crate::constructions::ColorRole;
use crate::exactnum::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Pos {
    pub line: u32,
    pub col: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprAstKind {
    Number(Rational),
    Ident(String),
    Phi,
    Binary(BinOp, Box<ExprAst>, Box<ExprAst>),
    Neg(Box<ExprAst>),
    Sqrt(Box<ExprAst>),
}

/// An expression node. `pos` is the operator for binary nodes and the
/// first token otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExprAst {
    pub kind: ExprAstKind,
    pub pos: Pos,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LetDecl {
    pub name: String,
    pub value: ExprAst,
    pub pos: Pos,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegionDecl {
    pub name: String,
    pub color: ColorRole,
    pub x: ExprAst,
    pub y: ExprAst,
    pub w: ExprAst,
    pub h: ExprAst,
    pub pos: Pos,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StarCenter {
    Point(ExprAst, ExprAst),
    DiagonalIntersection { region: String, pos: Pos },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarDecl {
    pub color: ColorRole,
    pub center: StarCenter,
    pub diameter: ExprAst,
    pub pos: Pos,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Item {
    Let(LetDecl),
    Region(RegionDecl),
    Star(StarDecl),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecAst {
    pub name: String,
    pub canvas_w: ExprAst,
    pub canvas_h: ExprAst,
    /// Declarations in source order.
    pub items: Vec<Item>,
}

impl SpecAst {
    pub fn lets(&self) -> impl Iterator<Item = &LetDecl> {
        self.items.iter().filter_map(|i| match i {
            Item::Let(l) => Some(l),
            _ => None,
        })
    }

    pub fn regions(&self) -> impl Iterator<Item = &RegionDecl> {
        self.items.iter().filter_map(|i| match i {
            Item::Region(r) => Some(r),
            _ => None,
        })
    }

    pub fn stars(&self) -> impl Iterator<Item = &StarDecl> {
        self.items.iter().filter_map(|i| match i {
            Item::Star(s) => Some(s),
            _ => None,
        })
    }
}
