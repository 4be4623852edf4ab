use std::fmt;
use std::str::FromStr;

use super::ConstructionError;
use crate::exactnum::{ConstructibleExpr as Expr, ExactError};
use crate::geometry::{coincide, Pentagram, Point, Rect};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ColorRole {
    Red,
    White,
    Blue,
    Green,
    Yellow,
}

impl ColorRole {
    pub const ALL: [ColorRole; 5] = [ColorRole::Red, ColorRole::White, ColorRole::Blue, ColorRole::Green, ColorRole::Yellow];

    pub fn keyword(self) -> &'static str {
        match self {
            ColorRole::Red => "red",
            ColorRole::White => "white",
            ColorRole::Blue => "blue",
            ColorRole::Green => "green",
            ColorRole::Yellow => "yellow",
        }
    }
}

impl FromStr for ColorRole {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ColorRole::ALL
            .into_iter()
            .find(|c| c.keyword() == s)
            .ok_or_else(|| format!("unknown color `{s}`"))
    }
}

impl fmt::Display for ColorRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

/// A named, coloured axis-aligned field of the flag.
#[derive(Clone, Debug)]
pub struct Region {
    pub name: String,
    pub color: ColorRole,
    pub rect: Rect,
}

impl Region {
    pub fn new(name: impl Into<String>, color: ColorRole, rect: Rect) -> Self {
        Region { name: name.into(), color, rect }
    }

    /// Boundary polygon, counterclockwise in y-up coordinates.
    pub fn polygon(&self) -> Vec<Point> {
        self.rect.corners().to_vec()
    }
}

#[derive(Clone, Debug)]
pub struct Star {
    pub color: ColorRole,
    pub pentagram: Pentagram,
}

/// A complete flag: canvas, fields in painting order, then stars.
#[derive(Clone, Debug)]
pub struct FlagLayout {
    pub name: String,
    pub provenance: String,
    pub canvas: Rect,
    pub regions: Vec<Region>,
    pub stars: Vec<Star>,
}

impl FlagLayout {
    /// Width over height.
    pub fn ratio(&self) -> Result<Expr, ExactError> {
        self.canvas.width.checked_div(&self.canvas.height)
    }

    pub fn region(&self, name: &str) -> Option<&Region> {
        self.regions.iter().find(|r| r.name == name)
    }

    pub(crate) fn require_region(&self, name: &str) -> Result<&Region, ConstructionError> {
        self.region(name)
            .ok_or_else(|| ConstructionError::WrongLayout(format!("layout `{}` has no `{name}` region", self.name)))
    }

    /// Whether both layouts have the same names, colours and order, with
    /// every coordinate proved equal.
    pub fn proved_equal(&self, other: &FlagLayout) -> Result<bool, ExactError> {
        if self.name != other.name || self.regions.len() != other.regions.len() || self.stars.len() != other.stars.len()
        {
            return Ok(false);
        }
        if !rects_equal(&self.canvas, &other.canvas)? {
            return Ok(false);
        }
        for (a, b) in self.regions.iter().zip(&other.regions) {
            if a.name != b.name || a.color != b.color || !rects_equal(&a.rect, &b.rect)? {
                return Ok(false);
            }
        }
        for (a, b) in self.stars.iter().zip(&other.stars) {
            if a.color != b.color
                || !a.pentagram.center.proved_equal(&b.pentagram.center)?
                || !coincide(&a.pentagram.circumradius, &b.pentagram.circumradius)?
            {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn rects_equal(a: &Rect, b: &Rect) -> Result<bool, ExactError> {
    Ok(a.origin.proved_equal(&b.origin)? && coincide(&a.width, &b.width)? && coincide(&a.height, &b.height)?)
}
