//! Deterministic SVG and JSON output.
//!
//! Output coordinates are screen oriented: `X = (x − canvas.x)·scale` and
//! `Y = (canvas.top − y)·scale`. Every number is the exact coordinate rounded
//! half-even to `digits` significant digits, certified by interval
//! refinement, and printed positionally without trailing zeros.

mod json;
mod svg;

pub use json::json_emit;
pub use svg::svg_emit;

use std::fmt;

use crate::constructions::{ColorRole, FlagLayout, Region, Star};
use crate::exactnum::{ConstructibleExpr as Expr, ExactError, Sign};
use crate::geometry::Point;

pub const DEFAULT_DIGITS: u32 = 12;
pub const MIN_DIGITS: u32 = 3;

/// Length units accepted on the SVG `width` and `height` attributes.
pub const SVG_UNITS: [&str; 6] = ["px", "mm", "cm", "in", "pt", "pc"];

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum RenderError {
    #[error("invalid render options: {0}")]
    InvalidOptions(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// Fill colours by role, as `#RRGGBB`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Palette {
    colors: [String; 5],
}

fn slot(role: ColorRole) -> usize {
    match role {
        ColorRole::Red => 0,
        ColorRole::White => 1,
        ColorRole::Blue => 2,
        ColorRole::Green => 3,
        ColorRole::Yellow => 4,
    }
}

fn valid_hex(hex: &str) -> bool {
    hex.len() == 7 && hex.starts_with('#') && hex[1..].chars().all(|c| c.is_ascii_hexdigit())
}

impl Palette {
    pub fn get(&self, role: ColorRole) -> &str {
        &self.colors[slot(role)]
    }

    /// Sets one colour; `hex` must look like `#0039A6`.
    pub fn set(&mut self, role: ColorRole, hex: &str) -> Result<(), RenderError> {
        if !valid_hex(hex) {
            return Err(RenderError::InvalidOptions(format!("`{hex}` is not a #RRGGBB colour")));
        }
        self.colors[slot(role)] = hex.to_ascii_uppercase();
        Ok(())
    }
}

impl Default for Palette {
    fn default() -> Self {
        Palette {
            colors: ["#D52B1E", "#FFFFFF", "#0039A6", "#006A4E", "#FFCE00"].map(String::from),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RenderOptions {
    /// Output units per canvas unit. Any positive constructible number, so
    /// that e.g. `2.4 / canvas width` stays exact.
    pub scale: Expr,
    pub digits: u32,
    pub palette: Palette,
    pub background: Option<String>,
    /// Unit suffix for the SVG `width`/`height` attributes.
    pub unit: Option<String>,
}

impl RenderOptions {
    pub fn new(scale: Expr) -> Self {
        RenderOptions { scale, digits: DEFAULT_DIGITS, palette: Palette::default(), background: None, unit: None }
    }

    /// Scale chosen so the rendered canvas is `target` units wide.
    pub fn fit_width(layout: &FlagLayout, target: &Expr) -> Result<Self, RenderError> {
        Ok(RenderOptions::new(target.checked_div(&layout.canvas.width)?))
    }

    fn validate(&self) -> Result<(), RenderError> {
        if self.digits < MIN_DIGITS {
            return Err(RenderError::InvalidOptions(format!("digits must be at least {MIN_DIGITS}")));
        }
        if self.scale.sign()? != Sign::Positive {
            return Err(RenderError::InvalidOptions("scale must be positive".into()));
        }
        if let Some(bg) = &self.background {
            if !valid_hex(bg) {
                return Err(RenderError::InvalidOptions(format!("`{bg}` is not a #RRGGBB colour")));
            }
        }
        if let Some(unit) = &self.unit {
            if !SVG_UNITS.contains(&unit.as_str()) {
                return Err(RenderError::InvalidOptions(format!(
                    "unit `{unit}` is not one of {}",
                    SVG_UNITS.join(", ")
                )));
            }
        }
        Ok(())
    }
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions::new(Expr::one())
    }
}

/// A point in output coordinates.
#[derive(Clone, Debug)]
pub(crate) struct ScreenPoint {
    pub x: Expr,
    pub y: Expr,
}

pub(crate) struct ProjectedRegion<'a> {
    pub region: &'a Region,
    pub vertices: Vec<ScreenPoint>,
}

pub(crate) struct ProjectedStar<'a> {
    pub star: &'a Star,
    pub center: ScreenPoint,
    pub circumradius: Expr,
    pub vertices: Vec<ScreenPoint>,
}

/// Every output quantity of a layout as an exact expression.
pub(crate) struct Projected<'a> {
    pub width: Expr,
    pub height: Expr,
    pub ratio: Expr,
    pub regions: Vec<ProjectedRegion<'a>>,
    pub stars: Vec<ProjectedStar<'a>>,
}

impl<'a> Projected<'a> {
    pub fn new(layout: &'a FlagLayout, opts: &RenderOptions) -> Result<Self, RenderError> {
        opts.validate()?;
        let scale = &opts.scale;
        let left = layout.canvas.min_x().clone();
        let top = layout.canvas.max_y();
        let project = |p: &Point| ScreenPoint { x: (&p.x - &left) * scale, y: (&top - &p.y) * scale };
        Ok(Projected {
            width: &layout.canvas.width * scale,
            height: &layout.canvas.height * scale,
            ratio: layout.ratio()?,
            regions: layout
                .regions
                .iter()
                .map(|region| ProjectedRegion { region, vertices: region.polygon().iter().map(project).collect() })
                .collect(),
            stars: layout
                .stars
                .iter()
                .map(|star| ProjectedStar {
                    star,
                    center: project(&star.pentagram.center),
                    circumradius: &star.pentagram.circumradius * scale,
                    vertices: star.pentagram.vertices().iter().map(project).collect(),
                })
                .collect(),
        })
    }

    /// The JSON values in emission order, labelled by path.
    pub fn values(&self) -> Vec<(String, Expr)> {
        fn point(out: &mut Vec<(String, Expr)>, path: String, p: &ScreenPoint) {
            out.push((format!("{path}[0]"), p.x.clone()));
            out.push((format!("{path}[1]"), p.y.clone()));
        }
        let mut out = vec![
            ("canvas.width".to_string(), self.width.clone()),
            ("canvas.height".to_string(), self.height.clone()),
            ("canvas.ratio".to_string(), self.ratio.clone()),
        ];
        for (k, r) in self.regions.iter().enumerate() {
            for (i, p) in r.vertices.iter().enumerate() {
                point(&mut out, format!("regions[{k}].vertices[{i}]"), p);
            }
        }
        for (k, s) in self.stars.iter().enumerate() {
            point(&mut out, format!("stars[{k}].center"), &s.center);
            out.push((format!("stars[{k}].circumradius"), s.circumradius.clone()));
            for (i, p) in s.vertices.iter().enumerate() {
                point(&mut out, format!("stars[{k}].vertices[{i}]"), p);
            }
        }
        out
    }
}

/// Every number `json_emit` prints, in order, with its exact value. Useful
/// for re-checking the output independently.
pub fn emitted_values(layout: &FlagLayout, opts: &RenderOptions) -> Result<Vec<(String, Expr)>, RenderError> {
    Ok(Projected::new(layout, opts)?.values())
}

pub(crate) fn number(e: &Expr, digits: u32) -> Result<String, RenderError> {
    Ok(e.to_decimal(digits)?.to_trimmed_string())
}

pub(crate) struct Escaped<'a>(pub &'a str);

impl fmt::Display for Escaped<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in self.0.chars() {
            match c {
                '&' => f.write_str("&amp;")?,
                '<' => f.write_str("&lt;")?,
                '>' => f.write_str("&gt;")?,
                '"' => f.write_str("&quot;")?,
                '\'' => f.write_str("&apos;")?,
                c => write!(f, "{c}")?,
            }
        }
        Ok(())
    }
}
