//! Exact planar primitives with constructible coordinates.
//!
//! Coordinates use the mathematical orientation (y grows upward). A [`Rect`]
//! is anchored at its minimum-coordinate corner and spans
//! `[x, x + width] × [y, y + height]`.

mod pentagram;

pub use pentagram::{Pentagram, StarOrientation};

use crate::exactnum::{verify_identity, ConstructibleExpr as Expr, ExactError, Sign, Verdict};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum GeometryError {
    #[error("{0} must be positive")]
    NonPositive(&'static str),
    #[error("segment endpoints coincide")]
    DegenerateSegment,
    #[error("segments are parallel, or their crossing could not be certified")]
    ParallelOrUndecided,
    #[error("lines cross outside the segments")]
    OutsideSegment,
    #[error("segment is vertical")]
    VerticalSegment,
    #[error(transparent)]
    Exact(#[from] ExactError),
}

#[derive(Clone, Debug)]
pub struct Point {
    pub x: Expr,
    pub y: Expr,
}

impl Point {
    pub fn new(x: Expr, y: Expr) -> Self {
        Point { x, y }
    }

    pub fn ints(x: i64, y: i64) -> Self {
        Point::new(Expr::int(x), Expr::int(y))
    }

    pub fn translate(&self, dx: &Expr, dy: &Expr) -> Point {
        Point::new(&self.x + dx, &self.y + dy)
    }

    /// Coordinatewise exact comparison.
    pub fn proved_equal(&self, other: &Point) -> Result<bool, ExactError> {
        Ok(coincide(&self.x, &other.x)? && coincide(&self.y, &other.y)?)
    }
}

/// `a = b`, accepting only a proof. Signs may differ, so the difference is
/// compared against zero unless the two trees are identical.
pub(crate) fn coincide(a: &Expr, b: &Expr) -> Result<bool, ExactError> {
    if a.structurally_eq(b) {
        return Ok(true);
    }
    Ok(verify_identity(&(a - b), &Expr::zero())? == Verdict::ProvedEqual)
}

fn require_positive(e: &Expr, what: &'static str) -> Result<(), GeometryError> {
    match e.sign()? {
        Sign::Positive => Ok(()),
        _ => Err(GeometryError::NonPositive(what)),
    }
}

/// Twice the signed area of the triangle `a, b, c`.
pub fn orientation(a: &Point, b: &Point, c: &Point) -> Expr {
    cross(&(&b.x - &a.x), &(&b.y - &a.y), &(&c.x - &a.x), &(&c.y - &a.y))
}

pub(crate) fn cross(ux: &Expr, uy: &Expr, vx: &Expr, vy: &Expr) -> Expr {
    ux * vy - uy * vx
}

#[derive(Clone, Debug)]
pub struct Rect {
    pub origin: Point,
    pub width: Expr,
    pub height: Expr,
}

impl Rect {
    pub fn new(origin: Point, width: Expr, height: Expr) -> Result<Self, GeometryError> {
        require_positive(&width, "rectangle width")?;
        require_positive(&height, "rectangle height")?;
        Ok(Rect { origin, width, height })
    }

    pub fn area(&self) -> Expr {
        &self.width * &self.height
    }

    pub fn min_x(&self) -> &Expr {
        &self.origin.x
    }

    pub fn min_y(&self) -> &Expr {
        &self.origin.y
    }

    pub fn max_x(&self) -> Expr {
        &self.origin.x + &self.width
    }

    pub fn max_y(&self) -> Expr {
        &self.origin.y + &self.height
    }

    /// Corners counterclockwise from the origin corner.
    pub fn corners(&self) -> [Point; 4] {
        let (x0, y0) = (self.origin.x.clone(), self.origin.y.clone());
        let (x1, y1) = (self.max_x(), self.max_y());
        [
            Point::new(x0.clone(), y0.clone()),
            Point::new(x1.clone(), y0),
            Point::new(x1, y1.clone()),
            Point::new(x0, y1),
        ]
    }

    /// The two diagonals: origin corner to the opposite corner, then the
    /// upper-left corner to the lower-right one.
    pub fn diagonals(&self) -> [Segment; 2] {
        let [a, b, c, d] = self.corners();
        [Segment { p: a, q: c }, Segment { p: d, q: b }]
    }

    /// Where the diagonals cross: the centre `(x + w/2, y + h/2)`.
    pub fn diagonal_intersection(&self) -> Point {
        Point::new(&self.origin.x + self.width.half(), &self.origin.y + self.height.half())
    }

    /// Whether `p` lies strictly inside.
    pub fn contains_strictly(&self, p: &Point) -> Result<bool, ExactError> {
        let checks = [
            &p.x - self.min_x(),
            self.max_x() - &p.x,
            &p.y - self.min_y(),
            self.max_y() - &p.y,
        ];
        for c in &checks {
            if c.sign()? != Sign::Positive {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[derive(Clone, Debug)]
pub struct Segment {
    pub p: Point,
    pub q: Point,
}

impl Segment {
    pub fn new(p: Point, q: Point) -> Result<Self, GeometryError> {
        let dx = (&q.x - &p.x).sign()?;
        let dy = (&q.y - &p.y).sign()?;
        if dx == Sign::Zero && dy == Sign::Zero {
            return Err(GeometryError::DegenerateSegment);
        }
        Ok(Segment { p, q })
    }

    pub fn dx(&self) -> Expr {
        &self.q.x - &self.p.x
    }

    pub fn dy(&self) -> Expr {
        &self.q.y - &self.p.y
    }

    pub fn squared_length(&self) -> Expr {
        let (dx, dy) = (self.dx(), self.dy());
        &dx * &dx + &dy * &dy
    }

    pub fn midpoint(&self) -> Point {
        Point::new((&self.p.x + &self.q.x).half(), (&self.p.y + &self.q.y).half())
    }
}

/// Exact crossing point of two segments.
pub fn segment_intersection(s1: &Segment, s2: &Segment) -> Result<Point, GeometryError> {
    let (rx, ry) = (s1.dx(), s1.dy());
    let (sx, sy) = (s2.dx(), s2.dy());
    let denom = cross(&rx, &ry, &sx, &sy);
    match denom.sign() {
        Ok(Sign::Zero) | Err(ExactError::PrecisionExhausted { .. }) => {
            return Err(GeometryError::ParallelOrUndecided)
        }
        Err(e) => return Err(e.into()),
        Ok(_) => {}
    }
    let (wx, wy) = (&s2.p.x - &s1.p.x, &s2.p.y - &s1.p.y);
    let t = cross(&wx, &wy, &sx, &sy).checked_div(&denom)?;
    let u = cross(&wx, &wy, &rx, &ry).checked_div(&denom)?;
    for param in [&t, &u] {
        let below = param.sign()? == Sign::Negative;
        let above = (Expr::one() - param).sign()? == Sign::Negative;
        if below || above {
            return Err(GeometryError::OutsideSegment);
        }
    }
    Ok(Point::new(&s1.p.x + &t * &rx, &s1.p.y + &t * &ry))
}

/// Tangent of the angle between `s` and the horizontal, `|Δy| / |Δx|`.
pub fn angle_tangent_with_horizontal(s: &Segment) -> Result<Expr, GeometryError> {
    let dx = s.dx();
    if dx.sign()? == Sign::Zero {
        return Err(GeometryError::VerticalSegment);
    }
    Ok(s.dy().abs()?.checked_div(&dx.abs()?)?)
}

/// Whether a closed polygon's boundary has no self-intersections: every pair
/// of non-adjacent edges is certified disjoint by orientation signs.
pub fn polygon_is_simple(vertices: &[Point]) -> Result<bool, ExactError> {
    let n = vertices.len();
    if n < 3 {
        return Ok(false);
    }
    let edge = |i: usize| (&vertices[i], &vertices[(i + 1) % n]);
    for i in 0..n {
        for j in i + 2..n {
            if i == 0 && j == n - 1 {
                continue;
            }
            let (a, b) = edge(i);
            let (c, d) = edge(j);
            if segments_touch(a, b, c, d)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Closed-segment intersection test on certified orientation signs.
fn segments_touch(a: &Point, b: &Point, c: &Point, d: &Point) -> Result<bool, ExactError> {
    let o1 = orientation(a, b, c).sign()?;
    let o2 = orientation(a, b, d).sign()?;
    let o3 = orientation(c, d, a).sign()?;
    let o4 = orientation(c, d, b).sign()?;
    if o1.times(o2) == Sign::Negative && o3.times(o4) == Sign::Negative {
        return Ok(true);
    }
    // collinear touching cases
    let on = |p: &Point, q: &Point, r: &Point| -> Result<bool, ExactError> {
        let within = |u: &Expr, v: &Expr, w: &Expr| -> Result<bool, ExactError> {
            Ok((w - u).sign()?.times((w - v).sign()?) != Sign::Positive)
        };
        Ok(within(&p.x, &q.x, &r.x)? && within(&p.y, &q.y, &r.y)?)
    };
    Ok((o1 == Sign::Zero && on(a, b, c)?)
        || (o2 == Sign::Zero && on(a, b, d)?)
        || (o3 == Sign::Zero && on(c, d, a)?)
        || (o4 == Sign::Zero && on(c, d, b)?))
}

/// Tangent of the angle between two direction vectors, `cross / dot`.
/// Negative for obtuse angles; fails for perpendicular directions.
pub fn angle_tangent_between(a: &Segment, b: &Segment) -> Result<Expr, GeometryError> {
    let (ux, uy, vx, vy) = (a.dx(), a.dy(), b.dx(), b.dy());
    let crossed = cross(&ux, &uy, &vx, &vy).abs()?;
    let dot = &ux * &vx + &uy * &vy;
    Ok(crossed.checked_div(&dot)?)
}
