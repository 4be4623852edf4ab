use super::{require_positive, GeometryError, Point};
use crate::exactnum::ConstructibleExpr as Expr;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StarOrientation {
    /// One outer vertex straight above the centre.
    PointUp,
}

/// A regular {5/2} star.
#[derive(Clone, Debug)]
pub struct Pentagram {
    pub center: Point,
    pub circumradius: Expr,
    pub orientation: StarOrientation,
}

/// Exact sines and cosines of 36° and 72°.
struct PentagonTrig {
    cos36: Expr,
    sin36: Expr,
    cos72: Expr,
    sin72: Expr,
}

impl PentagonTrig {
    fn new() -> Self {
        let phi = Expr::phi();
        let root = |sign: i64| {
            (Expr::int(10) + Expr::int(2 * sign) * Expr::sqrt5())
                .sqrt()
                .expect("10 ± 2√5 is positive")
                .checked_div(&Expr::int(4))
                .expect("nonzero literal")
        };
        PentagonTrig {
            cos36: phi.half(),
            sin36: root(-1),
            cos72: (&phi - Expr::one()).half(),
            sin72: root(1),
        }
    }
}

impl Pentagram {
    pub fn new(center: Point, circumradius: Expr) -> Result<Self, GeometryError> {
        require_positive(&circumradius, "star circumradius")?;
        Ok(Pentagram { center, circumradius, orientation: StarOrientation::PointUp })
    }

    pub fn diameter(&self) -> Expr {
        Expr::int(2) * &self.circumradius
    }

    /// `circumradius / φ²`, the radius through the five concave corners.
    pub fn inner_radius(&self) -> Expr {
        self.circumradius
            .checked_div(&(Expr::phi() * Expr::phi()))
            .expect("φ² is nonzero")
    }

    /// The boundary as a concave decagon, counterclockwise, starting at the
    /// top outer vertex and alternating outer and inner vertices. Outer
    /// vertices sit at 90° + k·72°, inner ones at 126° + k·72°.
    pub fn vertices(&self) -> Vec<Point> {
        let t = PentagonTrig::new();
        let zero = Expr::zero();
        let one = Expr::one();
        // (cos, sin) of 90°, 126°, 162°, …, 414° in steps of 36°
        let directions: [(Expr, Expr); 10] = [
            (zero.clone(), one.clone()),
            (-&t.sin36, t.cos36.clone()),
            (-&t.sin72, t.cos72.clone()),
            (-&t.sin72, -&t.cos72),
            (-&t.sin36, -&t.cos36),
            (zero, -one),
            (t.sin36.clone(), -&t.cos36),
            (t.sin72.clone(), -&t.cos72),
            (t.sin72.clone(), t.cos72.clone()),
            (t.sin36.clone(), t.cos36.clone()),
        ];
        let inner = self.inner_radius();
        directions
            .iter()
            .enumerate()
            .map(|(k, (c, s))| {
                let r = if k % 2 == 0 { &self.circumradius } else { &inner };
                self.center.translate(&(r * c), &(r * s))
            })
            .collect()
    }

    pub fn outer_vertices(&self) -> Vec<Point> {
        self.vertices().into_iter().step_by(2).collect()
    }

    pub fn inner_vertices(&self) -> Vec<Point> {
        self.vertices().into_iter().skip(1).step_by(2).collect()
    }
}
