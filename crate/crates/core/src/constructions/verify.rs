use std::fmt;

use super::builders::{tan36_fourth_root_form, tan36_radical_form, tan72_radical_form};
use super::layout::FlagLayout;
use super::{Builtin, ConstructionError};
use crate::exactnum::{verify_identity, ConstructibleExpr as Expr, ExactError, Sign, Verdict};
use crate::geometry::{angle_tangent_between, angle_tangent_with_horizontal, Point, Rect, Segment};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CheckStatus {
    ProvedEqual,
    ProvedUnequal,
    Undecided,
    Pass,
    Fail,
}

impl CheckStatus {
    pub fn is_success(self) -> bool {
        matches!(self, CheckStatus::ProvedEqual | CheckStatus::Pass)
    }

    fn severity(self) -> u8 {
        match self {
            CheckStatus::ProvedEqual | CheckStatus::Pass => 0,
            CheckStatus::Undecided => 1,
            CheckStatus::ProvedUnequal | CheckStatus::Fail => 2,
        }
    }

    fn from_verdict(v: Verdict) -> Self {
        match v {
            Verdict::ProvedEqual => CheckStatus::ProvedEqual,
            Verdict::ProvedUnequal => CheckStatus::ProvedUnequal,
            Verdict::Undecided => CheckStatus::Undecided,
        }
    }
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::ProvedEqual => "ProvedEqual",
            CheckStatus::ProvedUnequal => "ProvedUnequal",
            CheckStatus::Undecided => "Undecided",
            CheckStatus::Pass => "Pass",
            CheckStatus::Fail => "Fail",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.status.is_success())
    }

    /// Whether some check is undecided and none failed outright.
    pub fn inconclusive(&self) -> bool {
        let worst = self.checks.iter().map(|c| c.status.severity()).max().unwrap_or(0);
        worst == 1
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }

    fn push(&mut self, name: &str, status: CheckStatus, detail: String) {
        self.checks.push(Check { name: name.to_string(), status, detail });
    }

    /// Records the conjunction of several identities as one check.
    fn identities(&mut self, name: &str, pairs: &[(&Expr, &Expr, &str)]) {
        let mut status = CheckStatus::ProvedEqual;
        let mut notes = Vec::with_capacity(pairs.len());
        for (lhs, rhs, label) in pairs {
            let s = match verify_identity(lhs, rhs) {
                Ok(v) => CheckStatus::from_verdict(v),
                Err(ExactError::PrecisionExhausted { .. }) => CheckStatus::Undecided,
                Err(_) => CheckStatus::Fail,
            };
            if s.severity() > status.severity() {
                status = s;
            }
            notes.push(format!("{label} [{s}]"));
        }
        let value = pairs.first().map(|(lhs, _, _)| approx(lhs)).unwrap_or_default();
        self.push(name, status, format!("{}; value {value}", notes.join(", ")));
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.checks.iter().map(|c| c.name.chars().count()).max().unwrap_or(0);
        for c in &self.checks {
            writeln!(f, "{:<width$}  {:<13}  {}", c.name, c.status.to_string(), c.detail)?;
        }
        Ok(())
    }
}

fn approx(e: &Expr) -> String {
    match e.to_decimal(12) {
        Ok(d) => d.to_trimmed_string(),
        Err(_) => "?".to_string(),
    }
}

fn segment(p: Point, q: Point) -> Result<Segment, ConstructionError> {
    Ok(Segment::new(p, q)?)
}

/// Builds the named builtin at unit scale and checks its identities.
pub fn verify_flag_identities(name: &str) -> Result<VerificationReport, ConstructionError> {
    let builtin: Builtin = name.parse()?;
    verify_layout_identities(builtin, &builtin.layout()?)
}

/// Checks the identities of `builtin` on an arbitrary layout claiming to be
/// that flag, such as one lowered from a `.flag` file.
pub fn verify_layout_identities(builtin: Builtin, layout: &FlagLayout) -> Result<VerificationReport, ConstructionError> {
    let mut report = VerificationReport::default();
    let ratio = layout.ratio()?;
    match builtin {
        Builtin::Chile1818 => {
            let blue = &layout.require_region("blue")?.rect;
            let white = &layout.require_region("white")?.rect;
            let star = layout
                .stars
                .first()
                .ok_or_else(|| ConstructionError::WrongLayout("chile-1818 layout has no star".into()))?;
            let phi = Expr::phi();
            let tan36 = tan36_radical_form();

            let proportion = blue.height.checked_div(&blue.width)?;
            let quartic = tan36_fourth_root_form();
            report.identities(
                "blue height/width is tan 36°",
                &[
                    (&proportion, &tan36, "h/w = √(10−2√5)/(1+√5)"),
                    (&tan36, &quartic, "√(10−2√5)/(1+√5) = ⁴√5/√(2+√5)"),
                ],
            );

            let golden = white.width.checked_div(&blue.width)?;
            report.identities("white/blue width is φ", &[(&golden, &phi, "w_white/w_blue = φ")]);

            let closed = (Expr::int(2) + Expr::sqrt5())
                .checked_div(&(Expr::int(10) - Expr::int(2) * Expr::sqrt5()).sqrt()?)?;
            let via_tan = (&phi * &phi).checked_div(&(Expr::int(2) * &tan36))?;
            report.identities(
                "flag ratio",
                &[
                    (&ratio, &closed, "W/H = (2+√5)/√(10−2√5)"),
                    (&ratio, &via_tan, "W/H = φ²/(2 tan 36°)"),
                ],
            );

            let star_ratio = blue.height.checked_div(&star.pentagram.diameter())?;
            report.identities("blue height / star diameter is φ", &[(&star_ratio, &phi, "h/d = φ")]);

            let section = (&blue.width + &white.width).checked_div(&white.width)?;
            report.identities("golden section", &[(&section, &phi, "(w_blue+w_white)/w_white = φ")]);
        }
        Builtin::ChileCurrent => {
            let blue = &layout.require_region("blue")?.rect;
            let white = &layout.require_region("white")?.rect;
            let red = &layout.require_region("red")?.rect;
            let star = layout
                .stars
                .first()
                .ok_or_else(|| ConstructionError::WrongLayout("chile-current layout has no star".into()))?;
            report.identities("flag ratio is 3:2", &[(&ratio, &Expr::ratio(3, 2), "W/H = 3/2")]);

            let half_side = blue.width.half();
            report.identities(
                "star diameter is half the square side",
                &[(&star.pentagram.diameter(), &half_side, "d = s/2")],
            );

            let s = &blue.width;
            let sq = s * s;
            let times = |n: i64| Expr::int(n) * &sq;
            let (blue_area, white_area, red_area, canvas_area) =
                (blue.area(), white.area(), red.area(), layout.canvas.area());
            let (two, three, six) = (times(2), times(3), times(6));
            report.identities(
                "six-square decomposition",
                &[
                    (&blue.height, s, "blue is a square"),
                    (&blue_area, &sq, "blue = 1 square"),
                    (&white_area, &two, "white = 2 squares"),
                    (&red_area, &three, "red = 3 squares"),
                    (&canvas_area, &six, "canvas = 6 squares"),
                ],
            );
        }
        Builtin::Togo => {
            report.identities("flag ratio is φ", &[(&ratio, &Expr::phi(), "W/H = φ")]);
        }
        Builtin::NepalRatio => {
            let digits = ratio.to_decimal(12)?.to_fixed_string();
            let status = if digits.starts_with("0.820") { CheckStatus::Pass } else { CheckStatus::Fail };
            report.push("ratio begins 0.820", status, format!("W/H = {digits}…"));
        }
    }
    Ok(report)
}

/// Angle facts of the 1818 canton: both diagonals rise at 36°, cross at
/// 72° and 108°, meet the vertical sides at 54°, and cut off an isosceles
/// triangle on the top side.
pub fn verify_angle_configuration(layout: &FlagLayout) -> Result<VerificationReport, ConstructionError> {
    if layout.name != Builtin::Chile1818.name() {
        return Err(ConstructionError::WrongLayout(format!(
            "angle configuration applies to chile-1818, not `{}`",
            layout.name
        )));
    }
    let blue: &Rect = &layout.require_region("blue")?.rect;
    let [d1, d2] = blue.diagonals();
    let [bottom_left, _, top_right, top_left] = blue.corners();
    let tan36 = tan36_radical_form();
    let tan72 = tan72_radical_form();
    let mut report = VerificationReport::default();

    let slope1 = angle_tangent_with_horizontal(&d1)?;
    let slope2 = angle_tangent_with_horizontal(&d2)?;
    report.identities("rising diagonal at 36°", &[(&slope1, &tan36, "tan = tan 36°")]);
    report.identities("falling diagonal at 36°", &[(&slope2, &tan36, "tan = tan 36°")]);

    let acute = angle_tangent_between(&d1, &d2)?;
    let double36 = (Expr::int(2) * &tan36).checked_div(&(Expr::one() - &tan36 * &tan36))?;
    report.identities(
        "diagonals cross at 72°",
        &[
            (&acute, &tan72, "tan = √(10+2√5)/(√5−1)"),
            (&tan72, &double36, "tan 72° = 2 tan 36°/(1 − tan² 36°)"),
        ],
    );

    let reversed = segment(d2.q.clone(), d2.p.clone())?;
    let obtuse = angle_tangent_between(&d1, &reversed)?;
    let neg72 = -&tan72;
    report.identities("diagonals cross at 108°", &[(&obtuse, &neg72, "tan = −tan 72°")]);

    let side = segment(bottom_left.clone(), top_left.clone())?;
    let at_side = angle_tangent_between(&side, &d1)?;
    let cot36 = Expr::one().checked_div(&tan36)?;
    let cot_doubled = (Expr::int(2) * &cot36).checked_div(&(Expr::one() - &cot36 * &cot36))?;
    report.identities(
        "diagonal meets the side at 54°",
        &[
            (&at_side, &cot36, "tan = 1/tan 36°"),
            (&cot_doubled, &neg72, "2·54° = 108°"),
        ],
    );

    let center = blue.diagonal_intersection();
    let left = segment(center.clone(), top_left)?.squared_length();
    let right = segment(center, top_right)?.squared_length();
    report.identities("top triangle is isosceles", &[(&left, &right, "|CA|² = |CB|²")]);
    Ok(report)
}

/// Tiling, disjointness, containment and star placement of any layout.
pub fn verify_layout_structure(layout: &FlagLayout) -> Result<VerificationReport, ConstructionError> {
    let mut report = VerificationReport::default();
    let regions = &layout.regions;
    if regions.is_empty() {
        report.push("regions tile the canvas", CheckStatus::Pass, "no regions".into());
        return Ok(report);
    }

    let total = regions.iter().map(|r| r.rect.area()).reduce(|a, b| a + b).expect("non-empty");
    report.identities("regions tile the canvas", &[(&total, &layout.canvas.area(), "Σ areas = canvas area")]);

    let inside = regions.iter().try_fold(true, |ok, r| Ok(ok && rect_within(&r.rect, &layout.canvas)?));
    report.push("regions lie within the canvas", decided(inside), format!("{} regions", regions.len()));

    let mut overlaps = Vec::new();
    let disjoint = (|| {
        for (i, a) in regions.iter().enumerate() {
            for b in &regions[i + 1..] {
                if !interior_disjoint(&a.rect, &b.rect)? {
                    overlaps.push(format!("{}/{}", a.name, b.name));
                }
            }
        }
        Ok(overlaps.is_empty())
    })();
    let detail = if overlaps.is_empty() { "no overlaps".to_string() } else { overlaps.join(", ") };
    report.push("regions are interior-disjoint", decided(disjoint), detail);

    for (k, star) in layout.stars.iter().enumerate() {
        let p = &star.pentagram;
        let name = format!("star {} inside a region", k + 1);
        let mut detail = "centre is in no region".to_string();
        let placed = (|| {
            for r in regions.iter().rev() {
                if r.rect.contains_strictly(&p.center)? {
                    let fits = circle_within(&p.center, &p.circumradius, &r.rect)?;
                    let verb = if fits { "inside" } else { "leaves" };
                    detail = format!("circumcircle {verb} `{}`", r.name);
                    return Ok(fits);
                }
            }
            Ok(false)
        })();
        if placed.is_err() {
            detail = "sign not certified".into();
        }
        report.push(&name, decided(placed), detail);
    }
    Ok(report)
}

fn decided(outcome: Result<bool, ExactError>) -> CheckStatus {
    match outcome {
        Ok(true) => CheckStatus::Pass,
        Err(ExactError::PrecisionExhausted { .. }) => CheckStatus::Undecided,
        Ok(false) | Err(_) => CheckStatus::Fail,
    }
}

fn non_negative(e: &Expr) -> Result<bool, ExactError> {
    Ok(e.sign()? != Sign::Negative)
}

fn rect_within(inner: &Rect, outer: &Rect) -> Result<bool, ExactError> {
    Ok(non_negative(&(inner.min_x() - outer.min_x()))?
        && non_negative(&(inner.min_y() - outer.min_y()))?
        && non_negative(&(outer.max_x() - inner.max_x()))?
        && non_negative(&(outer.max_y() - inner.max_y()))?)
}

fn interior_disjoint(a: &Rect, b: &Rect) -> Result<bool, ExactError> {
    Ok(non_negative(&(b.min_x() - a.max_x()))?
        || non_negative(&(a.min_x() - b.max_x()))?
        || non_negative(&(b.min_y() - a.max_y()))?
        || non_negative(&(a.min_y() - b.max_y()))?)
}

fn circle_within(c: &Point, r: &Expr, rect: &Rect) -> Result<bool, ExactError> {
    let gaps = [&c.x - rect.min_x(), rect.max_x() - &c.x, &c.y - rect.min_y(), rect.max_y() - &c.y];
    for g in gaps {
        if (g - r).sign()? != Sign::Positive {
            return Ok(false);
        }
    }
    Ok(true)
}
