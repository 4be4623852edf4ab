use std::fmt::Write;

use super::{number, Escaped, Projected, RenderError, RenderOptions, ScreenPoint};
use crate::constructions::FlagLayout;

/// A standalone SVG 1.1 document: background rectangle, region polygons in
/// layout order, then star polygons.
pub fn svg_emit(layout: &FlagLayout, opts: &RenderOptions) -> Result<Vec<u8>, RenderError> {
    let projected = Projected::new(layout, opts)?;
    let digits = opts.digits;
    let width = number(&projected.width, digits)?;
    let height = number(&projected.height, digits)?;
    let unit = opts.unit.as_deref().unwrap_or("");
    let points = |ps: &[ScreenPoint]| -> Result<String, RenderError> {
        let mut out = String::new();
        for (i, p) in ps.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            write!(out, "{},{}", number(&p.x, digits)?, number(&p.y, digits)?).expect("write to String");
        }
        Ok(out)
    };

    let mut doc = String::new();
    let w = &mut doc;
    let _ = writeln!(w, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        w,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}{unit}" height="{height}{unit}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(w, "  <title>{}</title>", Escaped(&layout.name));
    let fill = opts.background.as_deref().unwrap_or("none");
    let _ = writeln!(w, r#"  <rect x="0" y="0" width="{width}" height="{height}" fill="{fill}"/>"#);
    for r in &projected.regions {
        let _ = writeln!(
            w,
            r#"  <polygon id="{}" fill="{}" points="{}"/>"#,
            Escaped(&r.region.name),
            opts.palette.get(r.region.color),
            points(&r.vertices)?
        );
    }
    for (k, s) in projected.stars.iter().enumerate() {
        let _ = writeln!(
            w,
            r#"  <polygon id="star{}" fill="{}" points="{}"/>"#,
            k + 1,
            opts.palette.get(s.star.color),
            points(&s.vertices)?
        );
    }
    let _ = writeln!(w, "</svg>");
    Ok(doc.into_bytes())
}
