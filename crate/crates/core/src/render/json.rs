use std::str::FromStr;

use serde_json::{json, Map, Number, Value};

use super::{number, Projected, RenderError, RenderOptions, ScreenPoint};
use crate::constructions::FlagLayout;
use crate::exactnum::ConstructibleExpr as Expr;

/// The layout as pretty-printed JSON with this key order:
///
/// ```text
/// name, provenance, digits,
/// canvas  { width, height, ratio },
/// regions [ { name, color, fill, vertices: [[x, y], …] } ],
/// stars   [ { color, fill, center: [x, y], circumradius, vertices } ]
/// ```
///
/// Lengths are in output units (scaled, y down); `ratio` is dimensionless.
pub fn json_emit(layout: &FlagLayout, opts: &RenderOptions) -> Result<Vec<u8>, RenderError> {
    let projected = Projected::new(layout, opts)?;
    let num = |e: &Expr| -> Result<Value, RenderError> {
        let text = number(e, opts.digits)?;
        Ok(Value::Number(Number::from_str(&text).expect("positional decimals are JSON numbers")))
    };
    let point = |p: &ScreenPoint| -> Result<Value, RenderError> { Ok(json!([num(&p.x)?, num(&p.y)?])) };
    let points = |ps: &[ScreenPoint]| -> Result<Value, RenderError> {
        Ok(Value::Array(ps.iter().map(point).collect::<Result<_, _>>()?))
    };

    let mut canvas = Map::new();
    canvas.insert("width".into(), num(&projected.width)?);
    canvas.insert("height".into(), num(&projected.height)?);
    canvas.insert("ratio".into(), num(&projected.ratio)?);

    let mut regions = Vec::with_capacity(projected.regions.len());
    for r in &projected.regions {
        let mut m = Map::new();
        m.insert("name".into(), r.region.name.clone().into());
        m.insert("color".into(), r.region.color.keyword().into());
        m.insert("fill".into(), opts.palette.get(r.region.color).into());
        m.insert("vertices".into(), points(&r.vertices)?);
        regions.push(Value::Object(m));
    }

    let mut stars = Vec::with_capacity(projected.stars.len());
    for s in &projected.stars {
        let mut m = Map::new();
        m.insert("color".into(), s.star.color.keyword().into());
        m.insert("fill".into(), opts.palette.get(s.star.color).into());
        m.insert("center".into(), point(&s.center)?);
        m.insert("circumradius".into(), num(&s.circumradius)?);
        m.insert("vertices".into(), points(&s.vertices)?);
        stars.push(Value::Object(m));
    }

    let mut doc = Map::new();
    doc.insert("name".into(), layout.name.clone().into());
    doc.insert("provenance".into(), layout.provenance.clone().into());
    doc.insert("digits".into(), opts.digits.into());
    doc.insert("canvas".into(), Value::Object(canvas));
    doc.insert("regions".into(), Value::Array(regions));
    doc.insert("stars".into(), Value::Array(stars));

    let mut bytes = serde_json::to_vec_pretty(&Value::Object(doc)).expect("in-memory serialization");
    bytes.push(b'\n');
    Ok(bytes)
}
