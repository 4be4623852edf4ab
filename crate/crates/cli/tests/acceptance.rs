//! One line per acceptance criterion; exits non-zero if any fails.

use std::panic::{self, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::sync::mpsc;
use std::thread;
use std::time::{Duration, Instant};

use goldflag::constructions::{
    build_current_flag, build_independence_flag, nepal_ratio_expr, tan36_fourth_root_form, tan36_radical_form,
    verify_angle_configuration, Builtin, FlagLayout,
};
use goldflag::exactnum::{
    int, parse_rational, verify_identity, ConstructibleExpr as Expr, Decimal, GoldenNumber, Rational, Sign, Verdict,
};
use goldflag::flagspec;
use goldflag::geometry::{polygon_is_simple, segment_intersection, Pentagram, Point, Segment};
use goldflag::render::{json_emit, svg_emit, RenderOptions};
use num_bigint::BigInt;
use num_traits::{One, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn proved(a: &Expr, b: &Expr, what: &str) -> Result<(), String> {
    match verify_identity(a, b) {
        Ok(Verdict::ProvedEqual) => Ok(()),
        other => Err(format!("{what}: {other:?}")),
    }
}

fn digits(e: &Expr, sig: u32) -> Result<String, String> {
    e.to_decimal(sig).map(|d| d.to_fixed_string()).map_err(|e| e.to_string())
}

fn expr(source: &str) -> Expr {
    flagspec::eval_source(source).expect("test expression lowers")
}

fn region_of<'a>(layout: &'a FlagLayout, name: &str) -> Result<&'a goldflag::constructions::Region, String> {
    layout.region(name).ok_or_else(|| format!("no region `{name}`"))
}

fn tan36_value() -> Outcome {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_goldflag"))
        .args(["eval", "sqrt(10-2*sqrt(5))/(1+sqrt(5))"])
        .output()
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let text = String::from_utf8_lossy(&out.stdout).trim().to_string();
    ensure(out.status.success(), format!("exit {:?}", out.status.code()))?;
    ensure(text.starts_with("0.726"), format!("printed {text}"))?;
    ensure(elapsed < Duration::from_secs(1), format!("took {elapsed:?}"))?;
    Ok(format!("{text} in {} ms", elapsed.as_millis()))
}

fn tan36_identity() -> Outcome {
    let (a, b) = (tan36_radical_form(), tan36_fourth_root_form());
    proved(&a, &b, "two closed forms")?;
    let target = GoldenNumber::new(int(5), int(-2));
    for e in [&a, &b] {
        let sq = e.square().to_golden().map_err(|e| e.to_string())?;
        ensure(sq == target, format!("square is {sq}"))?;
    }
    Ok("ProvedEqual; both squares are 5 - 2√5".into())
}

fn flag_ratio() -> Outcome {
    let layout = Builtin::Chile1818.layout().map_err(|e| e.to_string())?;
    let ratio = layout.ratio().map_err(|e| e.to_string())?;
    let text = digits(&ratio, 12)?;
    ensure(text.starts_with("1.801"), format!("ratio {text}"))?;
    let first = expr("(2 + sqrt(5)) / sqrt(10 - 2*sqrt(5))");
    let tan36 = expr("sqrt(10-2*sqrt(5))/(1+sqrt(5))");
    let second = (Expr::phi() * Expr::phi()).checked_div(&(Expr::int(2) * tan36)).unwrap();
    proved(&ratio, &first, "(2+√5)/√(10−2√5)")?;
    proved(&ratio, &second, "φ²/(2 tan 36°)")?;
    Ok(format!("{text}; ProvedEqual to both closed forms"))
}

fn golden_ratios() -> Outcome {
    for h in [int(1), Rational::new(5.into(), 3.into())] {
        let layout = build_independence_flag(&h).map_err(|e| e.to_string())?;
        let (white, blue) = (region_of(&layout, "white")?, region_of(&layout, "blue")?);
        let star = layout.stars.first().ok_or("no star")?;
        proved(&white.rect.width.checked_div(&blue.rect.width).unwrap(), &Expr::phi(), "white/blue")?;
        proved(&blue.rect.height.checked_div(&star.pentagram.diameter()).unwrap(), &Expr::phi(), "h/d")?;
    }
    Ok("white/blue = φ and h/d = φ, ProvedEqual at h = 1 and 5/3".into())
}

/// Fixed-point arithmetic on integers scaled by `10^places`.
struct Fixed {
    one: BigInt,
}

impl Fixed {
    fn new(places: u32) -> Self {
        Fixed { one: BigInt::from(10u32).pow(places) }
    }
    fn n(&self, k: i64) -> BigInt {
        BigInt::from(k) * &self.one
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b / &self.one
    }
    fn div(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * &self.one / b
    }
    fn sqrt(&self, a: &BigInt) -> BigInt {
        (a * &self.one).sqrt()
    }
}

fn nepal_by_brute_force(places: u32) -> BigInt {
    let f = Fixed::new(places);
    let r2 = f.sqrt(&f.n(2));
    let k = f.div(&(f.n(297) - f.mul(&f.n(180), &r2)), &(f.n(92) - f.mul(&f.n(36), &r2)));
    let a = f.n(8) - f.mul(&f.n(3), &r2);
    let b = f.sqrt(&(f.n(118) - f.mul(&f.n(48), &r2))) - f.n(6);
    let top = f.n(24) + f.mul(&k, &(f.n(1) + f.div(&a, &b)));
    let c = f.sqrt(&(f.n(1) + f.div(&f.n(18), &(f.n(41) - f.mul(&f.n(24), &r2))))) - f.n(1);
    let bottom = f.n(32) + f.mul(&k, &(f.n(1) + f.div(&f.n(6), &f.mul(&a, &c))));
    f.div(&top, &bottom)
}

fn nepal_ratio() -> Outcome {
    let e = nepal_ratio_expr();
    let text = digits(&e, 12)?;
    ensure(text.starts_with("0.820"), format!("ratio {text}"))?;

    let places = 200;
    let oracle = Rational::new(nepal_by_brute_force(places), BigInt::from(10u32).pow(places));
    let iv = e.interval(512).map_err(|e| format!("{e:?}"))?;
    let mid = (iv.lo.to_rational() + iv.hi.to_rational()) / int(2);
    let tolerance = Rational::new(BigInt::one(), BigInt::from(10u32).pow(50));
    ensure((&oracle - &mid).abs() < tolerance, "oracle differs beyond 1e-50")?;
    let shift = |q: &Rational| (q * Rational::from_integer(BigInt::from(10u32).pow(50))).floor().to_integer();
    ensure(shift(&oracle) == shift(&mid), "50-digit truncations differ")?;
    Ok(format!("{text}; 200-digit oracle agrees to 50 digits (0.{}…)", &shift(&oracle).to_string()[..20]))
}

fn current_flag() -> Outcome {
    for s in [int(1), Rational::new(7.into(), 2.into())] {
        let layout = build_current_flag(&s).map_err(|e| e.to_string())?;
        let side = Expr::literal(s.clone());
        proved(&layout.ratio().unwrap(), &Expr::ratio(3, 2), "ratio")?;
        let star = layout.stars.first().ok_or("no star")?;
        proved(&star.pentagram.diameter(), &side.half(), "diameter")?;
        let square = side.square();
        let mut total = Expr::zero();
        for (name, count) in [("blue", 1), ("white", 2), ("red", 3)] {
            let r = &region_of(&layout, name)?.rect;
            proved(&r.area(), &(Expr::int(count) * &square), name)?;
            total = total + r.area();
        }
        proved(&region_of(&layout, "blue")?.rect.width, &region_of(&layout, "blue")?.rect.height, "blue square")?;
        proved(&total, &(Expr::int(6) * &square), "six squares")?;
        proved(&layout.canvas.area(), &total, "canvas")?;
    }
    Ok("3/2, d = s/2, 1 + 2 + 3 = 6 squares at s = 1 and 7/2".into())
}

fn angles() -> Outcome {
    let mut count = 0;
    for h in [int(1), Rational::new(7.into(), 3.into())] {
        let layout = build_independence_flag(&h).map_err(|e| e.to_string())?;
        let report = verify_angle_configuration(&layout).map_err(|e| e.to_string())?;
        ensure(report.all_passed(), format!("at h = {h}:\n{report}"))?;
        count = report.checks.len();
    }
    Ok(format!("{count}/{count} checks at h = 1 and 7/3"))
}

fn pentagrams() -> Outcome {
    let stars = [
        Pentagram::new(Point::ints(0, 0), Expr::one()).unwrap(),
        Pentagram::new(Point::new(Expr::ratio(3, 7), Expr::phi()), Expr::sqrt5() - Expr::ratio(1, 2)).unwrap(),
        build_independence_flag(&int(1)).unwrap().stars[0].pentagram.clone(),
    ];
    let golden_gap = (Expr::int(3) - Expr::sqrt5()).half();
    for p in &stars {
        let r2 = p.circumradius.square();
        proved(&p.inner_radius().checked_div(&p.circumradius).unwrap(), &golden_gap, "inner/outer")?;
        let outer = p.outer_vertices();
        for v in &outer {
            let d = Segment::new(p.center.clone(), v.clone()).unwrap();
            proved(&d.squared_length(), &r2, "outer radius")?;
        }
        // regular pentagon: every side is 2R·sin 36°, so side² = R²·(5 − √5)/2
        let side2 = &r2 * (Expr::int(5) - Expr::sqrt5()).half();
        for k in 0..5 {
            let s = Segment::new(outer[k].clone(), outer[(k + 1) % 5].clone()).unwrap();
            proved(&s.squared_length(), &side2, "pentagon side")?;
        }
        // each inner corner is where two star lines cross
        let inner = p.inner_vertices();
        for k in 0..5 {
            let a = Segment::new(outer[k].clone(), outer[(k + 2) % 5].clone()).unwrap();
            let b = Segment::new(outer[(k + 1) % 5].clone(), outer[(k + 4) % 5].clone()).unwrap();
            let x = segment_intersection(&a, &b).map_err(|e| e.to_string())?;
            ensure(x.proved_equal(&inner[k]).map_err(|e| e.to_string())?, format!("inner vertex {k}"))?;
        }
        ensure(polygon_is_simple(&p.vertices()).map_err(|e| e.to_string())?, "boundary not simple")?;
    }
    Ok(format!("{} stars: r/R = (3 - √5)/2, equidistant outer vertices, simple boundary", stars.len()))
}

fn random_golden(rng: &mut ChaCha8Rng) -> GoldenNumber {
    let mut q = || Rational::new(rng.gen_range(-60i64..=60).into(), rng.gen_range(1i64..=24).into());
    GoldenNumber::new(q(), q())
}

fn interval_sign(g: &GoldenNumber) -> Option<Sign> {
    let e = Expr::from_golden(g);
    let mut bits = 32;
    while bits <= 4096 {
        let iv = e.interval(bits).ok()?;
        if iv.lo.signum() > 0 {
            return Some(Sign::Positive);
        }
        if iv.hi.signum() < 0 {
            return Some(Sign::Negative);
        }
        bits *= 2;
    }
    None
}

fn field_properties() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x60_1d);
    let (zero, one) = (GoldenNumber::zero(), GoldenNumber::one());
    for i in 0..10_000 {
        let (a, b, c) = (random_golden(&mut rng), random_golden(&mut rng), random_golden(&mut rng));
        let laws = [
            (&a + &b) == (&b + &a),
            (&a * &b) == (&b * &a),
            &(&a + &b) + &c == &a + &(&b + &c),
            &(&a * &b) * &c == &a * &(&b * &c),
            &a * &(&b + &c) == &(&a * &b) + &(&a * &c),
            &a + &zero == a && &a * &one == a,
            (&a + &(-&a)).is_zero(),
            a.is_zero() || &a * &a.recip().unwrap() == one,
        ];
        if let Some(k) = laws.iter().position(|ok| !ok) {
            return Err(format!("triple {i} breaks law {k}: {a}, {b}, {c}"));
        }
    }
    let mut checked = 0;
    while checked < 10_000 {
        let g = random_golden(&mut rng);
        if g.is_zero() {
            continue;
        }
        let s = interval_sign(&g).ok_or_else(|| format!("interval never separated {g}"))?;
        ensure(s == g.sign(), format!("sign of {g}"))?;
        checked += 1;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(10), format!("took {elapsed:?}"))?;
    Ok(format!("10000 triples, 10000 signs in {} ms", elapsed.as_millis()))
}

const FRAGMENTS: [&str; 20] = [
    "(", ")", "{", "}", ";", "sqrt", "phi", "-", "/", "*", "1/0", "x", "\"", "0.", " ", "\n", "let", "region", "9999999999999999999999", "é",
];

fn mutate(source: &str, rng: &mut ChaCha8Rng) -> String {
    let mut chars: Vec<char> = source.chars().collect();
    for _ in 0..rng.gen_range(1..=4) {
        let at = rng.gen_range(0..=chars.len());
        match rng.gen_range(0..5) {
            0 => {
                let end = (at + rng.gen_range(1..=6)).min(chars.len());
                chars.drain(at..end);
            }
            1 => {
                let piece = FRAGMENTS[rng.gen_range(0..FRAGMENTS.len())];
                chars.splice(at..at, piece.chars());
            }
            2 => {
                let end = (at + rng.gen_range(1..=12)).min(chars.len());
                let copy: Vec<char> = chars[at..end].to_vec();
                let to = rng.gen_range(0..=chars.len());
                chars.splice(to..to, copy);
            }
            3 if chars.len() > 1 => {
                let other = rng.gen_range(0..chars.len());
                let last = chars.len() - 1;
                chars.swap(at.min(last), other);
            }
            _ => chars.truncate(at),
        }
    }
    chars.into_iter().collect()
}

fn position_inside(source: &str, (line, col): (u32, u32)) -> bool {
    let lines: Vec<&str> = source.split('\n').collect();
    let Some(text) = lines.get(line as usize - 1) else { return false };
    line >= 1 && col >= 1 && col as usize <= text.chars().count() + 1
}

fn parser() -> Outcome {
    for b in Builtin::ALL {
        let from_file = flagspec::load(b.spec_source()).map_err(|e| format!("{b}: {e}"))?;
        let builtin = b.layout().map_err(|e| e.to_string())?;
        ensure(from_file.proved_equal(&builtin).map_err(|e| e.to_string())?, format!("{b} differs"))?;
    }

    let mut rng = ChaCha8Rng::seed_from_u64(1818);
    let (mut parsed, mut rejected, mut slowest) = (0, 0, Duration::ZERO);
    for i in 0..1000 {
        let source = mutate(Builtin::ALL[i % 4].spec_source(), &mut rng);
        let (tx, rx) = mpsc::channel();
        let input = source.clone();
        thread::spawn(move || {
            let start = Instant::now();
            let ast = flagspec::parse_source(&input);
            let loaded = ast.as_ref().ok().map(|_| flagspec::load(&input));
            let _ = tx.send((ast.map(|_| ()), loaded.map(|r| r.map(|_| ())), start.elapsed()));
        });
        let (ast, loaded, took) =
            rx.recv_timeout(Duration::from_secs(5)).map_err(|_| format!("input {i} hung:\n{source}"))?;
        slowest = slowest.max(took);
        for result in [Some(ast), loaded].into_iter().flatten() {
            if let Err(e) = result {
                ensure(position_inside(&source, e.position()), format!("input {i}: {e} is outside:\n{source}"))?;
            }
        }
        match flagspec::parse_source(&source) {
            Ok(_) => parsed += 1,
            Err(_) => rejected += 1,
        }
    }
    Ok(format!(
        "4 files ProvedEqual; 1000 mutants: {parsed} parsed, {rejected} positioned errors, slowest {} ms",
        slowest.as_millis()
    ))
}

fn render() -> Outcome {
    let opts = RenderOptions::new(Expr::ratio(5, 2));
    for b in Builtin::ALL {
        let (l1, l2) = (b.layout().unwrap(), b.layout().unwrap());
        ensure(svg_emit(&l1, &opts).unwrap() == svg_emit(&l2, &opts).unwrap(), format!("{b} svg"))?;
        ensure(json_emit(&l1, &opts).unwrap() == json_emit(&l2, &opts).unwrap(), format!("{b} json"))?;
    }

    let current = Builtin::ChileCurrent.layout().unwrap();
    let svg = String::from_utf8(svg_emit(&current, &RenderOptions::new(Expr::int(300))).unwrap()).unwrap();
    ensure(svg.contains(r#"viewBox="0 0 900 600""#), "viewBox")?;

    let layout = Builtin::Chile1818.layout().unwrap();
    let mut opts = RenderOptions::fit_width(&layout, &Expr::ratio(12, 5)).unwrap();
    opts.digits = 6;
    let svg = String::from_utf8(svg_emit(&layout, &opts).unwrap()).unwrap();
    let attr = |name: &str| -> Option<String> {
        let start = svg.find(&format!(" {name}=\""))? + name.len() + 3;
        Some(svg[start..].split('"').next()?.to_string())
    };
    let (width, height) = (attr("width").ok_or("no width")?, attr("height").ok_or("no height")?);
    ensure(width == "2.4", format!("width {width}"))?;
    let height_q = parse_rational(&height).ok_or("height is not a decimal")?;
    let ratio6 = layout.ratio().unwrap().to_decimal(6).unwrap();
    let expected = Rational::new(12.into(), 5.into()) / ratio6.to_rational();
    let ulp = Decimal::round(&height_q, 6).ulp();
    ensure((&height_q - &expected).abs() <= ulp, format!("height {height} vs {}", expected))?;
    Ok(format!("byte-identical x4; viewBox 0 0 900 600; 2.4 / {} ≈ {height}", ratio6.to_fixed_string()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("tan 36° value", tan36_value),
        ("tan 36° identity", tan36_identity),
        ("flag ratio", flag_ratio),
        ("golden ratios in the layout", golden_ratios),
        ("Nepal ratio", nepal_ratio),
        ("current flag", current_flag),
        ("angle configuration", angles),
        ("pentagram properties", pentagrams),
        ("field properties", field_properties),
        ("parser", parser),
        ("render determinism", render),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let outcome = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        match outcome {
            Ok(detail) => println!("PASS  {:>2}. {name}: {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL  {:>2}. {name}: {why}", k + 1);
            }
        }
    }
    println!("{}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
