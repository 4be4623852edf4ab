use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use goldflag::constructions::Builtin;
use goldflag::exactnum::{verify_identity, ConstructibleExpr, Decimal, Verdict};
use goldflag::render::{emitted_values, RenderOptions};
use serde_json::Value;

fn goldflag(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_goldflag")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn list_names_every_builtin() {
    let o = goldflag(&["list"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "chile-1818\nchile-current\ntogo\nnepal-ratio\n");
}

#[test]
fn ratio_and_eval_outputs() {
    assert_eq!(stdout(&goldflag(&["ratio", "chile-1818"])), "1.80171\n");
    assert_eq!(stdout(&goldflag(&["ratio", "togo", "--digits", "9"])), "1.61803399\n");
    assert_eq!(stdout(&goldflag(&["ratio", "nepal-ratio", "--digits", "3"])), "0.820\n");
    let o = goldflag(&["eval", "sqrt(10-2*sqrt(5))/(1+sqrt(5))", "--digits", "3"]);
    assert_eq!((o.status.code(), stdout(&o)), (Some(0), "0.727\n".to_string()));
    let o = goldflag(&["eval", "phi", "--digits", "30", "--precision-bits", "300"]);
    assert_eq!(stdout(&o), "1.61803398874989484820458683437\n");
}

#[test]
fn eval_help_mentions_rounding() {
    let o = goldflag(&["eval", "--help"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("rounded half to"));
}

#[test]
fn verify_builtins() {
    let o = goldflag(&["verify", "chile-current"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("chile-current: 3/3 checks passed\n"), "{}", stdout(&o));
    let o = goldflag(&["verify", "chile-1818"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("rising diagonal at 36°"));
}

#[test]
fn build_writes_svg_and_json() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("c.svg");
    let o = goldflag(&["build", "chile-current", "--out", svg.to_str().unwrap(), "--scale", "300"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).starts_with(&format!("wrote {} (svg, chile-current, 900 x 600,", svg.display())));
    assert!(fs::read_to_string(&svg).unwrap().contains(r#"viewBox="0 0 900 600""#));

    let json = dir.path().join("c.json");
    let o = goldflag(&["build", "chile-1818", "--out", json.to_str().unwrap(), "--scale", "2.4/width", "--digits", "6"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: Value = serde_json::from_str(&fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(v["canvas"]["width"].to_string(), "2.4");
    assert_eq!(v["canvas"]["height"].to_string(), "1.33207");
}

fn lookup<'a>(v: &'a Value, path: &str) -> &'a Value {
    let mut cur = v;
    for part in path.split('.') {
        let (key, rest) = part.split_once('[').map_or((part, ""), |(k, r)| (k, r));
        cur = &cur[key];
        for index in rest.split('[').filter(|s| !s.is_empty()) {
            cur = &cur[index.trim_end_matches(']').parse::<usize>().unwrap()];
        }
    }
    cur
}

#[test]
fn json_decimals_survive_independent_reevaluation() {
    let dir = tempfile::tempdir().unwrap();
    let digits = 12u32;
    for b in Builtin::ALL {
        let out = dir.path().join(format!("{b}.json"));
        let o = goldflag(&["build", b.name(), "--out", out.to_str().unwrap(), "--scale", "3/2"]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        let doc: Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();

        let layout = b.layout().unwrap();
        let opts = RenderOptions::new(ConstructibleExpr::ratio(3, 2));
        let bits = 4 * (4 * digits + 32);
        for (path, e) in emitted_values(&layout, &opts).unwrap() {
            let printed = lookup(&doc, &path).to_string();
            if printed == "0" {
                assert_eq!(verify_identity(&e, &ConstructibleExpr::zero()).unwrap(), Verdict::ProvedEqual, "{b} {path}");
                continue;
            }
            let iv = e.interval(bits).unwrap();
            let lo = Decimal::round(&iv.lo.to_rational(), digits).to_trimmed_string();
            let hi = Decimal::round(&iv.hi.to_rational(), digits).to_trimmed_string();
            assert_eq!((lo.as_str(), hi.as_str()), (printed.as_str(), printed.as_str()), "{b} {path}");
        }
    }
}

#[test]
fn exit_1_on_errors() {
    let dir = tempfile::tempdir().unwrap();

    let o = goldflag(&["verify", "mars"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("unknown flag `mars`"));

    let o = goldflag(&["eval", "1/0x"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("1:4"));

    let o = goldflag(&["eval", "sqrt(0-1)"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("certification error"));

    let bad = write(dir.path(), "bad.flag", "flag \"b\" {\n  canvas 3 x 2;\n  region r red rect 0 0 3;\n}\n");
    let o = goldflag(&["verify", &bad]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("3:26: expected expression"), "{}", stderr(&o));

    let o = goldflag(&["ratio", dir.path().join("absent.flag").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("cannot read"));

    let out = dir.path().join("no-such-dir").join("x.svg");
    let o = goldflag(&["build", "togo", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("cannot write"));

    let o = goldflag(&["build", "togo", "--out", dir.path().join("t.svg").to_str().unwrap(), "--scale", "0"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn exit_1_when_a_check_fails() {
    let dir = tempfile::tempdir().unwrap();
    let wrong = write(
        dir.path(),
        "wide.flag",
        "flag \"chile-current\" {\n  canvas 4 x 2;\n  region red red rect 0 0 3 1;\n  region blue blue rect 0 1 1 1;\n  \
         region white white rect 1 1 2 1;\n  star white at diagonal_intersection of blue diameter 1/2;\n}\n",
    );
    let o = goldflag(&["verify", &wrong]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("ProvedUnequal"));
}

#[test]
fn exit_2_on_usage_errors() {
    for args in [
        vec!["frobnicate"],
        vec!["build", "togo"],
        vec!["build", "togo", "--out", "x.svg", "--digits", "2"],
        vec!["build", "togo", "--out", "x.svg", "--format", "png"],
        vec!["ratio", "togo", "--colour", "red"],
        vec![],
    ] {
        assert_eq!(goldflag(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn exit_3_when_undecided_or_exhausted() {
    // exactly zero, but outside what the normal form can see
    let o = goldflag(&["eval", "sqrt(1+sqrt(2))*sqrt(1+sqrt(2)) - (1+sqrt(2))"]);
    assert_eq!(o.status.code(), Some(3), "{}", stderr(&o));
    assert!(stderr(&o).contains("precision"));

    let dir = tempfile::tempdir().unwrap();
    let hidden = write(
        dir.path(),
        "hidden.flag",
        "flag \"chile-current\" {\n  canvas 3 + sqrt(1+sqrt(2))*sqrt(1+sqrt(2)) - (1+sqrt(2)) x 2;\n  \
         region red red rect 0 0 3 1;\n  region blue blue rect 0 1 1 1;\n  region white white rect 1 1 2 1;\n  \
         star white at diagonal_intersection of blue diameter 1/2;\n}\n",
    );
    let o = goldflag(&["verify", &hidden]);
    assert_eq!(o.status.code(), Some(3), "{}{}", stdout(&o), stderr(&o));
    assert!(stdout(&o).contains("Undecided"));
}

#[test]
fn spec_files_verify_like_builtins() {
    let flags = Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/flags");
    for b in Builtin::ALL {
        let path = flags.join(format!("{b}.flag"));
        let o = goldflag(&["verify", path.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{b}: {}", stdout(&o));
        let builtin_ratio = stdout(&goldflag(&["ratio", b.name()]));
        assert_eq!(stdout(&goldflag(&["ratio", path.to_str().unwrap()])), builtin_ratio);
    }
}
