//! End-to-end tests running the built binary against the shipped fixtures.

use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    format!("{}/../../fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn polycat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polycat")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn check_accepts_all_fixture_polygraphs() {
    for f in ["loop.pol", "path.pol", "parallel.pol", "pseudomonoid.pol"] {
        let out = polycat(&["check", &fixture(f)]);
        assert_eq!(out.status.code(), Some(0), "{f}: {:?}", out);
        assert!(stdout(&out).starts_with("ok:"));
    }
}

#[test]
fn type_reports_boundaries() {
    let out = polycat(&["type", &fixture("pseudomonoid.pol"), "(mu *0 a) *1 mu"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "2-cell : a *0 a *0 a -> a");
}

#[test]
fn equal_distinguishes_verdicts_by_exit_code() {
    let p = fixture("loop.pol");
    let out = polycat(&["equal", &p, "f *0 id(x) *0 f", "f *0 f"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "equal");

    let out = polycat(&["equal", &p, "f", "f *0 f"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out).trim(), "not equal");
}

#[test]
fn exchange_instances_are_equal() {
    let p = fixture("pseudomonoid.pol");
    let out = polycat(&[
        "equal",
        &p,
        "(mu *0 a *0 a) *1 (a *0 mu)",
        "(a *0 a *0 mu) *1 (mu *0 a)",
    ]);
    assert_eq!(out.status.code(), Some(0), "{:?}", out);
}

#[test]
fn type_error_exits_2_parse_error_exits_3() {
    let p = fixture("path.pol");
    let out = polycat(&["equal", &p, "g *0 f", "f"]);
    assert_eq!(out.status.code(), Some(2));
    let out = polycat(&["normalize", &p, "f *0 ("]);
    assert_eq!(out.status.code(), Some(3));
    let out = polycat(&["check", &fixture("z2.model")]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn unsupported_dimension_exits_4() {
    let p = fixture("pseudomonoid.pol");
    let out = polycat(&["equal", &p, "L", "R"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn json_output_carries_normal_form_and_boundaries() {
    let out = polycat(&["normalize", &fixture("pseudomonoid.pol"), "(mu *0 a) *1 mu", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["verdict"], "ok");
    assert_eq!(v["normal_form"], "(mu *0 a) *1 mu");
    assert_eq!(v["boundaries"]["src"], "a *0 a *0 a");
    assert_eq!(v["boundaries"]["tgt"], "a");
}

#[test]
fn enumerate_lists_cells() {
    let out = polycat(&["enumerate", &fixture("parallel.pol"), "--dim", "2", "--max", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 5);
    assert!(lines.contains(&"al"));
}

#[test]
fn render_is_deterministic_with_integer_coordinates() {
    let args = ["render", &fixture("pseudomonoid.pol"), "(mu *0 a) *1 mu"];
    let a = polycat(&args);
    let b = polycat(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let svg = stdout(&a);
    assert_eq!(svg.matches("<circle").count(), 2);
    assert!(svg.contains("<g id=\"inputs\">") && svg.contains("<g id=\"outputs\">"));
    // every coordinate is an unsigned integer
    for m in ["x1=\"", "y1=\"", "cx=\"", "cy=\""] {
        for piece in svg.split(m).skip(1) {
            let val = piece.split('"').next().unwrap();
            val.parse::<u64>().unwrap_or_else(|_| panic!("non-integer coord `{val}`"));
        }
    }
}

#[test]
fn eat_check_validates_theories_and_models() {
    let out = polycat(&["eat", "check", "--theory", &fixture("mon.eat"), "--model", &fixture("z2.model")]);
    assert_eq!(out.status.code(), Some(0));
    let out = polycat(&["eat", "check", "--theory", &fixture("mon.eat"), "--model", &fixture("z2bad.model")]);
    assert_eq!(out.status.code(), Some(1));
    let out = polycat(&["eat", "check", "--theory", &fixture("cat.eat"), "--model", &fixture("cat2.model")]);
    assert_eq!(out.status.code(), Some(0));
    let out = polycat(&["eat", "check", "--theory", &fixture("gph.eat")]);
    assert_eq!(out.status.code(), Some(0));
}
