use std::path::PathBuf;
use std::process::{Command, Output};

use dgn_cli::workspace::Overrides;
use dgn_cli::{cmd_cube, cmd_stable, parse_document, CliError, Format, Workspace, EXIT_DEFECTS, EXIT_INPUT, EXIT_PASS};
use proptest::prelude::*;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn dgn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dgn")).args(args).output().expect("binary runs")
}

fn dgn_on(doc: &str, args: &[&str]) -> Output {
    let path = fixture(doc);
    let mut all = vec!["--doc", path.to_str().unwrap()];
    all.extend_from_slice(args);
    dgn(&all)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("report is JSON")
}

#[test]
fn fixture_validates() {
    let o = dgn_on("workspace.json", &["validate"]);
    assert_eq!(o.status.code(), Some(EXIT_PASS), "{}", stdout(&o));
    assert_eq!(json(&o)["status"], "pass");
}

#[test]
fn perturbed_category_reports_a_located_defect() {
    let o = dgn_on("perturbed.json", &["validate", "--format", "text"]);
    assert_eq!(o.status.code(), Some(EXIT_DEFECTS));
    let text = stdout(&o);
    assert!(text.contains("n=3 objects=(x,y,y,y) inputs=(1y,1y,f)"), "{text}");
    assert!(text.ends_with("status: fail\n"));
}

#[test]
fn horn_filling_prints_the_filler() {
    let o = dgn_on("workspace.json", &["fill-horn", "--simplex", "s3", "--p", "1"]);
    assert_eq!(o.status.code(), Some(EXIT_PASS));
    let r = json(&o);
    assert!(r["lines"][0].as_str().unwrap().starts_with("horn Λ^3_1"));
    assert!(r["output"].is_object());
}

#[test]
fn input_errors_exit_two() {
    for args in [
        vec!["fill-horn", "--simplex", "s3", "--p", "0"],
        vec!["fill-horn", "--simplex", "nope", "--p", "1"],
        vec!["dk-roundtrip", "--complex", "A", "--cap", "2"],
        vec!["stable", "--category", "D4"],
    ] {
        let o = dgn_on("workspace.json", &args);
        assert_eq!(o.status.code(), Some(EXIT_INPUT), "{args:?}");
        assert!(String::from_utf8_lossy(&o.stderr).starts_with("error: "), "{args:?}");
    }
    assert_eq!(dgn(&["cube", "--m", "3", "--field", "fp:8"]).status.code(), Some(EXIT_INPUT));
    assert_eq!(dgn(&["--doc", "/nonexistent.json", "validate"]).status.code(), Some(EXIT_INPUT));
}

#[test]
fn printed_sign_breaks_the_shuffle_pair() {
    let classical = dgn_on("workspace.json", &["dk-roundtrip", "--complex", "A"]);
    assert_eq!(classical.status.code(), Some(EXIT_PASS));
    assert!(stdout(&classical).contains("N∘DK diff = 0"));
    let printed = dgn_on("workspace.json", &["dk-roundtrip", "--complex", "A", "--sign-mode", "paper"]);
    assert_eq!(printed.status.code(), Some(EXIT_DEFECTS));
}

#[test]
fn parse_errors_carry_a_position() {
    let err = parse_document("{\n  \"seed\": 1,\n  \"categories\": [\n").unwrap_err();
    assert!(matches!(err, CliError::Parse { line: 4, .. }), "{err:?}");
    let err = parse_document("{\"seed\": 1, \"colour\": 2}").unwrap_err();
    assert!(matches!(err, CliError::Parse { line: 1, .. }), "{err:?}");
}

#[test]
fn empty_document_warns() {
    let o = dgn(&["validate"]);
    assert_eq!(o.status.code(), Some(EXIT_PASS));
    assert!(!json(&o)["warnings"].as_array().unwrap().is_empty());
}

#[test]
fn cube_lists_the_square_identifications() {
    let ws = Workspace::build(&Default::default(), &Overrides::default()).unwrap();
    let r = cmd_cube(&ws, 4).unwrap();
    assert!(r.passed());
    assert_eq!(r.lines[0], "top=6 vertices=8 facets=6");
    assert_eq!(r.lines.len(), 7);
}

#[test]
fn timing_is_opt_in() {
    let plain = json(&dgn(&["cube", "--m", "3"]));
    assert!(plain.get("timing_ms").is_none());
    let timed = json(&dgn(&["cube", "--m", "3", "--timing"]));
    assert!(timed["timing_ms"].is_u64());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn reports_are_byte_identical_for_a_seed(seed in any::<u64>()) {
        let text = std::fs::read_to_string(fixture("workspace.json")).unwrap();
        let doc = parse_document(&text).unwrap();
        let render = || {
            let ws = Workspace::build(&doc, &Overrides { seed: Some(seed), ..Overrides::default() }).unwrap();
            let r = cmd_stable(&ws, "C", 5).unwrap();
            (r.render(Format::Json), r.render(Format::Text))
        };
        prop_assert_eq!(render(), render());
    }
}
