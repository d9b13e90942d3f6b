use std::process::{Command, Output};

fn chtri(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chtri")).args(args).env_remove("CHP_TOLERANCE").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn first_line(o: &Output) -> String {
    stdout(o).lines().next().unwrap_or_default().to_string()
}

const LN3: &str = "1.0986122886681098";
const PI: &str = "3.141592653589793";

#[test]
fn classify_headline_points() {
    let o = chtri(&["classify", "--m", LN3, "--alpha", PI]);
    assert!(o.status.success());
    assert_eq!(first_line(&o), "Discrete");

    let o = chtri(&["classify", "--r", "1.1547005383792517", "--alpha", PI]);
    assert_eq!(first_line(&o), "Discrete");

    let o = chtri(&["classify", "--m", "2.6339", "--alpha", "0.05"]);
    assert!(o.status.success());
    assert_eq!(first_line(&o), "NonDiscrete");

    let o = chtri(&["classify", "--m", "2", "--alpha", "1.5708"]);
    assert!(o.status.success());
    assert_eq!(first_line(&o), "Unknown");
}

#[test]
fn classify_degrees_and_json() {
    let o = chtri(&["classify", "--m", "2", "--alpha", "180", "--degrees", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["verdict"], "Discrete");
    assert!(v["diagnostics"]["certificate_holds"].as_bool().unwrap());
}

#[test]
fn bad_input_is_a_usage_error() {
    for args in [
        &["classify", "--m", "1", "--alpha", "7"][..],
        &["classify", "--m", "-1", "--alpha", "1"],
        &["classify", "--m", "1", "--r", "2", "--alpha", "1"],
        &["classify", "--alpha", "1"],
        &["scan", "--m", "0:1", "--alpha", "1:2", "--steps", "0"],
        &["classify", "--m", "1", "--alpha", "1", "--tolerance", "-1"],
    ] {
        assert_eq!(chtri(args).status.code(), Some(2), "{args:?}");
    }
}

fn small_scan(extra: &[&str]) -> Output {
    let mut args = vec!["scan", "--m", "1:3", "--alpha", "1.5707963267948966:4.71238898038469", "--steps", "3"];
    args.extend_from_slice(extra);
    chtri(&args)
}

#[test]
fn scan_shape_and_stability() {
    let a = small_scan(&[]);
    assert!(a.status.success());
    let text = stdout(&a);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "m,alpha,verdict,vertical_margin,min_lattice_norm,shimizu_deficit");
    assert_eq!(lines.len(), 10);
    assert!(lines.iter().all(|l| l.split(',').count() == 6));
    assert!(!text.contains('\r'));
    // m slowest, alpha ascending; alpha = pi with m >= 2 is in the proven region
    assert!(lines[5].starts_with("2,3.14159265359,D,"));

    let b = small_scan(&["--jobs", "3"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn scan_writes_files() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("grid.csv");
    let svg = dir.path().join("grid.svg");
    assert!(small_scan(&["--out", csv.to_str().unwrap()]).status.success());
    assert!(small_scan(&["--out", svg.to_str().unwrap()]).status.success());
    let rows = std::fs::read_to_string(&csv).unwrap().lines().count() - 1;
    let pic = std::fs::read_to_string(&svg).unwrap();
    assert!(pic.starts_with("<svg") || pic.starts_with("<?xml"));
    assert_eq!(pic.matches("<circle").count(), rows);
    assert!(pic.contains("#1f4fd1"));

    // explicit format beats the extension
    let forced = dir.path().join("grid.txt");
    assert!(small_scan(&["--out", forced.to_str().unwrap(), "--format", "svg"]).status.success());
    assert!(std::fs::read_to_string(forced).unwrap().contains("<circle"));
}

#[test]
fn scan_cos_alpha_axis() {
    let o = chtri(&["scan", "--r", "2", "--cos-alpha", "-1:-0.5", "--steps", "1x3"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 4);
    assert!(text.lines().skip(1).all(|l| l.split(',').nth(2) == Some("D")));
}

#[test]
fn unwritable_output_is_an_io_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing").join("out.csv");
    let o = small_scan(&["--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn orbit_output() {
    let o = chtri(&["orbit", "--r", "1", "--theta", "0", "--max-len", "0"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "word,re,im,x,y,rep\nId,0,0,0,0,Id\n");

    let o = chtri(&["orbit", "--r", "1", "--max-len", "6"]);
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 66);
    assert!(text.lines().skip(1).all(|l| l.split(',').count() == 6));

    assert_eq!(chtri(&["orbit", "--r", "1", "--max-len", "15"]).status.code(), Some(2));
    assert_eq!(chtri(&["orbit", "--r", "1", "--theta", "2"]).status.code(), Some(2));

    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("orbit.svg");
    assert!(chtri(&["orbit", "--r", "1", "--out", svg.to_str().unwrap()]).status.success());
    assert_eq!(std::fs::read_to_string(svg).unwrap().matches("<circle").count(), 65);
}

#[test]
fn verify_fast_passes() {
    let o = chtri(&["verify", "--fast"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    assert!(text.contains("PASS generator-algebra"));
    assert!(!text.contains("scan-consistency"));
}

#[test]
fn verify_reports_failures_by_name_under_tight_tolerance() {
    let o = Command::new(env!("CARGO_BIN_EXE_chtri"))
        .args(["verify", "--fast"])
        .env("CHP_TOLERANCE", "1e-14")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8(o.stderr.clone()).unwrap();
    assert!(err.contains("generator-algebra/generator-order"), "{err}");
    assert!(stdout(&o).contains("FAIL generator-algebra"));
}
