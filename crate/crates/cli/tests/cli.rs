use std::io::Write;
use std::process::{Command, Output, Stdio};

const SYSTEM1: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/system1.txt");

fn toric(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_toric"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn value(out: &Output, key: &str) -> String {
    let text = String::from_utf8_lossy(&out.stdout);
    let prefix = format!("{key} = ");
    text.lines()
        .find_map(|l| l.strip_prefix(&prefix))
        .unwrap_or_else(|| panic!("no {key} in output:\n{text}"))
        .to_string()
}

#[test]
fn volume_of_system1() {
    let out = toric(&["volume", SYSTEM1], None);
    assert!(out.status.success());
    assert_eq!(value(&out, "V_F"), "243");
    assert_eq!(value(&out, "bezout"), "13824");
}

#[test]
fn mixed_volume_of_system1() {
    let out = toric(&["mixedvol", SYSTEM1], None);
    assert_eq!(value(&out, "mixed_volume"), "145");
}

#[test]
fn count_on_system1() {
    let out = toric(&["count", SYSTEM1], None);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(value(&out, "complex"), "145");
    assert_eq!(value(&out, "real"), "11");
    assert_eq!(value(&out, "rational"), "0");
}

#[test]
fn report_mode_digits() {
    let out = toric(&["density", "--mode", "report", SYSTEM1], None);
    assert!(out.status.success());
    assert_eq!(value(&out, "max_candidate_digits"), "55");
}

#[test]
fn zero_system_has_full_dimension() {
    let out = toric(&["dim", "--nvars", "3"], Some("0\n"));
    assert!(out.status.success());
    assert_eq!(value(&out, "dim"), "3");
}

#[test]
fn dimension_of_a_curve() {
    let out = toric(&["dim"], Some("x1*x2 - 1\n"));
    assert_eq!(value(&out, "dim"), "1");
}

#[test]
fn reduce_lists_low_degree_first() {
    let out = toric(&["reduce", "--monomial", "1"], Some("x1^2 - 3*x1 + 2\n"));
    assert!(out.status.success());
    assert_eq!(value(&out, "h"), "2 -3 1");
}

#[test]
fn infeasible_verdict_is_not_an_error() {
    let out = toric(&["feasible"], Some("x1 + x2 - 1\nx1 + x2 - 2\n"));
    assert!(out.status.success());
    assert_eq!(value(&out, "feasible"), "false");
}

#[test]
fn rur_output_is_deterministic() {
    let sys = "x1^2 + x2^2 - 25\nx1 + x2 - 7\n";
    let a = toric(&["rur", "--seed", "5"], Some(sys));
    let b = toric(&["rur", "--seed", "5"], Some(sys));
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(value(&a, "verified").split(' ').count(), 3);
}

#[test]
fn bounds_hold_on_a_small_system() {
    let out = toric(&["bounds"], Some("2*x1^2 + x2 - 3\nx1*x2 - x2 + 5\n"));
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.lines().any(|l| l.starts_with("growth")));
    assert!(!text.contains("holds = false"));
}

#[test]
fn window_count() {
    let out = toric(&["window", "--A", "150", "--t", "150"], None);
    assert!(out.status.success());
    assert_eq!(value(&out, "holds"), "true");
}

#[test]
fn desk_density_finds_a_witness() {
    let out = toric(&["density", "--t-range", "150..150"], Some("x1^2 - 2\n"));
    assert!(out.status.success());
    assert_eq!(value(&out, "feasible"), "true");
}

#[test]
fn exit_codes() {
    assert_eq!(toric(&["volume"], Some("x1 +* 2\n")).status.code(), Some(2));
    assert_eq!(toric(&["volume", "/no/such/file"], None).status.code(), Some(2));
    assert_eq!(toric(&["reduce"], Some("x1 - x2\n")).status.code(), Some(2));
}
