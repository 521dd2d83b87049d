//! End-to-end runs of the command-line interface against the shipped data.

use std::path::{Path, PathBuf};

use knotpoly::cli;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
}

fn arg(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn verify_passes_on_the_sample_knot_file() {
    let pd = data("k13_sample.pd");
    assert_eq!(cli::run(["knotpoly", "verify", "--pd", arg(&pd)]), 0);
}

#[test]
fn jones_both_routes_from_file() {
    let pd = data("k13_sample.pd");
    let out = tempfile::tempdir().unwrap();
    let out_file = out.path().join("jones.txt");
    assert_eq!(
        cli::run([
            "knotpoly",
            "jones",
            "--pd",
            arg(&pd),
            "--route",
            "both",
            "--out",
            arg(&out_file),
        ]),
        0
    );
    let text = std::fs::read_to_string(&out_file).unwrap();
    assert!(text.contains("t^-12 - 4t^-11 + 11t^-10"));
    assert!(text.contains("+ 4 - t"));
}

#[test]
fn census_scan_is_green_on_the_fixture() {
    let input = data("census.csv");
    let out = tempfile::tempdir().unwrap();
    assert_eq!(
        cli::run([
            "knotpoly",
            "census-scan",
            "--in",
            arg(&input),
            "--out-dir",
            arg(out.path()),
        ]),
        0
    );
    for i in 1..=4 {
        let scatter = out.path().join(format!("scatter_t{i}.csv"));
        let text = std::fs::read_to_string(&scatter).unwrap();
        assert!(text.starts_with(&format!("T{i},volume\n")));
        assert!(text.lines().count() > 1);
    }
}

#[test]
fn census_scan_filter_flags() {
    let input = data("census.csv");
    let out = tempfile::tempdir().unwrap();
    assert_eq!(
        cli::run([
            "knotpoly",
            "census-scan",
            "--in",
            arg(&input),
            "--out-dir",
            arg(out.path()),
            "--ti",
            "1",
            "--filter",
            "nonalternating",
        ]),
        0
    );
    let text = std::fs::read_to_string(out.path().join("scatter_t1.csv")).unwrap();
    // 3 non-alternating records in the fixture
    assert_eq!(text.lines().count(), 4);
}

#[test]
fn high_ti_requires_the_override_flag() {
    let input = data("census.csv");
    let out = tempfile::tempdir().unwrap();
    assert_eq!(
        cli::run([
            "knotpoly",
            "census-scan",
            "--in",
            arg(&input),
            "--out-dir",
            arg(out.path()),
            "--ti",
            "5",
        ]),
        1
    );
    assert_eq!(
        cli::run([
            "knotpoly",
            "census-scan",
            "--in",
            arg(&input),
            "--out-dir",
            arg(out.path()),
            "--ti",
            "5",
            "--allow-any-ti",
        ]),
        0
    );
}

#[test]
fn twist_from_coefficients_round_trips_the_sample() {
    let out = tempfile::tempdir().unwrap();
    let out_file = out.path().join("twist.csv");
    assert_eq!(
        cli::run([
            "knotpoly",
            "twist",
            "--coeffs",
            "1,-4,11,-23,35,-47,53,-52,47,-34,22,-11,4,-1",
            "--min-exp",
            "-12",
            "--format",
            "csv",
            "--out",
            arg(&out_file),
        ]),
        0
    );
    let text = std::fs::read_to_string(&out_file).unwrap();
    assert!(text.starts_with("i,Ti\n1,8\n2,22\n"));
}

#[test]
fn bounds_from_coefficients_print_the_bracket() {
    let out = tempfile::tempdir().unwrap();
    let out_file = out.path().join("bounds.txt");
    assert_eq!(
        cli::run([
            "knotpoly",
            "bounds",
            "--coeffs",
            "1,-4,11,-23,35,-47,53,-52,47,-34,22,-11,4,-1",
            "--min-exp",
            "-12",
            "--out",
            arg(&out_file),
        ]),
        0
    );
    let text = std::fs::read_to_string(&out_file).unwrap();
    assert!(text.contains("T(K) = 8"));
    assert!(text.contains("volume-ish lower  = 6.0896496385"));
    assert!(text.contains("volume-ish upper  = 71.0459124487"));
    // the span stands in for the crossing number of a reduced alternating
    // diagram, so the Adams bound appears too
    assert!(text.contains("adams upper       = 36.5378978307"));
}
