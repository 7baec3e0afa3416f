//! Binary-level contract tests: document schemas, CSV format, exit codes,
//! stream discipline and determinism.

use std::process::{Command, Output};

fn bqc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bqc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> serde_json::Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    assert!(out.stderr.is_empty(), "success paths must not write to stderr");
    serde_json::from_slice(&out.stdout).expect("valid JSON document")
}

#[test]
fn measures_document_schema_and_values() {
    let doc = json_of(&bqc(&[
        "measures", "--theta", "2.21", "--eta", "1.42", "--mu", "0.913",
    ]));
    assert_eq!(doc["schema_version"], "1");
    assert_eq!(doc["params"]["theta"], 2.21);
    assert_eq!(doc["params"]["beta"], 0.0);
    let fill = doc["measures"]["fill"].as_f64().unwrap();
    assert!((fill - 0.901_835_231_5).abs() < 1e-9);
    assert!(doc["measures"]["negativities"]["ab"].is_f64());
    assert!(doc["timing_ms"].as_f64().unwrap() >= 0.0);
    assert!(doc.get("monogamy").is_none());
    assert!(doc.get("verbose").is_none());
}

#[test]
fn verbose_measures_expose_both_gmc_normalizations() {
    let doc = json_of(&bqc(&[
        "measures", "--theta", "2.21", "--eta", "1.42", "--mu", "0.913", "--verbose",
    ]));
    let gmc = doc["measures"]["gmc"].as_f64().unwrap();
    let rooted = doc["verbose"]["gmc_rooted"].as_f64().unwrap();
    assert!((rooted * rooted - gmc).abs() < 1e-12);
    let pi = &doc["verbose"]["pi_components"];
    let mean = (pi["pi_a"].as_f64().unwrap()
        + pi["pi_b"].as_f64().unwrap()
        + pi["pi_c"].as_f64().unwrap())
        / 3.0;
    assert!((mean - doc["measures"]["three_pi"].as_f64().unwrap()).abs() < 1e-12);
}

#[test]
fn gte_vanishes_at_eta_zero_through_the_cli() {
    let doc = json_of(&bqc(&["measures", "--theta", "1.0", "--eta", "0", "--mu", "1.0"]));
    for field in ["ggm", "three_pi", "gmc", "fill"] {
        let v = doc["measures"][field].as_f64().unwrap();
        assert!(v.abs() < 1e-8, "{field} = {v}");
    }
}

#[test]
fn domain_violations_exit_two_and_name_the_flag() {
    for (args, flag) in [
        (vec!["measures", "--theta", "0", "--eta", "1", "--mu", "1"], "--theta"),
        (vec!["measures", "--theta", "1", "--eta", "3", "--mu", "1"], "--eta"),
        (vec!["measures", "--theta", "1", "--eta", "1", "--mu", "-1"], "--mu"),
        (vec!["measures", "--theta", "1", "--eta", "1", "--beta", "9", "--mu", "1"], "--beta"),
        (vec!["limit-check", "--theta", "1", "--eta", "1", "--mu", "10"], "--mu"),
        (vec!["peak", "--measure", "nope"], "--measure"),
    ] {
        let out = bqc(&args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}");
        assert!(out.stdout.is_empty());
        let err = String::from_utf8_lossy(&out.stderr);
        assert_eq!(err.lines().count(), 1, "one-line diagnostic: {err}");
        assert!(err.contains(flag), "diagnostic {err:?} names {flag}");
    }
}

#[test]
fn degrees_flag_matches_radians() {
    let deg = json_of(&bqc(&[
        "measures", "--theta", "90", "--eta", "45", "--beta", "60", "--mu", "1", "--degrees",
    ]));
    let rad = json_of(&bqc(&[
        "measures",
        "--theta", "1.5707963267948966",
        "--eta", "0.7853981633974483",
        "--beta", "1.0471975511965976",
        "--mu", "1",
    ]));
    assert_eq!(deg["measures"], rad["measures"]);
}

#[test]
fn amplitude_table_document() {
    let doc = json_of(&bqc(&["amplitudes", "--theta", "3.141592653589793", "--mu", "1"]));
    let row_r: Vec<f64> = doc["row_r"].as_array().unwrap().iter().map(|v| v.as_f64().unwrap()).collect();
    assert!((row_r[0] - 2.5).abs() < 1e-14);
    assert!(row_r[1].abs() < 1e-15 && row_r[2].abs() < 1e-15);
    assert!((row_r[3] - 0.5).abs() < 1e-15);
    let row_l: Vec<f64> = doc["row_l"].as_array().unwrap().iter().map(|v| v.as_f64().unwrap()).collect();
    assert!((row_l[2] - 1.0).abs() < 1e-15);
}

#[test]
fn json_round_trip_is_stable() {
    let first = json_of(&bqc(&[
        "measures", "--theta", "2.03", "--eta", "1.17", "--beta", "0.31", "--mu", "0.77",
    ]));
    // feed the echoed params back in
    let p = &first["params"];
    let second = json_of(&bqc(&[
        "measures",
        "--theta", &p["theta"].to_string(),
        "--eta", &p["eta"].to_string(),
        "--beta", &p["beta"].to_string(),
        "--mu", &p["mu"].to_string(),
    ]));
    assert_eq!(first["measures"], second["measures"]);
    assert_eq!(first["params"], second["params"]);
}

#[test]
fn monogamy_document_and_focal_flip() {
    let std = json_of(&bqc(&["monogamy", "--theta", "2.0", "--eta", "1.0", "--mu", "0.9"]));
    let m = &std["monogamy"];
    let er = m["e_residual"].as_f64().unwrap();
    let dr = m["d_residual"].as_f64().unwrap();
    assert!(er >= -1e-8 && dr >= er - 1e-8);
    let flip = json_of(&bqc(&[
        "monogamy", "--theta", "2.0", "--eta", "1.0", "--mu", "0.9", "--measure-on-focal",
    ]));
    assert_eq!(m["d2_a_bc"], flip["monogamy"]["d2_a_bc"]);
    assert_ne!(m["d2_ab"], flip["monogamy"]["d2_ab"]);
}

#[test]
fn sweep_csv_contract() {
    let out = bqc(&[
        "sweep", "--mu", "0.5,1.0",
        "--theta-range", "0.5:2.5:5",
        "--eta-range", "0.2:1.2:3",
    ]);
    assert!(out.status.success());
    assert!(out.stderr.is_empty());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(!text.contains('\r'), "LF line endings only");
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "mu,theta,eta,ggm,three_pi,gmc,fill");
    assert_eq!(lines.len(), 1 + 2 * 5 * 3, "header plus one row per grid point");
    // nine significant digits in scientific notation
    for cell in lines[1].split(',') {
        let mantissa = cell.split('e').next().unwrap();
        let digits = mantissa.chars().filter(|c| c.is_ascii_digit()).count();
        assert_eq!(digits, 9, "cell {cell}");
        let _: f64 = cell.parse().expect("numeric cell");
    }
    // mu-major ordering
    let first_mu: f64 = lines[1].split(',').next().unwrap().parse().unwrap();
    let last_mu: f64 = lines.last().unwrap().split(',').next().unwrap().parse().unwrap();
    assert_eq!(first_mu, 0.5);
    assert_eq!(last_mu, 1.0);
}

#[test]
fn sweep_monogamy_block_and_determinism() {
    let args = [
        "sweep", "--mu", "0.913",
        "--theta-range", "1.0:3.0:4",
        "--eta-range", "0.3:1.4:3",
        "--quantities", "fill,sef_terms,sqd_terms,residuals",
    ];
    let a = bqc(&args);
    let b = bqc(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout, "byte-identical output for identical specs");
    let text = String::from_utf8(a.stdout).unwrap();
    assert!(text
        .lines()
        .next()
        .unwrap()
        .ends_with("ef2_a_bc,ef2_ab,ef2_ac,e_res,d2_a_bc,d2_ab,d2_ac,d_res"));
    // every row satisfies the dominance floor
    for line in text.lines().skip(1) {
        let cells: Vec<f64> = line.split(',').map(|c| c.parse().unwrap()).collect();
        let (e_res, d_res) = (cells[10], cells[14]);
        assert!(e_res >= -1e-8 && d_res >= e_res - 1e-8);
    }
}

#[test]
fn sweep_threads_flag_is_deterministic_and_env_mirrored() {
    let args = [
        "sweep", "--mu", "0.7",
        "--theta-range", "0.8:2.8:4",
        "--eta-range", "0.2:1.3:3",
    ];
    let serial = bqc(&[&args[..], &["--threads", "1"]].concat());
    let parallel = bqc(&[&args[..], &["--threads", "4"]].concat());
    assert_eq!(serial.stdout, parallel.stdout);
    let via_env = Command::new(env!("CARGO_BIN_EXE_bqc"))
        .args(args)
        .env("BQC_THREADS", "2")
        .output()
        .unwrap();
    assert!(via_env.status.success());
    assert_eq!(via_env.stdout, serial.stdout);
}

#[test]
fn sweep_rejects_bad_flags_and_unwritable_paths() {
    let bad_range = bqc(&["sweep", "--mu", "1.0", "--theta-range", "2:1:5"]);
    assert_eq!(bad_range.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad_range.stderr).contains("--theta-range"));

    let bad_quantity = bqc(&["sweep", "--mu", "1.0", "--quantities", "entropy"]);
    assert_eq!(bad_quantity.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad_quantity.stderr).contains("--quantities"));

    let unwritable = bqc(&[
        "sweep", "--mu", "1.0",
        "--theta-range", "1:2:3",
        "--eta-range", "0.5:1:2",
        "--out", "/nonexistent-dir/out.csv",
    ]);
    assert_eq!(unwritable.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&unwritable.stderr).contains("--out"));
}

#[test]
fn peak_with_pinned_eta_and_custom_bounds() {
    let doc = json_of(&bqc(&[
        "peak", "--measure", "fill",
        "--theta-bounds", "0.5:3.0",
        "--eta-bounds", "0:1e-9",
        "--mu-bounds", "0.5:2.0",
        "--seed-grid", "6",
    ]));
    assert!(doc["value"].as_f64().unwrap() < 1e-6);
    assert_eq!(doc["measure"], "fill");
    assert!(doc["evaluations"].as_u64().unwrap() >= 216);
}

#[test]
fn limit_check_document() {
    let doc = json_of(&bqc(&[
        "limit-check",
        "--theta", "1.5707963267948966",
        "--eta", "0.7853981633974483",
        "--mu", "1e3",
    ]));
    let dev = doc["deviation"].as_f64().unwrap();
    assert!(dev < 1e-2);
    assert!((doc["fill_limit"].as_f64().unwrap() - 0.179_867_682_650_654).abs() < 1e-12);
}
