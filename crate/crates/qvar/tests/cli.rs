//! End-to-end tests against the built binary: exit codes, byte-stable
//! output, and the text file formats.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn qvar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qvar"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

#[test]
fn compare_table_is_byte_stable() {
    let args = ["compare", "--obs", "pauli", "--state", "example1:0"];
    let first = qvar(&args);
    let second = qvar(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    let text = stdout_of(&first);
    assert!(text.contains("sum_of_variances  2.00000000000\n"), "{text}");
    assert!(text.contains("lb_new            1.99202258114\n"), "{text}");
    assert!(text.contains("fb_chen           1.50000000000\n"), "{text}");
    assert!(text.contains("pb1_plus          0.750000000000\n"), "{text}");
    assert!(text.contains("pb2_minus         1.25000000000\n"), "{text}");
}

#[test]
fn compare_json_mirrors_report_fields() {
    let out = qvar(&[
        "compare",
        "--obs",
        "spin1",
        "--state",
        "example2:pi/2,pi/4",
        "--json",
    ]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.starts_with(
        "{\"sum_of_variances\":1.25000000000,\"lb_new\":1.23093634719,\"fb_chen\":0.667893218813,\"pb1_plus\":0.625000000000,\"pb2_minus\":0.625000000000,"
    ), "{text}");
    assert!(text.contains("\"pairwise_product_bounds\":[{\"i\":0,\"j\":1,"));
}

#[test]
fn compare_n2_reports_null_chen_bound() {
    // two observables from matrix files
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.mat");
    let b = dir.path().join("b.mat");
    fs::write(&a, "dim 2\n0 0  1 0\n1 0  0 0\n").unwrap();
    fs::write(&b, "dim 2\n1 0  0 0\n0 0  -1 0\n").unwrap();
    let spec = format!("file:{},{}", a.display(), b.display());
    let out = qvar(&["compare", "--obs", &spec, "--state", "bloch:0,0,0", "--json"]);
    assert!(out.status.success(), "{out:?}");
    assert!(stdout_of(&out).contains("\"fb_chen\":null"));
}

#[test]
fn sweep_fig1_golden_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fig1.csv");
    let out = qvar(&["sweep-fig1", "--steps", "3", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let expected = "\
theta,sv,lb_new,fb_chen,pb1_plus,pb2_minus
0,2.00000000000,1.99202258114,1.50000000000,0.750000000000,1.25000000000
1.57079632679,2.00000000000,1.96187269439,1.08578643763,1.00000000000,1.00000000000
3.14159265359,2.00000000000,1.99202258114,1.50000000000,0.750000000000,1.25000000000
";
    assert_eq!(fs::read_to_string(&path).unwrap(), expected);
}

#[test]
fn sweep_outputs_are_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let p1 = dir.path().join("a.csv");
    let p2 = dir.path().join("b.csv");
    for (p, _) in [(&p1, 0), (&p2, 1)] {
        let out = qvar(&[
            "sweep-fig2",
            "--theta-steps",
            "7",
            "--phi-steps",
            "5",
            "--out",
            p.to_str().unwrap(),
        ]);
        assert!(out.status.success());
    }
    assert_eq!(fs::read(&p1).unwrap(), fs::read(&p2).unwrap());
    let text = fs::read_to_string(&p1).unwrap();
    assert!(text.starts_with(
        "theta,phi,sv,lb_new,fb_chen,pb1_plus,pb2_minus,diff_lb_fb,diff_lb_pb2,diff_fb_pb2\n"
    ));
    assert_eq!(text.lines().count(), 36);
}

#[test]
fn sweep_fig2_phi_slice() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("slice.csv");
    let out = qvar(&[
        "sweep-fig2",
        "--theta-steps",
        "4",
        "--phi-steps",
        "1",
        "--phi-slice",
        "pi/4",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = fs::read_to_string(&path).unwrap();
    // φ column fixed to π/4 on every row
    for line in text.lines().skip(1) {
        assert_eq!(line.split(',').nth(1), Some("0.785398163397"), "{line}");
    }
}

#[test]
fn audit_reports_zero_violations_and_exits_zero() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("violations.csv");
    let out = qvar(&[
        "audit",
        "--trials",
        "1000",
        "--dims",
        "2,3",
        "--n-obs",
        "3",
        "--seed",
        "42",
        "--violations-out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("0 violations"), "{text}");
    assert_eq!(
        fs::read_to_string(&path).unwrap(),
        "check,seed,lhs,rhs,gap\n"
    );
}

#[test]
fn audit_output_is_deterministic() {
    let args = ["audit", "--trials", "200", "--dims", "2,3", "--n-obs", "2,3", "--seed", "7"];
    assert_eq!(qvar(&args).stdout, qvar(&args).stdout);
}

#[test]
fn minimize_certifies_and_exits_zero() {
    let out = qvar(&[
        "minimize",
        "--target",
        "new-minus-chen",
        "--grid-step",
        "0.05",
        "--refine",
        "40",
    ]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("min_value         0.398717474236"), "{text}");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["compare", "--obs", "pauli"] as &[&str],
        &["nonsense"],
        &["compare", "--obs", "pauli", "--state", "example1:0", "--bogus"],
        &["minimize", "--target", "sideways", "--grid-step", "0.1", "--refine", "1"],
    ] {
        let out = qvar(args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn input_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.mat");
    fs::write(&bad, "dim 2\n0 0  1 0\n0 0  0 0\n").unwrap();
    let bad_spec = format!("file:{}", bad.display());
    for args in [
        &["compare", "--obs", "pauli", "--state", "bloch:2,0,0"] as &[&str],
        &["compare", "--obs", "pauli", "--state", "example2:0,0"],
        &["compare", "--obs", &bad_spec, "--state", "bloch:0,0,0"],
        &["compare", "--obs", "pauli", "--state", "file:/does/not/exist"],
        &["minimize", "--target", "new-minus-pb2", "--grid-step", "0", "--refine", "1"],
        &["audit", "--trials", "10", "--dims", "99", "--n-obs", "2", "--seed", "1"],
    ] {
        let out = qvar(args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}");
        assert!(!out.stderr.is_empty(), "args {args:?}");
    }
}

#[test]
fn state_files_round_trip_through_compare() {
    let dir = tempfile::tempdir().unwrap();
    let pure = dir.path().join("pure.st");
    fs::write(&pure, "# |0>\npure 2\n1 0  0 0\n").unwrap();
    let spec = format!("file:{}", pure.display());
    let out = qvar(&["compare", "--obs", "pauli", "--state", &spec, "--json"]);
    assert!(out.status.success(), "{out:?}");
    assert!(stdout_of(&out).contains("\"sum_of_variances\":2.00000000000"));

    let mixed = dir.path().join("mixed.st");
    fs::write(&mixed, "mixed 2\n0.5 0  0 0\n0 0  0.5 0\n").unwrap();
    let spec = format!("file:{}", mixed.display());
    let out = qvar(&["compare", "--obs", "pauli", "--state", &spec, "--json"]);
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("\"sum_of_variances\":3.00000000000"));
}

#[test]
fn observable_files_match_builtin_pauli() {
    let dir = tempfile::tempdir().unwrap();
    let paths: Vec<_> = ["sx.mat", "sy.mat", "sz.mat"]
        .iter()
        .map(|n| dir.path().join(n))
        .collect();
    fs::write(&paths[0], "dim 2\n0 0  1 0\n1 0  0 0\n").unwrap();
    fs::write(&paths[1], "dim 2\n0 0  0 -1\n0 1  0 0\n").unwrap();
    fs::write(&paths[2], "dim 2\n1 0  0 0\n0 0  -1 0\n").unwrap();
    let spec = format!(
        "file:{},{},{}",
        paths[0].display(),
        paths[1].display(),
        paths[2].display()
    );
    let from_files = qvar(&["compare", "--obs", &spec, "--state", "example1:0.3", "--json"]);
    let builtin = qvar(&["compare", "--obs", "pauli", "--state", "example1:0.3", "--json"]);
    assert!(from_files.status.success());
    assert_eq!(from_files.stdout, builtin.stdout);
}

#[test]
fn haar_state_spec_is_seed_deterministic() {
    let a = qvar(&["compare", "--obs", "pauli", "--state", "haar:2,9", "--json"]);
    let b = qvar(&["compare", "--obs", "pauli", "--state", "haar:2,9", "--json"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let c = qvar(&["compare", "--obs", "pauli", "--state", "haar:2,10", "--json"]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn comments_and_blank_lines_are_tolerated() {
    let dir = tempfile::tempdir().unwrap();
    let path: &Path = &dir.path().join("commented.mat");
    fs::write(
        path,
        "# identity with clutter\n\ndim 2\n# row one\n1 0  0 0\n\n0 0  1 0\n",
    )
    .unwrap();
    let spec = format!("file:{p},{p}", p = path.display());
    let out = qvar(&["compare", "--obs", &spec, "--state", "bloch:0,0,0"]);
    assert!(out.status.success(), "{out:?}");
}
