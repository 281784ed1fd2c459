use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use vortex_front::field::FieldGrid;
use vortex_front::fixtures::{boundary_layer, boundary_layer_spec};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vortex-front"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn fixture() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/boundary_layer.vfgrid")
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn fixture_file_matches_its_generator() {
    let stored = FieldGrid::read_file(&fixture()).unwrap();
    let fresh = boundary_layer(boundary_layer_spec(16, 8, 17).unwrap()).unwrap();
    assert_eq!(stored, fresh);
}

#[test]
fn classify_reports_regimes() {
    let o = run(&["classify", "--v", "2", "--c", "1"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("stability_class weakly_stable"));
    assert!(text.contains("mach_class supersonic"));
    assert!(text.contains("Y0 3.02044791804e0"), "{text}");
    assert!(text.contains("Y2 9.36426384924e-1"), "{text}");
    let o = run(&["classify", "--v", "1", "--c", "1"]);
    let text = stdout(&o);
    assert!(text.contains("stability_class elliptic_unstable"));
    assert!(text.contains("Y1 4.85868271757e-1"), "{text}");
    assert!(text.contains("Y2 none"));

    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("c.json");
    assert!(
        run(&["classify", "--v", "3", "--c", "1", "--out", path_str(&json)])
            .status
            .success()
    );
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(v["stability_class"], "weakly_stable");
    assert!(v["y1"].is_null());

    for bad in [["--v", "0", "--c", "1"], ["--v", "2", "--c", "-1"]] {
        let o = run(&["classify", bad[0], bad[1], bad[2], bad[3]]);
        assert_eq!(o.status.code(), Some(2));
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn grid_rows_and_determinism() {
    let o = run(&["grid", "--v", "2", "--c", "1", "--window", "1", "0", "0"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines[0],
        "gamma,delta,eta,re_sigma,im_sigma,abs_sigma,re_mu_plus,im_mu_plus,re_mu_minus,im_mu_minus"
    );
    assert_eq!(lines.len(), 2);
    let abs: f64 = lines[1].split(',').nth(5).unwrap().parse().unwrap();
    assert_eq!(abs, 1.0);

    let args = [
        "grid", "--v", "2", "--c", "1", "--window", "0.5:2:3", "-1:1:4", "-2:2:5",
    ];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(stdout(&a).lines().count(), 1 + 3 * 4 * 5);
    assert_eq!(a.stdout, b.stdout);
    // row order: gamma outer, eta inner
    let rows: Vec<Vec<f64>> = stdout(&a)
        .lines()
        .skip(1)
        .map(|l| l.split(',').map(|x| x.parse().unwrap()).collect())
        .collect();
    assert_eq!((rows[0][0], rows[0][1], rows[0][2]), (0.5, -1.0, -2.0));
    assert_eq!((rows[1][0], rows[1][1], rows[1][2]), (0.5, -1.0, -1.0));
    assert_eq!(rows[5][1], -1.0 + 2.0 / 3.0);
    assert_eq!(rows[20][0], 1.25);

    assert_eq!(
        run(&["grid", "--v", "2", "--c", "1", "--window", "1:2:0", "0", "0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["grid", "--v", "2", "--c", "1", "--window", "0", "0", "0"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn roots_and_probe() {
    let o = run(&["roots", "--v", "2", "--c", "1", "--eta", "2"]);
    assert!(o.status.success());
    let rows: Vec<Vec<f64>> = stdout(&o)
        .lines()
        .skip(1)
        .map(|l| l.split(',').map(|x| x.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 2);
    assert!((rows[0][1] - 2.0 * 0.9364263849).abs() < 1e-9);
    assert_eq!(
        run(&["roots", "--v", "1.4142135623730951", "--c", "1"])
            .status
            .code(),
        Some(3)
    );

    let o = run(&["probe", "--v", "1", "--c", "1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 4);
    let summary = String::from_utf8_lossy(&o.stderr).into_owned();
    let exponent: f64 = summary.rsplit(' ').next().unwrap().trim().parse().unwrap();
    assert!((exponent + 1.0).abs() < 0.05, "{summary}");
    assert_eq!(
        run(&["probe", "--v", "2", "--c", "1"]).status.code(),
        Some(3)
    );
}

#[test]
fn solve_writes_front_and_norms() {
    let dir = tempfile::tempdir().unwrap();
    let (front, norms) = (dir.path().join("f.csv"), dir.path().join("n.json"));
    let fx = fixture();
    let args = [
        "solve",
        "--v",
        "2",
        "--c",
        "1",
        "--gamma",
        "2",
        "--s",
        "0",
        "--in",
        path_str(&fx),
        "--out",
        path_str(&front),
        "--norms",
        path_str(&norms),
    ];
    let o = run(&args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(String::from_utf8_lossy(&o.stderr).contains("estimate ratio r"));
    let csv = std::fs::read_to_string(&front).unwrap();
    assert!(csv.starts_with("t,x1,f\n"));
    assert_eq!(csv.lines().count(), 1 + 16 * 8);
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&norms).unwrap()).unwrap();
    let n0 = v["0"].as_f64().unwrap();
    let n1 = v["1"].as_f64().unwrap();
    assert!(n0.is_finite() && n1.is_finite() && n1 > n0 && n0 > 0.0);
    // idempotent, byte for byte
    let first = (csv, std::fs::read(&norms).unwrap());
    assert!(run(&args).status.success());
    assert_eq!(first.0, std::fs::read_to_string(&front).unwrap());
    assert_eq!(first.1, std::fs::read(&norms).unwrap());
}

#[test]
fn solve_of_zero_field_is_zero() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("zero.vfgrid");
    let spec = boundary_layer_spec(8, 4, 16).unwrap();
    FieldGrid::zeros(spec).unwrap().write_file(&input).unwrap();
    let o = run(&["solve", "--v", "2", "--c", "1", "--in", path_str(&input)]);
    assert!(o.status.success());
    for line in stdout(&o).lines().skip(1) {
        let f: f64 = line.rsplit(',').next().unwrap().parse().unwrap();
        assert_eq!(f, 0.0);
    }
}

#[test]
fn solve_refusals_and_io_errors() {
    let fx = fixture();
    let o = run(&["solve", "--v", "1", "--c", "1", "--in", path_str(&fx)]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("elliptic_unstable"));
    let o = run(&[
        "solve",
        "--v",
        "2",
        "--c",
        "1",
        "--gamma",
        "0.5",
        "--in",
        path_str(&fx),
    ]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&[
        "solve",
        "--v",
        "2",
        "--c",
        "1",
        "--in",
        "/nonexistent/field.vfgrid",
    ]);
    assert_eq!(o.status.code(), Some(4));
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.vfgrid");
    std::fs::write(&bad, "VFGRID 1 3 4 16 1 1 1\n").unwrap();
    assert_eq!(
        run(&["solve", "--v", "2", "--c", "1", "--in", path_str(&bad)])
            .status
            .code(),
        Some(2)
    );
    let o = run(&[
        "solve",
        "--v",
        "2",
        "--c",
        "1",
        "--in",
        path_str(&fx),
        "--out",
        "/nonexistent/dir/f.csv",
    ]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn verify_and_reconstruct() {
    let fx = fixture();
    let o = run(&[
        "verify",
        "--v",
        "2",
        "--c",
        "1",
        "--in",
        path_str(&fx),
        "--gamma",
        "1,4",
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    let header: Vec<&str> = text.lines().next().unwrap().split(',').collect();
    assert_eq!(header[5], "r");
    assert_eq!(text.lines().count(), 3);
    let violations: Vec<f64> = text
        .lines()
        .skip(1)
        .map(|l| l.rsplit(',').next().unwrap().parse().unwrap())
        .collect();
    assert_eq!(violations, vec![0.0, 0.0]);

    let o = run(&[
        "reconstruct",
        "--v",
        "2",
        "--c",
        "1",
        "--in",
        path_str(&fx),
        "--eta",
        "1.5",
        "--delta",
        "-1.6",
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    assert!(text.starts_with("x2,re_p_plus,im_p_plus,re_p_minus,im_p_minus\n"));
    assert_eq!(text.lines().count(), 1 + 17);
    assert!(String::from_utf8_lossy(&o.stderr).contains("eta 1.57079632679e0"));
}
