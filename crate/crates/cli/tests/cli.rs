use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn lchaos(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lchaos"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn csv_rows(text: &str) -> Vec<Vec<String>> {
    text.lines()
        .skip(1)
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect()
}

#[test]
fn lfunction_prints_closed_form() {
    let out = lchaos(&[
        "lfunction",
        "--parity",
        "-1",
        "--h",
        "1",
        "--w",
        "4",
        "--m",
        "4",
    ]);
    assert!(out.status.success());
    let rows = csv_rows(&stdout(&out));
    assert_eq!(rows[0][0], "l_at_1");
    let v: f64 = rows[0][1].parse().unwrap();
    assert!((v - std::f64::consts::FRAC_PI_4).abs() < 1e-15);
}

#[test]
fn lfunction_bounds_and_errors() {
    let ee = std::f64::consts::E.powf(std::f64::consts::E).to_string();
    let out = lchaos(&[
        "lfunction",
        "--parity",
        "-1",
        "--h",
        "1",
        "--w",
        "6",
        "--m",
        "3",
        "--bound-modulus",
        &ee,
        "--bound-exponent",
        "1",
    ]);
    let rows = csv_rows(&stdout(&out));
    assert_eq!(rows[1][0], "log_lower_bound");
    assert!((rows[1][1].parse::<f64>().unwrap() + 1.0).abs() < 1e-12);
    assert!((rows[2][1].parse::<f64>().unwrap() + 3.0).abs() < 1e-12);

    let out = lchaos(&[
        "lfunction",
        "--parity",
        "1",
        "--h",
        "1",
        "--w",
        "2",
        "--m",
        "5",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let out = lchaos(&[
        "lfunction",
        "--parity",
        "-1",
        "--h",
        "1",
        "--w",
        "4",
        "--m",
        "4",
        "--bound-modulus",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn orbit_ends_on_two_cycle() {
    let out = lchaos(&[
        "orbit",
        "--family",
        "logistic",
        "--r",
        "3.2",
        "--x0",
        "0.3",
        "--n",
        "500",
        "--transient",
        "400",
    ]);
    assert!(out.status.success());
    let rows = csv_rows(&stdout(&out));
    assert_eq!(rows.len(), 100);
    assert_eq!(rows[0][0], "401");
    let tail: Vec<f64> = rows[98..].iter().map(|r| r[1].parse().unwrap()).collect();
    assert!((tail[0] - 0.513044).abs() < 1e-6, "{tail:?}");
    assert!((tail[1] - 0.799455).abs() < 1e-6, "{tail:?}");
}

#[test]
fn orbit_reports_cycle_and_escape() {
    let out = lchaos(&[
        "orbit",
        "--family",
        "logistic",
        "--r",
        "3.5",
        "--x0",
        "0.3",
        "--n",
        "2000",
        "--transient",
        "1000",
        "--detect-cycle",
        "8",
    ]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("period 4"));
    let out = lchaos(&[
        "orbit",
        "--c",
        "1",
        "--alpha",
        "2",
        "--x0",
        "1",
        "--n",
        "10",
        "--transient",
        "0",
    ]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("escaped at step 0 (log_pole)"));
    assert_eq!(csv_rows(&stdout(&out)).len(), 0);
}

#[test]
fn sweep_row_count_and_columns() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("grid.csv");
    let svg = dir.path().join("grid.svg");
    let out = lchaos(&[
        "sweep",
        "--family",
        "odd",
        "--c",
        "0.0005:0.007:20",
        "--alpha",
        "0:10:20",
        "--n",
        "2000",
        "--transient",
        "200",
        "--out",
        csv.to_str().unwrap(),
        "--plot",
        svg.to_str().unwrap(),
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = fs::read_to_string(&csv).unwrap();
    assert!(text.starts_with("c,alpha,lambda,status\n"));
    assert_eq!(csv_rows(&text).len(), 400);
    assert!(fs::read_to_string(&svg).unwrap().starts_with("<svg"));
    assert!(String::from_utf8_lossy(&out.stderr).contains("escaped_fraction="));
}

#[test]
fn json_mirrors_csv() {
    let args = [
        "lyapunov",
        "--family",
        "logistic",
        "--r",
        "2.5",
        "--x0",
        "0.3",
        "--n",
        "10000",
        "--transient",
        "1000",
    ];
    let csv = stdout(&lchaos(&args));
    let mut json_args = args.to_vec();
    json_args.extend(["--format", "json"]);
    let json: serde_json::Value = serde_json::from_str(&stdout(&lchaos(&json_args))).unwrap();
    let row = &csv_rows(&csv)[0];
    assert_eq!(
        json[0]["lambda"].as_f64().unwrap(),
        row[0].parse::<f64>().unwrap()
    );
    assert_eq!(json[0]["n_used"], 9000);
    assert_eq!(json[0]["status"], "converged");
}

#[test]
fn roots_table() {
    let out = lchaos(&[
        "roots",
        "--family",
        "logistic",
        "--r",
        "3.2",
        "--guesses",
        "0.65:0.75:3",
    ]);
    let rows = csv_rows(&stdout(&out));
    assert_eq!(rows.len(), 3);
    for row in &rows {
        assert!((row[1].parse::<f64>().unwrap() - 0.6875).abs() < 1e-10);
        assert_eq!(row[3], "unstable");
        assert_eq!(row[4], "converged");
    }
    // a band wide enough to swallow |f'| = 1.2
    let out = lchaos(&[
        "roots",
        "--family",
        "logistic",
        "--r",
        "3.2",
        "--guesses",
        "0.7:0.7:1",
        "--band",
        "0.5",
    ]);
    assert_eq!(csv_rows(&stdout(&out))[0][3], "marginal");
}

#[test]
fn bifurcate_scatter_and_branches() {
    let dir = tempfile::tempdir().unwrap();
    let branches = dir.path().join("b.csv");
    let out = lchaos(&[
        "bifurcate",
        "--family",
        "logistic",
        "--param",
        "r",
        "--range",
        "2.9:3.5:7",
        "--x0",
        "0.3",
        "--n",
        "20000",
        "--transient",
        "5000",
        "--samples",
        "64",
        "--branches",
        branches.to_str().unwrap(),
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert_eq!(csv_rows(&stdout(&out)).len(), 7 * 64);
    let counts: Vec<String> = csv_rows(&fs::read_to_string(&branches).unwrap())
        .into_iter()
        .map(|r| r[1].clone())
        .collect();
    // at r = 3 the approach to the fixed point is algebraic, so 15000 steps
    // still leave two separated branches
    assert_eq!(counts, ["1", "2", "2", "2", "2", "2", "4"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("first doubling at r="));
}

fn write(path: &Path, text: &str) {
    fs::write(path, text).unwrap();
}

#[test]
fn entropy_from_lyapunov_list() {
    let dir = tempfile::tempdir().unwrap();
    let list = dir.path().join("lyap.txt");
    write(&list, "# exponents\n0.21\n-0.348\n\n0.1\n");
    let out = lchaos(&["entropy", "--lyapunov", list.to_str().unwrap()]);
    assert!(out.status.success());
    let rows = csv_rows(&stdout(&out));
    assert_eq!(rows[0], ["count", "3"]);
    assert_eq!(rows[1][0], "pesin");
    assert!((rows[1][1].parse::<f64>().unwrap() - 0.31).abs() < 1e-12);

    write(&list, "0.1\nabc\n");
    let out = lchaos(&["entropy", "--lyapunov", list.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains(":2: not a number"));
}

#[test]
fn histogram_of_roots_column() {
    let dir = tempfile::tempdir().unwrap();
    let roots = dir.path().join("roots.csv");
    let out = lchaos(&[
        "roots",
        "--family",
        "logistic",
        "--r",
        "2.5",
        "--guesses",
        "0.4:0.9:6",
        "--out",
        roots.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let out = lchaos(&[
        "histogram",
        "--input",
        roots.to_str().unwrap(),
        "--column",
        "root",
        "--bins",
        "10",
        "--range",
        "0.05:1.05",
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let rows = csv_rows(&stdout(&out));
    assert_eq!(rows.len(), 10);
    let occupied: Vec<&Vec<String>> = rows.iter().filter(|r| r[2] != "0").collect();
    assert_eq!(occupied.len(), 1);
    assert_eq!(occupied[0][2], "6");
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("unimodal=true"), "{err}");
    assert!(err.contains("shannon_raw=0 "), "{err}");
}

#[test]
fn config_file_and_flag_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.cfg");
    write(
        &cfg,
        "# logistic run\nfamily = logistic\nr = 3.2\nx0 = 0.3\nn = 500\ntransient = 400\n",
    );
    let out = lchaos(&["orbit", "--config", cfg.to_str().unwrap()]);
    let rows = csv_rows(&stdout(&out));
    assert!((rows[99][1].parse::<f64>().unwrap() - 0.799455).abs() < 1e-6);
    let out = lchaos(&["orbit", "--config", cfg.to_str().unwrap(), "--r", "2.5"]);
    let rows = csv_rows(&stdout(&out));
    assert!((rows[99][1].parse::<f64>().unwrap() - 0.6).abs() < 1e-9);

    write(&cfg, "colour = blue\n");
    assert_eq!(
        lchaos(&["orbit", "--config", cfg.to_str().unwrap()])
            .status
            .code(),
        Some(1)
    );
    write(&cfg, "just text\n");
    assert_eq!(
        lchaos(&["orbit", "--config", cfg.to_str().unwrap()])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn exit_codes() {
    assert_eq!(lchaos(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(lchaos(&["sweep", "--no-such-flag"]).status.code(), Some(2));
    assert_eq!(lchaos(&["sweep", "--c", "1:0:3"]).status.code(), Some(1));
    assert_eq!(
        lchaos(&["orbit", "--family", "logistic", "--r", "5"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        lchaos(&["orbit", "--n", "10", "--transient", "10"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(lchaos(&["sweep", "--workers", "0"]).status.code(), Some(1));
    assert_eq!(lchaos(&["--help"]).status.code(), Some(0));
}

#[test]
fn help_documents_columns() {
    let out = lchaos(&["sweep", "--help"]);
    assert!(stdout(&out).contains("c, alpha, lambda, status"));
    let out = lchaos(&["roots", "--help"]);
    assert!(stdout(&out).contains("guess, root, derivative, stability, status"));
}
