use std::path::PathBuf;
use std::process::{Command, Output};

fn lgf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lgf"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = lgf(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("lgf-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

/// Column `col` of the CSV row whose first column is `row`.
fn csv_cell(text: &str, row: &str, col: usize) -> String {
    text.lines()
        .map(|l| l.split(',').collect::<Vec<_>>())
        .find(|cells| cells[0] == row)
        .unwrap_or_else(|| panic!("no row {row}"))[col]
        .to_string()
}

#[test]
fn walk_examples() {
    assert_eq!(
        stdout(&["walks", "--lattice", "fcc", "--n", "10"]).lines().last(),
        Some("423550512")
    );
    assert_eq!(stdout(&["walks", "--lattice", "chain", "--n", "0"]), "1\n");
    let out = stdout(&["walks", "--lattice", "bcc", "--displacement", "1,1,1", "--n", "1"]);
    assert_eq!(out.lines().last(), Some("1"));
    let out = stdout(&["walks", "--lattice", "square", "--displacement", "-1,0", "--n", "3"]);
    assert_eq!(out, "0\n1\n0\n9\n");
}

#[test]
fn moment_examples() {
    let tri = stdout(&["moments", "--lattice", "triangular", "--n", "9"]);
    assert!(tri.starts_with("n,scaled,g\n"));
    assert_eq!(csv_cell(&tri, "9", 1), "-245760");
    let chain = stdout(&["moments", "--lattice", "chain", "--n", "5"]);
    for n in 1..=5 {
        assert_eq!(csv_cell(&chain, &n.to_string(), 1), "0");
    }
    let sq = stdout(&["moments", "--lattice", "square", "--n", "10"]);
    assert_eq!(csv_cell(&sq, "10", 1), "-73728");
}

#[test]
fn verification_passes() {
    for sub in ["walks", "moments"] {
        let out = lgf(&[sub, "--lattice", "diamond", "--n", "12", "--verify"]);
        assert!(out.status.success(), "{sub}");
        assert!(String::from_utf8_lossy(&out.stderr).contains("ok"));
    }
    assert!(lgf(&["verify", "--oracle-n", "6"]).status.success());
}

#[test]
fn eval_chain_outside_band() {
    let out = stdout(&["eval", "--lattice", "chain", "--omega", "2.0"]);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("omega,re_g,im_g,spectral"));
    let re: f64 = lines.next().unwrap().split(',').nth(1).unwrap().parse().unwrap();
    assert!((re - 0.5773502692).abs() < 1e-10, "{re}");
}

#[test]
fn eval_output_is_deterministic_with_sidecar() {
    let path = scratch("square.csv");
    let p = path.to_str().unwrap();
    let args = [
        "eval",
        "--lattice",
        "square",
        "--subtract",
        "--terms",
        "400",
        "--omega",
        "-0.9:0.9:0.1",
        "-o",
        p,
    ];
    assert!(lgf(&args).status.success());
    let first = std::fs::read(&path).unwrap();
    assert!(lgf(&args).status.success());
    assert_eq!(first, std::fs::read(&path).unwrap());

    let text = String::from_utf8(first).unwrap();
    let row = text.lines().nth(1).unwrap();
    let mantissa = row.split(',').nth(1).unwrap().split('e').next().unwrap();
    assert_eq!(mantissa.trim_start_matches('-').replace('.', "").len(), 17);

    let meta: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(format!("{p}.meta.json")).unwrap()).unwrap();
    assert!(meta["residual_tail_estimate"].as_f64().unwrap() < 1e-8);
    assert_eq!(meta["terms_used"], 400);
}

#[test]
fn band_edge_points_are_clamped() {
    let out = lgf(&["eval", "--lattice", "square", "--terms", "100", "--omega", "-1:1:0.5"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
    let text = String::from_utf8(out.stdout).unwrap();
    let first: f64 = text.lines().nth(1).unwrap().split(',').next().unwrap().parse().unwrap();
    assert_eq!(first, -0.5);
}

#[test]
fn fit_on_square_origin() {
    let out = stdout(&["fit", "--lattice", "square", "--format", "json"]);
    let report: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(report["coefficient"].as_f64().unwrap().abs() < 1e-5);
    let g_a = report["tails"]["g_A"]["exponent"].as_f64().unwrap();
    assert!((g_a + 3.0).abs() < 0.3, "{g_a}");
}

#[test]
fn exit_codes() {
    assert_eq!(
        lgf(&["walks", "--lattice", "kagome", "--n", "3"]).status.code(),
        Some(1)
    );
    assert_eq!(
        lgf(&["walks", "--lattice", "honeycomb", "--displacement", "1,1,0", "--n", "3"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(lgf(&["walks", "--lattice", "chain"]).status.code(), Some(1));
    assert_eq!(
        lgf(&["eval", "--lattice", "chain", "--omega", "1:0:0.1"]).status.code(),
        Some(1)
    );
    // only odd n in range: nothing to fit
    let fit = lgf(&["fit", "--lattice", "square", "--terms", "300", "--fit-range", "201,201"]);
    assert_eq!(fit.status.code(), Some(3));
    assert_eq!(
        lgf(&["fit", "--lattice", "square", "--fit-range", "10,2000"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(lgf(&["--help"]).status.code(), Some(0));
}

#[test]
fn config_file_with_flag_override() {
    let path = scratch("walks.conf");
    std::fs::write(&path, "# walk table\nlattice = square\nn = 4\nverify = true\n").unwrap();
    let cfg = path.to_str().unwrap();
    let out = lgf(&["--config", cfg, "walks"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "1\n0\n4\n0\n36\n");
    assert!(String::from_utf8_lossy(&out.stderr).contains("verify"));
    assert_eq!(stdout(&["walks", "--config", cfg, "--n", "2"]), "1\n0\n4\n");

    std::fs::write(&path, "colour = blue\n").unwrap();
    assert_eq!(
        lgf(&["--config", cfg, "walks", "--lattice", "chain", "--n", "1"])
            .status
            .code(),
        Some(1)
    );
}
