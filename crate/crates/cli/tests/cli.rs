use std::path::PathBuf;

use assert_cmd::Command;
use serde_json::Value;

fn khash() -> Command {
    let mut c = Command::cargo_bin("khash").unwrap();
    c.env_remove("KHASH_CAP");
    c
}

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn stdout_of(cmd: &mut Command) -> String {
    let out = cmd.output().unwrap();
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json_of(cmd: &mut Command) -> Value {
    serde_json::from_str(&stdout_of(cmd)).unwrap()
}

#[test]
fn table1_default_rows() {
    let out = stdout_of(khash().arg("table1"));
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("q,cor3_plotkin,cor3_plotkin_exact,cor4_aaltonen,korner_marton"));
    assert_eq!(lines.next(), Some("3,0.25,1/4,0.219703,0.36907"));
    assert_eq!(out.lines().count(), 1 + 26);
    assert!(out.lines().last().unwrap().starts_with("64,"));
}

#[test]
fn table1_q_list_and_precision() {
    let out = stdout_of(khash().args(["table1", "--q", "9,32", "--precision", "4"]));
    assert!(out.contains("\n9,0.4375,7/16,0.4198,0.6845\n"), "{out}");
    assert!(out.contains("\n32,0.4839,15/31,0.4937,0.8\n"), "{out}");
}

#[test]
fn table1_rejects_composite_q() {
    khash().args(["table1", "--q", "6"]).assert().code(2);
    khash().args(["table1", "--q", "x"]).assert().code(2);
}

#[test]
fn figure_series() {
    let fig1 = stdout_of(khash().args(["figure", "--id", "fig1"]));
    let mut lines = fig1.lines();
    assert_eq!(lines.next(), Some("delta3,theorem1,bassalygo_direct"));
    assert_eq!(lines.next(), Some("0,0.133757,0.114378"));
    assert_eq!(fig1.lines().last(), Some("0.222222,0,0"));

    let fig2 = stdout_of(khash().args(["figure", "--id", "fig2", "--step", "0.05"]));
    assert!(fig2.starts_with("delta4,cor1_lp_combined,bass_lp_combined\n"));
    let first: Vec<f64> = fig2.lines().nth(1).unwrap().split(',').map(|x| x.parse().unwrap()).collect();
    let cor4 = khash_core::bounds::rate_cor4_lp(7, 4).unwrap().rate;
    assert!((first[1] - cor4).abs() < 1e-5);

    let fig4 = stdout_of(khash().args(["figure", "--id", "fig4"]));
    assert!(fig4.starts_with("q,cor3_plotkin,cor4_aaltonen,korner_marton,fk_lower\n5,"));

    khash().args(["figure", "--id", "fig3"]).assert().code(2);
    khash().args(["figure", "--id", "fig1", "--step", "0"]).assert().code(2);
}

#[test]
fn verify_tetracode() {
    let v = json_of(khash().args(["verify-code"]).arg(data("tetracode.gen")).args(["--k", "3"]));
    assert_eq!(v["d2"], 3);
    assert_eq!(v["distances"][1]["d"], 1);
    assert_eq!(v["trifferent"], true);
    assert_eq!(v["size"], 9);
    assert_eq!(v["distances"][1]["covering"]["report"]["bruen_ok"], true);
}

#[test]
fn verify_expectation_sets_exit_code() {
    let path = data("tetracode.gen");
    khash().arg("verify-code").arg(&path).args(["--k", "3", "--expect-dk", "1"]).assert().code(0);
    khash().arg("verify-code").arg(&path).args(["--k", "3", "--expect-dk", "2"]).assert().code(1);
}

#[test]
fn verify_explicit_repetition() {
    let v = json_of(khash().arg("verify-code").arg(data("repetition3.code")).args(["--k", "3", "--explicit"]));
    assert_eq!(v["kind"], "explicit");
    assert_eq!(v["distances"][1]["d"], 5);
    let v = json_of(khash().arg("verify-code").arg(data("repetition3.code")).args(["--k", "4", "--explicit"]));
    assert_eq!(v["distances"][2]["d"], "infinite");
}

#[test]
fn verify_parse_errors_and_cap() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.gen");
    std::fs::write(&bad, "3 2\n1 0 2 2\n").unwrap();
    khash().arg("verify-code").arg(&bad).args(["--k", "3"]).assert().code(2);
    std::fs::write(&bad, "6 1 2\n1 1\n").unwrap();
    khash().arg("verify-code").arg(&bad).args(["--k", "3"]).assert().code(2);
    khash().arg("verify-code").arg(dir.path().join("missing")).args(["--k", "3"]).assert().code(2);
    khash().env("KHASH_CAP", "4").arg("verify-code").arg(data("tetracode.gen")).args(["--k", "3"]).assert().code(2);
    khash().env("KHASH_CAP", "zero").arg("typewriter").assert().code(2);
}

#[test]
fn scan_reports_rows() {
    let out = stdout_of(khash().args(["scan", "--k-lo", "4", "--k-hi", "4", "--q-cap", "16"]));
    assert!(out.starts_with("q,k,plotkin_bound,km_bound,margin,holds\n"));
    let row16 = out.lines().find(|l| l.starts_with("16,4,")).unwrap();
    let cols: Vec<&str> = row16.split(',').collect();
    assert!(cols[2].parse::<f64>().unwrap() < cols[3].parse::<f64>().unwrap());
    assert_eq!(cols[5], "true");
    khash().args(["scan", "--k-lo", "2", "--k-hi", "4", "--q-cap", "16"]).assert().code(2);
}

#[test]
fn typewriter_report() {
    let v = json_of(khash().arg("typewriter"));
    assert_eq!(v["trivial"], 0.569323);
    assert!((v["jamison_lp"].as_f64().unwrap() - 0.593).abs() < 1e-3);
    assert_eq!(v["pentagon_n2_checks"][0]["independent"], true);
    assert_eq!(v["pentagon_n2_checks"][1]["independent"], false);
    assert_eq!(v["pentagon_n2_checks"][1]["list"]["valid"], true);
}

#[test]
fn montecarlo_reproducible() {
    let args = ["montecarlo", "--n-quarter", "2", "--m", "1", "--trials", "20000", "--seed", "7"];
    let a = stdout_of(khash().args(args));
    let b = stdout_of(khash().args(args));
    assert_eq!(a, b);
    let v: Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["empirical_ok"], true);
    khash().args(["montecarlo", "--n-quarter", "2", "--m", "1", "--trials", "0", "--seed", "7"]).assert().code(2);
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.csv");
    let out = stdout_of(khash().args(["table1", "--q", "3", "--out"]).arg(&path));
    assert!(out.is_empty());
    assert!(std::fs::read_to_string(&path).unwrap().starts_with("q,"));
}

#[test]
fn usage_errors_exit_two() {
    khash().assert().code(2);
    khash().arg("frobnicate").assert().code(2);
    khash().arg("--help").assert().code(0);
}
