use std::process::Command;

use hklat::json::parse_lattice;

fn hklat(args: &[&str], seed: Option<&str>) -> (i32, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_hklat"));
    cmd.args(args).env_remove("HKLAT_SEED");
    if let Some(s) = seed {
        cmd.env("HKLAT_SEED", s);
    }
    let out = cmd.output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

#[test]
fn check_emits_one_json_line_and_exits_zero() {
    let (code, out, _) = hklat(&["check", "remark-8.5"], None);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["check_id"], "remark-8.5");
    assert_eq!(v["pass"], true);
    assert_eq!(v["trials"], 1);
    assert_eq!(v["params"]["n"], 900);
}

#[test]
fn human_table() {
    let (code, out, _) = hklat(&["check", "disc-group", "--n", "5", "--human"], None);
    assert_eq!(code, 0);
    assert!(out.contains("disc-group") && out.contains("PASS"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(hklat(&["check", "unknown"], None).0, 2);
    assert_eq!(hklat(&["check", "prop-7.1", "--n", "2"], None).0, 2);
    assert_eq!(hklat(&["frobnicate"], None).0, 2);
    assert_eq!(hklat(&["check", "prop-7.1"], Some("not-a-number")).0, 2);
    assert_eq!(hklat(&["lattice", "nope", "--n", "3", "--print"], None).0, 2);
}

#[test]
fn env_seed_overrides_flag() {
    let (_, a, _) = hklat(&["check", "mukai-pairings", "--samples", "3", "--seed", "5"], Some("9"));
    let v: serde_json::Value = serde_json::from_str(a.trim()).unwrap();
    assert_eq!(v["params"]["seed"], 9);
}

#[test]
fn lattice_dump_round_trips() {
    let (code, out, _) = hklat(&["lattice", "kum-lattice", "--n", "4", "--print"], None);
    assert_eq!(code, 0);
    let l = parse_lattice(out.trim()).unwrap();
    assert_eq!(l.rank(), 9);
    assert!(l.is_even());
    let (code, out, _) = hklat(&["lattice", "sign-equivalence", "--n", "3", "--print"], None);
    assert_eq!(code, 0);
    assert!(hklat::json::parse_isometry(out.trim()).is_ok());
}

#[test]
fn run_all_small_list() {
    let (code, out, _) = hklat(&["run-all", "--n-list", "3", "--seed", "2"], None);
    assert_eq!(code, 0);
    // 12 n-dependent checks plus remark-8.5.
    assert_eq!(out.lines().count(), 13);
}
