use std::process::{Command, Output};

use k3auto::verifier::{Report, Status};

fn k3auto(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_k3auto")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn eig_prints_lefschetz_numbers() {
    let o = k3auto(&["eig", "--list", "1:1,2:1,50:1", "--k", "25"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("[1:1, 2:21]"), "{s}");
    assert!(s.contains("trace     -20"));
    assert!(s.contains("euler     -18"));
    assert!(stdout(&k3auto(&["eig", "--list", "1:2,50:1", "--k", "5"])).contains("euler     9"));
    assert!(stdout(&k3auto(&["eig", "--list", "1:22", "--k", "7"])).contains("euler     24"));
}

#[test]
fn malformed_input_exits_2() {
    for args in [
        vec!["eig", "--list", "1:1,2:1"],
        vec!["eig", "--list", "1:1,3"],
        vec!["verify", "--p", "4"],
        vec!["verify", "--checks", "lemma50,nope"],
        vec!["verify", "--p", "5", "--checks", "lemma50"],
        vec!["fixed", "--p", "101", "--k", "51"],
        vec!["fixed", "--p", "101", "--k", "1", "--max-q", "50"],
    ] {
        let o = k3auto(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
    let o = k3auto(&["verify", "--p", "4"]);
    assert!(String::from_utf8(o.stderr).unwrap().contains("not prime"));
}

#[test]
fn verify_lemma50_passes() {
    let o = k3auto(&["verify", "--p", "101", "--checks", "lemma50"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("lemma50.fix.g1"));
}

#[test]
fn degeneration_at_5_is_the_expected_finding() {
    let o = k3auto(&["verify", "--p", "5", "--checks", "degeneration"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("(1, 4, 0)"));
}

#[test]
fn fixed_point_listing() {
    let s = stdout(&k3auto(&["fixed", "--p", "101", "--k", "1"]));
    assert!(s.starts_with("Fix(g^1) on X_50 over F_101: 2 points"), "{s}");
    assert!(s.contains("(0, 1, 0, 0)") && s.contains("(0, 0, 1, 0)"));
    assert!(stdout(&k3auto(&["fixed", "--k", "5"])).contains(": 7 points"));
    let all = stdout(&k3auto(&["fixed", "--k", "50"]));
    assert!(all.contains(": 10349 points"));
    assert!(all.contains("orbits under g:"));
}

#[test]
fn report_json_round_trips_byte_for_byte() {
    let o = k3auto(&["report", "--checks", "no1,normalization,char2,degeneration"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let json = text.trim_end();
    let report = Report::from_json(json).unwrap();
    assert_eq!(report.to_json(), json);
    assert_eq!(report.config.p, 101);
    let hurwitz = report.checks.iter().find(|c| c.id == "no1.hurwitz").unwrap();
    assert_eq!(hurwitz.status, Status::ContradictionConfirmed);
    // deterministic across runs
    assert_eq!(stdout(&k3auto(&["report", "--checks", "no1,normalization,char2,degeneration"])), text);
}

#[test]
fn out_file_matches_report() {
    let dir = std::env::temp_dir().join(format!("k3auto-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let o = k3auto(&["verify", "--checks", "no1", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let written = std::fs::read_to_string(&path).unwrap();
    let printed = stdout(&k3auto(&["report", "--checks", "no1"]));
    assert_eq!(written, printed);
    std::fs::remove_dir_all(&dir).unwrap();
}
