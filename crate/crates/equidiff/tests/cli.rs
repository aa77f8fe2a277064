//! End-to-end tests of the compiled `equidiff` binary: real process, real
//! argv, real exit codes.

use std::process::{Command, Output};

fn equidiff(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_equidiff"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_str(stdout(o).trim()).unwrap()
}

#[test]
fn verify_exit_codes() {
    let ok = equidiff(&[
        "verify",
        "--a",
        "26793/34540",
        "--b",
        "15799/34540",
        "--k",
        "4",
    ]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).contains("nontrivial"));

    let bad = equidiff(&["verify", "--a", "1/2", "--b", "1/3", "--k", "3"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("-17/216"));

    let negative = equidiff(&["verify", "--a", "-1", "--b", "1", "--k", "3"]);
    assert_eq!(negative.status.code(), Some(0));
    assert!(stdout(&negative).contains("nontrivial"));

    let malformed = equidiff(&["verify", "--a", "1/x", "--b", "1", "--k", "3"]);
    assert_eq!(malformed.status.code(), Some(2));
    assert!(stderr(&malformed).contains("1/x"));
}

#[test]
fn usage_errors_and_help() {
    let none = equidiff(&[]);
    assert_eq!(none.status.code(), Some(2));
    assert!(stderr(&none).contains("Usage"));

    let unknown = equidiff(&["verify", "--frobnicate", "1"]);
    assert_eq!(unknown.status.code(), Some(2));

    let help = equidiff(&["--help"]);
    assert_eq!(help.status.code(), Some(0));
    assert!(stdout(&help).contains("a^k - b^k = a - b"));

    let version = equidiff(&["--version"]);
    assert_eq!(version.status.code(), Some(0));
    assert!(stdout(&version).starts_with("equidiff"));
}

#[test]
fn solve_subcommand() {
    let k3 = equidiff(&["solve", "--k", "3", "--m", "3", "--n", "1"]);
    assert_eq!(k3.status.code(), Some(0));
    assert_eq!(stdout(&k3), "a = 8/13, b = 7/13, k = 3, nontrivial\n");

    let k2 = equidiff(&["solve", "--k", "2", "--m", "2/3"]);
    assert_eq!(stdout(&k2), "a = 2/3, b = 1/3, k = 2, nontrivial\n");

    let k5 = equidiff(&["solve", "--k", "5", "--m", "1"]);
    assert_eq!(k5.status.code(), Some(2));
    assert!(stderr(&k5).contains("no closed-form solver"));
}

#[test]
fn generate_subcommand() {
    let out = equidiff(&["generate", "--k", "4", "--count", "2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v[0]["a"], "26793/34540");
    assert_eq!(
        v[1]["a"],
        "234192173776567982667691/286639743984973696444599"
    );
    assert_eq!(
        v[1]["b"],
        "113516496202066695693956/286639743984973696444599"
    );
    assert_eq!(v[1]["kind"], "nontrivial");

    let custom = equidiff(&[
        "generate",
        "--k",
        "4",
        "--count",
        "1",
        "--start",
        "(785/484, 5497/10648)",
    ]);
    assert_eq!(custom.status.code(), Some(0));
    assert!(stdout(&custom).contains("26793/34540"));

    let off = equidiff(&["generate", "--k", "4", "--count", "1", "--start", "(1, 1)"]);
    assert_eq!(off.status.code(), Some(2));
    assert!(stderr(&off).contains("off curve"));
}

#[test]
fn curio_golden_line() {
    let out = equidiff(&[
        "curio",
        "--a",
        "26793/34540",
        "--b",
        "15799/34540",
        "--k",
        "4",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out).lines().next().unwrap(),
        "root4(62304353849776801/1423276677734560000) + 5497/17270 = \
         root4(62304353849776801/1423276677734560000 + 5497/17270)"
    );
}

#[test]
fn series_sums() {
    let diophantus = equidiff(&[
        "series", "--a", "8/13", "--b", "7/13", "--k", "3", "--format", "json",
    ]);
    assert_eq!(json(&diophantus)["sum"], "13");

    let fermat = equidiff(&[
        "series",
        "--a",
        "26793/34540",
        "--b",
        "15799/34540",
        "--k",
        "4",
        "--format",
        "json",
    ]);
    let v = json(&fermat);
    assert_eq!(v["sum"], "17270/5497");
    assert_eq!(v["first_term"], "34540/26793");
    assert_eq!(v["ratio"], "15799/26793");
}

#[test]
fn search_subcommand() {
    let quintic = equidiff(&["search", "--k", "5", "--max-den", "60", "--format", "json"]);
    assert_eq!(quintic.status.code(), Some(0));
    let v = json(&quintic);
    assert_eq!(v["pairs_examined"], "35990");
    assert_eq!(v["solutions"].as_array().unwrap().len(), 0);

    // parallel run carries identical content
    let parallel = equidiff(&[
        "search",
        "--k",
        "5",
        "--max-den",
        "60",
        "--jobs",
        "2",
        "--format",
        "json",
    ]);
    let w = json(&parallel);
    assert_eq!(v["pairs_examined"], w["pairs_examined"]);
    assert_eq!(v["solutions"], w["solutions"]);

    let expectant = equidiff(&["search", "--k", "4", "--max-den", "50", "--expect-found"]);
    assert_eq!(expectant.status.code(), Some(1));
    assert!(stdout(&expectant).contains("no nontrivial solutions"));
}

#[test]
fn point_subcommand() {
    let a = equidiff(&["point", "--op", "mul", "--p", "(2, 2)", "--n", "-4"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), "(785/484, 5497/10648)\n");

    let inf = equidiff(&["point", "--op", "add", "--p", "(2, 2)", "--q", "(2, -2)"]);
    assert_eq!(stdout(&inf), "inf\n");

    // textual forms round-trip through the binary
    let twice = equidiff(&[
        "point",
        "--op",
        "mul",
        "--p",
        "(785/484, 5497/10648)",
        "--n",
        "1",
    ]);
    assert_eq!(stdout(&twice), "(785/484, 5497/10648)\n");
}
