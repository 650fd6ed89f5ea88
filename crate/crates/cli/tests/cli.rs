use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use flagsieve::perm::io::{parse_group, write_group};
use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn run<S: AsRef<std::ffi::OsStr>>(args: &[S]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_flagsieve"))
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

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn json(o: &Output) -> Value {
    serde_json::from_str(&stdout(o)).expect("stdout is a JSON report")
}

#[test]
fn params_examples() {
    let o = run(&["params", "15", "7", "3"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("r=7 b=15\n"));

    let o = run(&["params", "55", "7", "1680"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("r=15120 b=118800\n"));

    let o = run(&["params", "25", "7", "1", "--json"]);
    assert_eq!(code(&o), 1);
    let r = json(&o);
    assert_eq!(r["exit_code"], 1);
    assert_eq!(r["payload"]["infeasible"]["ReplicationBelowBlockSize"]["r"], 4);
    assert_eq!(r["verdicts"][0]["pass"], false);
}

#[test]
fn malformed_invocations_exit_2() {
    for args in [
        vec!["params", "x", "7", "1"],
        vec!["params", "7", "7", "1"],
        vec!["params", "15", "7"],
        vec!["params", "15", "7", "3", "--bogus"],
        vec!["params", "15", "7", "3", "--json", "--quiet"],
        vec!["sieve", "hexagonal"],
        vec!["sieve", "product", "--extend", "0"],
        vec!["sieve", "product", "--group", "A23"],
        vec!["sieve", "eliminate-253", "--group", "A22"],
        vec!["sieve", "eliminate-253", "--group", "Z23"],
        vec!["construct", "fano"],
        vec!["subdegrees", "/nonexistent/g.group"],
    ] {
        let o = run(&args);
        assert_eq!(code(&o), 2, "{args:?}: {}", stderr(&o));
        assert!(!stderr(&o).is_empty(), "{args:?}");
    }
}

#[test]
fn error_reports_are_json_too() {
    let o = run(&["sieve", "product", "--extend", "0", "--json"]);
    assert_eq!(code(&o), 2);
    let r = json(&o);
    assert_eq!(r["exit_code"], 2);
    assert!(r["verdicts"][0]["detail"].as_str().unwrap().contains("--extend"));
}

#[test]
fn sieve_examples() {
    let o = run(&["sieve", "eliminate-253", "--group", "A23", "--json"]);
    assert_eq!(code(&o), 0);
    let r = json(&o);
    let report = &r["payload"]["reports"][0];
    assert_eq!(report["eliminated_count"], 51840);
    assert_eq!(report["survivors"].as_array().unwrap().len(), 0);

    let o = run(&["sieve", "eliminate-253", "--group", "S23"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("eliminated: 54720"));

    let o = run(&["sieve", "product", "--json"]);
    assert_eq!(code(&o), 0);
    let survivors: Vec<(String, String)> = json(&o)["payload"]["reports"][0]["survivors"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| {
            let p = &s["params"];
            (p["l"].as_str().unwrap().into(), p["m"].as_str().unwrap().into())
        })
        .collect();
    let expected: Vec<(String, String)> = ["2", "3", "4", "5", "7", "11"].iter().map(|m| ("2".into(), m.to_string())).collect();
    assert_eq!(survivors, expected);

    let o = run(&["sieve", "imprimitive", "--json"]);
    assert_eq!(code(&o), 0);
    let r = json(&o);
    let last = r["payload"]["reports"][0]["survivors"].as_array().unwrap().last().unwrap().clone();
    assert_eq!(last["params"]["s"], "3");
    assert_eq!(last["params"]["t"], "2");
    assert_eq!(last["params"]["v"], "10");
}

#[test]
fn extended_ranges_keep_the_survivors() {
    for name in ["intransitive", "imprimitive", "product", "diagonal"] {
        let base = run(&["sieve", name, "--json"]);
        let wide = run(&["sieve", name, "--extend", "2", "--json"]);
        assert_eq!(code(&base), 0, "{name}");
        assert_eq!(code(&wide), 0, "{name}: {}", stdout(&wide));
        let survivors = |o: &Output| json(o)["payload"]["reports"][0]["survivors"].clone();
        assert_eq!(survivors(&base), survivors(&wide), "{name}");
    }
}

#[test]
fn table_survey_passes() {
    let o = run(&["sieve", "table1"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("survivors: 4"));
}

#[test]
fn construct_then_verify_c55() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&[
        "construct".as_ref(),
        "c55".as_ref(),
        "--out".as_ref(),
        dir.path().as_os_str(),
        "--json".as_ref(),
    ]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let r = json(&o);
    assert_eq!(r["artifacts"].as_array().unwrap().len(), 2);
    assert_eq!(r["payload"]["b"], 118800);
    assert_eq!(r["payload"]["block_stabilizer_order"], "168");

    let design = dir.path().join("c55.design");
    let group = dir.path().join("c55.group");
    let o = run(&[
        "verify".as_ref(),
        design.as_os_str(),
        group.as_os_str(),
        "--json".as_ref(),
    ]);
    assert_eq!(code(&o), 0);
    let r = json(&o);
    assert_eq!(r["payload"]["lambda"], 1680);
    assert_eq!(r["payload"]["flag_transitive"], true);
    assert!(r["verdicts"].as_array().unwrap().iter().all(|v| v["pass"] == true));

    let written = fs::read_to_string(&group).unwrap();
    assert_eq!(written, fs::read_to_string(fixture("a11-on-55.group")).unwrap());
}

#[test]
fn construct_then_verify_pg32_and_mismatches() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["construct".as_ref(), "pg32".as_ref(), "--out".as_ref(), dir.path().as_os_str()]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("2-(15,7,3) with b = 15"));
    let design = dir.path().join("pg32.design");

    let o = run(&["verify".as_ref(), design.as_os_str(), dir.path().join("pg32.group").as_os_str()]);
    assert_eq!(code(&o), 0);

    // Degree 15 design against a degree 55 group.
    let o = run(&["verify".as_ref(), design.as_os_str(), fixture("a11-on-55.group").as_os_str()]);
    assert_eq!(code(&o), 2);

    // A cyclic group of order 15 is not an automorphism group of the planes.
    let cyclic = dir.path().join("c15.group");
    let images: Vec<String> = (1..=15).map(|i| (i % 15).to_string()).collect();
    fs::write(&cyclic, format!("G 15 1\n{}\n", images.join(" "))).unwrap();
    let o = run(&["verify".as_ref(), design.as_os_str(), cyclic.as_os_str(), "--json".as_ref()]);
    assert_eq!(code(&o), 1);
    let r = json(&o);
    assert!(r["verdicts"].as_array().unwrap().iter().any(|v| v["name"] == "automorphisms" && v["pass"] == false));
}

#[test]
fn subdegrees_of_a11_on_pairs() {
    let o = run(&["subdegrees".as_ref(), fixture("a11-on-55.group").as_os_str()]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "1 18 36\n");
    let o = run(&[
        "subdegrees".as_ref(),
        fixture("a11-on-55.group").as_os_str(),
        "--point".as_ref(),
        "54".as_ref(),
    ]);
    assert_eq!(stdout(&o), "1 18 36\n");
}

#[test]
fn primitivity_verdicts() {
    let o = run(&["primitivity".as_ref(), fixture("c4.group").as_os_str()]);
    assert_eq!(code(&o), 1);
    assert_eq!(stdout(&o), "imprimitive: block system {0,2} {1,3}\n");

    let o = run(&["primitivity".as_ref(), fixture("a11-on-55.group").as_os_str()]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "primitive\n");
}

#[test]
fn parse_errors_carry_line_numbers() {
    let o = run(&["primitivity".as_ref(), fixture("short-generator.group").as_os_str()]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("line 2: generator has 3 images, expected 4"), "{}", stderr(&o));
}

#[test]
fn json_reports_round_trip_byte_identical() {
    for args in [
        vec!["params", "55", "7", "1680", "--json"],
        vec!["params", "25", "7", "1", "--json"],
        vec!["sieve", "intransitive", "--json"],
        vec!["sieve", "table1", "--json"],
    ] {
        let o = run(&args);
        let text = stdout(&o);
        let value: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(serde_json::to_string_pretty(&value).unwrap() + "\n", text, "{args:?}");
    }
    let o = run(&["subdegrees".as_ref(), fixture("a11-on-55.group").as_os_str(), "--json".as_ref()]);
    let text = stdout(&o);
    let value: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string_pretty(&value).unwrap() + "\n", text);
}

#[test]
fn reports_are_idempotent_modulo_wall_time() {
    let strip = |o: &Output| {
        let mut v = json(o);
        v.as_object_mut().unwrap().remove("wall_time_us");
        v
    };
    for args in [
        vec!["params", "15", "7", "3", "--json"],
        vec!["sieve", "imprimitive", "--json"],
        vec!["sieve", "diagonal", "--json"],
    ] {
        assert_eq!(strip(&run(&args)), strip(&run(&args)), "{args:?}");
    }
    let c4 = fixture("c4.group");
    let args = ["primitivity".as_ref(), c4.as_os_str(), "--json".as_ref()];
    assert_eq!(strip(&run(&args)), strip(&run(&args)));
}

#[test]
fn out_receives_a_copy_and_quiet_prints_nothing() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = run(&[
        "params".as_ref(),
        "15".as_ref(),
        "7".as_ref(),
        "3".as_ref(),
        "--json".as_ref(),
        "--out".as_ref(),
        path.as_os_str(),
    ]);
    assert_eq!(code(&o), 0);
    assert_eq!(fs::read_to_string(&path).unwrap(), stdout(&o));
    assert_eq!(json(&o)["artifacts"][0], path.display().to_string());

    let o = run(&["params", "25", "7", "1", "--quiet"]);
    assert_eq!(code(&o), 1);
    assert!(o.stdout.is_empty());
}

#[test]
fn fixture_files_round_trip() {
    for name in ["a11-on-55.group", "c4.group"] {
        let text = fs::read_to_string(fixture(name)).unwrap();
        let g = parse_group(&text).unwrap();
        let written = write_group(&g);
        let again = parse_group(&written).unwrap();
        assert_eq!(again.generators(), g.generators(), "{name}");
        assert_eq!(again.known_order(), g.known_order(), "{name}");
        assert_eq!(write_group(&again), written, "{name}");
    }
}
