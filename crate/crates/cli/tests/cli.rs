use std::process::{Command, Output};

use bsol_cli::state::{format_state, parse_state, StateKind};

fn bsol(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bsol"))
        .args(args)
        .env_remove("BSOL_MAX_STATES")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn state_text_round_trips() {
    let cases = [
        ("4,3,2,1", StateKind::Partition),
        ("1,3,2", StateKind::Strict),
        ("1,0,0,2,4", StateKind::Montreal),
        ("0,4,1", StateKind::Circular),
        ("2,1,0@3", StateKind::Pointer),
        ("3,3,1|2", StateKind::Austrian { life: 3 }),
        ("4,1;2,2;", StateKind::Multiplayer),
    ];
    for (text, kind) in cases {
        let state = parse_state(text, kind).unwrap();
        assert_eq!(format_state(&state), text);
        assert_eq!(parse_state(&format_state(&state), kind).unwrap(), state);
    }
}

#[test]
fn orbit_text_and_json() {
    let out = bsol(&["orbit", "--state", "4,3,3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("   9  4,3,2,1"));
    assert!(text.ends_with("tail 9 cycle_length 1\n"));

    let out = bsol(&["orbit", "--state", "4,3,3", "--format", "json"]);
    assert!(out.status.success());
    let lines: Vec<serde_json::Value> = stdout(&out)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 9 + 1 + 1);
    assert_eq!(lines[0]["parts"], serde_json::json!([4, 3, 3]));
    assert_eq!(lines[0]["n"], 10);
}

#[test]
fn orbit_of_every_variant() {
    let cases: [&[&str]; 7] = [
        &["--variant", "dual", "--state", "4,4,3,2,2,1,1"],
        &["--variant", "carolina", "--state", "1,2,3"],
        &["--variant", "montreal", "--state", "3,2,2"],
        &["--variant", "austrian", "--state", "3,2|0", "-L", "3"],
        &["--variant", "multiplayer", "--state", "3;1,1"],
        &["--variant", "servedio-yeh", "--state", "2,1,0"],
        &["--variant", "janetzko", "--state", "2,1,0@1"],
    ];
    for args in cases {
        let mut full = vec!["orbit"];
        full.extend_from_slice(args);
        let out = bsol(&full);
        assert!(
            out.status.success(),
            "{args:?}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
    let out = bsol(&["orbit", "--variant", "montreal", "--state", "3,2,2"]);
    assert!(stdout(&out).ends_with("tail 0 cycle_length 18\n"));
}

#[test]
fn graph_formats() {
    let out = bsol(&["graph", "--n", "5", "--format", "dot"]);
    assert!(out.status.success());
    let dot = stdout(&out);
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches(" -> ").count(), 7);

    let out = bsol(&["graph", "--n", "8", "--format", "json", "--workers", "1"]);
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["component_count"], 2);
    assert_eq!(json["state_count"], 22);
}

#[test]
fn checks_report_success() {
    for args in [
        &["ge", "--n", "10"][..],
        &["necklaces", "--n", "12"],
        &["knuth", "--k", "5"],
        &["toom", "--k", "6"],
    ] {
        let out = bsol(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
    }
    let out = bsol(&["necklaces", "--n", "12"]);
    assert!(stdout(&out).contains("BWBWW"));
}

#[test]
fn simulate_is_seeded() {
    let args = [
        "simulate",
        "--variant",
        "ejs",
        "--n",
        "28",
        "--p",
        "0.5",
        "--seed",
        "5",
        "--format",
        "json",
    ];
    let a = bsol(&args);
    let b = bsol(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let csv = bsol(&[
        "simulate",
        "--variant",
        "popov",
        "--n",
        "28",
        "--p",
        "0.9",
        "--format",
        "csv",
    ]);
    assert!(stdout(&csv).starts_with("index,mean"));
}

#[test]
fn render_cradle() {
    let out = bsol(&["render", "--state", "3,2,1", "--style", "cradle"]);
    assert_eq!(stdout(&out), "# # #\n # #\n  #\n");
}

#[test]
fn exit_codes() {
    assert_eq!(bsol(&["orbit", "--state", "4,x"]).status.code(), Some(2));
    assert_eq!(bsol(&["orbit", "--state", "-1,2"]).status.code(), Some(2));
    assert_eq!(bsol(&["nonsense"]).status.code(), Some(2));
    assert_eq!(
        bsol(&["graph", "--n", "30", "--limit", "100"])
            .status
            .code(),
        Some(3)
    );
    let out = Command::new(env!("CARGO_BIN_EXE_bsol"))
        .args(["graph", "--n", "20"])
        .env("BSOL_MAX_STATES", "50")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(
        bsol(&["orbit", "--state", "4,3,3", "--step-bound", "3"])
            .status
            .code(),
        Some(4)
    );
}
