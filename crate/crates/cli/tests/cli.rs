//! End-to-end checks of the binary: exit codes, script evaluation, JSON and
//! SVG output, and literal round-trips.

use std::io::Write;
use std::process::{Command, Stdio};

use braidthom::parser::parse_element;
use braidthom_core::{Element, NamedElement};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_braidthom"))
}

fn tmp(name: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join("braidthom-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn literals_round_trip_through_display() {
    for tag in NamedElement::ALL {
        let g = Element::named(tag);
        let reparsed = parse_element(&g.to_string()).unwrap();
        assert!(reparsed.equals(&g).unwrap(), "round trip for {tag}");
    }
}

#[test]
fn json_subcommand_and_exit_codes() {
    let out = bin()
        .args(["json", "[10100 | s1 | 10100]"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(value["left"], "10100");
    assert_eq!(value["word"][0][0], 1);
    assert_eq!(value["twists"].as_array().unwrap().len(), 3);

    // Syntax error: exit code 2.
    let out = bin().args(["json", "[0 | e"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));

    // Arity mismatch is a domain error: exit code 1.
    let out = bin().args(["json", "[100 | e | 11000]"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn eval_script_prints_expression_results() {
    let script = tmp("session.bt");
    std::fs::write(
        &script,
        "a = named x0; b = inv a; eq (mul a b) [0|e|0]\nchi1 (named x0)\n",
    )
    .unwrap();
    let out = bin().arg("eval").arg(&script).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, "true\n1\n");
}

#[test]
fn eval_script_domain_error_exits_1() {
    let script = tmp("bad-domain.bt");
    std::fs::write(&script, "chi1 (named psi)\n").unwrap();
    let out = bin().arg("eval").arg(&script).output().unwrap();
    assert_eq!(out.status.code(), Some(1));

    let script = tmp("bad-syntax.bt");
    std::fs::write(&script, "mul mul\n").unwrap();
    let out = bin().arg("eval").arg(&script).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_subcommand_emits_json() {
    let out = bin()
        .args([
            "verify",
            "fig5_conventions",
            "--trials",
            "1",
            "--seed",
            "7",
            "--json",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value =
        serde_json::from_str(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(report["suite"], "fig5_conventions");
    assert_eq!(report["trials"], 1);
    assert_eq!(report["failures"].as_array().unwrap().len(), 0);

    let out = bin().args(["verify", "no_such_suite"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn svg_subcommand_writes_deterministic_file() {
    let path_a = tmp("t1-a.svg");
    let path_b = tmp("t1-b.svg");
    let literal = "[11000 | s1^-1 s2^-1 (0,0,-2) | 10100]";
    let out = bin()
        .args(["svg", literal, "-o"])
        .arg(&path_a)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let out = bin()
        .args(["svg", literal, "-o"])
        .arg(&path_b)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let a = std::fs::read(&path_a).unwrap();
    let b = std::fs::read(&path_b).unwrap();
    assert_eq!(a, b);
    let doc = String::from_utf8(a).unwrap();
    assert_eq!(doc.matches("class=\"crossing\"").count(), 2);
    assert!(doc.contains(">-2</text>"));
}

#[test]
fn repl_session() {
    let mut child = bin()
        .arg("repl")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(b"x = named x0\nchi1 x\nmember bVhat1 (mul (inv x) (mul [11000|s1|11000] x))\nbogus +\nquit\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains('1'));
    assert!(text.contains("true"));
    // The malformed line reports but does not kill the session.
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("error"));
}
