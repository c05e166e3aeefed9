use std::process::{Command, Output};

const CHAIN: &str = "vars: x1, x2, x3; dep(x1;x3) & dep(x2;x3)";

fn teamenum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_teamenum"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_lines(out: &Output) -> Vec<String> {
    String::from_utf8(out.stdout.clone())
        .unwrap()
        .lines()
        .map(String::from)
        .collect()
}

#[test]
fn count_only_report() {
    let out = teamenum(&["enum", "--algo", "orbit", "--max-size", "4", "--expr", "dep(x1;x3) & dep(x2;x3)", "--count-only"]);
    assert!(out.status.success());
    let lines = stdout_lines(&out);
    assert_eq!(lines[0], "level\tc_k\tc_k0\tratio");
    assert_eq!(&lines[1..5], ["1\t8\t1\tok", "2\t16\t4\tok", "3\t8\t3\tok", "4\t2\t1\tok"]);
    assert_eq!(lines[5], "total\t34");
}

#[test]
fn exit_codes() {
    let out = teamenum(&["enum", "--algo", "brute", "--expr", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert_eq!(teamenum(&["enum", "--expr", "dep(x1 x2)"]).status.code(), Some(2));
    let wide = "dep(x1;x2) & dep(x3;x4) & dep(x5;x1)";
    assert_eq!(teamenum(&["enum", "--algo", "brute", "--expr", wide]).status.code(), Some(3));
}

#[test]
fn polyspace_lines() {
    let out = teamenum(&["enum", "--algo", "polyspace", "--max-size", "2", "--expr", "dep(x1;x2)"]);
    assert_eq!(
        stdout_lines(&out),
        ["00", "01", "10", "11", "00,10", "00,11", "01,10", "01,11"]
    );
}

#[test]
fn outputs_agree_across_algorithms_after_sorting() {
    for expr in [CHAIN, "dep(x1;x2) & !x3", "vars: a, b, c, d; dep(a, b; c) & dep(d; a)"] {
        let mut outputs: Vec<Vec<String>> = ["orbit", "polyspace", "brute"]
            .iter()
            .map(|algo| {
                let mut lines = stdout_lines(&teamenum(&["enum", "--algo", algo, "--expr", expr]));
                lines.sort();
                lines
            })
            .collect();
        let first = outputs.remove(0);
        assert!(!first.is_empty());
        for other in outputs {
            assert_eq!(other, first, "{expr}");
        }
    }
}

#[test]
fn size_lex_order_flag() {
    let emission = stdout_lines(&teamenum(&["enum", "--algo", "polyspace", "--expr", CHAIN]));
    let sorted = stdout_lines(&teamenum(&["enum", "--order", "size-lex", "--expr", CHAIN]));
    assert_eq!(sorted, emission);
}

#[test]
fn orbit_and_seed_commands() {
    let out = teamenum(&["orbit", "--team", "000,010,100,110", "--expr", CHAIN]);
    assert_eq!(stdout_lines(&out), ["000,010,100,110", "001,011,101,111"]);
    let out = teamenum(&["orbit", "--team", "000,111"]);
    assert_eq!(stdout_lines(&out).len(), 4);
    let out = teamenum(&["orbit", "--team", "000,001", "--expr", CHAIN]);
    assert_eq!(out.status.code(), Some(1));

    assert_eq!(stdout_lines(&teamenum(&["seeds", "--level", "4", "--expr", CHAIN])), ["000,010,100,110"]);
    let out = teamenum(&["seeds", "--level", "5", "--expr", CHAIN]);
    assert!(out.status.success() && out.stdout.is_empty());
    let alias = teamenum(&["enum", "--seed-level", "3", "--expr", CHAIN]);
    assert_eq!(stdout_lines(&alias).len(), 3);
}

#[test]
fn family_and_round_trip() {
    assert_eq!(stdout_lines(&teamenum(&["family", "chain", "--k", "2"])), ["dep(x1;x2)"]);
    let k3 = stdout_lines(&teamenum(&["family", "chain", "--k", "3"]));
    assert_eq!(k3, [CHAIN.replace(", ", ",")]);
    let k4 = stdout_lines(&teamenum(&["family", "chain", "--k", "4"]));
    assert_eq!(k4[0].matches("dep(").count(), 3);
    assert_eq!(teamenum(&["family", "chain", "--k", "1"]).status.code(), Some(1));
    let report = teamenum(&["enum", "--count-only", "--expr", &k3[0]]);
    assert!(stdout_lines(&report).contains(&"total\t34".to_string()));
}

#[test]
fn profile_file_and_formula_file() {
    let dir = std::env::temp_dir().join(format!("teamenum-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let formula = dir.join("chain.pdl");
    let profile = dir.join("profile.tsv");
    std::fs::write(&formula, CHAIN).unwrap();
    let _ = std::fs::remove_file(&profile);
    let out = teamenum(&[
        "enum",
        "--formula",
        formula.to_str().unwrap(),
        "--profile",
        profile.to_str().unwrap(),
        "--count-only",
    ]);
    assert!(out.status.success());
    let rows: Vec<Vec<u64>> = std::fs::read_to_string(&profile)
        .unwrap()
        .lines()
        .map(|l| l.split('\t').map(|c| c.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 34);
    assert!(rows.iter().enumerate().all(|(i, r)| r.len() == 3 && r[0] == i as u64 + 1));
    assert_eq!(rows.iter().filter(|r| r[1] == 2).count(), 16);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn disjunctions_on_the_command_line() {
    let out = teamenum(&["enum", "--algo", "polyspace", "--expr", "x1 \\/ !x1"]);
    assert_eq!(stdout_lines(&out), ["0", "1"]);
    let out = teamenum(&["enum", "--algo", "orbit", "--expr", "x1 \\/ !x1"]);
    assert_eq!(out.status.code(), Some(1));
}
