use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ffinterleave"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).env_remove("INTERLEAVER_QMAX").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn second_row(text: &str) -> Vec<usize> {
    let rows: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    rows[rows.len() - 1].split_whitespace().map(|t| t.parse().unwrap()).collect()
}

#[test]
fn reproduce_examples() {
    let o = run(&["reproduce", "monomial-13"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "0  1  2 3 4 5 6 7 8 9 10 11 12\n0 11 10 9 8 7 6 5 4 3  2  1 12\n"
    );
    let o = run(&["reproduce", "dickson-11"]);
    assert_eq!(second_row(&stdout(&o)), vec![0, 1, 2, 3, 9, 5, 6, 7, 8, 4, 10]);
    let o = run(&["reproduce", "skolem-hooked-6"]);
    assert_eq!(second_row(&stdout(&o)), vec![3, 7, 1, 10, 6, 5, 2, 11, 13, 4, 8, 12, 9]);
    let o = run(&["reproduce", "nope"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn field_reports() {
    let o = run(&["field", "-p", "13", "-m", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("alpha = 2"), "{}", stdout(&o));
    let o = run(&["field", "-p", "2", "-m", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("q = 2"));
    let o = run(&["field", "-p", "4", "-m", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("not prime"));
}

#[test]
fn field_bound_comes_from_environment() {
    let o = bin().args(["field", "-p", "2", "-m", "6"]).env("INTERLEAVER_QMAX", "32").output().unwrap();
    assert_eq!(o.status.code(), Some(2));
    let o = bin().args(["field", "-p", "2", "-m", "6"]).env("INTERLEAVER_QMAX", "64").output().unwrap();
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn interleave_tables_and_conditions() {
    let o = run(&["interleave", "monomial", "-n", "11", "-p", "13", "--two-row"]);
    assert_eq!(stdout(&o), "0  1  2 3 4 5 6 7 8 9 10 11 12\n0 11 10 9 8 7 6 5 4 3  2  1 12\n");
    let o = run(&["interleave", "dickson", "-n", "19", "-a", "1", "-p", "11"]);
    assert_eq!(second_row(&stdout(&o)), vec![0, 1, 2, 3, 9, 5, 6, 7, 8, 4, 10]);
    let o = run(&["interleave", "redei", "-n", "3", "-a", "2", "-p", "11"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("gcd(3,12)≠1"), "{}", stderr(&o));
    let o = run(&["interleave", "mobius", "-p", "7", "--abcd", "1,2,2,4"]);
    assert_eq!(o.status.code(), Some(3));
    let o = run(&["interleave", "monomial", "-p", "13"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn inverse_flag_undoes_the_interleaver() {
    let fwd = run(&["interleave", "redei", "-n", "5", "-a", "2", "-p", "11", "--format", "json"]);
    let inv = run(&["interleave", "redei", "-n", "5", "-a", "2", "-p", "11", "--inverse", "--format", "json"]);
    let image = |o: &Output| -> Vec<usize> {
        let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        v["image"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap() as usize).collect()
    };
    let (f, g) = (image(&fwd), image(&inv));
    assert!((0..f.len()).all(|x| g[f[x]] == x));
}

#[test]
fn cycles_inline_and_round_trip() {
    let inline = run(&["cycles", "monomial", "-n", "11", "-p", "13"]);
    assert_eq!(stdout(&inline), "size 13\ncensus {1:3, 2:5}\nfixed {0,6,12}\n");
    let redei = run(&["cycles", "redei", "-n", "5", "-a", "2", "-p", "11"]);
    assert!(stdout(&redei).contains("census {1:3, 2:4}"));

    let json = run(&["interleave", "monomial", "-n", "11", "-p", "13", "--format", "json"]);
    let mut child = bin()
        .args(["cycles", "--input", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(&json.stdout).unwrap();
    let piped = child.wait_with_output().unwrap();
    assert_eq!(piped.status.code(), Some(0));
    assert_eq!(piped.stdout, inline.stdout);

    let identity = run(&["cycles", "monomial", "-n", "1", "-p", "7"]);
    assert!(stdout(&identity).contains("census {1:7}"));
}

#[test]
fn malformed_permutation_file_is_bad_input() {
    let dir = std::env::temp_dir().join(format!("ffinterleave-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.json");
    std::fs::write(&path, r#"{"size":3,"image":[0,0,1]}"#).unwrap();
    let o = run(&["cycles", "--input", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(4));
    std::fs::write(&path, "not json").unwrap();
    let o = run(&["cycles", "--input", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(4));
    let o = run(&["cycles", "--input", dir.join("missing.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(4));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn skolem_commands() {
    let o = run(&["skolem", "plain", "-n", "1"]);
    assert_eq!(stdout(&o), "1 1\n");
    let o = run(&["skolem", "plain", "-n", "6"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("n≡2 (mod 4)"));
    let o = run(&["skolem", "hooked", "-n", "6", "--modify", "--interleave"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("2 5 2 6 1 1 5 3 4 6 3 0 4\n# modified\n2 5 -2 6 1 -1 -5 3 4 -6 -3 0 -4\n"), "{text}");
    assert_eq!(second_row(&text), vec![3, 7, 1, 10, 6, 5, 2, 11, 13, 4, 8, 12, 9]);

    let o = run(&["skolem", "k-extended", "-n", "5", "-k", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["sequence"].as_array().unwrap()[2], 0);

    let o = run(&["skolem", "generalized", "-n", "1", "-j", "3", "--interleave"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(second_row(&stdout(&o)), vec![2, 3, 1]);

    let o = run(&["skolem", "prescribed", "--census", "1:2,3:3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let c = run(&["cycles", "--input", "-"]);
    assert_eq!(c.status.code(), Some(4), "empty stdin is malformed");
    let mut child = bin()
        .args(["cycles", "--input", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(&o.stdout).unwrap();
    let piped = child.wait_with_output().unwrap();
    assert!(stdout(&piped).contains("census {1:2, 3:3}"), "{}", stdout(&piped));
}

#[test]
fn verify_emits_records_and_gates_on_disagreement() {
    let o = run(&["verify", "redei-Nj", "--q-max", "13", "--jobs", "1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let lines: Vec<&str> = std::str::from_utf8(&o.stdout).unwrap().lines().collect();
    assert!(lines.len() > 1);
    for line in &lines[..lines.len() - 1] {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["theorem"], "redei-Nj");
        assert_eq!(v["oracle_agrees"], true);
        for key in ["q", "params", "condition", "census"] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
    }
    let summary: serde_json::Value = serde_json::from_str(lines[lines.len() - 1]).unwrap();
    assert_eq!(summary["summary"]["disagree"], 0);

    // (3,2) satisfies the generalized congruence but has no sequence
    let o = run(&["verify", "skolem-generalized", "--j-max", "3", "--n-max", "2", "--jn-max", "6"]);
    assert_eq!(o.status.code(), Some(5));

    let o = run(&["verify", "no-such-theorem"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["verify", "redei-Nj", "--q-min", "20", "--q-max", "10"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "mobius-census", "--q-max", "5"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let args = ["skolem", "plain", "-n", "12", "--interleave"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn help_and_usage_codes() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&[]).status.code(), Some(2));
}
