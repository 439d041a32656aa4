use std::process::{Command, Output};
use std::sync::Arc;

use pascal_subwords::algebra::{element_h, exponential, mobius, scale, Rational};
use pascal_subwords::posets::{build_universe, PosetKind};
use pascal_subwords_cli::{CoefficientEntry, MatrixDocument, PosetName, PosetSpec};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_psw"))
        .args(args)
        .output()
        .expect("binary runs")
}

/// Runs a whitespace-separated command line.
fn psw(line: &str) -> Output {
    run(&line.split_whitespace().collect::<Vec<_>>())
}

fn ok(out: Output) -> String {
    assert!(
        out.status.success(),
        "exit {:?}: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn stdout(line: &str) -> String {
    ok(psw(line))
}

fn code(line: &str) -> i32 {
    psw(line).status.code().expect("exit code")
}

fn coefficients(json: &str) -> Vec<(String, String)> {
    serde_json::from_str::<Vec<CoefficientEntry>>(json)
        .unwrap()
        .into_iter()
        .map(|e| (e.word, e.coefficient))
        .collect()
}

fn pairs(v: &[(&str, &str)]) -> Vec<(String, String)> {
    v.iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect()
}

#[test]
fn count_examples() {
    assert_eq!(
        stdout("count --alphabet abc --pattern aab --restriction 1 --host baacbab"),
        "2\n"
    );
    assert_eq!(
        stdout("count --perm --pattern 231 --restriction 2 --host 43152"),
        "2\n"
    );
    let empty = run(&["count", "--alphabet", "ab", "--pattern", "", "--host", "ab"]);
    assert_eq!(ok(empty), "1\n");
    assert_eq!(
        stdout("count --alphabet abc --pattern aab --host baacbab"),
        "4\n"
    );
}

#[test]
fn count_rejects_malformed_input() {
    let base = "count --alphabet ab --pattern ab --host aab";
    assert_eq!(code(&format!("{base} --restriction 0,0")), 2);
    assert_eq!(code(&format!("{base} --restriction 3")), 2);
    assert_eq!(code(&format!("{base} --restriction a")), 2);
    assert_eq!(code("count --alphabet ab --pattern c --host ab"), 2);
    assert_eq!(code("count --perm --pattern 221 --host 123"), 2);
    assert_eq!(code("count --pattern a --host a"), 2);
}

#[test]
fn exponential_of_h_on_words_prints_the_pascal_matrix() {
    let json = stdout("matrix --poset words --alphabet ab --max-len 2 --element H --exp");
    let doc = MatrixDocument::from_json(&json).unwrap();
    assert_eq!(doc.elements, ["", "a", "b", "aa", "ab", "ba", "bb"]);
    let got: Vec<String> = doc.entries.iter().map(|r| r.concat()).collect();
    assert_eq!(
        got,
        ["1111111", "0102110", "0010112", "0001000", "0000100", "0000010", "0000001"]
    );
}

#[test]
fn chain_and_boolean_examples() {
    let csv = stdout("matrix --poset chain --max-len 3 --element H --exp --format csv");
    assert_eq!(csv, "0,1,2,3\n1,1,1,1\n0,1,2,3\n0,0,1,3\n0,0,0,1\n");

    let json = stdout("matrix --poset boolean --max-len 2 --element zeta --inverse");
    let doc = MatrixDocument::from_json(&json).unwrap();
    let u = Arc::new(build_universe(PosetKind::Boolean { n: 2 }).unwrap());
    assert_eq!(doc.to_element_in(&u).unwrap(), mobius(&u));
    assert_eq!(doc.entries[0], ["1", "-1", "-1", "1"]);
}

#[test]
fn json_round_trip() {
    for flags in [
        "--poset words --alphabet ab --max-len 3 --element P --power -2",
        "--poset perms --max-len 3 --element H",
        "--poset chain --max-len 4 --element H --exp",
        "--poset words --alphabet abc --max-len 2 --element mobius",
    ] {
        let json = stdout(&format!("matrix {flags}"));
        let doc = MatrixDocument::from_json(&json).unwrap();
        let element = doc.to_element().unwrap();
        assert_eq!(MatrixDocument::new(doc.poset.clone(), &element), doc);
        assert_eq!(doc.to_json(), json);
    }

    let spec = PosetSpec {
        kind: PosetName::Perms,
        alphabet: None,
        max_len: 3,
    };
    let u = spec.build().unwrap();
    let e = exponential(&element_h(&u)).unwrap();
    let json = MatrixDocument::new(spec, &e).to_json();
    let back = MatrixDocument::from_json(&json).unwrap();
    assert_eq!(back.to_element_in(&u).unwrap(), e);
}

#[test]
fn non_integers_are_reduced_strings() {
    let json = stdout("matrix --poset chain --max-len 2 --element P --power -1");
    assert!(json.contains("\"-2\""));
    let doc = MatrixDocument::from_json(&json).unwrap();
    assert!(doc.entries.iter().flatten().all(|s| !s.contains('/')));

    let spec = PosetSpec {
        kind: PosetName::Chain,
        alphabet: None,
        max_len: 2,
    };
    let u = spec.build().unwrap();
    let half = scale(&Rational::new(3.into(), (-6).into()), &element_h(&u));
    let doc = MatrixDocument::new(spec, &half);
    assert_eq!(doc.entries[0][1], "-1/2");
    assert_eq!(doc.entries[1][2], "-1");
}

#[test]
fn rejects_documents_that_do_not_match_their_poset() {
    let json = stdout("matrix --poset chain --max-len 2 --element zeta");
    let mut doc = MatrixDocument::from_json(&json).unwrap();
    doc.entries[1][0] = "1".into();
    assert!(doc.to_element().is_err());
    let mut doc = MatrixDocument::from_json(&json).unwrap();
    doc.elements.swap(0, 1);
    assert!(doc.to_element().is_err());
    assert!(MatrixDocument::from_json("{\"poset\": 3}").is_err());
}

#[test]
fn precondition_failures_exit_3() {
    let out = psw("matrix --poset words --alphabet ab --max-len 2 --element P --exp");
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("zero diagonal"));
    assert_eq!(
        code("matrix --poset chain --max-len 2 --element eta --inverse"),
        3
    );
    assert_eq!(code("matrix --poset perms --max-len 9 --element P"), 3);
}

#[test]
fn bad_matrix_flags_exit_2() {
    for line in [
        "matrix --poset words --max-len 2 --element P",
        "matrix --poset tree --max-len 2 --element P",
        "matrix --poset chain --max-len 2 --element Q",
        "matrix --poset chain --max-len 2 --element P --exp --inverse",
        "matrix --poset chain --max-len 2 --element P --format xml",
        "matrix --poset chain --alphabet ab --max-len 2 --element P",
        "matrix --poset chain --max-len -2 --element P",
    ] {
        assert_eq!(code(line), 2, "{line}");
    }
}

#[test]
fn mahler_examples() {
    assert_eq!(
        coefficients(&stdout(
            "mahler --alphabet abc --pattern ac --restriction 1 --max-len 3"
        )),
        pairs(&[("ac", "1"), ("aac", "-1"), ("abc", "-1"), ("acc", "-1")])
    );
    assert_eq!(
        coefficients(&stdout("mahler --builtin xor --max-len 4")),
        pairs(&[("1", "1"), ("11", "-2"), ("111", "4"), ("1111", "-8")])
    );
    assert_eq!(
        coefficients(&stdout("mahler --alphabet ab --pattern a --max-len 1")),
        pairs(&[("a", "1")])
    );
    assert_eq!(
        coefficients(&stdout("mahler --builtin and --max-len 2")),
        pairs(&[("", "1"), ("0", "-1"), ("00", "1")])
    );
}

#[test]
fn mahler_rejects_bad_input() {
    for line in [
        "mahler --builtin nand --max-len 2",
        "mahler --alphabet ab --pattern ax --max-len 2",
        "mahler --alphabet ab --pattern a --restriction 0,0 --max-len 2",
        "mahler --max-len 2",
    ] {
        assert_eq!(code(line), 2, "{line}");
    }
    assert_eq!(code("mahler --alphabet ab --pattern aaa --max-len 2"), 3);
}

#[test]
fn verify_examples() {
    let report = stdout("verify --suite exp --max-len 4");
    assert_eq!(report.lines().count(), 8);
    assert!(report.lines().all(|l| l.starts_with("PASS ")));
    assert_eq!(
        report.lines().filter(|l| l.contains("P = exp(H)")).count(),
        4
    );

    let report = stdout("verify --suite corollary --max-len 8");
    assert!(report.starts_with("PASS generalized binomial identity [n <= 8]"));

    let report = stdout("verify --suite all --max-len 0");
    assert!(report.lines().count() > 10);
    assert!(report.lines().all(|l| l.starts_with("PASS ")));

    assert_eq!(code("verify --suite nope"), 2);
    assert_eq!(code("verify --max-len -1"), 2);
}

#[test]
fn output_is_deterministic() {
    for line in [
        "matrix --poset words --alphabet ab --max-len 3 --element P --inverse --format csv",
        "mahler --builtin or --max-len 4",
        "verify --suite boolean --max-len 3",
    ] {
        assert_eq!(psw(line).stdout, psw(line).stdout);
    }
}

#[test]
fn output_file() {
    let dir = std::env::temp_dir().join(format!("psw-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("m.json");
    let line = "matrix --poset chain --max-len 2 --element zeta";
    let printed = stdout(line);
    let written = stdout(&format!("{line} --output {}", path.display()));
    assert_eq!(written, "");
    assert_eq!(std::fs::read_to_string(&path).unwrap(), printed);
    std::fs::remove_dir_all(&dir).unwrap();
}
