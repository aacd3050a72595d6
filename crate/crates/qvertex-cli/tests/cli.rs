use std::process::{Command, Output};

use qvertex::{RingElem, Var};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qvertex")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn elem(o: &Output) -> RingElem {
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(stdout(o).trim()).unwrap()
}

fn x(i: u32) -> RingElem {
    RingElem::var(Var::x(i))
}

#[test]
fn compute_examples() {
    let got = elem(&run(&["compute", "--family", "G", "--lambda", "2,0", "--mu", "0", "--n", "2", "--set", "u=0", "--set", "v=0"]));
    let q1 = RingElem::one().add(&RingElem::q());
    let want = x(1).pow(2).add(&q1.mul(&x(1)).mul(&x(2))).add(&x(2).pow(2));
    assert_eq!(got, want);

    assert_eq!(elem(&run(&["compute", "--family", "J", "--lambda", "0", "--mu", "0", "--n", "0"])), RingElem::one());
    assert_eq!(elem(&run(&["compute", "--family", "G", "--lambda", "1", "--mu", "0", "--n", "1", "--set", "v=0"])), x(1));
}

#[test]
fn text_format() {
    let o = run(&["--format", "text", "compute", "--family", "schur", "--lambda", "1", "--n", "2"]);
    assert_eq!(stdout(&o).trim(), "x1 + x2");
}

#[test]
fn named_families_and_oracle_agree() {
    for fam in ["qwhittaker", "hall-littlewood", "grothendieck", "weak-dual"] {
        let o = run(&["oracle", "--family", fam, "--lambda", "2,1", "--n", "2", "--compare"]);
        assert_eq!(o.status.code(), Some(0), "{fam}: {}", String::from_utf8_lossy(&o.stderr));
        let c = elem(&run(&["compute", "--family", fam, "--lambda", "2,1", "--n", "2"]));
        assert_eq!(c, elem(&o), "{fam}");
    }
}

#[test]
fn single_column_binding() {
    let all = elem(&run(&["compute", "--family", "J", "--lambda", "2", "--n", "1", "--set", "u=0", "--set", "v=0"]));
    let one = elem(&run(&["compute", "--family", "J", "--lambda", "2", "--n", "1", "--set", "u=0", "--set", "v=0", "--set", "u2=1"]));
    assert_ne!(all, one);
    assert!(one.vars().iter().all(|v| *v == Var::x(1) || *v == Var::q()));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["compute", "--family", "G", "--lambda", "1,x", "--n", "1"]).status.code(), Some(2));
    assert_eq!(run(&["compute", "--family", "nope", "--lambda", "1", "--n", "1"]).status.code(), Some(2));
    assert_eq!(run(&["compute", "--family", "G", "--lambda", "1", "--n", "1", "--set", "u=abc"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--suite", "nope"]).status.code(), Some(2));
    let o = run(&["compute", "--family", "J", "--lambda", "2", "--n", "1", "--width", "1"]);
    assert_eq!(o.status.code(), Some(3));
    let o = run(&["compute", "--family", "J", "--lambda", "1", "--n", "1", "--set", "u1=-1", "--set", "x1=1"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("u1=-1"));
}

#[test]
fn verify_examples() {
    for args in [
        vec!["verify", "--suite", "fusion", "--L", "2", "--M", "2"],
        vec!["verify", "--suite", "cauchy-g", "--degree", "3", "--box", "2x2"],
        vec!["verify", "--suite", "ybe", "--L", "1", "--M", "1", "--N", "1"],
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(v["passed"], true);
        assert!(v.get("elapsed").is_none());
    }
}

#[test]
fn expand_examples() {
    let o = run(&["expand", "--source", "qwhittaker", "--target", "inhom-f", "--lambda", "2,0", "--n", "2", "--certify", "positive"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["entries"].as_array().unwrap().len(), 3);

    let args = ["expand", "--source", "inhom-f", "--target", "qwhittaker", "--lambda", "2,0", "--n", "2", "--certify", "alternating"];
    assert_eq!(run(&args).status.code(), Some(0));
    let mut bad = args;
    bad[10] = "positive";
    assert_eq!(run(&bad).status.code(), Some(1));

    let o = run(&["expand", "--source", "schur", "--target", "schur", "--lambda", "1", "--n", "1"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["entries"][0]["partition"], serde_json::json!([1]));
    assert_eq!(v["entries"].as_array().unwrap().len(), 1);
}

#[test]
fn output_is_reproducible() {
    let args = ["--jobs", "2", "verify", "--suite", "cauchy-mixed", "--degree", "2", "--box", "1x2", "--variables", "2"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}
