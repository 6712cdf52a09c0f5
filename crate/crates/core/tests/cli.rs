use std::process::Command;

use moment_forge::cli::{run, Outcome, EXIT_FINDING, EXIT_OK, EXIT_USAGE};
use moment_forge::io::report;
use serde_json::Value;

fn go(args: &[&str]) -> Outcome {
    run(std::iter::once("moment-forge").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.extend(["--output", "json"]);
    let o = go(&a);
    let doc: Value = serde_json::from_str(&o.stdout).unwrap();
    report::validate(&doc).unwrap();
    doc
}

#[test]
fn moments_all_zero_profile() {
    let args = [
        "moments",
        "--vars",
        "x,y",
        "--poly",
        "(x+i*y)^2",
        "--functional",
        "gaussian",
        "-M",
        "10",
    ];
    let o = go(&args);
    assert_eq!(o.code, EXIT_OK);
    assert!(o.stdout.contains("all 10 values vanish"));
    let doc = json(&args);
    assert_eq!(doc["result"]["all_zero"], Value::Bool(true));
    assert_eq!(doc["result"]["values"].as_array().unwrap().len(), 10);
}

#[test]
fn moments_first_nonzero() {
    let doc = json(&["moments", "--vars", "x", "--poly", "x^2-1", "-M", "5"]);
    assert_eq!(doc["result"]["first_nonzero"], 2);
    assert_eq!(doc["result"]["values"][1], "2");
}

#[test]
fn halfdisk_probe_is_a_finding() {
    let args = [
        "probe",
        "--vars",
        "x,y",
        "--poly",
        "(x+i*y)^2",
        "--q",
        "x+i*y",
        "--functional",
        "halfdisk",
        "-M",
        "5",
    ];
    let o = go(&args);
    assert_eq!(o.code, EXIT_FINDING);
    assert!(o.stdout.contains("counterexample candidate"));
    let doc = json(&args);
    let companion: Vec<&str> = doc["result"]["companion"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap())
        .collect();
    assert_eq!(
        companion,
        ["2/15*i", "2/35*i", "2/63*i", "2/99*i", "2/143*i"]
    );
}

#[test]
fn gaussian_probe_is_consistent() {
    let o = go(&[
        "probe",
        "--vars",
        "x,y",
        "--poly",
        "(x+i*y)^2",
        "--q",
        "(x-i*y)^2",
        "-M",
        "10",
    ]);
    assert_eq!(o.code, EXIT_OK);
    assert!(o.stdout.contains("L(P^m Q) = 0 for m = 2..10"));
}

#[test]
fn torus_probe() {
    let doc = json(&[
        "probe",
        "--vars",
        "z",
        "--poly",
        "z",
        "--q",
        "z^-3",
        "--functional",
        "torus_ct",
        "-M",
        "10",
    ]);
    assert_eq!(doc["result"]["last_nonzero"], 3);
}

#[test]
fn cert_examples() {
    let o = go(&["cert", "--vars", "x", "--poly", "1 - x^2", "-p", "5"]);
    assert_eq!(o.code, EXIT_OK);
    assert_eq!(
        o.stdout,
        "Φ(F^5) = -544 ≡ 1 (mod 5): certified nonvanishing\n"
    );
    let o = go(&["cert", "--vars", "x", "--poly", "x", "-p", "3"]);
    assert_eq!(o.code, EXIT_OK);
    assert!(o.stdout.contains("inconclusive"));
    let doc = json(&[
        "cert",
        "--vars",
        "x,y",
        "--poly",
        "1 - x^2 - y^2",
        "-p",
        "3",
    ]);
    assert_eq!(doc["result"]["value"], "-29");
    assert_eq!(doc["result"]["status"], "certified");
    assert_eq!(
        go(&["cert", "--vars", "x", "--poly", "1/2 - x", "-p", "3"]).code,
        EXIT_USAGE
    );
    assert_eq!(
        go(&["cert", "--vars", "x", "--poly", "1 - x", "-p", "4"]).code,
        EXIT_USAGE
    );
}

#[test]
fn pairing_en_halfdisk_torus() {
    let doc = json(&["pairing", "--vars", "w,z", "--poly", "w^3*z^3 + w*z^2"]);
    assert_eq!(doc["result"]["value"], "6");
    let doc = json(&["en", "--vars", "w,z", "--poly", "w*z^2"]);
    assert_eq!(doc["result"]["image"], "2*z");
    let doc = json(&["halfdisk", "--vars", "x,y", "--poly", "1"]);
    assert_eq!(doc["result"]["pi_part"], "1/2");
    let doc = json(&["torus", "--vars", "z", "--poly", "(z + z^-1)^2"]);
    assert_eq!(doc["result"]["value"], "2");
    assert_eq!(
        go(&["halfdisk", "--vars", "x", "--poly", "x"]).code,
        EXIT_USAGE
    );
}

#[test]
fn reduce_and_crosscheck() {
    let doc = json(&["reduce", "--vars", "x,y", "--poly", "(x+i*y)^2"]);
    assert_eq!(doc["result"]["angular"], "z^2");
    let o = go(&["crosscheck", "--vars", "x,y", "--poly", "x*y", "-M", "4"]);
    assert_eq!(o.code, EXIT_OK);
    let doc = json(&[
        "crosscheck",
        "--vars",
        "x,y",
        "--poly",
        "x^2+y^2",
        "-M",
        "3",
    ]);
    assert_eq!(doc["result"]["rows"][2]["gaussian"], "48");
    let o = go(&[
        "reduce",
        "--vars",
        "x1,x2,y1,y2",
        "--poly",
        "x1*y1 + x2^2*y1",
    ]);
    assert_eq!(o.code, EXIT_USAGE);
    assert!(o.stderr.contains("pair 0"));
    let doc = json(&[
        "reduce",
        "--vars",
        "a,b",
        "--poly",
        "a*b",
        "--pairing",
        "b:a",
    ]);
    assert_eq!(doc["result"]["degrees"][0], 2);
}

#[test]
fn one_ps_rotation() {
    let doc = json(&[
        "one-ps",
        "--vars",
        "x,y",
        "--poly",
        "(x+i*y)^2",
        "--lambda",
        "rotation",
    ]);
    assert_eq!(doc["result"]["min_t_exponent"], "-2");
    assert_eq!(doc["result"]["inverse_member"], Value::Bool(true));
    let o = go(&[
        "one-ps", "--vars", "x,y", "--poly", "x", "--lambda", "t,0;0,1",
    ]);
    assert_eq!(o.code, EXIT_USAGE);
    assert!(o.stderr.contains("t^2 - 1"));
    let doc = json(&[
        "one-ps",
        "--vars",
        "x,y",
        "--poly",
        "x^2 + y^2",
        "--lambda",
        "1,0;0,1",
    ]);
    assert_eq!(doc["result"]["min_t_exponent"], "0");
}

#[test]
fn usage_errors() {
    for args in [
        &["moments", "--vars", "x", "--poly", "x^-1"][..],
        &["moments", "--vars", "x,i", "--poly", "x"],
        &["moments", "--vars", "x", "--poly", "y"],
        &["moments", "--vars", "x", "--poly", "2x"],
        &[
            "moments",
            "--vars",
            "x",
            "--poly",
            "x",
            "--functional",
            "nope",
        ],
        &["probe", "--vars", "x", "--poly", "x"],
        &["nonsense"],
        &[],
    ] {
        let o = go(args);
        assert_eq!(o.code, EXIT_USAGE, "{args:?}");
        assert!(o.stderr.contains("expr     :="), "{args:?}");
    }
    let o = go(&["moments", "--vars", "x", "--poly", "x +* 1"]);
    assert!(o.stderr.contains("line 1, column 4"), "{}", o.stderr);
}

#[test]
fn selftest_subset() {
    let o = go(&["selftest", "--only", "2,9"]);
    assert_eq!(o.code, EXIT_OK);
    assert_eq!(o.stdout.lines().count(), 3);
    assert_eq!(go(&["selftest", "--only", "12"]).code, EXIT_USAGE);
    let doc = json(&["selftest", "--only", "3"]);
    assert_eq!(doc["result"]["failed"], 0);
}

#[test]
fn binary_output_is_deterministic() {
    let bin = env!("CARGO_BIN_EXE_moment-forge");
    let args = [
        "probe",
        "--vars",
        "x,y",
        "--poly",
        "(x+i*y)^2",
        "--q",
        "x+i*y",
        "--functional",
        "halfdisk",
        "-M",
        "6",
        "--output",
        "json",
    ];
    let a = Command::new(bin).args(args).output().unwrap();
    let b = Command::new(bin)
        .args(args)
        .env("MOMENT_FORGE_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(a.status.code(), Some(EXIT_FINDING));
    assert_eq!(a.stdout, b.stdout);
    let st = ["selftest", "--only", "4,6,11", "--seed", "7"];
    let a = Command::new(bin).args(st).output().unwrap();
    let b = Command::new(bin).args(st).output().unwrap();
    assert_eq!(a.status.code(), Some(EXIT_OK));
    assert_eq!(a.stdout, b.stdout);
    let bad = Command::new(bin)
        .args(["torus", "--vars", "z", "--poly", "z"])
        .env("MOMENT_FORGE_THREADS", "0")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_USAGE));
}
