use std::process::Command;

use serde_json::Value;

fn hdiff(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_hdiff"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn json_report_shape() {
    let (code, stdout, _) = hdiff(&["--suite", "dybe", "--n", "2", "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["suite"], "dybe");
    assert_eq!(v["params"]["N"], 1);
    assert_eq!(v["params"]["n"], 2);
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 64);
    assert!(checks.iter().all(|c| c["status"] == "pass" && c.get("witness").is_none()));
    let names: Vec<&str> = checks.iter().map(|c| c["name"].as_str().unwrap()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
    assert!(v["elapsed_ms"].is_u64());
}

#[test]
fn text_report_and_exit_codes() {
    let (code, stdout, _) = hdiff(&["--suite", "note3", "--n", "3"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("note3 identity n=3"), "{stdout}");

    let (code, _, stderr) = hdiff(&["--suite", "ore", "--n", "2"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("some checks failed"));

    let (code, stdout, stderr) = hdiff(&["--suite", "nonsense"]);
    assert_eq!(code, 2);
    assert!(stdout.is_empty());
    assert!(stderr.contains("nonsense"));

    let (code, _, stderr) = hdiff(&["--suite", "dybe", "--n", "0"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("index out of range"));
}

#[test]
fn out_of_scope_parameters_are_skipped() {
    for args in [["--suite", "zhelobenko", "--N", "2"], ["--suite", "sn", "--n", "1"]] {
        let mut args = args.to_vec();
        args.extend(["--format", "json"]);
        let (code, stdout, _) = hdiff(&args);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&stdout).unwrap();
        let c = &v["checks"][0];
        assert_eq!(c["status"], "skipped");
        assert_eq!(c["witness"], "skipped: out of paper scope");
    }
}

#[test]
fn reports_are_deterministic() {
    let strip = |s: String| {
        let mut v: Value = serde_json::from_str(&s).unwrap();
        v.as_object_mut().unwrap().remove("elapsed_ms");
        v
    };
    let args = ["--suite", "consistency", "--n", "2", "--seed", "9", "--format", "json"];
    let a = strip(hdiff(&args).1);
    let b = strip(hdiff(&args).1);
    assert_eq!(a, b);
}
