use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_supercas"))
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = bin().args(args).env("SUPERCAS_THREADS", "2").output().expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

#[test]
fn degenerate_metric_exits_two() {
    let (code, _, err) = run(&["verify", "--algebra", "osp", "--M", "4", "--N", "2"]);
    assert_eq!(code, 2);
    assert!(err.contains("omega=2: Killing metric degenerate"), "{err}");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["verify", "--suite", "nope"]).0, 2);
    assert_eq!(run(&["rmatrix", "--algebra", "sl", "--M", "3", "--N", "1", "--u", "1/0"]).0, 2);
    assert_eq!(run(&["dims", "--algebra", "osp", "--M", "5", "--N", "1"]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
}

#[test]
fn sl_dims_table() {
    let (code, out, _) = run(&["dims", "--algebra", "sl", "--M", "4", "--N", "1"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l.trim() == "V1(+) = (1, 0)"), "{out}");
    assert!(out.contains("total = 576"));
}

#[test]
fn json_report_schema_and_determinism() {
    let dir = std::env::temp_dir();
    let a = dir.join(format!("supercas-a-{}.json", std::process::id()));
    let b = dir.join(format!("supercas-b-{}.json", std::process::id()));
    for p in [&a, &b] {
        let (code, _, _) = run(&[
            "verify", "--algebra", "sl", "--M", "3", "--N", "1", "--suite", "all", "--json",
            p.to_str().unwrap(),
        ]);
        assert_eq!(code, 0);
    }
    let load = |p: &std::path::Path| -> serde_json::Value {
        serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap()
    };
    let (mut x, mut y) = (load(&a), load(&b));
    for k in ["algebra", "M", "N", "omega", "checks", "dims", "series"] {
        assert!(x.get(k).is_some(), "missing {k}");
    }
    assert_eq!(x["algebra"], "sl(3|1)");
    assert_eq!(x["omega"], 2);
    assert_eq!(x["dims"]["V1(+)"], serde_json::json!([1, 0]));
    let rec = &x["checks"][0];
    for k in ["suite", "check", "status", "expected", "computed", "elapsed_ms"] {
        assert!(rec.get(k).is_some(), "record missing {k}");
    }
    // identical up to timings
    for v in [&mut x, &mut y] {
        for c in v["checks"].as_array_mut().unwrap() {
            c["elapsed_ms"] = serde_json::json!(0);
        }
    }
    assert_eq!(x, y);
    let _ = std::fs::remove_file(a);
    let _ = std::fs::remove_file(b);
}

#[test]
fn rmatrix_dump_and_ybe() {
    let (code, out, _) = run(&["rmatrix", "--algebra", "sl", "--M", "2", "--N", "1", "--u", "1/3"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["rows"], 9);
    assert_eq!(v["parities"], serde_json::json!([0, 0, 1, 0, 0, 1, 1, 1, 0]));
    let entries = v["entries"].as_array().unwrap();
    let keys: Vec<(u64, u64)> = entries.iter().map(|e| (e[0].as_u64().unwrap(), e[1].as_u64().unwrap())).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    // R(1/3) = (1/3 + P)/(2/3): diagonal (0,0) is (1/3 + 1)·3/2 = 2
    assert_eq!(entries[0], serde_json::json!([0, 0, "2"]));

    let (code, out, _) = run(&["rmatrix", "--algebra", "osp", "--M", "3", "--N", "2", "--u", "1/3", "--v", "2/5"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("holds"));
}

#[test]
fn dump_operators() {
    let (code, out, _) = run(&["dump", "--algebra", "osp", "--M", "1", "--N", "2", "--operator", "P", "--picture", "defining"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["rows"], 9);
    let (code, _, _) = run(&["dump", "--algebra", "osp", "--M", "3", "--N", "2", "--operator", "Q"]);
    assert_eq!(code, 2);
}

#[test]
fn series_command() {
    let (code, out, _) = run(&["series", "--algebra", "sl", "--M", "4", "--N", "1", "--order", "5"]);
    assert_eq!(code, 0);
    assert!(out.contains("c_5 = -25/144"), "{out}");
    assert!(!out.contains("MISMATCH"));
}
