use std::io::Write;
use std::process::{Command, Stdio};

use serde_json::{json, Value};

fn zkit(args: &[&str], stdin: &str, envs: &[(&str, &str)]) -> (i32, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_zkit"));
    cmd.args(args)
        .env_remove("ZKIT_SEED")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    for (k, v) in envs {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
    )
}

fn run_json(args: &[&str], input: Value) -> (i32, Value) {
    let (code, text) = zkit(args, &input.to_string(), &[]);
    (code, serde_json::from_str(&text).unwrap())
}

#[test]
fn classify_vector_lenient_syntax() {
    let (code, text) = zkit(&["classify-vector", "--v", "[1/1,1/1]"], "", &[]);
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(code, 0);
    assert_eq!(v["class"], "Lightlike");
    assert_eq!(v["schema"], "zkit/1");
    let (_, v) = run_json(&["classify-vector"], json!({"v": ["2", "1"]}));
    assert_eq!(v["class"], "Timelike");
}

#[test]
fn f_eval_on_the_cone() {
    let params = json!({"p": ["0", "0"], "e": ["1", "0"], "alpha": 1.0, "beta": 1.0});
    let (code, v) = run_json(&["f-eval"], json!({"params": params, "x": ["3", "-3"]}));
    assert_eq!(code, 0);
    assert_eq!(
        (v["f"].as_f64(), v["case"].as_str()),
        (Some(1.0), Some("cone"))
    );
    let (_, v) = run_json(&["f-eval"], json!({"params": params, "x": ["0", "0"]}));
    assert_eq!(
        (v["f"].as_f64(), v["case"].as_str()),
        (Some(0.0), Some("vertex"))
    );
}

#[test]
fn compact_decide_lightlike_segment() {
    let k = json!({"parts": [{"kind": "segment", "p": ["0", "0"], "q": ["1", "1"]}]});
    let (code, v) = run_json(&["compact-decide"], k);
    assert_eq!(code, 0);
    assert_eq!(v["compact"], false);
    assert_eq!(v["counterexample"]["kind"], "LightlikeSegment");
    assert_eq!(v["agree"], true);

    let k = json!({"parts": [{"kind": "segment", "p": ["0", "0"], "q": ["2", "1"]}]});
    let (_, v) = run_json(&["compact-decide"], k.clone());
    assert_eq!(v["compact"], true);
    assert_eq!(v["certificate_verified"], true);
    let cert = v["via_axes"]["certificate"].clone();
    let (_, checked) = run_json(
        &["certificate-verify"],
        json!({"candidate": k, "certificate": cert}),
    );
    assert_eq!(checked["valid"], true);
}

#[test]
fn exit_codes() {
    let (code, text) = zkit(&["z-path"], "{not json", &[]);
    assert_eq!(code, 2);
    assert!(text.contains("MalformedInput"));
    let square = json!({"o": ["0", "0"], "t": ["1", "0"], "s": ["0", "1"]});
    let (code, v) = run_json(
        &["winding"],
        json!({"parallelogram": square, "x": ["1/2", "0"]}),
    );
    assert_eq!(code, 1);
    assert_eq!(v["error"], "PointOnLoop");
    let (code, v) = run_json(
        &["z-path", "--k", "2"],
        json!({"p": ["0", "0"], "q": ["1", "1"]}),
    );
    assert_eq!(code, 1);
    assert_eq!(v["error"], "DimensionMismatch");
}

#[test]
fn zeeman_ball_round_trips_through_other_commands() {
    let (_, ball) = run_json(&["zeeman-ball"], json!({"p": ["0", "0"], "radius": "1"}));
    let open = ball["open"].clone();
    let (_, v) = run_json(&["certificate-verify"], json!({"open": open}));
    assert_eq!(v["valid"], true);
    let irrational = json!([{"a": "0", "b": "1/3", "c": "2"}, {"a": "0", "b": "1/5", "c": "2"}]);
    let (code, v) = run_json(&["rationalize"], json!({"open": open, "point": irrational}));
    assert_eq!(code, 0);
    assert_eq!(v["in_open"], true);
    let (_, v) = run_json(&["zeno-inside"], json!({"open": open, "p": ["0", "0"]}));
    assert_eq!(v["all_inside"], true);
    assert_eq!(v["verdict"]["is_zeno"], "yes");

    let mut tampered = open.clone();
    tampered["region"]["members"][1]["at"] = json!(["1", "0"]);
    let (_, v) = run_json(&["certificate-verify"], json!({"open": tampered}));
    assert_eq!(v["valid"], false);
}

#[test]
fn seeded_commands_are_deterministic() {
    let region = json!({"region": {"kind": "open_ball", "center": ["0", "0"], "radius": "1"}});
    let args = ["region-check", "--seed", "42", "--samples", "20"];
    let (_, a) = zkit(&args, &region.to_string(), &[]);
    let (_, b) = zkit(&args, &region.to_string(), &[]);
    assert_eq!(a, b);
    let v: Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["seed"], 42);
    assert_eq!(v["axes_checked"], 20);
    let (_, c) = zkit(
        &["region-check", "--samples", "20"],
        &region.to_string(),
        &[("ZKIT_SEED", "42")],
    );
    assert_eq!(a, c);
}

#[test]
fn f_scan_emits_csv() {
    let input = json!({"params": {"p": ["0", "0"], "e": ["1", "0"], "alpha": 1.0, "beta": 1.0}});
    let args = ["f-scan", "--axes", "3", "--samples", "10", "--seed", "5"];
    let (code, csv) = zkit(&args, &input.to_string(), &[]);
    assert_eq!(code, 0);
    let lines: Vec<_> = csv.lines().collect();
    assert_eq!(lines[0], "axis_id,n,t,f,bound");
    assert_eq!(lines.len(), 1 + 30);
    for line in &lines[1..] {
        let cols: Vec<f64> = line.split(',').map(|c| c.parse().unwrap()).collect();
        assert!(cols[3] <= cols[4] + 1e-12);
    }
    assert_eq!(zkit(&args, &input.to_string(), &[]).1, csv);
}

#[test]
fn distinguish_and_z_path() {
    let p1 = json!({"o": ["0", "0"], "t": ["1", "0"], "s": ["0", "1"]});
    let p2 = json!({"o": ["0", "0"], "t": ["2", "0"], "s": ["0", "1"]});
    let (code, v) = run_json(&["distinguish"], json!({"p1": p1, "p2": p2}));
    assert_eq!(code, 0);
    assert_eq!(v["outcome"], "certificate");
    assert_ne!(v["w1"], v["w2"]);
    let (_, v) = run_json(&["distinguish"], json!({"p1": p1, "p2": p1}));
    assert_eq!(v["error"], "PreconditionViolated");
    let (_, v) = run_json(&["z-path"], json!({"p": ["0", "0"], "q": ["1", "1"]}));
    assert_eq!(v["path"]["vertices"][1], json!(["1/2", "5/2"]));
    assert_eq!(v["verified"], true);
}

#[test]
fn demos_hold_and_out_file() {
    let dir = std::env::temp_dir().join(format!("zkit-demo-{}", std::process::id()));
    let path = dir.with_extension("json");
    let (code, stdout) = zkit(
        &["demo", "--samples", "32", "--out", path.to_str().unwrap()],
        "",
        &[],
    );
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(v["all_hold"], true);
    assert_eq!(v["demos"].as_object().unwrap().len(), 10);
    let (_, list) = zkit(&["demo", "--list"], "", &[]);
    assert!(list.contains("lightlike-zeno"));
    let (code, _) = zkit(&["demo", "--name", "nope"], "", &[]);
    assert_eq!(code, 2);
}
