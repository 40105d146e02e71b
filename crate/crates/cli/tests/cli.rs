use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_cyclecensus"))
        .arg("--no-timestamp")
        .args(args)
        .env_remove("CYCLECENSUS_BUDGET")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    if let Some(input) = stdin {
        child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    } else {
        drop(child.stdin.take());
    }
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_str(stdout(o).trim()).unwrap()
}

fn gen(family: &str, param: &str) -> String {
    let o = run(&["gen", "--family", family, "--param", param], None);
    assert!(o.status.success());
    stdout(&o)
}

#[test]
fn gen_r7() {
    let v: serde_json::Value = serde_json::from_str(&gen("R", "7")).unwrap();
    assert_eq!(v["boundary"], 21);
    assert_eq!(v["chords"].as_array().unwrap().len(), 7);
}

#[test]
fn gen_figure_five() {
    let o = run(&["gen", "--family", "S", "--param", "7", "--attach", "0,1,3,5"], None);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["boundary"], 11);
    assert_eq!(v["chords"].as_array().unwrap().len(), 4);
}

#[test]
fn gen_usage_errors() {
    let o = run(&["gen", "--family", "H", "--param", "6"], None);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("q ≡ 0 (mod 4)"));
    let o = run(&["gen", "--family", "Q", "--param", "6"], None);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn gen_dot() {
    let o = run(&["gen", "--family", "L", "--param", "3", "--dot", "-"], None);
    let text = stdout(&o);
    assert!(text.contains("graph G {"));
    assert!(text.contains("style=dashed"));
}

#[test]
fn census_both_engines_on_r7() {
    let o = run(&["census", "--engine", "both"], Some(&gen("R", "7")));
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!((v["odd"].as_str(), v["even"].as_str()), (Some("128"), Some("7")));
    assert_eq!(v["match"], true);
}

#[test]
fn census_h8_ratio() {
    let o = run(&["census", "--approx"], Some(&gen("H", "8")));
    let v = json(&o);
    assert_eq!(v["ratio_eo"], "15/2");
    assert_eq!(v["ratio_eo_approx"], "7.50000");
}

#[test]
fn census_oracle_on_tree() {
    let o = run(
        &["census", "--engine", "oracle", "-"],
        Some(r#"{"n":5,"edges":[[0,1],[1,2],[1,3],[3,4]]}"#),
    );
    let v = json(&o);
    assert_eq!((v["odd"].as_str(), v["even"].as_str()), (Some("0"), Some("0")));
}

#[test]
fn census_budget_exit_code() {
    let k9: Vec<String> = (0..9)
        .flat_map(|u| (u + 1..9).map(move |v| format!("[{u},{v}]")))
        .collect();
    let input = format!(r#"{{"n":9,"edges":[{}]}}"#, k9.join(","));
    let o = Command::new(env!("CARGO_BIN_EXE_cyclecensus"))
        .args(["--no-timestamp", "census", "--engine", "oracle", "-"])
        .env("CYCLECENSUS_BUDGET", "1000")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .and_then(|mut c| {
            c.stdin.take().unwrap().write_all(input.as_bytes())?;
            c.wait_with_output()
        })
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn census_parse_error() {
    let o = run(&["census"], Some("{not json"));
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["census"], Some(r#"{"boundary":6,"chords":[[0,3],[1,4]]}"#));
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("cross"));
}

#[test]
fn classify_examples() {
    let z3 = run(&["gen", "--family", "Z", "--param", "3"], None);
    let o = run(&["classify"], Some(&stdout(&z3)));
    assert_eq!(json(&o), serde_json::json!({"kind": "Zd", "d": 3}));

    let k4 = r#"{"n":4,"edges":[[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]}"#;
    let o = run(&["classify"], Some(k4));
    assert!(o.status.success());
    assert_eq!(json(&o)["reason"], "not K4-minor-free");

    let c12: Vec<String> = (0..12).map(|i| format!("[{i},{}]", (i + 1) % 12)).collect();
    let o = run(&["classify"], Some(&format!(r#"{{"n":12,"edges":[{}]}}"#, c12.join(","))));
    assert_eq!(json(&o), serde_json::json!({"kind": "Cycle", "t": 12}));
}

#[test]
fn verify_jamison() {
    let o = run(&["verify", "--suite", "jamison", "--count", "1000", "--seed", "7"], None);
    assert!(o.status.success());
    let text = stdout(&o);
    let summary: serde_json::Value = serde_json::from_str(text.lines().last().unwrap()).unwrap();
    assert_eq!(summary["failed"], 0);
    assert!(summary["passed"].as_u64().unwrap() >= 1000);
}

#[test]
fn verify_is_reproducible() {
    let args = ["verify", "--suite", "dual_path", "--count", "50", "--seed", "11"];
    let a = run(&args, None);
    let b = run(&[&args[..], &["--jobs", "1"]].concat(), None);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_out_file() {
    let dir = std::env::temp_dir().join(format!("cyclecensus-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("reports.jsonl");
    let o = run(
        &["verify", "--suite", "odd_faces", "--count", "20", "--out", path.to_str().unwrap()],
        None,
    );
    assert!(o.status.success());
    let reports = std::fs::read_to_string(&path).unwrap();
    assert!(reports.lines().all(|l| l.contains("\"check\":\"odd_faces\"")));
    let summary = json(&o);
    assert_eq!(summary["checked"].as_u64().unwrap() as usize, reports.lines().count());
    std::fs::remove_dir_all(dir).unwrap();

    let o = run(&["verify", "--suite", "jamison", "--out", "/nonexistent/dir/x.jsonl"], None);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn sweeps() {
    let o = run(&["sweep", "--family", "R", "--from", "3", "--to", "21", "--step", "2"], None);
    assert!(o.status.success());
    assert!(stdout(&o).ends_with("# R oe ratio strictly increasing: true\n"));

    let o = run(&["sweep", "--family", "H", "--from", "4", "--to", "40", "--step", "4"], None);
    let text = stdout(&o);
    for (line, q) in text.lines().skip(1).zip((4..=40).step_by(4)) {
        let exact = line.split(',').nth(3).unwrap();
        assert_eq!(exact, format!("{}/2", 2 * q - 1));
    }

    let o = run(&["sweep", "--family", "T", "--from", "3", "--to", "15", "--step", "2"], None);
    assert!(o.status.success());
    assert!(stdout(&o).contains("11,12300,1100,123/11,11.1818"));

    let o = run(&["sweep", "--family", "S", "--from", "3", "--to", "5"], None);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn timestamp_goes_to_stderr() {
    let o = Command::new(env!("CARGO_BIN_EXE_cyclecensus"))
        .args(["gen", "--family", "L", "--param", "2"])
        .output()
        .unwrap();
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("# cyclecensus"));
    assert!(stdout(&o).starts_with('{'));
}
