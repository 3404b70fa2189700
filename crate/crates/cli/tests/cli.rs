use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_altext")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn dims_text_and_csv() {
    let o = run(&["dims", "--max", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), " 1  1  1\n 1  3  4\n 1  4 10\n");
    let o = run(&["dims", "--max", "1", "--output-format", "csv"]);
    assert_eq!(stdout(&o), "i,0,1\n0,1,1\n1,1,3\n");
    let o = run(&["dims", "--max", "0", "--output-format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["matrix"], serde_json::json!([[1]]));
}

#[test]
fn dims_diagonal() {
    let o = run(&["dims", "--max", "6", "--output-format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let diag: Vec<u64> = (0..7).map(|i| v["matrix"][i][i].as_u64().unwrap()).collect();
    assert_eq!(diag, [1, 3, 10, 27, 69, 161, 361]);
}

#[test]
fn normal_forms() {
    let o = run(&["normal-form", "W1*W0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "W0*W1 + (1-q^-2)*G1 - (1-q^-2)*GT1\n");
    assert_eq!(stdout(&run(&["normal-form", "W0 * W1"])), "W0*W1\n");
    let o = run(&["normal-form", "GT1*G1 - G1*GT1", "--output-format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["normal_form"], "-(q^2-1)*W0*W2 + (q^2-1)*W-1*W1");
}

#[test]
fn normal_form_errors_exit_2() {
    let o = run(&["normal-form", "W1*+W0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("position"));
    let o = run(&["normal-form", "G40"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_scopes() {
    let o = run(&["verify", "--scope", "uqp", "--max-index", "0", "--output-format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["pass"], true);
    for row in v["results"].as_array().unwrap() {
        if !row["l"].is_null() {
            assert_eq!(row["k"], 0);
            assert_eq!(row["l"], 0);
        }
    }
    let o = run(&["verify", "--scope", "uqp", "--max-index", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with(" 0 failed\n"));
    let o = run(&["verify", "--scope", "appendix", "--truncation", "2"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn verify_json_is_byte_stable() {
    let args = ["verify", "--scope", "ucal", "--max-index", "1", "--max-degree", "2", "--output-format", "json"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn verify_csv_has_header() {
    let o = run(&["verify", "--scope", "uqp", "--max-index", "0", "--output-format", "csv"]);
    assert!(stdout(&o).starts_with("suite,id,k,l,pass,residual\n"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["verify", "--scope", "nowhere"]).status.code(), Some(2));
    assert_eq!(run(&["dims", "--truncation", "0"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["dims", "--config", "/nonexistent/altext.toml"]).status.code(), Some(2));
}

#[test]
fn config_file_then_flags() {
    let dir = std::env::temp_dir().join(format!("altext-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("altext.toml");
    std::fs::write(&path, "output_format = \"csv\"\nmax_index = 1\n").unwrap();
    let p = path.to_str().unwrap();
    assert_eq!(stdout(&run(&["dims", "--max", "1", "--config", p])), "i,0,1\n0,1,1\n1,1,3\n");
    let o = run(&["dims", "--max", "1", "--config", p, "--output-format", "text"]);
    assert_eq!(stdout(&o), "1 1\n1 3\n");
    std::fs::write(&path, "bogus = 3\n").unwrap();
    assert_eq!(run(&["dims", "--config", p]).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn central_reports() {
    let o = run(&["central", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("image: (q+q^-1)*1⊗z1\n"), "{text}");
    assert!(text.contains("PASS"));
    let o = run(&["central", "0", "--output-format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["formal"], "1");
    assert_eq!(v["pass"], true);
    let o = run(&["central", "3", "--max-index", "2", "--output-format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["image"], "(q^3+q^-3)*1⊗z3 + (q+q^-1)*1⊗z1*z2");
    assert_eq!(v["image_matches"], true);
}

#[test]
fn rules_dump() {
    let o = run(&["rules", "--table-index", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["max_index"], 1);
    assert_eq!(v["truncation"], 3);
}
