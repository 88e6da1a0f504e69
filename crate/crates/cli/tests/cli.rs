use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vassiliev"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

#[test]
fn validate_passes_symbolically() {
    let o = run(&["--command", "validate", "--alpha", "symbolic"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("all passed: true"));
    assert_eq!(s.matches(" pass (").count(), 8);
}

#[test]
fn corrupted_bracket_is_caught() {
    let o = run(&["--command", "validate", "--alpha", "2", "--corrupt", "0,3"]);
    assert_eq!(o.status.code(), Some(1));
    let s = stdout(&o);
    assert!(s.contains("FAIL"));
    assert!(s.contains("witness"));
}

#[test]
fn kricker_csv_matches_closed_form() {
    let o = run(&["--command", "kricker", "--k", "2..10", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.starts_with("k,computed,expected,match"));
    assert!(s.contains("4,1728,1728,true"));
    assert_eq!(s.lines().count(), 6);
    assert!(!s.contains("false"));
}

#[test]
fn kricker_symbolic_k2_is_zero() {
    let o = run(&["--command", "kricker", "--k", "2", "--alpha", "symbolic"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("identically"));
}

#[test]
fn odd_k_is_a_usage_error() {
    assert_eq!(run(&["--command", "kricker", "--k", "3"]).status.code(), Some(2));
    assert_eq!(run(&["--command", "kricker", "--k", "3..9"]).status.code(), Some(2));
}

#[test]
fn certify_json() {
    let o = run(&["--command", "certify", "--k", "4", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["format"], "d-element-certificate v1");
    assert_eq!(v["d"], 15);
    assert_eq!(v["all_hold"], true);
    assert_eq!(v["chi_prime_d"], "-108*s2^3*s3^3 - 729*s3^5");
    let roots: Vec<&str> = v["alpha"]["roots"].as_array().unwrap().iter().map(|r| r.as_str().unwrap()).collect();
    for r in ["-2", "-1", "-1/2", "0", "1"] {
        assert!(roots.contains(&r), "{roots:?}");
    }
}

#[test]
fn certify_with_e2_gives_d17() {
    let o = run(&["--command", "certify", "--k", "4", "--q", "s2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["d"], 17);
}

#[test]
fn certify_rejects_q_divisible_by_t() {
    assert_eq!(run(&["--command", "certify", "--k", "4", "--q", "t*s2"]).status.code(), Some(2));
}

#[test]
fn eval_fixtures() {
    let cases = [
        ("circle.txt", "sl2", "state-sum", "1"),
        ("chord.txt", "sl2", "state-sum", "4"),
        ("wheel2.txt", "d21", "state-sum", "0"),
        ("wheel2.txt", "sl2", "verma", "4*n^2 + 8*n"),
    ];
    for (f, alg, mode, want) in cases {
        let o = run(&["--command", "eval", "--diagram", &fixture(f), "--algebra", alg, "--mode", mode, "--alpha", "2"]);
        assert_eq!(o.status.code(), Some(0), "{f}");
        assert_eq!(stdout(&o).trim(), want, "{f} {alg} {mode}");
    }
}

#[test]
fn eval_errors() {
    let broken = run(&["--command", "eval", "--diagram", &fixture("broken.txt")]);
    assert_eq!(broken.status.code(), Some(2));
    let missing = run(&["--command", "eval", "--diagram", "/nonexistent/d.txt"]);
    assert_eq!(missing.status.code(), Some(2));
    let big = run(&["--command", "eval", "--diagram", &fixture("wheel12.txt"), "--algebra", "d21", "--alpha", "2"]);
    assert_eq!(big.status.code(), Some(3));
}

#[test]
fn dims_table() {
    let o = run(&["--command", "dims", "--max-degree", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    for line in ["m=1 A=1 A(4T)=1", "m=2 A=2 A(4T)=2", "m=3 A=3 A(4T)=3"] {
        assert!(s.contains(line), "{s}");
    }
}

#[test]
fn out_writes_a_file() {
    let path = std::env::temp_dir().join(format!("vassiliev-cli-{}.json", std::process::id()));
    let o = run(&["--command", "kricker", "--k", "4", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).ok();
    assert!(v.to_string().contains("1728"));
}
