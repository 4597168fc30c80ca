use std::process::{Command, Output};

fn yugong(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_yugong"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn generate_is_deterministic() {
    let a = yugong(&["generate", "--k", "2", "--format", "struct"]);
    let b = yugong(&["generate", "--k", "2", "--format", "struct"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["period"], 60);
    assert_eq!(v["weight"], 29);
    assert_eq!(v["ascii"].as_str().unwrap().len(), 60);

    let minus = yugong(&["generate", "--k", "2", "--delta", "-1", "--format", "struct"]);
    let w: serde_json::Value = serde_json::from_slice(&minus.stdout).unwrap();
    assert_ne!(v["ascii"], w["ascii"]);
}

#[test]
fn generate_csv_has_one_row() {
    let o = yugong(&["generate", "--k", "1", "--format", "csv"]);
    let text = stdout(&o);
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].starts_with("k,delta,modulus,period"));
    assert!(lines[1].starts_with("1,1,0x7,12,"));
}

#[test]
fn autocorrelation_table_reproduces() {
    let o = yugong(&["tables", "--which", "1"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("59 cells, 0 mismatches"));
}

#[test]
fn complexity_table_bounds() {
    let o = yugong(&["tables", "--which", "4", "--k-max", "5", "--format", "csv"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let bounds: Vec<u64> = text
        .lines()
        .skip(2)
        .map(|l| l.split(',').nth(3).unwrap().parse().unwrap())
        .collect();
    assert_eq!(bounds, [6, 55, 240, 1020, 4072]);
}

#[test]
fn verify_congruences_report() {
    let o = yugong(&["verify", "--k", "3", "--only", "congruences"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("Key-10"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn verify_lemma_shows_gcd() {
    let o = yugong(&["verify", "--k", "2", "--only", "lemma2"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("[gcd 5]"));
}

#[test]
fn verify_reports_minus_delta_shortfall() {
    let o = yugong(&["verify", "--k", "2", "--delta", "-1", "--only", "congruences"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL complexity/k=2/delta=-1"));
}

#[test]
fn verify_writes_json_report() {
    let dir = std::env::temp_dir().join(format!("yugong-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let o = yugong(&["verify", "--k", "2", "--format", "struct", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["version"], 1);
    assert!(v["records"].as_array().unwrap().iter().all(|r| r["pass"] == true));
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn prime_scan() {
    let o = yugong(&["scan", "--primes", "--max-k", "24"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("prime k: 4, 24"));
}

#[test]
fn conjecture_scan() {
    let o = yugong(&["scan", "--conjecture", "--ks", "4,8", "--format", "csv"]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o),
        "k,gcd,route,counterexample\n4,0x1,reduced+direct,false\n8,0x1,reduced+direct,false\n"
    );
}

#[test]
fn exit_codes() {
    assert_eq!(yugong(&["verify", "--k", "1"]).status.code(), Some(2));
    assert_eq!(yugong(&["generate", "--k", "2", "--delta", "2"]).status.code(), Some(2));
    assert_eq!(yugong(&["generate", "--k", "3", "--modulus", "0x13"]).status.code(), Some(2));
    assert_eq!(yugong(&["scan", "--conjecture", "--ks", "6"]).status.code(), Some(2));
    assert_eq!(yugong(&["verify", "--k", "9"]).status.code(), Some(3));
}
