use std::process::{Command, Output};

fn noncent(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_noncent"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = noncent(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn lines(args: &[&str]) -> Vec<String> {
    stdout(args).lines().map(str::to_string).collect()
}

#[test]
fn analyze_reports() {
    let d8 = stdout(&["analyze", "dihedral:4", "--format", "kv"]);
    assert!(d8.contains("regular=true\n") && d8.contains("\ndegree=6\n"), "{d8}");
    let c6 = stdout(&["analyze", "cyclic:6", "--format", "kv"]);
    assert!(c6.contains("regular=true\n") && c6.contains("\ndegree=0\n"), "{c6}");
    let m32 = stdout(&["analyze", "M:32", "--format", "kv"]);
    assert!(m32.contains("\ndegree=24\n"), "{m32}");
    let text = stdout(&["analyze", "dihedral:4 x cyclic:3"]);
    assert!(text.contains("degree:          18"), "{text}");
}

#[test]
fn analyze_other_sources() {
    let pres = stdout(&["analyze", "< a,b | a^4, b^2, b*a*b^-1 = a^-1 >", "--format", "kv"]);
    assert!(pres.contains("order=8\n") && pres.contains("\ndegree=6\n"));
    let entry = stdout(&["analyze", "order32#[32,49]", "--format", "kv"]);
    assert!(entry.starts_with("label=[32,49]\n") && entry.contains("\ndegree=30\n"));
}

#[test]
fn analyze_rejects_bad_sources() {
    for source in ["nope:3", "dihedral:", "order8", "order8#[8,9]", "< a | b >"] {
        let out = noncent(&["analyze", source]);
        assert_eq!(out.status.code(), Some(2), "{source}");
        assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
    }
}

#[test]
fn search_examples() {
    assert_eq!(lines(&["search", "--catalog", "order8.cat", "--reduced"]), ["[8,3]", "[8,4]"]);
    assert_eq!(lines(&["search", "--catalog", "order16.cat", "--regular", "--degree", "12"]).len(), 6);
    assert_eq!(
        lines(&["search", "--catalog", "order32.cat", "--reduced", "--degree", "30"]),
        ["[32,49]", "[32,50]"]
    );
    let heis = lines(&["search", "--catalog", "odd", "--induced-regular"]);
    assert!(heis.contains(&"[27,3]".to_string()) && heis.contains(&"[243,65]".to_string()));
}

#[test]
fn search_table1() {
    let rows = lines(&["search", "--catalog", "order8,order16,order32", "--table1"]);
    assert_eq!(rows.len(), 4);
    assert_eq!(rows[0], "n=6 (2): [8,3] [8,4]");
    assert!(rows[3].starts_with("n=30 (2):"));
}

#[test]
fn verify_passes_and_reports() {
    let out = stdout(&["verify", "--catalog", "order8.cat,order16.cat,order32.cat"]);
    assert!(out.lines().last().unwrap().contains(" 0 failed"), "{out}");
    let creg = stdout(&["verify", "--checks", "creg", "--catalog", "order32.cat"]);
    assert!(creg.contains(" pass ") && !creg.contains(" FAIL "));
}

#[test]
fn verify_input_errors_exit_2() {
    let dir = std::env::temp_dir().join(format!("noncent-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("corrupted.cat");
    std::fs::write(&bad, "name: X\nkind: table\norder: 3\n0 1 2\n1 2\n").unwrap();
    let out = noncent(&["verify", "--catalog", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let wrong = dir.join("wrong-order.cat");
    std::fs::write(&wrong, "name: X\nkind: presentation\norder: 5\npres: < a | a^4 >\n").unwrap();
    assert_eq!(noncent(&["verify", "--catalog", wrong.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(noncent(&["verify", "--catalog", "order8", "--checks", "zz"]).status.code(), Some(2));
    assert_eq!(noncent(&["verify", "--catalog", "missing.cat"]).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn coset_limit_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_noncent"))
        .args(["analyze", "order64#[64,3]"])
        .env("NONCENT_MAX_COSETS", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("coset"));
}

#[test]
fn graph_exports() {
    assert_eq!(lines(&["graph", "quaternion:8", "--induced", "--format", "edge-list"]).len(), 12);
    assert_eq!(stdout(&["graph", "cyclic:4", "--format", "edge-list"]), "");
    assert_eq!(
        stdout(&["graph", "dihedral:4", "--format", "parts-json"]),
        "{\"parts\": [[0,2],[1,3],[4,6],[5,7]], \"induced\": false}\n"
    );
    let dot = stdout(&["graph", "dihedral:3"]);
    assert!(dot.starts_with("graph noncentralizer {") && dot.matches(" -- ").count() == 14);
    assert_eq!(noncent(&["graph", "dihedral:4", "--format", "png"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "--catalog", "order16", "--all"];
    assert_eq!(stdout(&args), stdout(&args));
}
