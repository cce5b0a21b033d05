use std::io::Write;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sphdual"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn doc(src: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::Builder::new().suffix(".toml").tempfile().unwrap();
    f.write_all(src.as_bytes()).unwrap();
    f
}

fn path(f: &tempfile::NamedTempFile) -> &str {
    f.path().to_str().unwrap()
}

const SL2: &str = "[ambient]\ntype = \"A1\"\n[wss]\nsigma = [[1]]\n";
const G2_SIMPLE: &str = "[ambient]\ntype = \"G2\"\n[wss]\nsigma = [[1, 0], [0, 1]]\n";
const HOROSPHERICAL: &str = "[ambient]\ntype = \"A3\"\n[wss]\nxi = \"max\"\nsigma = []\nsp = [2]\n";
const F4_SO9: &str =
    "[ambient]\ntype = \"F4\"\n[wss]\nsigma = [[1, 2, 3, 2]]\nsp = [1, 2, 3]\n";

#[test]
fn validate_exit_codes() {
    let ok = doc(SL2);
    let o = run(&["validate", path(&ok)]);
    assert_eq!(o.status.code(), Some(0));

    let bad = doc("[ambient]\ntype = \"A2\"\n[wss]\nsigma = [[1, 0], [1, 1]]\n");
    let o = run(&["validate", path(&bad)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("axiom 4"), "{}", stdout(&o));

    let junk = doc("[ambient\ntype = B3");
    assert_eq!(run(&["validate", path(&junk)]).status.code(), Some(2));
    assert_eq!(run(&["validate", "/nonexistent.toml"]).status.code(), Some(2));
}

#[test]
fn dualize_text_lines() {
    let g2 = doc(G2_SIMPLE);
    let o = run(&["dualize", path(&g2)]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("g_dual_X: G2"), "{}", stdout(&o));

    let f4 = doc(F4_SO9);
    let out = stdout(&run(&["dualize", path(&f4)]));
    let l_hat = out.lines().find(|l| l.starts_with("l_hat: ")).unwrap();
    assert!(sphdual::liealg::same(&l_hat[7..], "sp(6)").unwrap(), "{out}");

    let h = doc(HOROSPHERICAL);
    let out = stdout(&run(&["dualize", path(&h)]));
    assert!(out.contains("g_dual_X: t^2"), "{out}");

    let bad = doc("[ambient]\ntype = \"A2\"\n[wss]\nsigma = [[1, 0], [1, 1]]\n");
    assert_eq!(run(&["dualize", path(&bad)]).status.code(), Some(1));
}

#[test]
fn structured_output_round_trips() {
    let f4 = doc(F4_SO9);
    let first = stdout(&run(&["dualize", "--format", "structured", path(&f4)]));
    let report: sphdual::dualize::DualReport = serde_json::from_str(&first).unwrap();
    let value = serde_json::to_value(&report).unwrap();
    let again = serde_json::to_string_pretty(&value).unwrap() + "\n";
    assert_eq!(first, again);
    let second = stdout(&run(&["dualize", "--format", "structured", path(&f4)]));
    assert_eq!(first, second);
}

#[test]
fn enumerate_counts() {
    let g2 = stdout(&run(&["enumerate", "--rank", "2", "--ambient", "G2"]));
    assert!(g2.starts_with("2 systems"), "{g2}");
    let f4 = stdout(&run(&["enumerate", "--rank", "2", "--ambient", "F4"]));
    assert!(f4.starts_with("5 systems"), "{f4}");
    let seq = stdout(&run(&["enumerate", "--rank", "2", "--ambient", "F4", "--sequential"]));
    assert_eq!(f4, seq);
    let o = run(&["enumerate", "--rank", "1", "--ambient", "A9"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(run(&["enumerate", "--rank", "3", "--ambient", "A2"]).status.code(), Some(2));
}

#[test]
fn tables_match_golden_files() {
    assert!(run(&["tables", "--which", "rank1"]).status.success());
    assert!(run(&["tables", "--which", "rank2"]).status.success());
    let wrong = doc("A1 | α1 | 1\n");
    let o = run(&["tables", "--which", "rank1", "--golden", path(&wrong)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("- A1 | α1 | 1"));
}

#[test]
fn fold_quotients() {
    let e6 = stdout(&run(&["fold", "--type", "E6", "--involution", "6,2,5,4,3,1"]));
    assert!(e6.contains("folded: F4"), "{e6}");
    let b3 = stdout(&run(&["fold", "--type", "B3", "--involution", "3,2,1"]));
    assert!(b3.contains("folded: G2"), "{b3}");
    let a3 = run(&["fold", "--type", "A3", "--involution", "2,1,3"]);
    assert_eq!(a3.status.code(), Some(1));
    let broken = run(&["fold", "--type", "A3", "--involution", "2,3,1"]);
    assert_eq!(broken.status.code(), Some(2));
}

#[test]
fn lgroup_table() {
    let d4 = doc(
        "[ambient]\ntype = \"D4\"\n[wss]\nsigma = [[2, 2, 1, 1]]\nsp = [2, 3, 4]\n\
         [action]\ngenerators = [[1, 2, 4, 3]]\n",
    );
    let out = stdout(&run(&["lgroup", path(&d4)]));
    assert!(out.contains("group order: 2"), "{out}");
    assert!(out.contains("+1/-1") && out.contains(": -1"), "{out}");

    let d2 = doc(
        "[ambient]\ntype = \"A1xA1\"\n[wss]\nsigma = [[1, 1]]\n[action]\ngenerators = [[2, 1]]\n",
    );
    let wide = stdout(&run(&["lgroup", path(&d2)]));
    let narrow = stdout(&run(&["lgroup", "--conjectural-d2", path(&d2)]));
    assert_ne!(wide, narrow);

    let moved = doc("[ambient]\ntype = \"A2\"\n[wss]\nsigma = [[1, 1]]\nsp = []\n[action]\ngenerators = [[2, 2]]\n");
    assert_eq!(run(&["lgroup", path(&moved)]).status.code(), Some(1));
}

#[test]
fn fixtures_run() {
    let o = run(&["fixtures"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("pass        G2/sl(3)"));
    assert_eq!(run(&["fixtures", "--file", "/nonexistent.toml"]).status.code(), Some(2));
}
