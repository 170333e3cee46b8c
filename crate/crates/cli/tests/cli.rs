use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn engel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_engel")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

fn ok(args: &[&str]) -> String {
    let o = engel(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

fn code(args: &[&str]) -> i32 {
    engel(args).status.code().expect("exit code")
}

fn inline_file(body: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::Builder::new().suffix(".json").tempfile().unwrap();
    f.write_all(body.as_bytes()).unwrap();
    f
}

/// `Bett` rows of the table reports, in order.
fn bett_rows(out: &str) -> Vec<Vec<usize>> {
    out.lines()
        .filter(|l| l.starts_with("Bett"))
        .map(|l| l.split_whitespace().skip(1).map(|x| x.parse().unwrap()).collect())
        .collect()
}

#[test]
fn catalogs() {
    let f4 = ok(&["families", "show", "4"]);
    assert!(f4.contains("[y2,y4] = C244*y4"), "{f4}");
    assert_eq!(f4.lines().filter(|l| l.starts_with('[')).count(), 6);
    assert!(ok(&["families", "show", "1"]).contains("[y3,y4] = 0"));
    let list = ok(&["families", "list"]);
    assert_eq!(list.lines().count(), 6);
    assert!(list.contains("family 4: parameters C231, C234, C244"));
    assert_eq!(ok(&["types", "list"]).lines().count(), 12);
    assert!(ok(&["types", "show", "2", "--param", "a=3"]).contains("type 2 (a=3)"));
    assert_eq!(code(&["families", "show", "7"]), 1);
}

#[test]
fn dump_round_trips_through_inline() {
    let dump = ok(&["families", "dump", "4"]);
    let f = inline_file(&dump);
    let path = f.path().to_str().unwrap();
    assert!(ok(&["jacobi", "--inline", path]).contains("verdict: PASS"));
    let a = ok(&["betti", "--inline", path, "--complex", "tangent", "--weights", "1"]);
    let b = ok(&["betti", "--family", "4", "--complex", "tangent", "--weights", "1"]);
    assert_eq!(bett_rows(&a), bett_rows(&b));
}

#[test]
fn jacobi_verdicts() {
    assert!(ok(&["jacobi", "--family", "2"]).contains("verdict: PASS"));
    let ansatz = ok(&["jacobi", "--ansatz"]);
    assert!(ansatz.contains("parameters (16)"));
    assert!(ansatz.contains("verdict: OPEN"));
    let abelian = inline_file(r#"{"basis_dim": 4, "brackets": []}"#);
    assert!(ok(&["jacobi", "--inline", abelian.path().to_str().unwrap()]).contains("verdict: PASS"));

    let broken = inline_file(
        r#"{"basis_dim": 4, "brackets": [{"i": 1, "j": 2, "coeffs": ["1", "0", "0", "0"]},
            {"i": 1, "j": 3, "coeffs": ["0", "1", "0", "0"]}]}"#,
    );
    let o = engel(&["jacobi", "--inline", broken.path().to_str().unwrap(), "--format", "json"]);
    assert_eq!(o.status.code(), Some(2));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"], "FAIL");
    assert!(!v["residuals"].as_array().unwrap().is_empty());

    let garbage = inline_file("{\"brackets\": [");
    assert_eq!(code(&["jacobi", "--inline", garbage.path().to_str().unwrap()]), 1);
    assert_eq!(code(&["jacobi", "--inline", "/nonexistent/algebra.json"]), 1);
}

#[test]
fn tangent_reports() {
    let out = ok(&["betti", "--family", "1", "--complex", "tangent", "--weights", "0,1,2"]);
    assert_eq!(bett_rows(&out), [vec![1, 2, 1, 0, 0], vec![1, 2, 1, 0, 0], vec![0, 1, 2, 1, 0, 0]]);
    assert!(out.contains("SpaD     4   37  108  142   88   21"));
    assert_eq!(out.matches("mode: randomized (seed 20210731, trials 3, range 10000)").count(), 3);
}

#[test]
fn extended_csv() {
    let out = ok(&["betti", "--family", "6", "--complex", "extended", "--weights", "-2", "--format", "csv"]);
    let mut lines = out.lines();
    assert!(lines.next().unwrap().starts_with("# extended complex, weight -2, family 6, mode randomized seed"));
    assert_eq!(lines.next(), Some("m,dim,ker,betti"));
    let betti: Vec<&str> = lines.map(|l| l.rsplit(',').next().unwrap()).collect();
    assert_eq!(betti, ["1", "2", "1", "1", "2", "1"]);
}

#[test]
fn partial_specialization() {
    let out = ok(&["betti", "--family", "4", "--complex", "cotangent", "--weights", "-5", "--specialize", "C244=0"]);
    assert!(out.contains("specialization: C244=0"));
    let kerd: Vec<&str> = out.lines().find(|l| l.starts_with("KerD")).unwrap().split_whitespace().collect();
    let m: Vec<&str> = out.lines().find(|l| l.starts_with("m ")).unwrap().split_whitespace().collect();
    let at = m.iter().position(|x| *x == "2").unwrap();
    assert_eq!(kerd[at], "28");

    let s = ok(&["strata", "--family", "4", "--complex", "cotangent", "--weight", "-5", "--m", "2", "--assign", "C231=1,C234=1,C244=0"]);
    assert!(s.ends_with("rank 0\nkernel 28\n"), "{s}");
    let generic = ok(&["strata", "--family", "4", "--complex", "cotangent", "--weight", "-5", "--m", "2", "--assign", "C231=1,C234=1,C244=1", "--format", "csv"]);
    assert_eq!(generic, "m,rank,kernel\n2,1,27\n");
    assert_eq!(code(&["strata", "--family", "4", "--complex", "cotangent", "--weight", "-5", "--m", "2", "--assign", "C244=0"]), 1);
}

#[test]
fn deterministic_json_and_output_file() {
    let args = ["betti", "--family", "2,1", "--complex", "cotangent", "--weights", "-4,-3", "--seed", "9", "--format", "json"];
    let a = ok(&args);
    assert_eq!(a, ok(&args));
    let v: Value = serde_json::from_str(&a).unwrap();
    let reports = v.as_array().unwrap();
    let order: Vec<(i64, i64)> =
        reports.iter().map(|r| (r["algebra"]["id"].as_i64().unwrap(), r["weight"].as_i64().unwrap())).collect();
    assert_eq!(order, [(2, -4), (2, -3), (1, -4), (1, -3)]);
    assert!(reports.iter().all(|r| r["mode"]["seed"] == 9));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("reports.json");
    let mut with_output = args.to_vec();
    with_output.extend(["--output", path.to_str().unwrap()]);
    assert_eq!(ok(&with_output), "");
    assert_eq!(std::fs::read_to_string(&path).unwrap(), a);
}

#[test]
fn symbolic_mode_and_absolute_weight_header() {
    let out = ok(&["betti", "--family", "3", "--complex", "tangent", "--weights", "1", "--symbolic"]);
    assert!(out.contains("mode: symbolic"), "{out}");
    let header = ok(&["betti", "--family", "1", "--complex", "cotangent", "--weights", "-6", "--paper-table"]);
    assert!(header.starts_with("cotangent complex, weight 6, family 1"));
}

#[test]
fn elc_commands() {
    let sym = ok(&["elc", "--type", "1", "--symbolic"]);
    assert_eq!(sym.lines().next(), Some("p4*Det(3,4)^3"));
    assert!(sym.contains("check: MATCH"));
    let w = ok(&["elc", "--type", "2", "--witness", "p=0,0,0,1;q=1,0,1,0", "--param", "a=2"]);
    assert_eq!(w.lines().last(), Some("NONZERO"));
    let plain = ok(&["elc", "--type", "2", "--param", "a=1"]);
    assert_eq!(plain, "type 2 (a=1): 0\n");

    let nine = engel(&["elc", "--type", "9", "--symbolic", "--format", "json"]);
    assert_eq!(nine.status.code(), Some(2));
    let v: Value = serde_json::from_str(&stdout(&nine)).unwrap();
    assert_eq!(v["matches"], false);

    let five = engel(&["elc", "--type", "5", "--witness", "p=0,0,0,1;q=1,0,1,0"]);
    assert_eq!(five.status.code(), Some(2));
    assert_eq!(stdout(&five).lines().last(), Some("ZERO"));

    assert_eq!(code(&["elc", "--type", "5", "--param", "a=0,b=1"]), 2);
    assert_eq!(code(&["elc", "--type", "9", "--param", "b=2"]), 2);
    assert_eq!(code(&["elc", "--type", "2", "--param", "c=1"]), 1);
    assert_eq!(code(&["elc", "--type", "13"]), 1);
    assert_eq!(code(&["elc", "--type", "2", "--witness", "p=1,2;q=3"]), 1);
}

#[test]
fn foliations() {
    assert!(ok(&["foliation", "--family", "5"]).starts_with("family 5: span(C234*y1 - y2)\n"));
    let v: Value = serde_json::from_str(&ok(&["foliation", "--family", "1", "--format", "json"])).unwrap();
    assert_eq!(v["foliation"]["solution"], "line");
    assert_eq!(v["closure_verified"], true);
}

#[test]
fn usage_errors() {
    assert_eq!(code(&["betti", "--complex", "tangent", "--weights", "0"]), 1);
    assert_eq!(code(&["betti", "--family", "1", "--type", "2", "--complex", "tangent", "--weights", "0"]), 1);
    assert_eq!(code(&["betti", "--family", "1", "--complex", "sideways", "--weights", "0"]), 1);
    assert_eq!(code(&["betti", "--family", "1", "--complex", "tangent", "--weights", "x"]), 1);
    assert_eq!(code(&["betti", "--family", "1", "--complex", "tangent", "--weights", "0", "--trials", "0"]), 1);
    assert_eq!(code(&["foliation", "--family", "1", "--format", "csv"]), 1);
    assert_eq!(code(&["--help"]), 0);
}
