use std::fs;

use wmp::cli::run;

fn wmp(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("wmp").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

const C5_C5_GRAPH6: &str = "X?@LA_gc@cbgagoSKc@bHEMaKTEKDBEQ@HbHgK\\AgpSDp_gcpc_";

#[test]
fn product_graph6_is_frozen() {
    let (code, out, _) = wmp(&["product", "C5", "C5", "--format", "graph6"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim_end(), C5_C5_GRAPH6);
}

#[test]
fn product_text_and_edges() {
    let (code, out, _) = wmp(&["product", "K2", "K2"]);
    assert_eq!(code, 0);
    assert_eq!(out, "order 4 edges 2\n0: 3\n1: 2\n2: 1\n3: 0\n");
    let (_, out, _) = wmp(&["tensor", "K2", "K2", "--format", "edges"]);
    assert_eq!(out, "0 3\n1 2\n");
}

#[test]
fn classify_reports_case_and_exit_codes() {
    let (code, out, _) = wmp(&["classify", "C5", "C5"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("PERFECT case 3 z=0\n"), "{out}");

    let (code, out, _) = wmp(&["classify", "C5", "K3"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("IMPERFECT\n"));
    let (code, _, _) = wmp(&["classify", "C5", "K3", "--fail-on-imperfect"]);
    assert_eq!(code, 1);
    let (code, _, _) = wmp(&["classify", "C5", "C5", "--fail-on-imperfect"]);
    assert_eq!(code, 0);
}

#[test]
fn classify_json_schema() {
    let (_, out, _) = wmp(&["--json", "classify", "K3+K2", "K1,4+K7+K1"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["left"], "K3+K2");
    assert_eq!(v["verdict"], "perfect");
    assert_eq!(v["case"], 4);
    assert_eq!(v["orientation"], 0);
    assert!(v.get("witness").is_none());

    let (_, out, _) = wmp(&["classify", "P3", "P5", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["verdict"], "imperfect");
    assert!(v["case"].is_null());
}

#[test]
fn oracle_witness_and_cap() {
    let (code, out, _) = wmp(&["oracle", "C5"]);
    assert_eq!(code, 0);
    assert_eq!(out, "IMPERFECT\nodd hole of length 5: 0 1 2 3 4\n");

    let (_, out, _) = wmp(&["--json", "oracle", "K2+E1", "diamond"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["verdict"], "imperfect");
    assert_eq!(v["witness"]["cycle"].as_array().unwrap().len() % 2, 1);

    let (code, _, err) = wmp(&["oracle", "C7", "C7"]);
    assert_eq!(code, 2);
    assert!(err.contains("--max-vertices"), "{err}");
    let (code, out, _) = wmp(&["oracle", "C7", "C7", "--max-vertices", "49"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("IMPERFECT"));

    let (code, out, _) = wmp(&["oracle", "C5", "P4", "--fail-on-imperfect"]);
    assert_eq!((code, out.as_str()), (0, "PERFECT\n"));
}

#[test]
fn iso_verdicts() {
    let (code, out, _) = wmp(&["iso", "C5", "C5"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("ISOMORPHIC"));
    let (code, out, _) = wmp(&["iso", "P4", "K1,3", "--fail-on-noniso"]);
    assert_eq!(code, 1);
    assert_eq!(out, "NOT ISOMORPHIC (clique number 3 < n = 4)\n");
    let (code, out, _) = wmp(&["iso", "P3", "P4"]);
    assert_eq!(code, 0);
    assert!(out.contains("orders differ"));
    let (code, _, _) = wmp(&["iso", "C9", "C9"]);
    assert_eq!(code, 2);
}

#[test]
fn sweep_summary() {
    let (code, out, _) = wmp(&["sweep", "--max-n", "3", "--threads", "2"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("sweep max-n 3: 7 classes, 49 ordered pairs\n"));
    assert!(out.ends_with("PASS\n"));
    let (code, _, _) = wmp(&["sweep", "--max-n", "9"]);
    assert_eq!(code, 2);
}

#[test]
fn catalog_and_complement() {
    let (_, out, _) = wmp(&["catalog"]);
    assert_eq!(out.lines().count(), 22);
    assert!(out.lines().any(|l| l.starts_with("hourglass")));
    let (_, out, _) = wmp(&["complement", "C5", "--format", "graph6"]);
    // edges 02 03 13 14 24
    assert_eq!(out, "DUW\n");
}

#[test]
fn graph6_file_arguments() {
    let dir = std::env::temp_dir().join(format!("wmp-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join("c5.g6");
    fs::write(&path, "Dhc\n").unwrap();
    let arg = format!("@{}", path.display());
    let (code, out, _) = wmp(&["classify", &arg, "C5"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("PERFECT case 3"));
    let (code, _, err) = wmp(&["classify", "@/nonexistent/x.g6", "C5"]);
    assert_eq!(code, 2);
    assert!(err.contains("nonexistent"));
    fs::remove_dir_all(dir).unwrap();
}

#[test]
fn usage_errors_exit_2() {
    let (code, _, err) = wmp(&["classify", "K2+", "K3"]);
    assert_eq!(code, 2);
    assert!(err.contains("position 3"), "{err}");
    assert_eq!(wmp(&["classify", "C5"]).0, 2);
    assert_eq!(wmp(&["frobnicate"]).0, 2);
    let (code, out, _) = wmp(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("classify"));
}
