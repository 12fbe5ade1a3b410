//! CLI contract checks shared by the `cli` tests and the acceptance target.
//! Each returns `Err(reason)` instead of panicking.

#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use ecclab::catalog::{build_family, expected_eccentric, FamilySpec};
use ecclab_cli::GraphDocument;
use tempfile::TempDir;

pub type Check = Result<(), String>;

pub fn ecclab(args: &[&str], cwd: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ecclab"))
        .args(args)
        .current_dir(cwd)
        .env_remove("ECCLAB_JOBS")
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap_or(-1)
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn golden(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

fn expect(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Writes `gen <args>` into `dir/<file>` and returns its path.
pub fn gen(dir: &Path, file: &str, args: &[&str]) -> Result<PathBuf, String> {
    let path = dir.join(file);
    let mut full = vec!["gen"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["-o", path.to_str().unwrap()]);
    let out = ecclab(&full, dir);
    expect(code(&out) == 0, || format!("gen {args:?} exited {}", code(&out)))?;
    Ok(path)
}

pub fn json_round_trip() -> Check {
    let dir = TempDir::new().map_err(|e| e.to_string())?;
    let cases: [(&[&str], FamilySpec); 7] = [
        (&["path", "8"], FamilySpec::Path(8)),
        (&["cycle", "6"], FamilySpec::Cycle(6)),
        (&["star", "4"], FamilySpec::Star(4)),
        (&["double-star", "3", "3"], FamilySpec::DoubleStar(3, 3)),
        (&["h-graph", "3"], FamilySpec::HGraph(3)),
        (&["grid", "3", "5"], FamilySpec::Grid(3, 5)),
        (&["hypercube", "4"], FamilySpec::Hypercube(4)),
    ];
    for (i, (args, spec)) in cases.iter().enumerate() {
        let path = gen(dir.path(), &format!("g{i}.json"), args)?;
        let doc = GraphDocument::load(&path).map_err(|e| e.to_string())?;
        let g = doc.to_graph().map_err(|e| e.to_string())?;
        expect(g == build_family(*spec).unwrap(), || format!("{args:?} does not match the family"))?;
        let again = GraphDocument::from_json(&doc.to_json()).map_err(|e| e.to_string())?;
        expect(again == doc, || format!("{args:?} changed on a save/load cycle"))?;
    }
    let a = gen(dir.path(), "t1.json", &["random-tree", "12", "--seed", "7"])?;
    let b = gen(dir.path(), "t2.json", &["random-tree", "12", "--seed", "7"])?;
    let (a, b) = (std::fs::read_to_string(a).unwrap(), std::fs::read_to_string(b).unwrap());
    expect(a == b, || "random-tree is not deterministic for a fixed seed".into())
}

pub fn dot_golden_files() -> Check {
    let dir = TempDir::new().map_err(|e| e.to_string())?;
    for (n, file, spec) in [("8", "p8_eccentric.dot", FamilySpec::Path(8)), ("9", "p9_eccentric.dot", FamilySpec::Path(9))] {
        let input = gen(dir.path(), &format!("p{n}.json"), &["path", n])?;
        let out = ecclab(&["ecc", input.to_str().unwrap(), "--graph", "--format", "dot"], dir.path());
        expect(code(&out) == 0, || format!("ecc on P_{n} exited {}", code(&out)))?;
        let text = stdout(&out);
        let want = std::fs::read_to_string(golden(file)).map_err(|e| e.to_string())?;
        expect(text == want, || format!("DOT for E(P_{n}) differs from {file}:\n{text}"))?;
        expect(text.matches('{').count() == text.matches('}').count(), || "unbalanced braces".into())?;
        let edges = text.lines().filter(|l| l.contains(" -- ")).count();
        let expected = expected_eccentric(spec).unwrap().num_edges();
        expect(edges == expected, || format!("{edges} DOT edges, expected {expected}"))?;
    }
    Ok(())
}

pub fn ecc_outputs() -> Check {
    let dir = TempDir::new().map_err(|e| e.to_string())?;
    let c6 = gen(dir.path(), "c6.json", &["cycle", "6"])?;
    let out = ecclab(&["ecc", c6.to_str().unwrap()], dir.path());
    let doc = GraphDocument::from_json(&stdout(&out)).map_err(|e| e.to_string())?;
    expect(doc.edges == vec![[0, 3], [1, 4], [2, 5]], || format!("E(C_6) edges {:?}", doc.edges))?;

    let p3 = gen(dir.path(), "p3.json", &["path", "3"])?;
    let out = ecclab(&["ecc", p3.to_str().unwrap(), "--matrix"], dir.path());
    let rows: Vec<Vec<String>> = serde_json::from_str(&stdout(&out)).map_err(|e| e.to_string())?;
    let want = [["0", "1", "2"], ["1", "0", "1"], ["2", "1", "0"]];
    expect(rows == want.map(|r| r.map(String::from).to_vec()), || format!("matrix of P_3 was {rows:?}"))
}

pub fn products() -> Check {
    let dir = TempDir::new().map_err(|e| e.to_string())?;
    let p3 = gen(dir.path(), "p3.json", &["path", "3"])?;
    let p5 = gen(dir.path(), "p5.json", &["path", "5"])?;
    let k2 = gen(dir.path(), "k2.json", &["complete", "2"])?;
    let (p3, p5, k2) = (p3.to_str().unwrap(), p5.to_str().unwrap(), k2.to_str().unwrap());

    let out = ecclab(&["product", p3, p5, "--kind", "cartesian"], dir.path());
    let doc = GraphDocument::from_json(&stdout(&out)).map_err(|e| e.to_string())?;
    let grid = build_family(FamilySpec::Grid(3, 5)).unwrap();
    expect(doc.to_graph().unwrap() == grid, || "P_3 □ P_5 is not the 3x5 grid".into())?;
    expect(doc.labels.as_ref().map(|l| l[7].as_str()) == Some("(1,2)"), || "tuple labels missing".into())?;

    let out = ecclab(&["product", k2, k2, "--kind", "kronecker"], dir.path());
    let doc = GraphDocument::from_json(&stdout(&out)).map_err(|e| e.to_string())?;
    expect(doc.edges.len() == 2, || format!("K_2 x K_2 has {} edges", doc.edges.len()))
}

pub fn determinants() -> Check {
    let dir = TempDir::new().map_err(|e| e.to_string())?;
    let s3 = gen(dir.path(), "s3.json", &["star", "3"])?;
    let p2 = gen(dir.path(), "p2.json", &["path", "2"])?;
    let p5 = gen(dir.path(), "p5.json", &["path", "5"])?;
    let prod = dir.path().join("p5p2.json");
    let out = ecclab(
        &["product", p5.to_str().unwrap(), p2.to_str().unwrap(), "--kind", "cartesian", "-o", prod.to_str().unwrap()],
        dir.path(),
    );
    expect(code(&out) == 0, || "product P_5 □ P_2 failed".into())?;
    for (path, want) in [(&s3, "-12"), (&p2, "-1"), (&prod, "0")] {
        let out = ecclab(&["det", path.to_str().unwrap()], dir.path());
        let text = stdout(&out);
        expect(code(&out) == 0 && text == want, || format!("det printed {text:?}, expected {want:?}"))?;
    }
    Ok(())
}

pub fn check_reports() -> Check {
    let dir = TempDir::new().map_err(|e| e.to_string())?;
    let report = dir.path().join("grid.json");
    let out = ecclab(&["check", "grid", "--report", report.to_str().unwrap()], dir.path());
    expect(code(&out) == 0, || format!("check grid exited {}", code(&out)))?;
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    for key in ["check_name", "corpus", "pass_count", "fail_count", "first_failure_witness", "wall_time"] {
        expect(json.get(key).is_some(), || format!("report lacks {key}"))?;
    }
    expect(json["fail_count"] == 0 && json["first_failure_witness"].is_null(), || "clean run has a witness".into())?;

    let out = ecclab(&["check", "tree-girth", "--trees-max-n", "6", "--samples", "5", "--seed", "42"], dir.path());
    expect(stdout(&out).contains("seed 42"), || "seed is not printed".into())?;
    expect(dir.path().join("tree-girth-report.json").exists(), || "default report path not used".into())?;

    let failing = dir.path().join("fail.json");
    let out =
        ecclab(&["check", "grid", "--inject-failure", "--report", failing.to_str().unwrap()], dir.path());
    expect(code(&out) == 1, || format!("failing check exited {}", code(&out)))?;
    let json: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&failing).unwrap()).unwrap();
    expect(json["fail_count"] == 1 && json["first_failure_witness"]["input"] == "injected", || {
        "failure witness missing from report".into()
    })
}

/// 0 on success, 1 on a failing check, 2 on usage or input errors.
pub fn exit_codes() -> Check {
    let dir = TempDir::new().map_err(|e| e.to_string())?;
    let d = dir.path();
    std::fs::write(d.join("split.json"), r#"{"num_vertices": 4, "edges": [[0, 1], [2, 3]]}"#).unwrap();
    std::fs::write(d.join("bad.json"), r#"{"num_vertices": 2, "edges": [[0, 5]]}"#).unwrap();
    let p2 = gen(d, "p2.json", &["path", "2"])?;
    let big = gen(d, "p100.json", &["path", "100"])?;
    let (p2, big) = (p2.to_str().unwrap().to_string(), big.to_str().unwrap().to_string());
    let cases: Vec<(Vec<&str>, i32)> = vec![
        (vec!["gen", "path", "8"], 0),
        (vec!["gen", "grid", "3", "5"], 0),
        (vec!["gen", "path"], 2),
        (vec!["gen", "cycle", "2"], 2),
        (vec!["gen", "no-such-family", "3"], 2),
        (vec!["ecc", "split.json"], 2),
        (vec!["ecc", "bad.json"], 2),
        (vec!["ecc", "missing.json"], 2),
        (vec!["ecc", &p2, "--matrix", "--format", "dot"], 2),
        (vec!["det", "split.json"], 2),
        (vec!["product", &big, &big, "--kind", "cartesian"], 0),
        (vec!["product", &big, &big, &big, "--kind", "cartesian"], 2),
        (vec!["product", &p2, &p2, "--kind", "kronecker", "--cap", "3"], 2),
        (vec!["product", &p2, "--kind", "cartesian"], 2),
        (vec!["check", "no-such-suite"], 2),
        (vec!["check", "cncn-iso", "--report", "r.json"], 0),
        (vec!["check", "cncn-iso", "--report", "r.json", "--inject-failure"], 1),
        (vec!["check", "tree-girth", "--trees-max-n", "12", "--report", "r.json"], 2),
        (vec!["frobnicate"], 2),
    ];
    for (args, want) in cases {
        let out = ecclab(&args, d);
        expect(code(&out) == want, || format!("{args:?} exited {}, expected {want}", code(&out)))?;
    }
    Ok(())
}

pub fn jobs_from_environment() -> Check {
    let dir = TempDir::new().map_err(|e| e.to_string())?;
    let out = Command::new(env!("CARGO_BIN_EXE_ecclab"))
        .args(["check", "monotone", "--trees-max-n", "6", "--samples", "10", "--report", "r.json"])
        .current_dir(dir.path())
        .env("ECCLAB_JOBS", "3")
        .output()
        .map_err(|e| e.to_string())?;
    expect(code(&out) == 0, || format!("ECCLAB_JOBS=3 run exited {}", code(&out)))?;
    let out = Command::new(env!("CARGO_BIN_EXE_ecclab"))
        .args(["check", "monotone", "--report", "r.json"])
        .current_dir(dir.path())
        .env("ECCLAB_JOBS", "many")
        .output()
        .map_err(|e| e.to_string())?;
    expect(code(&out) == 2, || "a malformed ECCLAB_JOBS should be a usage error".into())
}

/// Every contract check, by name.
pub fn all() -> Vec<(&'static str, fn() -> Check)> {
    vec![
        ("json round-trip", json_round_trip),
        ("dot golden files", dot_golden_files),
        ("ecc outputs", ecc_outputs),
        ("products", products),
        ("determinants", determinants),
        ("check reports", check_reports),
        ("exit codes", exit_codes),
        ("jobs from environment", jobs_from_environment),
    ]
}
