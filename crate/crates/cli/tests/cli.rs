use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tgraph_reeng::SMALL_GOLDEN;

fn assets() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../reeng/assets")
}

fn tgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tgraph"))
        .args(args)
        .output()
        .unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn transform_small_corpus_to_stdout() {
    let small = assets().join("small");
    let out = tgraph(&["transform", "--java", s(&small)]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), SMALL_GOLDEN);
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("ActionsLoop"), "{stderr}");
}

#[test]
fn report_counts_match_the_trace() {
    let dir = tempfile::tempdir().unwrap();
    let (trace, report) = (dir.path().join("t"), dir.path().join("r.json"));
    let small = assets().join("small");
    let out = tgraph(&[
        "transform",
        "--java",
        s(&small),
        "--seed",
        "9",
        "--out",
        s(&dir.path().join("o.gm")),
        "--trace",
        s(&trace),
        "--report",
        s(&report),
    ]);
    assert_eq!(code(&out), 0);
    let lines = std::fs::read_to_string(&trace).unwrap();
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(json["seed"], 9);
    assert_eq!(json["exit_status"], 0);
    let counts = json["rule_counts"].as_object().unwrap();
    let total: u64 = counts.values().map(|v| v.as_u64().unwrap()).sum();
    assert_eq!(total as usize, lines.lines().count());
    let created = lines
        .lines()
        .filter(|l| l.starts_with("apply createState "))
        .count();
    assert_eq!(counts["createState"], created as u64);
    assert_eq!(json["phases"][0]["name"], "parse");
}

#[test]
fn missing_state_class_is_a_transform_failure() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("A.java"),
        "class A { void m() { new A(); } }",
    )
    .unwrap();
    let report = dir.path().join("r.json");
    let out = tgraph(&["transform", "--java", s(dir.path()), "--report", s(&report)]);
    assert_eq!(code(&out), 3);
    assert!(out.stdout.is_empty());
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(json["exit_status"], 3);
}

#[test]
fn syntax_error_is_invalid_input() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("A.java"), "class A { void m( }").unwrap();
    let out = tgraph(&["transform", "--java", s(dir.path())]);
    assert_eq!(code(&out), 65);
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("A.java:1:"), "{stderr}");
}

#[test]
fn step_limit_has_its_own_exit_code() {
    let small = assets().join("small");
    let out = tgraph(&["transform", "--java", s(&small), "--step-limit", "20"]);
    assert_eq!(code(&out), 4);
}

#[test]
fn usage_errors() {
    assert_eq!(code(&tgraph(&["transform"])), 2);
    assert_eq!(code(&tgraph(&["frobnicate"])), 2);
    let small = assets().join("small");
    let out = tgraph(&["transform", "--java", s(&small), "--main", "Nope"]);
    assert_eq!(code(&out), 2);
    assert_eq!(code(&tgraph(&["--help"])), 0);
}

#[test]
fn missing_files_are_io_errors() {
    assert_eq!(
        code(&tgraph(&["transform", "--java", "/definitely/not/here"])),
        74
    );
    assert_eq!(code(&tgraph(&["diff", "/nope/a.gm", "/nope/b.gm"])), 74);
}

#[test]
fn diff_exit_codes() {
    let golden = assets().join("small.golden.gm");
    let out = tgraph(&["diff", s(&golden), s(&golden)]);
    assert_eq!(code(&out), 0);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "no differences\n");

    let dir = tempfile::tempdir().unwrap();
    let changed = dir.path().join("changed.gm");
    std::fs::write(&changed, SMALL_GOLDEN.replace("\"SYN\"", "\"FIN\"")).unwrap();
    let out = tgraph(&["diff", s(&golden), s(&changed)]);
    assert_eq!(code(&out), 1);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("action \"SYN\" vs \"FIN\""), "{text}");

    std::fs::write(&changed, "{ not json").unwrap();
    assert_eq!(code(&tgraph(&["diff", s(&golden), s(&changed)])), 65);
}

#[test]
fn transform_agrees_with_oracle_on_generated_corpus() {
    let dir = tempfile::tempdir().unwrap();
    let (src, a, b) = (
        dir.path().join("src"),
        dir.path().join("a.gm"),
        dir.path().join("b.gm"),
    );
    let gen = tgraph(&[
        "generate",
        "--states",
        "12",
        "--methods",
        "3",
        "--nesting",
        "2",
        "--seed",
        "7",
        "--out",
        s(&src),
    ]);
    assert_eq!(code(&gen), 0);
    assert_eq!(
        code(&tgraph(&["transform", "--java", s(&src), "--out", s(&a)])),
        0
    );
    assert_eq!(
        code(&tgraph(&["oracle", "--java", s(&src), "--out", s(&b)])),
        0
    );
    assert_eq!(code(&tgraph(&["diff", s(&a), s(&b)])), 0);
}

#[test]
fn model_transform_with_explicit_metamodel() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    std::fs::write(
        d.join("m.mm"),
        "metamodel m;\nclass Item { attr name : string; }\n",
    )
    .unwrap();
    std::fs::write(
        d.join("t.tfm"),
        "import m;\nrule mark() { node i : Item { attr name = \"a\"; } assign i.name = \"b\"; }\n\
         unit counted All { mark; count -1 }\nmain All;\n",
    )
    .unwrap();
    std::fs::write(
        d.join("in.txt"),
        "node 1 : Item\n  attr name = \"a\"\nnode 2 : Item\n  attr name = \"c\"\n",
    )
    .unwrap();
    let out = tgraph(&[
        "transform",
        "--metamodel",
        s(&d.join("m.mm")),
        "--model",
        s(&d.join("in.txt")),
        "--tfm",
        s(&d.join("t.tfm")),
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("\"name\": \"b\""), "{text}");
    assert!(text.contains("\"name\": \"c\""), "{text}");
    assert!(!text.contains("\"name\": \"a\""), "{text}");

    let out = tgraph(&[
        "transform",
        "--model",
        s(&d.join("in.txt")),
        "--tfm",
        s(&d.join("t.tfm")),
    ]);
    assert_eq!(code(&out), 65, "import of a metamodel that was not given");
}

#[test]
fn bench_prints_phases() {
    let out = tgraph(&["bench", "--states", "5", "--methods", "2", "--nesting", "1"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    for phase in [
        "parse",
        "StatesLoop",
        "TransitionsLoop",
        "ActionsLoop",
        "total",
    ] {
        assert!(text.contains(phase), "{text}");
    }
}

#[test]
fn trace_matches_golden() {
    let dir = tempfile::tempdir().unwrap();
    let trace = dir.path().join("t");
    let small = assets().join("small");
    let out = tgraph(&[
        "transform",
        "--java",
        s(&small),
        "--seed",
        "42",
        "--out",
        s(&dir.path().join("o.gm")),
        "--trace",
        s(&trace),
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        std::fs::read_to_string(&trace).unwrap(),
        include_str!("golden/small.trace")
    );
}
