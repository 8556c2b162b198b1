use std::collections::BTreeSet;
use std::path::PathBuf;
use std::sync::Arc;

use tgraph::canonical::serialize;
use tgraph::engine::ExecConfig;
use tgraph::formats::{parse_model, serialize_model};
use tgraph::{InstanceGraph, Value};
use tgraph_reeng::{
    diff_statemachines, generate_model, java_metamodel, oracle_extract, parse_java, read_java_dir,
    run_case, small_corpus, statemachine_metamodel, Case, GenConfig, SMALL_GOLDEN,
};

fn asset(dir: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("assets")
        .join(dir)
}

/// The recorded `generate` invocation of a bundled corpus.
fn recorded_config(dir: &str) -> GenConfig {
    let line = std::fs::read_to_string(asset(dir).join("GENERATED")).unwrap();
    let arg = |flag: &str| -> u64 {
        let words: Vec<&str> = line.split_whitespace().collect();
        let i = words.iter().position(|w| *w == flag).unwrap();
        words[i + 1].parse().unwrap()
    };
    GenConfig {
        states: arg("--states") as usize,
        methods: arg("--methods") as usize,
        nesting: arg("--nesting") as usize,
        seed: arg("--seed"),
    }
}

/// Canonical text of the nodes typed by the Java metamodel.
fn java_part(g: &InstanceGraph) -> String {
    let java: BTreeSet<String> = java_metamodel()
        .type_defs()
        .map(|d| d.name.clone())
        .collect();
    let mut out = String::new();
    let mut keep = false;
    for line in serialize(g).lines() {
        if let Some(rest) = line.strip_prefix("node ") {
            let ty = rest.split(" : ").nth(1).unwrap_or_default();
            keep = java.contains(ty);
        }
        if keep {
            out.push_str(line);
            out.push('\n');
        }
    }
    out
}

#[test]
fn small_corpus_is_on_disk() {
    let on_disk = read_java_dir(&asset("small")).unwrap();
    assert_eq!(on_disk, small_corpus());
}

#[test]
fn small_corpus_matches_golden() {
    let case = Case::load();
    let mut g = parse_java(&small_corpus(), &case.metamodel).unwrap();
    let oracle = oracle_extract(&g, &case.statemachine).unwrap();
    let run = run_case(&case, &mut g, &ExecConfig::default()).unwrap();
    assert_eq!(serialize_model(&run.machine), SMALL_GOLDEN);
    let golden = parse_model(SMALL_GOLDEN, Arc::new(statemachine_metamodel())).unwrap();
    assert!(diff_statemachines(&golden, &oracle).is_empty());
}

#[test]
fn bundled_corpora_match_their_generator() {
    for dir in ["medium", "big"] {
        let cfg = recorded_config(dir);
        let on_disk = read_java_dir(&asset(dir)).unwrap();
        let mut expected = generate_model(&cfg);
        expected.sort_by(|a, b| a.name.cmp(&b.name));
        assert!(
            on_disk == expected,
            "{dir} differs from its recorded generator run"
        );
    }
}

#[test]
fn medium_corpus_matches_the_oracle() {
    let case = Case::load();
    let mut g = parse_java(&read_java_dir(&asset("medium")).unwrap(), &case.metamodel).unwrap();
    let oracle = oracle_extract(&g, &case.statemachine).unwrap();
    let run = run_case(&case, &mut g, &ExecConfig::default()).unwrap();
    let d = diff_statemachines(&run.machine, &oracle);
    assert!(d.is_empty(), "{d}");
}

#[test]
fn generator_is_deterministic() {
    let cfg = GenConfig {
        states: 12,
        methods: 3,
        nesting: 2,
        seed: 5,
    };
    assert_eq!(generate_model(&cfg), generate_model(&cfg));
    let other = GenConfig { seed: 6, ..cfg };
    assert_ne!(generate_model(&cfg), generate_model(&other));
}

#[test]
fn states_are_the_concrete_state_classes() {
    let case = Case::load();
    for seed in 0..20 {
        let cfg = GenConfig {
            states: 3 + seed as usize,
            methods: 2,
            nesting: 1,
            seed,
        };
        let mut g = parse_java(&generate_model(&cfg), &case.metamodel).unwrap();
        let class = g.resolve_type("Class").unwrap();
        let by_name = |n: &str| {
            g.nodes_of_type(class)
                .into_iter()
                .find(|c| g.attribute(*c, "name").and_then(Value::as_str) == Some(n))
        };
        let root = by_name("State").unwrap();
        let mut expected = BTreeSet::new();
        for c in g.nodes_of_type(class) {
            let mut cur = Some(c);
            while let Some(x) = cur {
                if x == root {
                    if g.attribute(c, "abstract") != Some(&Value::Bool(true)) {
                        expected.insert(g.attribute(c, "name").unwrap().to_string());
                    }
                    break;
                }
                cur = g.targets_by_name(x, "extends").first().copied();
            }
        }
        assert_eq!(expected.len(), cfg.states, "seed {seed}");

        let run = run_case(&case, &mut g, &ExecConfig::default()).unwrap();
        let m = &run.machine;
        let names: Vec<String> = m
            .nodes_of_type(m.resolve_type("State").unwrap())
            .into_iter()
            .map(|s| m.attribute(s, "name").unwrap().to_string())
            .collect();
        let unique: BTreeSet<String> = names.iter().cloned().collect();
        assert_eq!(
            names.len(),
            unique.len(),
            "seed {seed}: a class was translated twice"
        );
        assert_eq!(unique, expected, "seed {seed}");
    }
}

#[test]
fn run_leaves_no_traces_and_keeps_the_java_model() {
    let case = Case::load();
    let cfg = GenConfig {
        states: 15,
        methods: 4,
        nesting: 3,
        seed: 11,
    };
    let mut g = parse_java(&generate_model(&cfg), &case.metamodel).unwrap();
    let before = java_part(&g);
    run_case(&case, &mut g, &ExecConfig::default()).unwrap();
    let trace = g.resolve_type("Trace").unwrap();
    assert!(g.nodes_of_type(trace).is_empty());
    assert_eq!(java_part(&g), before);
}

#[test]
fn result_does_not_depend_on_the_seed() {
    let case = Case::load();
    let files = generate_model(&GenConfig {
        states: 10,
        methods: 3,
        nesting: 2,
        seed: 3,
    });
    let outputs: BTreeSet<String> = (0..5)
        .map(|seed| {
            let mut g = parse_java(&files, &case.metamodel).unwrap();
            let cfg = ExecConfig {
                seed,
                ..ExecConfig::default()
            };
            serialize_model(&run_case(&case, &mut g, &cfg).unwrap().machine)
        })
        .collect();
    assert_eq!(outputs.len(), 1);
}
