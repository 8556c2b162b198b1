use std::collections::BTreeSet;

use tgraph::canonical::serialize;
use tgraph::engine::ExecConfig;
use tgraph::{InstanceGraph, NodeId, Value};
use tgraph_reeng::{
    diff_statemachines, generate_model, oracle_extract, parse_java, run_case, Case, CaseError,
    GenConfig, JavaError, SourceFile, TransitionKey,
};

fn sources(files: &[(&str, &str)]) -> Vec<SourceFile> {
    files.iter().map(|(n, t)| SourceFile::new(*n, *t)).collect()
}

fn transitions(g: &InstanceGraph) -> Vec<TransitionKey> {
    let d = diff_statemachines(g, &InstanceGraph::new(g.metamodel().clone()));
    let mut t = d.transitions_only_left;
    t.sort();
    t
}

fn states(g: &InstanceGraph) -> BTreeSet<String> {
    let ty = g.resolve_type("State").unwrap();
    g.nodes_of_type(ty)
        .into_iter()
        .map(|s| g.attribute(s, "name").unwrap().to_string())
        .collect()
}

fn key(s: &str, t: &str, trigger: &str, action: &str) -> TransitionKey {
    TransitionKey {
        source: s.into(),
        target: t.into(),
        trigger: trigger.into(),
        action: action.into(),
    }
}

/// Runs the case and the oracle; asserts they agree and returns the result.
fn both(case: &Case, files: &[SourceFile]) -> InstanceGraph {
    let mut g = parse_java(files, &case.metamodel).unwrap();
    let expected = oracle_extract(&g, &case.statemachine).unwrap();
    let run = run_case(case, &mut g, &ExecConfig::default()).unwrap();
    let d = diff_statemachines(&run.machine, &expected);
    assert!(d.is_empty(), "{d}");
    run.machine
}

#[test]
fn parsed_class_shape() {
    let case = Case::load();
    let g = parse_java(
        &sources(&[
            ("State.java", "abstract class State {}"),
            (
                "StateA.java",
                "class StateA extends State { void doIt() { new StateB(); send(\"go\"); } }",
            ),
            ("StateB.java", "class StateB extends State {}"),
        ]),
        &case.metamodel,
    )
    .unwrap();
    let a = NodeId(2);
    assert_eq!(g.attribute(NodeId(1), "abstract"), Some(&Value::Bool(true)));
    assert_eq!(g.attribute(a, "name"), Some(&Value::from("StateA")));
    let methods = g.targets_by_name(a, "methods");
    assert_eq!(methods.len(), 1);
    let stmts = g.targets_by_name(methods[0], "statements");
    assert_eq!(stmts.len(), 2);
    let e0 = g.targets_by_name(stmts[0], "expression")[0];
    assert_eq!(g.targets_by_name(e0, "instantiates"), [NodeId(3)]);
    let e1 = g.targets_by_name(stmts[1], "expression")[0];
    assert_eq!(g.attribute(e1, "methodName"), Some(&Value::from("send")));
    let lit = g.targets_by_name(e1, "argument")[0];
    assert_eq!(g.attribute(lit, "value"), Some(&Value::from("go")));
}

#[test]
fn unknown_superclass_is_reported() {
    let case = Case::load();
    let e = parse_java(
        &sources(&[("A.java", "class A extends Nope {}")]),
        &case.metamodel,
    )
    .unwrap_err();
    assert!(
        matches!(&e, JavaError::Unresolved { name, .. } if name == "Nope"),
        "{e}"
    );
    assert!(e.to_string().contains("Nope"));
}

#[test]
fn three_class_example() {
    let case = Case::load();
    let m = both(
        &case,
        &sources(&[
            ("State.java", "abstract class State {}"),
            (
                "StateA.java",
                "class StateA extends State { void go() { new StateB(); send(\"ack\"); } }",
            ),
            ("StateB.java", "class StateB extends State {}"),
        ]),
    );
    assert_eq!(
        states(&m),
        BTreeSet::from(["StateA".to_string(), "StateB".to_string()])
    );
    assert_eq!(transitions(&m), [key("StateA", "StateB", "go", "ack")]);
}

#[test]
fn only_abstract_states_give_an_empty_machine() {
    let case = Case::load();
    let m = both(
        &case,
        &sources(&[(
            "State.java",
            "abstract class State {} abstract class Mid extends State {}",
        )]),
    );
    assert_eq!(m.len(), 1);
}

#[test]
fn switch_label_is_the_trigger() {
    let case = Case::load();
    let m = both(
        &case,
        &sources(&[
            ("State.java", "abstract class State {}"),
            ("A.java", "class StateA extends State { void handle() { switch (e) { case LABEL: new StateB(); } } }"),
            ("B.java", "class StateB extends State {}"),
        ]),
    );
    assert_eq!(transitions(&m), [key("StateA", "StateB", "LABEL", "")]);
}

#[test]
fn nested_try_and_switch() {
    let case = Case::load();
    let m = both(
        &case,
        &sources(&[
            ("State.java", "abstract class State {}"),
            (
                "X.java",
                "class StateX extends State { void m() {
                   try { switch (e) { case A: new StateB(); } } catch (E e) { new StateC(); }
                 } }",
            ),
            (
                "B.java",
                "class StateB extends State {} class StateC extends State {}",
            ),
        ]),
    );
    assert_eq!(
        transitions(&m),
        [
            key("StateX", "StateB", "A", ""),
            key("StateX", "StateC", "E", "")
        ]
    );
}

#[test]
fn missing_state_class_fails() {
    let case = Case::load();
    let mut g = parse_java(
        &sources(&[("A.java", "class A { void m() { new A(); } }")]),
        &case.metamodel,
    )
    .unwrap();
    let before = serialize(&g);
    assert!(matches!(
        run_case(&case, &mut g, &ExecConfig::default()),
        Err(CaseError::Failed(_))
    ));
    assert_eq!(serialize(&g), before);
    assert!(oracle_extract(&g, &case.statemachine).is_err());
}

#[test]
fn self_transitions_and_duplicates() {
    let case = Case::load();
    let m = both(
        &case,
        &sources(&[
            ("State.java", "abstract class State {}"),
            ("A.java", "class A extends State { void loop() { new A(); new A(); if (x) { send(\"m\"); new A(); } } }"),
        ]),
    );
    assert_eq!(
        transitions(&m),
        [
            key("A", "A", "loop", ""),
            key("A", "A", "loop", ""),
            key("A", "A", "loop", "m")
        ]
    );
}

#[test]
fn generated_corpora_match_the_oracle() {
    let case = Case::load();
    for seed in 0..200u64 {
        let cfg = GenConfig {
            states: 3 + (seed as usize * 7) % 28,
            methods: 1 + (seed as usize) % 5,
            nesting: (seed as usize) % 4,
            seed,
        };
        let files = generate_model(&cfg);
        let mut g = parse_java(&files, &case.metamodel).unwrap();
        let expected = oracle_extract(&g, &case.statemachine).unwrap();
        let run = run_case(&case, &mut g, &ExecConfig::default()).unwrap();
        let d = diff_statemachines(&run.machine, &expected);
        assert!(d.is_empty(), "seed {seed}: {d}");
    }
}
