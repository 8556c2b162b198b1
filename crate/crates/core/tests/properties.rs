use std::collections::BTreeMap;

use proptest::prelude::*;
use rand::Rng;
use tgraph::canonical::{parse, serialize};
use tgraph::engine::{execute, ExecConfig, ExecError};
use tgraph::expr::{parse_expr, BinOp, Expr};
use tgraph::formats::{load_transformation, parse_metamodel};
use tgraph::matcher::{find_matches, Match};
use tgraph::rules::{classify, compile, PatternEdge, PatternNode};
use tgraph::{InstanceGraph, Value};
use tgraph_testkit::{
    brute_force_matches, random_graph, random_metamodel, random_op, random_prebinding, random_rule,
    random_unit_tree, rng, unit_transformation, RANDOM_MM,
};

fn key(m: &Match) -> String {
    format!("{m:?}")
}

fn sorted(ms: impl IntoIterator<Item = Match>) -> Vec<String> {
    let mut v: Vec<String> = ms.into_iter().map(|m| key(&m)).collect();
    v.sort();
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn rollback_restores_graph(seed in any::<u64>()) {
        let mm = random_metamodel();
        let mut r = rng(seed);
        let mut g = random_graph(&mut r, &mm, 8);
        for _ in 0..r.gen_range(0..10) {
            random_op(&mut r, &mut g);
        }
        let before = serialize(&g);
        let next = g.next_id();
        let cp = g.checkpoint();
        for _ in 0..r.gen_range(1..20) {
            random_op(&mut r, &mut g);
        }
        g.rollback_to(cp).unwrap();
        prop_assert_eq!(serialize(&g), before);
        prop_assert_eq!(g.next_id(), next);
        prop_assert!(g.validate().is_empty());
    }

    #[test]
    fn nested_checkpoints_roll_back_independently(seed in any::<u64>()) {
        let mm = random_metamodel();
        let mut r = rng(seed);
        let mut g = random_graph(&mut r, &mm, 6);
        let outer = g.checkpoint();
        random_op(&mut r, &mut g);
        let mid = serialize(&g);
        let inner = g.checkpoint();
        for _ in 0..5 {
            random_op(&mut r, &mut g);
        }
        if r.gen_bool(0.5) {
            g.rollback_to(inner).unwrap();
            prop_assert_eq!(serialize(&g), mid);
        } else {
            g.release(inner).unwrap();
        }
        g.rollback_to(outer).unwrap();
        prop_assert_eq!(g.journal().depth(), 0);
    }

    #[test]
    fn random_edits_keep_graph_conformant(seed in any::<u64>()) {
        let mm = random_metamodel();
        let mut r = rng(seed);
        let mut g = random_graph(&mut r, &mm, 8);
        for _ in 0..30 {
            random_op(&mut r, &mut g);
            prop_assert!(g.validate().is_empty(), "{:?}", g.validate());
        }
    }

    #[test]
    fn canonical_form_round_trips(seed in any::<u64>()) {
        let mm = random_metamodel();
        let mut r = rng(seed);
        let mut g = random_graph(&mut r, &mm, 8);
        for _ in 0..10 {
            random_op(&mut r, &mut g);
        }
        let text = serialize(&g);
        let back = parse(&text, mm.clone()).unwrap();
        prop_assert_eq!(serialize(&back), text);
    }
}

fn expr_strategy() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        (-5i64..5).prop_map(|i| Expr::Lit(Value::Int(i))),
        any::<bool>().prop_map(|b| Expr::Lit(Value::Bool(b))),
        "[a-z\"\\\\ ]{0,4}".prop_map(|s| Expr::Lit(Value::Str(s))),
        prop::sample::select(vec!["a", "b", "s"]).prop_map(|p| Expr::Param(p.into())),
    ];
    let ops = vec![
        BinOp::Add,
        BinOp::Eq,
        BinOp::Ne,
        BinOp::And,
        BinOp::Or,
        BinOp::Lt,
        BinOp::Gt,
        BinOp::Le,
        BinOp::Ge,
    ];
    leaf.prop_recursive(4, 32, 3, move |inner| {
        prop_oneof![
            inner.clone().prop_map(|e| Expr::Not(Box::new(e))),
            (
                prop::sample::select(ops.clone()),
                inner.clone(),
                inner.clone()
            )
                .prop_map(|(op, l, r)| Expr::Binary(op, Box::new(l), Box::new(r))),
            (inner.clone(), inner.clone(), inner).prop_map(|(c, a, b)| Expr::Cond(
                Box::new(c),
                Box::new(a),
                Box::new(b)
            )),
        ]
    })
}

fn substitute(e: &Expr, env: &BTreeMap<String, Value>) -> Expr {
    match e {
        Expr::Lit(_) => e.clone(),
        Expr::Param(p) => Expr::Lit(env[p].clone()),
        Expr::Not(a) => Expr::Not(Box::new(substitute(a, env))),
        Expr::Binary(op, l, r) => Expr::Binary(
            *op,
            Box::new(substitute(l, env)),
            Box::new(substitute(r, env)),
        ),
        Expr::Cond(c, a, b) => Expr::Cond(
            Box::new(substitute(c, env)),
            Box::new(substitute(a, env)),
            Box::new(substitute(b, env)),
        ),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn printed_expressions_parse_back(e in expr_strategy()) {
        let text = e.to_string();
        let back = parse_expr(&text).unwrap();
        prop_assert_eq!(&back, &e);
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn parameters_are_referentially_transparent(
        e in expr_strategy(),
        a in -3i64..3,
        b in any::<bool>(),
        s in "[xy]{0,2}",
    ) {
        let env: BTreeMap<String, Value> =
            [("a".to_owned(), Value::Int(a)), ("b".to_owned(), Value::Bool(b)), ("s".to_owned(), Value::Str(s))].into();
        let closed = substitute(&e, &env);
        prop_assert_eq!(e.eval(&env), closed.eval(&env));
        prop_assert_eq!(e.eval(&env), e.eval(&env));
    }

    #[test]
    fn classification_partitions_pattern_elements(seed in any::<u64>()) {
        let mut r = rng(seed);
        let mut rule = random_rule(&mut r, "r", 4, 0);
        // Drop some mapped nodes (deletions) and add fresh ones (creations).
        let keep: Vec<bool> = rule.lhs.nodes.iter().map(|_| r.gen_bool(0.6)).collect();
        let kept: Vec<String> =
            rule.lhs.nodes.iter().zip(&keep).filter(|(_, k)| **k).map(|(n, _)| n.id.clone()).collect();
        rule.rhs.nodes.retain(|n| kept.contains(&n.id));
        rule.mapping.retain(|(l, _)| kept.contains(l));
        rule.rhs.edges.retain(|e| kept.contains(&e.src) && kept.contains(&e.trg) && r.gen_bool(0.7));
        let fresh = r.gen_range(0..3);
        for i in 0..fresh {
            rule.rhs.nodes.push(PatternNode::new(format!("new{i}"), "B"));
            if let Some(k) = kept.first() {
                rule.rhs.edges.push(PatternEdge::new(k.clone(), "r", format!("new{i}")));
            }
        }
        let c = classify(&rule).unwrap();
        prop_assert_eq!(c.preserved_nodes.len() + c.deleted_nodes.len(), rule.lhs.nodes.len());
        prop_assert_eq!(c.preserved_nodes.len() + c.created_nodes.len(), rule.rhs.nodes.len());
        prop_assert_eq!(c.created_nodes.len(), fresh);
        prop_assert_eq!(c.preserved_edges.len() + c.deleted_edges.len(), rule.lhs.edges.len());
        prop_assert_eq!(c.preserved_edges.len() + c.created_edges.len(), rule.rhs.edges.len());
    }

    #[test]
    fn matcher_agrees_with_brute_force(seed in any::<u64>()) {
        let mm = random_metamodel();
        let mut r = rng(seed);
        let g = random_graph(&mut r, &mm, 6);
        let rule = compile(&random_rule(&mut r, "r", 4, 2), &mm).unwrap();
        let pre = random_prebinding(&mut r, &g);
        let expected = brute_force_matches(&g, &rule, &pre).map_err(|e| e.to_string());
        let got: Result<Vec<Match>, String> =
            find_matches(&g, &rule, &pre).unwrap().collect::<Result<_, _>>().map_err(|e| e.to_string());
        match (expected, got) {
            (Ok(e), Ok(g)) => {
                prop_assert_eq!(g.len(), e.len());
                prop_assert_eq!(sorted(g), sorted(e));
            }
            // Evaluation errors may surface at a different point of the search,
            // but must surface in both.
            (Err(_), Err(_)) => {}
            (e, g) => prop_assert!(false, "brute force {:?}, matcher {:?}", e, g),
        }
    }

    #[test]
    fn prebinding_restricts_matches(seed in any::<u64>()) {
        let mm = random_metamodel();
        let mut r = rng(seed);
        let g = random_graph(&mut r, &mm, 6);
        let rule = compile(&random_rule(&mut r, "r", 4, 0), &mm).unwrap();
        let pre = random_prebinding(&mut r, &g);
        let all: Vec<Match> = find_matches(&g, &rule, &vec![None; pre.len()]).unwrap().collect::<Result<_, _>>().unwrap();
        let restricted: Vec<Match> = find_matches(&g, &rule, &pre).unwrap().collect::<Result<_, _>>().unwrap();
        let expected = all.into_iter().filter_map(|mut m| {
            for (slot, p) in m.params.iter_mut().zip(&pre) {
                match (slot.as_ref(), p) {
                    (_, None) => {}
                    (None, Some(v)) => *slot = Some(v.clone()),
                    (Some(a), Some(b)) if a == b => {}
                    _ => return None,
                }
            }
            Some(m)
        });
        prop_assert_eq!(sorted(restricted), sorted(expected));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn failed_units_leave_graph_untouched(seed in any::<u64>()) {
        let mut r = rng(seed);
        let units = random_unit_tree(&mut r, 3);
        let (mm, t) = unit_transformation(&units);
        let mut g = random_graph(&mut r, &mm, 6);
        let before = serialize(&g);
        let cfg = ExecConfig { seed, step_limit: r.gen_range(1..200), ..ExecConfig::default() };
        match execute(&t, None, &mut g, &[], &cfg) {
            Ok(out) if out.success => prop_assert!(g.validate().is_empty()),
            Ok(_) | Err(ExecError::StepLimitExceeded(_)) => prop_assert_eq!(serialize(&g), before),
            Err(e) => prop_assert!(false, "{}", e),
        }
        prop_assert_eq!(g.journal().depth(), 0);
    }

    #[test]
    fn execution_is_deterministic_per_seed(seed in any::<u64>()) {
        let mut r = rng(seed);
        let units = random_unit_tree(&mut r, 3);
        let (mm, t) = unit_transformation(&units);
        let g0 = random_graph(&mut r, &mm, 6);
        let cfg = ExecConfig { seed, trace: true, step_limit: 500, ..ExecConfig::default() };
        let run = |mut g: InstanceGraph| {
            let out = execute(&t, None, &mut g, &[], &cfg).map(|o| (o.success, o.log, o.steps)).map_err(|e| e.to_string());
            (serialize(&g), out)
        };
        prop_assert_eq!(run(g0.clone()), run(g0));
    }

    #[test]
    fn amalgamation_result_ignores_multi_match_order(seed in any::<u64>()) {
        let mm = parse_metamodel(RANDOM_MM).unwrap();
        let (mm, t) = load_transformation(
            "import rnd;
             rule pick() { node d : D { attr flag = true; } }
             rule tag() { node d : D; node a : A { attr n = 0; } edge d -t-> a; assign a.name = \"z\"; }
             rule cut() { node d : D; node a : A; edge d -t-> a <<delete>>; }
             rule gone() { node d : D; node e : D <<delete>>; edge d -t-> a; node a : A; edge a -s-> e; }
             unit amalgamation All { kernel pick; multi tag embed d -> d; multi cut embed d -> d; multi gone embed d -> d; }",
            &[&mm],
        )
        .unwrap();
        let mut r = rng(seed);
        let g0 = random_graph(&mut r, &mm, 8);
        let mut outcomes = Vec::new();
        for shuffle in [false, true] {
            let mut g = g0.clone();
            let cfg = ExecConfig { seed, shuffle_multi_matches: shuffle, ..ExecConfig::default() };
            let out = execute(&t, t.lookup("All"), &mut g, &[], &cfg).unwrap();
            outcomes.push((out.success, serialize(&g)));
        }
        prop_assert_eq!(&outcomes[0], &outcomes[1]);
    }
}
