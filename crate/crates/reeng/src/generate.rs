//! Synthetic state-pattern programs.

use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::SourceFile;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenConfig {
    /// Number of concrete state classes (at least 1).
    pub states: usize,
    pub methods: usize,
    /// Maximum depth of nested if/switch/try statements.
    pub nesting: usize,
    pub seed: u64,
}

const VERBS: [&str; 12] = [
    "open", "close", "start", "stop", "tick", "reset", "pause", "resume", "load", "save", "next",
    "back",
];
const EXCEPTIONS: [&str; 3] = ["IOException", "TimeoutException", "IllegalStateException"];

struct Gen {
    rng: ChaCha8Rng,
    concrete: Vec<String>,
    /// Classes that are not translated to states.
    others: Vec<String>,
    nesting: usize,
}

impl Gen {
    fn indent(out: &mut String, depth: usize) {
        for _ in 0..depth {
            out.push_str("    ");
        }
    }

    fn target(&mut self) -> String {
        if !self.others.is_empty() && self.rng.gen_bool(0.1) {
            self.others
                .choose(&mut self.rng)
                .expect("non-empty")
                .clone()
        } else {
            self.concrete
                .choose(&mut self.rng)
                .expect("non-empty")
                .clone()
        }
    }

    fn body(&mut self, out: &mut String, indent: usize, level: usize) {
        let n = self.rng.gen_range(1..=3);
        for _ in 0..n {
            self.statement(out, indent, level);
        }
    }

    fn statement(&mut self, out: &mut String, indent: usize, level: usize) {
        let nested = level < self.nesting && self.rng.gen_bool(0.35);
        Self::indent(out, indent);
        if !nested {
            match self.rng.gen_range(0..20) {
                0..=7 => {
                    let t = self.target();
                    let _ = writeln!(out, "new {t}();");
                }
                8..=15 => {
                    let k = self.rng.gen_range(0..8);
                    let _ = writeln!(out, "send(\"msg{k}\");");
                }
                16 | 17 => out.push_str("log(\"trace\");\n"),
                _ => out.push_str("update();\n"),
            }
            return;
        }
        match self.rng.gen_range(0..3) {
            0 => {
                let v = self.rng.gen_range(0..10);
                let _ = writeln!(out, "if (counter > {v}) {{");
                self.body(out, indent + 1, level + 1);
                Self::indent(out, indent);
                if self.rng.gen_bool(0.5) {
                    out.push_str("} else {\n");
                    self.body(out, indent + 1, level + 1);
                    Self::indent(out, indent);
                }
                out.push_str("}\n");
            }
            1 => {
                out.push_str("switch (event) {\n");
                let mut labels: Vec<String> = (0..6).map(|k| format!("EV{k}")).collect();
                labels.shuffle(&mut self.rng);
                labels.truncate(self.rng.gen_range(1..=3));
                if self.rng.gen_bool(0.2) {
                    labels.push("default".into());
                }
                for l in labels {
                    Self::indent(out, indent + 1);
                    if l == "default" {
                        out.push_str("default:\n");
                    } else {
                        let _ = writeln!(out, "case {l}:");
                    }
                    self.body(out, indent + 2, level + 1);
                    Self::indent(out, indent + 2);
                    out.push_str("break;\n");
                }
                Self::indent(out, indent);
                out.push_str("}\n");
            }
            _ => {
                out.push_str("try {\n");
                self.body(out, indent + 1, level + 1);
                let mut excs = EXCEPTIONS.to_vec();
                excs.shuffle(&mut self.rng);
                let catches = self.rng.gen_range(0..=2);
                let finally = catches == 0 || self.rng.gen_bool(0.4);
                for e in &excs[..catches] {
                    Self::indent(out, indent);
                    let _ = writeln!(out, "}} catch ({e} e) {{");
                    self.body(out, indent + 1, level + 1);
                }
                if finally {
                    Self::indent(out, indent);
                    out.push_str("} finally {\n");
                    self.body(out, indent + 1, level + 1);
                }
                Self::indent(out, indent);
                out.push_str("}\n");
            }
        }
    }
}

fn class_file(name: &str, header: String, methods: &[String]) -> SourceFile {
    let mut text = header;
    text.push_str(" {\n");
    for (i, m) in methods.iter().enumerate() {
        if i > 0 {
            text.push('\n');
        }
        text.push_str(m);
    }
    text.push_str("}\n");
    SourceFile::new(format!("{name}.java"), text)
}

/// Generates a program with an abstract root class `State`, `cfg.states`
/// concrete subclasses (some below abstract intermediates) and, from three
/// states on, a helper class outside the hierarchy. The output depends
/// only on `cfg`.
pub fn generate_model(cfg: &GenConfig) -> Vec<SourceFile> {
    assert!(cfg.states >= 1, "at least one state is required");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let width = cfg.states.to_string().len();
    let intermediates: Vec<String> = (0..cfg.states / 4)
        .map(|k| format!("Abstract{k}"))
        .collect();
    let concrete: Vec<String> = (0..cfg.states).map(|i| format!("S{i:0width$}")).collect();
    let mut parents = Vec::new();
    for k in 0..intermediates.len() {
        let p = if k == 0 || rng.gen_bool(0.5) {
            "State".to_owned()
        } else {
            intermediates[rng.gen_range(0..k)].clone()
        };
        parents.push(p);
    }
    let mut others = intermediates.clone();
    if cfg.states >= 3 {
        others.push("Helper".into());
    }
    let mut g = Gen {
        rng,
        concrete: concrete.clone(),
        others,
        nesting: cfg.nesting,
    };

    let mut files = vec![class_file(
        "State",
        "public abstract class State".into(),
        &[],
    )];
    for (k, name) in intermediates.iter().enumerate() {
        files.push(class_file(
            name,
            format!("public abstract class {name} extends {}", parents[k]),
            &[],
        ));
    }
    if cfg.states >= 3 {
        files.push(class_file("Helper", "public class Helper".into(), &[]));
    }
    for name in &concrete {
        let parent = if intermediates.is_empty() || g.rng.gen_bool(0.5) {
            "State".to_owned()
        } else {
            intermediates.choose(&mut g.rng).expect("non-empty").clone()
        };
        let mut methods = Vec::new();
        for j in 0..cfg.methods {
            let verb = VERBS[j % VERBS.len()];
            let m = if j < VERBS.len() {
                verb.to_owned()
            } else {
                format!("{verb}{}", j / VERBS.len())
            };
            let mut text = format!("    public void {m}() {{\n");
            g.body(&mut text, 2, 0);
            text.push_str("    }\n");
            methods.push(text);
        }
        files.push(class_file(
            name,
            format!("public class {name} extends {parent}"),
            &methods,
        ));
    }
    files
}
