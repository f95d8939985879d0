use std::collections::HashMap;

use serde_json::{json, Map, Value};

use crate::poly::Monomial;

use super::family::{ParamFamily, PolyTerm};
use super::formula::Formula;
use super::term::{Node, TermArena, TermId};

/// Default parameter names `C1, C2, …`.
pub fn default_param_names(nparams: usize) -> Vec<String> {
    (1..=nparams).map(|i| format!("C{i}")).collect()
}

const SUM: u8 = 1;
const PRODUCT: u8 = 2;
const ATOM: u8 = 3;

/// Human-readable L_gcd syntax, `(a : b)` for the colon.
pub struct Printer<'a> {
    arena: &'a TermArena,
    names: &'a [String],
    memo: HashMap<TermId, (String, u8)>,
}

impl<'a> Printer<'a> {
    pub fn new(arena: &'a TermArena, names: &'a [String]) -> Self {
        Printer { arena, names, memo: HashMap::new() }
    }

    fn render(&mut self, t: TermId) -> (String, u8) {
        if let Some(r) = self.memo.get(&t) {
            return r.clone();
        }
        let r = match self.arena.node(t).clone() {
            Node::Const(c) if c < 0.into() => (c.to_string(), SUM),
            Node::Const(c) => (c.to_string(), ATOM),
            Node::Param(i) => (self.names[i].clone(), ATOM),
            Node::Add(a, b) => {
                let (x, y) = (self.render(a).0, self.at_least(b, PRODUCT));
                (format!("{x} + {y}"), SUM)
            }
            Node::Sub(a, b) if self.arena.literal(a).is_some_and(|c| c == &0.into()) => {
                (format!("-{}", self.at_least(b, PRODUCT)), SUM)
            }
            Node::Sub(a, b) => {
                let (x, y) = (self.render(a).0, self.at_least(b, PRODUCT));
                (format!("{x} - {y}"), SUM)
            }
            Node::Mul(a, b) => {
                let (x, y) = (self.at_least(a, PRODUCT), self.at_least(b, ATOM));
                (format!("{x}*{y}"), PRODUCT)
            }
            Node::Colon(a, b) => {
                let (x, y) = (self.render(a).0, self.render(b).0);
                (format!("({x} : {y})"), ATOM)
            }
        };
        self.memo.insert(t, r.clone());
        r
    }

    fn at_least(&mut self, t: TermId, level: u8) -> String {
        let (s, l) = self.render(t);
        if l >= level {
            s
        } else {
            format!("({s})")
        }
    }

    pub fn term(&mut self, t: TermId) -> String {
        self.render(t).0
    }

    pub fn formula(&mut self, f: &Formula) -> String {
        match f {
            Formula::True => "true".into(),
            Formula::False => "false".into(),
            Formula::Eq0(t) => format!("{} = 0", self.term(*t)),
            Formula::Rad(a, b) => format!("rad({}, {})", self.term(*a), self.term(*b)),
            Formula::Not(g) => format!("not ({})", self.formula(g)),
            Formula::And(fs) => self.joined(fs, " and "),
            Formula::Or(fs) => self.joined(fs, " or "),
        }
    }

    fn joined(&mut self, fs: &[Formula], sep: &str) -> String {
        let parts: Vec<String> = fs
            .iter()
            .map(|g| match g {
                Formula::And(_) | Formula::Or(_) => format!("({})", self.formula(g)),
                _ => self.formula(g),
            })
            .collect();
        parts.join(sep)
    }

    /// `coeff*X^2 + coeff*X + coeff`, highest monomial first.
    pub fn poly(&mut self, p: &PolyTerm, vars: &[String]) -> String {
        if p.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = p
            .terms
            .iter()
            .rev()
            .map(|(m, t)| {
                let mono = monomial_text(m, vars);
                if mono.is_empty() {
                    self.term(*t)
                } else if self.arena.literal(*t).is_some_and(|c| c == &1.into()) {
                    mono
                } else {
                    format!("{}*{mono}", self.at_least(*t, ATOM))
                }
            })
            .collect();
        parts.join(" + ")
    }
}

fn monomial_text(m: &Monomial, vars: &[String]) -> String {
    let parts: Vec<String> = m
        .exponents()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| if e == 1 { vars[i].clone() } else { format!("{}^{e}", vars[i]) })
        .collect();
    parts.join("*")
}

/// The family as text: each branch formula followed by its generators.
pub fn family_to_text(fam: &ParamFamily, params: &[String], vars: &[String]) -> String {
    let mut pr = Printer::new(&fam.arena, params);
    let mut out = String::new();
    for (i, b) in fam.branches.iter().enumerate() {
        out.push_str(&format!("branch {}: {}\n", i + 1, pr.formula(&b.formula)));
        if b.generators.is_empty() {
            out.push_str("  (no generators)\n");
        }
        for (k, g) in b.generators.iter().enumerate() {
            let entries: Vec<String> = g.iter().map(|p| pr.poly(p, vars)).collect();
            out.push_str(&format!("  y{}: [{}]\n", k + 1, entries.join(", ")));
        }
    }
    out
}

fn formula_json(f: &Formula, ids: &HashMap<TermId, usize>) -> Value {
    match f {
        Formula::True => Value::Bool(true),
        Formula::False => Value::Bool(false),
        Formula::Eq0(t) => json!({ "eq0": ids[t] }),
        Formula::Rad(a, b) => json!({ "rad": [ids[a], ids[b]] }),
        Formula::Not(g) => json!({ "not": formula_json(g, ids) }),
        Formula::And(fs) => json!({ "and": fs.iter().map(|g| formula_json(g, ids)).collect::<Vec<_>>() }),
        Formula::Or(fs) => json!({ "or": fs.iter().map(|g| formula_json(g, ids)).collect::<Vec<_>>() }),
    }
}

/// JSON form: a node table in prefix notation (`["add", i, j]`, children
/// referring to earlier rows), nested formulas, and generator polynomials
/// as lists of `{exp, coeff}` with `coeff` a node index.
pub fn family_to_json(fam: &ParamFamily, params: &[String], vars: &[String]) -> Value {
    let reachable = fam.arena.reachable(fam.roots());
    let ids: HashMap<TermId, usize> = reachable.iter().enumerate().map(|(k, &t)| (t, k)).collect();
    let nodes: Vec<Value> = reachable
        .iter()
        .map(|&t| match fam.arena.node(t) {
            Node::Const(c) => json!(["const", c.to_string()]),
            Node::Param(i) => json!(["param", i]),
            Node::Add(a, b) => json!(["add", ids[a], ids[b]]),
            Node::Sub(a, b) => json!(["sub", ids[a], ids[b]]),
            Node::Mul(a, b) => json!(["mul", ids[a], ids[b]]),
            Node::Colon(a, b) => json!(["colon", ids[a], ids[b]]),
        })
        .collect();
    let branches: Vec<Value> = fam
        .branches
        .iter()
        .map(|b| {
            let gens: Vec<Value> = b
                .generators
                .iter()
                .map(|g| {
                    Value::Array(
                        g.iter()
                            .map(|p| {
                                Value::Array(
                                    p.terms.iter().map(|(m, t)| json!({ "exp": m.exponents(), "coeff": ids[t] })).collect(),
                                )
                            })
                            .collect(),
                    )
                })
                .collect();
            json!({ "formula": formula_json(&b.formula, &ids), "generators": gens })
        })
        .collect();
    let mut obj = Map::new();
    obj.insert("params".into(), json!(params));
    obj.insert("vars".into(), json!(vars));
    obj.insert("beta".into(), json!(fam.beta.to_string()));
    obj.insert("terms".into(), Value::Array(nodes));
    obj.insert("branches".into(), Value::Array(branches));
    obj.insert(
        "sizes".into(),
        json!({ "branches": fam.branches.len(), "generators": fam.generator_count(), "terms": reachable.len() }),
    );
    Value::Object(obj)
}
