//! Evaluation of parsed statements over a name → element environment.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;

use braidthom_core::{run_suite, Element, GenConfig, SuiteReport, VElement};
use serde::{Deserialize, Serialize};

use crate::parser::{Expr, Stmt};
use crate::svg;
use crate::CliError;

/// Result of evaluating one statement.
pub enum Value {
    Element(Element),
    V(VElement),
    Bool(bool),
    Int(i64),
    Hnn(i64, usize, Element),
    Report(SuiteReport),
    Message(String),
    Nothing,
    Quit,
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Element(e) => write!(f, "{e}"),
            Value::V(v) => write!(f, "{v}"),
            Value::Bool(b) => write!(f, "{b}"),
            Value::Int(i) => write!(f, "{i}"),
            Value::Hnn(c, k, h) => write!(f, "c={c} k={k} h={h}"),
            Value::Report(r) => write!(f, "{r}"),
            Value::Message(m) => write!(f, "{m}"),
            Value::Nothing | Value::Quit => Ok(()),
        }
    }
}

impl Value {
    pub fn printable(&self) -> bool {
        !matches!(self, Value::Nothing | Value::Quit)
    }
}

/// Session file contents: input history plus the variable bindings.
#[derive(Serialize, Deserialize, Default)]
struct Session {
    history: Vec<String>,
    bindings: BTreeMap<String, Element>,
}

/// The variable environment and input history, persisted by `save`/`load`.
#[derive(Default)]
pub struct Env {
    vars: BTreeMap<String, Element>,
    history: Vec<String>,
}

impl Env {
    pub fn new() -> Env {
        Env::default()
    }

    /// Record one line of input for session persistence.
    pub fn record_history(&mut self, line: &str) {
        let line = line.trim();
        if !line.is_empty() {
            self.history.push(line.to_string());
        }
    }

    pub fn history(&self) -> &[String] {
        &self.history
    }

    pub fn eval_expr(&self, expr: &Expr) -> Result<Element, CliError> {
        Ok(match expr {
            Expr::Literal(e) => e.clone(),
            Expr::Var(name) => self
                .vars
                .get(name)
                .cloned()
                .ok_or_else(|| CliError::Unbound(name.clone()))?,
            Expr::Named(tag) => Element::named(*tag),
            Expr::Inv(e) => self.eval_expr(e)?.inverse(),
            Expr::Mul(a, b) => self.eval_expr(a)?.mul(&self.eval_expr(b)?)?,
            Expr::Reduce(e) => self.eval_expr(e)?.normalize()?,
            Expr::Expand(k, e) => self.eval_expr(e)?.expand(*k)?,
            Expr::Eq(..)
            | Expr::Member(..)
            | Expr::Chi1(_)
            | Expr::Chi0(_)
            | Expr::Project(_)
            | Expr::Hnn(_) => {
                return Err(CliError::Domain(braidthom_core::Error::Internal(
                    "this command does not produce an element".into(),
                )))
            }
            Expr::LeftPart(e) => self.eval_expr(e)?.left_part()?,
        })
    }

    fn eval_value(&self, expr: &Expr) -> Result<Value, CliError> {
        Ok(match expr {
            Expr::Eq(a, b) => Value::Bool(self.eval_expr(a)?.equals(&self.eval_expr(b)?)?),
            Expr::Member(tag, e) => Value::Bool(self.eval_expr(e)?.member(*tag)?),
            Expr::Chi1(e) => Value::Int(self.eval_expr(e)?.chi1()?),
            Expr::Chi0(e) => Value::Int(self.eval_expr(e)?.chi0()?),
            Expr::Project(e) => Value::V(self.eval_expr(e)?.project_to_v()?),
            Expr::Hnn(e) => {
                let (c, k, h) = self.eval_expr(e)?.hnn_decompose()?;
                Value::Hnn(c, k, h)
            }
            _ => Value::Element(self.eval_expr(expr)?),
        })
    }

    pub fn eval_stmt(&mut self, stmt: &Stmt) -> Result<Value, CliError> {
        match stmt {
            Stmt::Let(name, expr) => {
                let e = self.eval_expr(expr)?;
                self.vars.insert(name.clone(), e);
                Ok(Value::Nothing)
            }
            Stmt::Expr(expr) => self.eval_value(expr),
            Stmt::Svg(path, expr) => {
                let e = self.eval_expr(expr)?;
                let doc = svg::render(&e);
                fs::write(path, doc).map_err(|err| CliError::Io(format!("{path}: {err}")))?;
                Ok(Value::Message(format!("wrote {path}")))
            }
            Stmt::Verify {
                suite,
                trials,
                seed,
            } => {
                let cfg = GenConfig {
                    seed: seed.unwrap_or(0),
                    ..GenConfig::default()
                };
                Ok(Value::Report(run_suite(
                    *suite,
                    trials.unwrap_or(100),
                    &cfg,
                )))
            }
            Stmt::Save(path) => {
                let session = Session {
                    history: self.history.clone(),
                    bindings: self.vars.clone(),
                };
                let json = serde_json::to_string_pretty(&session)
                    .map_err(|err| CliError::Io(err.to_string()))?;
                fs::write(path, json).map_err(|err| CliError::Io(format!("{path}: {err}")))?;
                Ok(Value::Message(format!(
                    "saved {} bindings to {path}",
                    self.vars.len()
                )))
            }
            Stmt::Load(path) => {
                let json = fs::read_to_string(path)
                    .map_err(|err| CliError::Io(format!("{path}: {err}")))?;
                let session: Session = serde_json::from_str(&json)
                    .map_err(|err| CliError::Io(format!("{path}: {err}")))?;
                let count = session.bindings.len();
                self.vars.extend(session.bindings);
                self.history.extend(session.history);
                Ok(Value::Message(format!(
                    "loaded {count} bindings from {path}"
                )))
            }
            Stmt::Quit => Ok(Value::Quit),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_program;

    fn run(env: &mut Env, src: &str) -> Vec<String> {
        let mut out = Vec::new();
        for stmt in parse_program(src).unwrap() {
            let v = env.eval_stmt(&stmt).unwrap();
            if v.printable() {
                out.push(v.to_string());
            }
        }
        out
    }

    #[test]
    fn binding_and_equality() {
        let mut env = Env::new();
        let out = run(&mut env, "a = named x0; b = inv a; eq (mul a b) [0|e|0]");
        assert_eq!(out, vec!["true"]);
    }

    #[test]
    fn chi1_of_x0() {
        let mut env = Env::new();
        assert_eq!(run(&mut env, "chi1 (named x0)"), vec!["1"]);
    }

    #[test]
    fn membership_output() {
        let mut env = Env::new();
        assert_eq!(run(&mut env, "member bP (named g_comm)"), vec!["false"]);
        assert_eq!(run(&mut env, "member Dhat (named g_comm)"), vec!["true"]);
    }

    #[test]
    fn unbound_variables_error() {
        let mut env = Env::new();
        let stmt = &parse_program("inv missing").unwrap()[0];
        assert!(matches!(env.eval_stmt(stmt), Err(CliError::Unbound(_))));
    }

    #[test]
    fn domain_errors_surface() {
        let mut env = Env::new();
        let stmt = &parse_program("chi1 (named psi)").unwrap()[0];
        assert!(matches!(env.eval_stmt(stmt), Err(CliError::Domain(_))));
    }

    #[test]
    fn save_load_round_trip() {
        let dir = std::env::temp_dir().join("braidthom-eval-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("session.json");
        let path = path.to_str().unwrap();
        let mut env = Env::new();
        env.record_history("a = named t1");
        run(&mut env, &format!("a = named t1; save {path}"));
        let mut env2 = Env::new();
        let out = run(&mut env2, &format!("load {path}; eq a (named t1)"));
        assert_eq!(out.last().unwrap(), "true");
        assert_eq!(env2.history(), &["a = named t1".to_string()]);
    }

    #[test]
    fn hnn_and_project_print() {
        let mut env = Env::new();
        let out = run(&mut env, "hnn (named x0); project (named x0)");
        assert_eq!(out[0], "c=1 k=0 h=[0 | e | 0]");
        assert!(out[1].contains("10100"));
    }
}
