//! Formulas of the Poor Man's fragment of propositional dependence logic:
//! literals, constants, conjunction and dependence atoms.
//!
//! [`parse_formula`] builds a [`Formula`]; [`reduce`] canonicalizes it into a
//! conjunction of dependence atoms over the variables that are not forced by
//! a literal, and [`ReducedFormula::expand_team`] maps teams of the reduced
//! formula back onto the full variable order.

mod parse;
mod reduce;

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

use crate::team::TeamError;

pub use parse::{parse_disjunction, parse_formula};
pub use reduce::{expand_team, reduce, DepAtom, ReducedFormula};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("{line}:{column}: syntax error: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{line}:{column}: unknown token {token:?}")]
    UnknownToken {
        line: usize,
        column: usize,
        token: String,
    },
    #[error("{line}:{column}: variable {name} listed twice")]
    DuplicateVariable {
        line: usize,
        column: usize,
        name: String,
    },
    #[error("{line}:{column}: variable {name} missing from the vars header")]
    UndeclaredVariable {
        line: usize,
        column: usize,
        name: String,
    },
    #[error("formula is contradictory; only the empty team satisfies it")]
    Contradictory,
    #[error("disjuncts range over different variable orders")]
    MismatchedOrders,
    #[error(transparent)]
    Team(#[from] TeamError),
}

/// A node of the formula tree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Node {
    Var(String),
    NegVar(String),
    Const0,
    Const1,
    And(Box<Node>, Box<Node>),
    /// `dep(P; Q)`: members agreeing on every variable of `P` agree on `Q`.
    Dep(Vec<String>, Vec<String>),
}

impl Node {
    /// Conjuncts in left-to-right order.
    pub fn conjuncts(&self) -> Vec<&Node> {
        let mut out = Vec::new();
        let mut stack = vec![self];
        while let Some(node) = stack.pop() {
            match node {
                Node::And(l, r) => {
                    stack.push(r);
                    stack.push(l);
                }
                other => out.push(other),
            }
        }
        out
    }

    /// Variable names in order of first occurrence.
    pub fn first_occurrence_order(&self) -> Vec<String> {
        let mut seen = HashSet::new();
        let mut order = Vec::new();
        self.collect_vars(&mut seen, &mut order);
        order
    }

    fn collect_vars(&self, seen: &mut HashSet<String>, order: &mut Vec<String>) {
        let mut visit = |name: &String| {
            if seen.insert(name.clone()) {
                order.push(name.clone());
            }
        };
        match self {
            Node::Var(x) | Node::NegVar(x) => visit(x),
            Node::Const0 | Node::Const1 => {}
            Node::Dep(p, q) => p.iter().chain(q).for_each(visit),
            Node::And(l, r) => {
                l.collect_vars(seen, order);
                r.collect_vars(seen, order);
            }
        }
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Node::Var(x) => f.write_str(x),
            Node::NegVar(x) => write!(f, "!{x}"),
            Node::Const0 => f.write_str("0"),
            Node::Const1 => f.write_str("1"),
            Node::Dep(p, q) => write!(f, "dep({}; {})", p.join(", "), q.join(", ")),
            Node::And(..) => {
                for (i, c) in self.conjuncts().into_iter().enumerate() {
                    if i > 0 {
                        f.write_str(" & ")?;
                    }
                    write!(f, "{c}")?;
                }
                Ok(())
            }
        }
    }
}

/// A parsed formula together with its variable order. Bit position `i` of
/// every assignment refers to `variable_order[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Formula {
    root: Node,
    variable_order: Vec<String>,
}

impl Formula {
    /// Fails if a variable of `root` is missing from `variable_order` or the
    /// order repeats a name.
    pub fn new(root: Node, variable_order: Vec<String>) -> Result<Self, FormulaError> {
        let declared: HashSet<&str> = variable_order.iter().map(String::as_str).collect();
        if declared.len() != variable_order.len() {
            let mut seen = HashSet::new();
            let dup = variable_order.iter().find(|v| !seen.insert(*v)).unwrap();
            return Err(FormulaError::DuplicateVariable {
                line: 0,
                column: 0,
                name: dup.clone(),
            });
        }
        if let Some(missing) = root
            .first_occurrence_order()
            .into_iter()
            .find(|v| !declared.contains(v.as_str()))
        {
            return Err(FormulaError::UndeclaredVariable {
                line: 0,
                column: 0,
                name: missing,
            });
        }
        Ok(Self {
            root,
            variable_order,
        })
    }

    pub fn root(&self) -> &Node {
        &self.root
    }

    pub fn variable_order(&self) -> &[String] {
        &self.variable_order
    }

    pub fn variable_count(&self) -> usize {
        self.variable_order.len()
    }
}

fn write_header(f: &mut fmt::Formatter<'_>, order: &[String], implied: &[String]) -> fmt::Result {
    if order != implied {
        write!(f, "vars: {}; ", order.join(", "))?;
    }
    Ok(())
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_header(f, &self.variable_order, &self.root.first_occurrence_order())?;
        write!(f, "{}", self.root)
    }
}

/// A classical disjunction of formulas over one shared variable order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Disjunction {
    disjuncts: Vec<Node>,
    variable_order: Vec<String>,
}

impl Disjunction {
    pub fn disjuncts(&self) -> &[Node] {
        &self.disjuncts
    }

    pub fn variable_order(&self) -> &[String] {
        &self.variable_order
    }

    /// Each disjunct as a formula over the shared order.
    pub fn formulas(&self) -> Vec<Formula> {
        self.disjuncts
            .iter()
            .map(|d| Formula {
                root: d.clone(),
                variable_order: self.variable_order.clone(),
            })
            .collect()
    }

    /// Returns the single formula when there is exactly one disjunct.
    pub fn into_single(self) -> Option<Formula> {
        if self.disjuncts.len() == 1 {
            let root = self.disjuncts.into_iter().next().unwrap();
            Some(Formula {
                root,
                variable_order: self.variable_order,
            })
        } else {
            None
        }
    }
}

impl fmt::Display for Disjunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = HashSet::new();
        let mut implied = Vec::new();
        for d in &self.disjuncts {
            d.collect_vars(&mut seen, &mut implied);
        }
        write_header(f, &self.variable_order, &implied)?;
        for (i, d) in self.disjuncts.iter().enumerate() {
            if i > 0 {
                f.write_str(" \\/ ")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}
