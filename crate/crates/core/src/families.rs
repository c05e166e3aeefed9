//! Formula generators for benchmarks and tests.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::formula::{Formula, FormulaError, Node};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("the chain family needs k >= 2, got {0}")]
    ChainTooShort(usize),
    #[error(transparent)]
    Formula(#[from] FormulaError),
}

fn var(i: usize) -> String {
    format!("x{i}")
}

/// Text of `dep(x1;xk) & ... & dep(x(k-1);xk)`. For `k >= 3` first
/// occurrence would put `xk` second, so a `vars:` header pins the natural
/// order `x1..xk`.
pub fn chain_text(k: usize) -> Result<String, FamilyError> {
    if k < 2 {
        return Err(FamilyError::ChainTooShort(k));
    }
    let atoms = (1..k)
        .map(|i| format!("dep({};{})", var(i), var(k)))
        .collect::<Vec<_>>()
        .join(" & ");
    if k == 2 {
        return Ok(atoms);
    }
    let header = (1..=k).map(var).collect::<Vec<_>>().join(",");
    Ok(format!("vars: {header}; {atoms}"))
}

/// The chain formula over `x1..xk`: every variable but the last determines
/// the last one on its own.
pub fn chain(k: usize) -> Result<Formula, FamilyError> {
    if k < 2 {
        return Err(FamilyError::ChainTooShort(k));
    }
    let root = (1..k)
        .map(|i| Node::Dep(vec![var(i)], vec![var(k)]))
        .reduce(|a, b| Node::And(Box::new(a), Box::new(b)))
        .expect("k >= 2 gives at least one atom");
    Ok(Formula::new(root, (1..=k).map(var).collect())?)
}

/// Shape limits for [`RandomFormulas`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RandomShape {
    pub max_vars: usize,
    pub max_atoms: usize,
    /// Chance in percent that a conjunct is a literal instead of an atom.
    pub literal_percent: u32,
}

impl Default for RandomShape {
    fn default() -> Self {
        Self {
            max_vars: 4,
            max_atoms: 4,
            literal_percent: 10,
        }
    }
}

/// Reproducible stream of random conjunctions of dependence atoms and
/// literals over `x1..xm`, `1 <= m <= max_vars`.
pub struct RandomFormulas {
    rng: ChaCha8Rng,
    shape: RandomShape,
}

impl RandomFormulas {
    pub fn new(seed: u64, shape: RandomShape) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
            shape,
        }
    }

    fn subset(&mut self, m: usize, non_empty: bool) -> Vec<String> {
        loop {
            let mask: u32 = self.rng.gen_range(0..1u32 << m);
            if non_empty && mask == 0 {
                continue;
            }
            return (0..m).filter(|i| mask >> i & 1 == 1).map(|i| var(i + 1)).collect();
        }
    }

    pub fn next_formula(&mut self) -> Formula {
        let m = self.rng.gen_range(1..=self.shape.max_vars);
        let atoms = self.rng.gen_range(0..=self.shape.max_atoms);
        let mut conjuncts = Vec::with_capacity(atoms.max(1));
        for _ in 0..atoms {
            if self.rng.gen_range(0..100) < self.shape.literal_percent {
                let v = var(self.rng.gen_range(1..=m));
                conjuncts.push(if self.rng.gen() { Node::Var(v) } else { Node::NegVar(v) });
            } else {
                let p = self.subset(m, false);
                let q = self.subset(m, true);
                conjuncts.push(Node::Dep(p, q));
            }
        }
        let root = conjuncts
            .into_iter()
            .reduce(|a, b| Node::And(Box::new(a), Box::new(b)))
            .unwrap_or(Node::Const1);
        Formula::new(root, (1..=m).map(var).collect()).expect("generated variables are declared")
    }
}

impl Iterator for RandomFormulas {
    type Item = Formula;

    fn next(&mut self) -> Option<Formula> {
        Some(self.next_formula())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{parse_formula, reduce};

    #[test]
    fn chain_texts() {
        assert_eq!(chain_text(2).unwrap(), "dep(x1;x2)");
        assert_eq!(chain_text(3).unwrap(), "vars: x1,x2,x3; dep(x1;x3) & dep(x2;x3)");
        assert_eq!(chain(4).unwrap().root().conjuncts().len(), 3);
        assert_eq!(chain(1), Err(FamilyError::ChainTooShort(1)));
        for k in 2..6 {
            assert_eq!(chain(k).unwrap(), parse_formula(&chain_text(k).unwrap()).unwrap());
        }
    }

    #[test]
    fn random_formulas_are_reproducible_and_bounded() {
        let a: Vec<Formula> = RandomFormulas::new(7, RandomShape::default()).take(50).collect();
        let b: Vec<Formula> = RandomFormulas::new(7, RandomShape::default()).take(50).collect();
        assert_eq!(a, b);
        for f in &a {
            let rf = reduce(f).unwrap();
            assert!(rf.width() <= 4);
            assert!(rf.atoms().len() <= 4);
        }
    }
}
