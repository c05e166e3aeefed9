//! Reference semantics written directly against the formula tree, sharing
//! nothing with the library's reduction or pairwise checker.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use teamenum::families::{RandomFormulas, RandomShape};
use teamenum::{Formula, Node, Team};

/// A team over at most four variables as a bitmask over the 16 possible
/// assignments (bit `v` set iff assignment `v` is a member).
pub type Mask = u32;

pub const SUITE_SEED: u64 = 0x5eed_2024;
pub const SUITE_SIZE: usize = 200;

pub fn random_suite() -> Vec<Formula> {
    RandomFormulas::new(SUITE_SEED, RandomShape::default())
        .take(SUITE_SIZE)
        .collect()
}

fn value(order: &[String], name: &str, assignment: u64) -> bool {
    let n = order.len();
    let i = order.iter().position(|v| v == name).expect("declared variable");
    assignment >> (n - 1 - i) & 1 == 1
}

/// Team semantics by definition: literals must hold in every member, `0`
/// only holds in the empty team, and `dep(P; Q)` holds iff the values on
/// `P` determine the values on `Q`.
pub fn holds(node: &Node, order: &[String], team: &[u64]) -> bool {
    match node {
        Node::Const1 => true,
        Node::Const0 => team.is_empty(),
        Node::Var(x) => team.iter().all(|&s| value(order, x, s)),
        Node::NegVar(x) => team.iter().all(|&s| !value(order, x, s)),
        Node::And(a, b) => holds(a, order, team) && holds(b, order, team),
        Node::Dep(p, q) => {
            let mut seen: HashMap<Vec<bool>, Vec<bool>> = HashMap::new();
            team.iter().all(|&s| {
                let key: Vec<bool> = p.iter().map(|x| value(order, x, s)).collect();
                let val: Vec<bool> = q.iter().map(|x| value(order, x, s)).collect();
                seen.entry(key).or_insert_with(|| val.clone()) == &val
            })
        }
    }
}

pub fn members(mask: Mask) -> Vec<u64> {
    (0..32).filter(|v| mask >> v & 1 == 1).collect()
}

pub fn mask_of(team: &Team) -> Mask {
    team.iter().fold(0, |m, s| m | 1 << s.bits())
}

/// Every non-empty satisfying team of size at most `max_size`.
pub fn oracle(formula: &Formula, max_size: usize) -> BTreeSet<Mask> {
    let order = formula.variable_order();
    assert!(order.len() <= 4, "oracle is exhaustive over at most 4 variables");
    let space = 1u64 << (1u64 << order.len());
    (1..space as Mask)
        .filter(|m| m.count_ones() as usize <= max_size)
        .filter(|&m| holds(formula.root(), order, &members(m)))
        .collect()
}

/// Teams as sorted member vectors; `Vec` ordering is the lexicographic team
/// order.
pub fn as_vectors(set: &BTreeSet<Mask>) -> Vec<Vec<u64>> {
    set.iter().map(|&m| members(m)).collect()
}

pub fn symmetric_difference(a: &[u64], b: &[u64]) -> usize {
    let a: BTreeSet<_> = a.iter().collect();
    let b: BTreeSet<_> = b.iter().collect();
    a.symmetric_difference(&b).count()
}
