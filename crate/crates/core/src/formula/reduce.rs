use std::collections::HashMap;

use super::{Formula, FormulaError, Node};
use crate::team::{Assignment, Team, TeamError, MAX_WIDTH};

/// A dependence atom over the free variables of a [`ReducedFormula`].
///
/// Indices refer to positions in `free_vars`; the masks hold the same sets as
/// bits of an assignment over the free variables.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DepAtom {
    determinants: Vec<usize>,
    dependents: Vec<usize>,
    determinant_mask: u64,
    dependent_mask: u64,
}

impl DepAtom {
    fn new(mut determinants: Vec<usize>, mut dependents: Vec<usize>, width: usize) -> Self {
        determinants.sort_unstable();
        dependents.sort_unstable();
        let mask = |idx: &[usize]| idx.iter().fold(0u64, |m, &i| m | 1 << (width - 1 - i));
        Self {
            determinant_mask: mask(&determinants),
            dependent_mask: mask(&dependents),
            determinants,
            dependents,
        }
    }

    pub fn determinants(&self) -> &[usize] {
        &self.determinants
    }

    pub fn dependents(&self) -> &[usize] {
        &self.dependents
    }

    #[inline]
    pub fn determinant_mask(&self) -> u64 {
        self.determinant_mask
    }

    #[inline]
    pub fn dependent_mask(&self) -> u64 {
        self.dependent_mask
    }

    /// Whether two assignments differing exactly in the bits of `diff`
    /// satisfy the atom: agreement on the determinants forces agreement
    /// on the dependents.
    #[inline]
    pub fn allows_difference(&self, diff: u64) -> bool {
        diff & self.determinant_mask != 0 || diff & self.dependent_mask == 0
    }
}

/// Canonical form: forced literals split off, dependence atoms restricted to
/// the remaining free variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedFormula {
    original_order: Vec<String>,
    forced_true: Vec<usize>,
    forced_false: Vec<usize>,
    free_positions: Vec<usize>,
    free_vars: Vec<String>,
    atoms: Vec<DepAtom>,
    contradictory: bool,
}

impl ReducedFormula {
    pub fn original_order(&self) -> &[String] {
        &self.original_order
    }

    pub fn free_vars(&self) -> &[String] {
        &self.free_vars
    }

    /// Number of free variables, the width of reduced assignments.
    pub fn width(&self) -> usize {
        self.free_vars.len()
    }

    pub fn forced_true(&self) -> impl Iterator<Item = &str> {
        self.forced_true
            .iter()
            .map(|&i| self.original_order[i].as_str())
    }

    pub fn forced_false(&self) -> impl Iterator<Item = &str> {
        self.forced_false
            .iter()
            .map(|&i| self.original_order[i].as_str())
    }

    pub fn atoms(&self) -> &[DepAtom] {
        &self.atoms
    }

    pub fn is_contradictory(&self) -> bool {
        self.contradictory
    }

    /// Encoding size: one unit per free variable and per variable occurrence
    /// in an atom, plus one per atom.
    pub fn size(&self) -> u64 {
        let atoms: usize = self
            .atoms
            .iter()
            .map(|a| 1 + a.determinants.len() + a.dependents.len())
            .sum();
        (self.width() + atoms).max(1) as u64
    }

    /// Atom names for display.
    pub fn atom_names(&self, atom: &DepAtom) -> (Vec<&str>, Vec<&str>) {
        let names = |idx: &[usize]| idx.iter().map(|&i| self.free_vars[i].as_str()).collect();
        (names(&atom.determinants), names(&atom.dependents))
    }

    /// Extends every assignment of `team` (over the free variables) with the
    /// forced values, yielding a team over the original order.
    pub fn expand_team(&self, team: &Team) -> Result<Team, FormulaError> {
        if self.contradictory {
            return Err(FormulaError::Contradictory);
        }
        if team.width() != self.width() {
            return Err(TeamError::WidthMismatch {
                expected: self.width(),
                found: team.width(),
            }
            .into());
        }
        let n = self.original_order.len();
        let forced: u64 = self
            .forced_true
            .iter()
            .fold(0, |m, &i| m | 1 << (n - 1 - i));
        let free_width = self.width();
        let members = team
            .iter()
            .map(|s| {
                let mut bits = forced;
                for (j, &pos) in self.free_positions.iter().enumerate() {
                    if s.bits() >> (free_width - 1 - j) & 1 == 1 {
                        bits |= 1 << (n - 1 - pos);
                    }
                }
                Assignment::new(bits, n).expect("width checked at reduction")
            })
            .collect();
        Ok(Team::from_sorted_unchecked(n, members))
    }

    /// Projects a team over the original order onto the free variables.
    /// Inverse of [`expand_team`](Self::expand_team) on teams that assign
    /// the forced values uniformly.
    pub fn restrict_team(&self, team: &Team) -> Result<Team, FormulaError> {
        let n = self.original_order.len();
        if team.width() != n {
            return Err(TeamError::WidthMismatch {
                expected: n,
                found: team.width(),
            }
            .into());
        }
        let free_width = self.width();
        let members = team.iter().map(|s| {
            let mut bits = 0u64;
            for (j, &pos) in self.free_positions.iter().enumerate() {
                if s.bits() >> (n - 1 - pos) & 1 == 1 {
                    bits |= 1 << (free_width - 1 - j);
                }
            }
            Assignment::new(bits, free_width).expect("free width bounded by original width")
        });
        Ok(Team::from_members(free_width, members)?)
    }

    /// Whether every member of `team` (over the original order) carries the
    /// forced literal values.
    pub fn respects_forced(&self, team: &Team) -> bool {
        let n = self.original_order.len();
        team.iter().all(|s| {
            let bit = |i: usize| s.bits() >> (n - 1 - i) & 1 == 1;
            self.forced_true.iter().all(|&i| bit(i)) && self.forced_false.iter().all(|&i| !bit(i))
        })
    }
}

/// Splits off forced literals and restricts every atom to the free
/// variables. Atoms whose dependent side becomes empty are dropped.
pub fn reduce(formula: &Formula) -> Result<ReducedFormula, FormulaError> {
    let order = formula.variable_order();
    if order.len() > MAX_WIDTH {
        return Err(TeamError::WidthTooLarge(order.len()).into());
    }
    let index: HashMap<&str, usize> = order
        .iter()
        .enumerate()
        .map(|(i, v)| (v.as_str(), i))
        .collect();
    let mut is_true = vec![false; order.len()];
    let mut is_false = vec![false; order.len()];
    let mut contradictory = false;
    let mut raw_atoms = Vec::new();
    for conjunct in formula.root().conjuncts() {
        match conjunct {
            Node::Var(x) => is_true[index[x.as_str()]] = true,
            Node::NegVar(x) => is_false[index[x.as_str()]] = true,
            Node::Const0 => contradictory = true,
            Node::Const1 => {}
            Node::Dep(p, q) => raw_atoms.push((p, q)),
            Node::And(..) => unreachable!("conjuncts are flattened"),
        }
    }
    contradictory |= is_true.iter().zip(&is_false).any(|(t, f)| *t && *f);

    let mut free_index = vec![None; order.len()];
    let mut free_positions = Vec::new();
    for pos in 0..order.len() {
        if !is_true[pos] && !is_false[pos] {
            free_index[pos] = Some(free_positions.len());
            free_positions.push(pos);
        }
    }
    let width = free_positions.len();
    let restrict = |names: &Vec<String>| -> Vec<usize> {
        names
            .iter()
            .filter_map(|x| free_index[index[x.as_str()]])
            .collect()
    };
    let mut atoms: Vec<DepAtom> = raw_atoms
        .into_iter()
        .filter_map(|(p, q)| {
            let q = restrict(q);
            (!q.is_empty()).then(|| DepAtom::new(restrict(p), q, width))
        })
        .collect();
    atoms.sort();
    atoms.dedup();

    let positions = |flags: &[bool]| flags.iter().enumerate().filter(|(_, f)| **f).map(|(i, _)| i).collect();
    Ok(ReducedFormula {
        original_order: order.to_vec(),
        forced_true: positions(&is_true),
        forced_false: positions(&is_false),
        free_vars: free_positions.iter().map(|&p| order[p].clone()).collect(),
        free_positions,
        atoms,
        contradictory,
    })
}

pub fn expand_team(rf: &ReducedFormula, team: &Team) -> Result<Team, FormulaError> {
    rf.expand_team(team)
}
