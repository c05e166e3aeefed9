//! Level-by-level construction of the satisfying zero-containing teams.
//!
//! A sorted team `{0 = s1 < ... < sk}` with `k >= 3` satisfies a conjunction
//! of dependence atoms iff both `{s1..s(k-1)}` and `{s1..s(k-2), sk}` do and
//! `{0, s(k-1) + sk}` does. [`SeedIndex`] groups level-`k` teams by their
//! `k - 1` smallest members, so the two smaller teams are siblings in one list
//! and extending level `k - 1` to level `k` is a pairwise scan of every list.
//!
//! [`SeedStepper`] runs that scan in budgeted slices so it can be interleaved
//! with the output of the previous level.

use thiserror::Error;

use crate::exec::Execution;
use crate::formula::ReducedFormula;
use crate::steps::StepCounter;
use crate::team::{pair_satisfies_counted, Assignment, Team};
use crate::trie::{BitTrie, TeamSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeedError {
    #[error("the formula is contradictory")]
    Contradictory,
    #[error("level {0} is already complete")]
    LevelComplete(usize),
    #[error("level {0} is still under construction")]
    LevelIncomplete(usize),
}

/// Maps each `(k-1)`-team to the ascending list of assignments that extend
/// it to a satisfying zero-containing `k`-team.
#[derive(Debug, Clone)]
pub struct SeedIndex {
    level: usize,
    width: usize,
    entries: Vec<(Team, Vec<Assignment>)>,
    keys: BitTrie,
}

impl SeedIndex {
    fn new(level: usize, width: usize) -> Self {
        Self {
            level,
            width,
            entries: Vec::new(),
            keys: BitTrie::new(level - 1, width),
        }
    }

    pub fn level(&self) -> usize {
        self.level
    }

    /// Entries in ascending lexicographic order of their keys.
    pub fn entries(&self) -> impl Iterator<Item = (&Team, &[Assignment])> {
        self.entries.iter().map(|(t, l)| (t, l.as_slice()))
    }

    pub fn get(&self, key: &Team) -> Option<&[Assignment]> {
        let bits: Vec<u64> = key.iter().map(|s| s.bits()).collect();
        if bits.len() != self.level - 1 || key.width() != self.width {
            return None;
        }
        if !self.keys.contains(&bits, &mut StepCounter::new()) {
            return None;
        }
        self.entries
            .binary_search_by(|(t, _)| t.lex_cmp(key))
            .ok()
            .map(|i| self.entries[i].1.as_slice())
    }

    /// Number of level-`k` teams described, i.e. the sum of list lengths.
    pub fn team_count(&self) -> usize {
        self.entries.iter().map(|(_, l)| l.len()).sum()
    }

    /// Starts a new entry; keys arrive in ascending order.
    fn open_entry(&mut self, key: Team, steps: &mut StepCounter) {
        debug_assert!(self
            .entries
            .last()
            .is_none_or(|(t, _)| t.lex_cmp(&key).is_lt()));
        let bits: Vec<u64> = key.iter().map(|s| s.bits()).collect();
        self.keys.insert(&bits, steps);
        self.entries.push((key, Vec::new()));
    }

    /// Appends to the newest entry; values arrive in ascending order.
    fn push_to_last(&mut self, s: Assignment, steps: &mut StepCounter) {
        steps.tick();
        let list = &mut self.entries.last_mut().expect("entry opened").1;
        debug_assert!(list.last().is_none_or(|l| *l < s));
        list.push(s);
    }
}

/// `D_2[{0}]`: the nonzero `s` with `{0, s}` satisfying the formula.
#[derive(Debug, Clone)]
struct PairSeeds {
    list: Vec<Assignment>,
    trie: BitTrie,
}

/// Pair seeds in one pass, optionally testing candidates in parallel.
pub fn build_pair_seeds(rf: &ReducedFormula) -> Result<SeedIndex, SeedError> {
    build_pair_seeds_with(rf, Execution::default())
}

pub fn build_pair_seeds_with(rf: &ReducedFormula, exec: Execution) -> Result<SeedIndex, SeedError> {
    if rf.is_contradictory() {
        return Err(SeedError::Contradictory);
    }
    let width = rf.width();
    let candidates: Vec<u64> = (1..1u64 << width).collect();
    let accepted = exec.filter(candidates, |&bits| {
        pair_satisfies_counted(rf, &Assignment::from_raw(bits, width), &mut StepCounter::new())
            .expect("nonzero candidate of matching width")
    });
    let mut steps = StepCounter::new();
    let mut index = SeedIndex::new(2, width);
    index.open_entry(Team::singleton(Assignment::zero(width)), &mut steps);
    for bits in accepted {
        index.push_to_last(Assignment::from_raw(bits, width), &mut steps);
    }
    Ok(index)
}

/// What one call to [`SeedStepper::advance`] achieved.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Progress {
    Progressed,
    LevelComplete,
}

#[derive(Debug, Clone, Copy, Default)]
struct Cursor {
    entry: usize,
    r: usize,
    s: usize,
    /// Whether the entry for `T + {r}` exists in the index under construction.
    opened: bool,
}

/// Resumable construction of the level-`k` seed sets.
#[derive(Debug, Clone)]
pub struct SeedStepper {
    rf: ReducedFormula,
    width: usize,
    level: usize,
    pairs: PairSeeds,
    previous: Option<SeedIndex>,
    current: SeedIndex,
    seeds: TeamSet,
    cursor: Cursor,
    /// Level-2 candidate cursor.
    candidate: u64,
    complete: bool,
    inner_iterations: u64,
    previous_seed_count: usize,
}

impl SeedStepper {
    /// A stepper constructing level 2.
    pub fn new(rf: &ReducedFormula) -> Result<Self, SeedError> {
        if rf.is_contradictory() {
            return Err(SeedError::Contradictory);
        }
        let width = rf.width();
        let mut current = SeedIndex::new(2, width);
        current.open_entry(Team::singleton(Assignment::zero(width)), &mut StepCounter::new());
        Ok(Self {
            rf: rf.clone(),
            width,
            level: 2,
            pairs: PairSeeds {
                list: Vec::new(),
                trie: BitTrie::new(1, width),
            },
            previous: None,
            current,
            seeds: TeamSet::new(2, width),
            cursor: Cursor::default(),
            candidate: 1,
            complete: false,
            inner_iterations: 0,
            previous_seed_count: 1,
        })
    }

    /// The level under construction (or just completed).
    pub fn level(&self) -> usize {
        self.level
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// Innermost-loop iterations spent on the current level.
    pub fn inner_iterations(&self) -> u64 {
        self.inner_iterations
    }

    /// Number of seeds at the previous level, which bounds the work here.
    pub fn previous_seed_count(&self) -> usize {
        self.previous_seed_count
    }

    /// Performs up to `budget` units of work: one candidate test at level 2,
    /// otherwise one innermost-loop iteration or one cursor move.
    pub fn advance(&mut self, budget: usize) -> Result<Progress, SeedError> {
        self.advance_counted(budget, &mut StepCounter::new())
    }

    pub(crate) fn advance_counted(
        &mut self,
        budget: usize,
        steps: &mut StepCounter,
    ) -> Result<Progress, SeedError> {
        if self.complete {
            return Err(SeedError::LevelComplete(self.level));
        }
        for _ in 0..budget {
            let done = if self.level == 2 {
                self.pair_unit(steps)
            } else {
                self.extension_unit(steps)
            };
            if done {
                self.complete = true;
                return Ok(Progress::LevelComplete);
            }
        }
        Ok(Progress::Progressed)
    }

    /// Runs the current level to completion.
    pub fn finish(&mut self) -> Result<(), SeedError> {
        self.finish_counted(&mut StepCounter::new())
    }

    pub(crate) fn finish_counted(&mut self, steps: &mut StepCounter) -> Result<(), SeedError> {
        while !self.complete {
            self.advance_counted(usize::MAX, steps)?;
        }
        Ok(())
    }

    fn pair_unit(&mut self, steps: &mut StepCounter) -> bool {
        if self.candidate >> self.width != 0 {
            return true;
        }
        let s = Assignment::from_raw(self.candidate, self.width);
        self.candidate += 1;
        self.inner_iterations += 1;
        if pair_satisfies_counted(&self.rf, &s, steps).expect("nonzero candidate") {
            self.pairs.trie.insert(&[s.bits()], steps);
            self.pairs.list.push(s);
            self.current.push_to_last(s, steps);
            let team = Team::from_sorted_unchecked(self.width, vec![Assignment::zero(self.width), s]);
            self.seeds.insert(&team, steps);
        }
        false
    }

    fn extension_unit(&mut self, steps: &mut StepCounter) -> bool {
        let previous = self.previous.as_ref().expect("previous level present");
        let Some((key, list)) = previous.entries.get(self.cursor.entry) else {
            return true;
        };
        let c = &mut self.cursor;
        if c.r >= list.len() {
            steps.tick();
            *c = Cursor {
                entry: c.entry + 1,
                r: 0,
                s: 1,
                opened: false,
            };
            return false;
        }
        if c.s >= list.len() {
            steps.tick();
            c.r += 1;
            c.s = c.r + 1;
            c.opened = false;
            return false;
        }
        let (r, s) = (list[c.r], list[c.s]);
        c.s += 1;
        self.inner_iterations += 1;
        steps.tick();
        let sum = r.xor(&s);
        if self.pairs.trie.contains(&[sum.bits()], steps) {
            if !c.opened {
                c.opened = true;
                self.current.open_entry(key.with_max(r), steps);
            }
            self.current.push_to_last(s, steps);
            let team = key.with_max(r).with_max(s);
            self.seeds.insert(&team, steps);
        }
        false
    }

    /// The completed seed set of the current level.
    pub fn seeds_at_level(&self) -> Result<&TeamSet, SeedError> {
        if self.complete {
            Ok(&self.seeds)
        } else {
            Err(SeedError::LevelIncomplete(self.level))
        }
    }

    /// The completed index of the current level.
    pub fn index(&self) -> Result<&SeedIndex, SeedError> {
        if self.complete {
            Ok(&self.current)
        } else {
            Err(SeedError::LevelIncomplete(self.level))
        }
    }

    /// Hands out the completed seed set and starts the next level. Indexes
    /// older than the one just completed are dropped.
    pub fn begin_next_level(&mut self) -> Result<TeamSet, SeedError> {
        if !self.complete {
            return Err(SeedError::LevelIncomplete(self.level));
        }
        self.level += 1;
        let next_seeds = TeamSet::new(self.level, self.width);
        let seeds = std::mem::replace(&mut self.seeds, next_seeds);
        let completed = std::mem::replace(&mut self.current, SeedIndex::new(self.level, self.width));
        self.previous_seed_count = seeds.len();
        self.previous = Some(completed);
        self.cursor = Cursor {
            entry: 0,
            r: 0,
            s: 1,
            opened: false,
        };
        self.complete = false;
        self.inner_iterations = 0;
        Ok(seeds)
    }

    /// Memory held by the tries, in nodes.
    pub fn trie_nodes(&self) -> usize {
        self.seeds.node_count()
            + self.pairs.trie.node_count()
            + self.current.keys.node_count()
            + self.previous.as_ref().map_or(0, |p| p.keys.node_count())
    }
}

/// Convenience: the complete seed set `S_k^0` for one level, `k >= 1`.
pub fn seeds_for_level(rf: &ReducedFormula, level: usize) -> Result<Vec<Team>, SeedError> {
    if rf.is_contradictory() {
        return Ok(Vec::new());
    }
    if level <= 1 {
        return Ok(if level == 1 {
            vec![Team::singleton(Assignment::zero(rf.width()))]
        } else {
            Vec::new()
        });
    }
    let mut stepper = SeedStepper::new(rf)?;
    while stepper.level() < level {
        stepper.finish()?;
        let seeds = stepper.begin_next_level()?;
        if seeds.is_empty() {
            return Ok(Vec::new());
        }
    }
    stepper.finish()?;
    Ok(stepper.seeds_at_level()?.teams())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{parse_formula, reduce};

    fn rf(text: &str) -> ReducedFormula {
        reduce(&parse_formula(text).unwrap()).unwrap()
    }

    fn strings(teams: &[Team]) -> Vec<String> {
        teams.iter().map(|t| t.to_string()).collect()
    }

    #[test]
    fn pair_seeds_of_the_chain() {
        let index = build_pair_seeds(&rf("vars: x1, x2, x3; dep(x1;x3) & dep(x2;x3)")).unwrap();
        let list: Vec<String> = index
            .get(&Team::parse("000", 3).unwrap())
            .unwrap()
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(list, ["010", "100", "110", "111"]);
    }

    #[test]
    fn pair_seeds_without_atoms_and_single_atom() {
        let all = build_pair_seeds(&rf("vars: x1, x2; 1")).unwrap();
        assert_eq!(all.team_count(), 3);
        let dep = build_pair_seeds(&rf("dep(x1;x2)")).unwrap();
        let list: Vec<String> = dep.entries().next().unwrap().1.iter().map(|s| s.to_string()).collect();
        assert_eq!(list, ["10", "11"]);
        assert_eq!(
            build_pair_seeds(&rf("x & !x")).unwrap_err(),
            SeedError::Contradictory
        );
    }

    #[test]
    fn chain_levels() {
        let f = rf("vars: x1, x2, x3; dep(x1;x3) & dep(x2;x3)");
        assert_eq!(
            strings(&seeds_for_level(&f, 2).unwrap()),
            ["000,010", "000,100", "000,110", "000,111"]
        );
        assert_eq!(
            strings(&seeds_for_level(&f, 3).unwrap()),
            ["000,010,100", "000,010,110", "000,100,110"]
        );
        assert_eq!(strings(&seeds_for_level(&f, 4).unwrap()), ["000,010,100,110"]);
        assert!(seeds_for_level(&f, 5).unwrap().is_empty());
    }

    #[test]
    fn level_three_index_layout() {
        let f = rf("vars: x1, x2, x3; dep(x1;x3) & dep(x2;x3)");
        let mut st = SeedStepper::new(&f).unwrap();
        st.finish().unwrap();
        st.begin_next_level().unwrap();
        st.finish().unwrap();
        let index = st.index().unwrap();
        let get = |k: &str| -> Vec<String> {
            index
                .get(&Team::parse(k, 3).unwrap())
                .map(|l| l.iter().map(|s| s.to_string()).collect())
                .unwrap_or_default()
        };
        assert_eq!(get("000,100"), ["110"]);
        assert_eq!(get("000,010"), ["100", "110"]);
        assert!(get("000,110").is_empty());
    }

    #[test]
    fn stepper_state_errors() {
        let f = rf("dep(x1;x2)");
        let mut st = SeedStepper::new(&f).unwrap();
        assert_eq!(st.seeds_at_level().unwrap_err(), SeedError::LevelIncomplete(2));
        assert!(st.begin_next_level().is_err());
        st.finish().unwrap();
        assert_eq!(st.advance(1), Err(SeedError::LevelComplete(2)));
        assert_eq!(st.seeds_at_level().unwrap().len(), 2);
    }

    #[test]
    fn trivial_cases() {
        assert_eq!(strings(&seeds_for_level(&rf("vars: x; 1"), 2).unwrap()), ["0,1"]);
        assert!(seeds_for_level(&rf("x & !x"), 2).unwrap().is_empty());
        assert_eq!(seeds_for_level(&rf("dep(x1;x2)"), 1).unwrap().len(), 1);
    }
}
