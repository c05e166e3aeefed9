use super::{Algorithm, EnumConfig, EnumError, SolutionStream, SpaceUsage};
use crate::formula::ReducedFormula;
use crate::steps::StepCounter;
use crate::team::{members_satisfy, Assignment, Team};

/// Lexicographic walk over teams of each size, holding one working team.
///
/// For size `k` the walk visits a prefix-closed tree of sorted teams: a
/// satisfying team shorter than `k` is extended by the successor of its
/// maximum, otherwise the maximum is advanced, and an exhausted maximum is
/// dropped before advancing the new one. Unsatisfying teams are never
/// extended because satisfaction is downward closed. Besides the working
/// team the stream keeps only the formula and counters.
#[derive(Debug)]
pub struct PolyspaceStream {
    rf: ReducedFormula,
    width: usize,
    max_size: usize,
    level: usize,
    team: Vec<Assignment>,
    /// Set when the working team was just emitted; holds whether it
    /// satisfied the formula so the check is not repeated.
    pending: Option<bool>,
    steps: StepCounter,
    last_delay: u64,
    done: bool,
    peak_len: usize,
}

impl PolyspaceStream {
    pub fn new(rf: &ReducedFormula, cfg: &EnumConfig) -> Result<Self, EnumError> {
        cfg.expect(Algorithm::Polyspace)?;
        let width = rf.width();
        let max_size = cfg.effective_max_size(width);
        Ok(Self {
            rf: rf.clone(),
            width,
            max_size,
            level: 1,
            team: Vec::with_capacity(max_size.min(1 << 12)),
            pending: None,
            steps: StepCounter::new(),
            last_delay: 0,
            done: rf.is_contradictory() || max_size == 0,
            peak_len: 0,
        })
    }

    /// Team size currently being walked.
    pub fn level(&self) -> usize {
        self.level
    }

    fn transition(&mut self, satisfied: bool) {
        self.steps.tick();
        let last = *self.team.last().expect("working team is non-empty");
        if self.team.len() < self.level && satisfied && last.has_next() {
            self.team.push(last.next().expect("checked"));
        } else if let Some(next) = last.next() {
            *self.team.last_mut().expect("non-empty") = next;
        } else if self.team.len() > 1 {
            self.team.pop();
            let top = self.team.last_mut().expect("non-empty");
            // The popped maximum was the last assignment, so `top` has a
            // successor.
            *top = top.next().expect("smaller than the popped maximum");
        } else {
            self.level += 1;
            self.team.clear();
        }
        self.peak_len = self.peak_len.max(self.team.len());
    }
}

impl Iterator for PolyspaceStream {
    type Item = Team;

    fn next(&mut self) -> Option<Team> {
        if let Some(satisfied) = self.pending.take() {
            self.transition(satisfied);
        }
        loop {
            if self.done {
                return None;
            }
            if self.team.is_empty() {
                if self.level > self.max_size {
                    self.done = true;
                    self.last_delay = self.steps.take();
                    return None;
                }
                self.team.push(Assignment::zero(self.width));
                self.peak_len = self.peak_len.max(1);
            }
            let satisfied = members_satisfy(&self.rf, &self.team, &mut self.steps);
            if satisfied && self.team.len() == self.level {
                self.pending = Some(satisfied);
                let team = Team::from_sorted_unchecked(self.width, self.team.clone());
                let out = self.rf.expand_team(&team).expect("team has the free width");
                self.last_delay = self.steps.take();
                return Some(out);
            }
            self.transition(satisfied);
        }
    }
}

impl SolutionStream for PolyspaceStream {
    fn last_delay(&self) -> u64 {
        self.last_delay
    }

    fn space(&self) -> Option<SpaceUsage> {
        Some(SpaceUsage {
            peak_teams: usize::from(self.peak_len > 0),
            peak_assignments: self.peak_len,
        })
    }
}

pub fn enumerate_polyspace(
    rf: &ReducedFormula,
    cfg: &EnumConfig,
) -> Result<PolyspaceStream, EnumError> {
    PolyspaceStream::new(rf, cfg)
}
