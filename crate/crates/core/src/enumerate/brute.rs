use std::collections::VecDeque;

use super::{Algorithm, EnumConfig, EnumError, SolutionStream};
use crate::exec::Execution;
use crate::formula::ReducedFormula;
use crate::steps::StepCounter;
use crate::team::{members_satisfy, Assignment, Team};

/// Largest free width the exhaustive enumerator accepts.
pub const BRUTE_FORCE_MAX_WIDTH: usize = 4;

/// Exhaustive reference enumerator: every subset of each size is checked.
///
/// A whole level is checked at once (in parallel when configured) and then
/// replayed in lexicographic order. Each emission is charged the steps of
/// the candidates checked since the previous one, as a sequential scan would
/// have spent them.
#[derive(Debug)]
pub struct BruteForceStream {
    rf: ReducedFormula,
    width: usize,
    max_size: usize,
    level: usize,
    execution: Execution,
    /// Checked candidates of the current level: members, satisfied, steps.
    pending: VecDeque<(Vec<Assignment>, bool, u64)>,
    last_delay: u64,
    carried: u64,
    done: bool,
}

impl BruteForceStream {
    pub fn new(rf: &ReducedFormula, cfg: &EnumConfig) -> Result<Self, EnumError> {
        cfg.expect(Algorithm::Brute)?;
        let width = rf.width();
        if width > BRUTE_FORCE_MAX_WIDTH {
            return Err(EnumError::TooLarge {
                width,
                limit: BRUTE_FORCE_MAX_WIDTH,
            });
        }
        let max_size = cfg.effective_max_size(width);
        Ok(Self {
            rf: rf.clone(),
            width,
            max_size,
            level: 0,
            execution: cfg.execution,
            pending: VecDeque::new(),
            last_delay: 0,
            carried: 0,
            done: rf.is_contradictory() || max_size == 0,
        })
    }

    fn load_level(&mut self) {
        self.level += 1;
        let width = self.width;
        let candidates: Vec<Vec<Assignment>> = Combinations::new(1 << width, self.level)
            .map(|c| {
                c.into_iter()
                    .map(|v| Assignment::new(v, width).expect("value below 2^width"))
                    .collect()
            })
            .collect();
        let rf = &self.rf;
        let checked = self.execution.map(candidates, |members| {
            let mut steps = StepCounter::new();
            let ok = members_satisfy(rf, &members, &mut steps);
            (members, ok, steps.get() + 1)
        });
        self.pending = checked.into();
    }
}

impl Iterator for BruteForceStream {
    type Item = Team;

    fn next(&mut self) -> Option<Team> {
        loop {
            if self.done {
                return None;
            }
            match self.pending.pop_front() {
                Some((members, ok, cost)) => {
                    self.carried += cost;
                    if ok {
                        self.carried += members.len() as u64;
                        let team = Team::from_sorted_unchecked(self.width, members);
                        let out = self.rf.expand_team(&team).expect("free width");
                        self.last_delay = std::mem::take(&mut self.carried);
                        return Some(out);
                    }
                }
                None if self.level < self.max_size => self.load_level(),
                None => {
                    self.done = true;
                    self.last_delay = std::mem::take(&mut self.carried);
                }
            }
        }
    }
}

impl SolutionStream for BruteForceStream {
    fn last_delay(&self) -> u64 {
        self.last_delay
    }
}

pub fn enumerate_brute_force(
    rf: &ReducedFormula,
    cfg: &EnumConfig,
) -> Result<BruteForceStream, EnumError> {
    BruteForceStream::new(rf, cfg)
}

/// `k`-subsets of `0..n` as ascending index vectors, in lexicographic order.
struct Combinations {
    n: u64,
    current: Option<Vec<u64>>,
}

impl Combinations {
    fn new(n: u64, k: usize) -> Self {
        let current = (k as u64 <= n).then(|| (0..k as u64).collect());
        Self { n, current }
    }
}

impl Iterator for Combinations {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        let out = self.current.clone()?;
        let c = self.current.as_mut().expect("checked");
        let k = c.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if c[i] < self.n - (k - i) as u64 {
                c[i] += 1;
                for j in i + 1..k {
                    c[j] = c[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}
