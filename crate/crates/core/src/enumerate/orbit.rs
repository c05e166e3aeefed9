use super::{EnumConfig, EnumError, SolutionStream, Algorithm};
use crate::formula::ReducedFormula;
use crate::orbit::OrbitEnumerator;
use crate::seeds::SeedStepper;
use crate::steps::StepCounter;
use crate::team::{Assignment, Team};
use crate::trie::TeamSet;

/// Orbit-based enumeration with interleaved seed construction.
///
/// Level `k` is emitted orbit by orbit. The representative of each orbit is
/// the lexicographically least seed still in `S_k^0`, and every emitted team
/// that contains zero is deleted from it, so no orbit is visited twice.
/// After each emission the seed builder for level `k + 1` gets a fixed
/// budget; whatever is left when level `k` runs out is finished before the
/// first team of level `k + 1` and charged to that delay.
#[derive(Debug)]
pub struct OrbitStream {
    rf: ReducedFormula,
    max_size: usize,
    budget: Option<usize>,
    level: usize,
    seeds: TeamSet,
    orbit: Option<OrbitEnumerator>,
    stepper: Option<SeedStepper>,
    steps: StepCounter,
    last_delay: u64,
    done: bool,
    seed_counts: Vec<usize>,
    orbit_counts: Vec<usize>,
    peak_trie_nodes: usize,
}

impl OrbitStream {
    pub fn new(rf: &ReducedFormula, cfg: &EnumConfig) -> Result<Self, EnumError> {
        cfg.expect(Algorithm::Orbit)?;
        let width = rf.width();
        let max_size = cfg.effective_max_size(width);
        let mut steps = StepCounter::new();
        let mut seeds = TeamSet::new(1, width);
        let done = rf.is_contradictory() || max_size == 0;
        if !done {
            seeds.insert(&Team::singleton(Assignment::zero(width)), &mut steps);
        }
        let stepper = if !done && max_size >= 2 {
            Some(SeedStepper::new(rf).expect("formula is not contradictory"))
        } else {
            None
        };
        Ok(Self {
            rf: rf.clone(),
            max_size,
            budget: cfg.interleave_budget,
            level: 1,
            seeds,
            orbit: None,
            stepper,
            steps,
            last_delay: 0,
            done,
            seed_counts: if done { Vec::new() } else { vec![1] },
            orbit_counts: if done { Vec::new() } else { vec![0] },
            peak_trie_nodes: 0,
        })
    }

    /// Level currently being emitted.
    pub fn level(&self) -> usize {
        self.level
    }

    /// Orbits started so far, by level.
    pub fn orbit_counts(&self) -> &[usize] {
        &self.orbit_counts
    }

    /// Largest number of trie nodes held by the seed sets and indexes.
    pub fn peak_trie_nodes(&self) -> usize {
        self.peak_trie_nodes
    }

    fn interleave(&mut self) {
        let budget = self.budget.unwrap_or(self.level);
        if let Some(stepper) = self.stepper.as_mut() {
            if !stepper.is_complete() {
                stepper
                    .advance_counted(budget, &mut self.steps)
                    .expect("incomplete level accepts work");
            }
        }
        self.track_memory();
    }

    fn track_memory(&mut self) {
        let nodes =
            self.seeds.node_count() + self.stepper.as_ref().map_or(0, SeedStepper::trie_nodes);
        self.peak_trie_nodes = self.peak_trie_nodes.max(nodes);
    }

    /// Moves to the next level. Returns false when enumeration is over.
    fn next_level(&mut self) -> bool {
        let Some(mut stepper) = self.stepper.take() else {
            return false;
        };
        stepper
            .finish_counted(&mut self.steps)
            .expect("stepper level is consistent");
        self.track_memory();
        let seeds = stepper.begin_next_level().expect("level was finished");
        self.level += 1;
        self.seed_counts.push(seeds.len());
        self.orbit_counts.push(0);
        if seeds.is_empty() {
            // Downward closure: no seeds here means no solutions above.
            return false;
        }
        self.seeds = seeds;
        if self.level < self.max_size {
            self.stepper = Some(stepper);
        }
        true
    }
}

impl Iterator for OrbitStream {
    type Item = Team;

    fn next(&mut self) -> Option<Team> {
        if self.done {
            return None;
        }
        loop {
            if let Some(orbit) = self.orbit.as_mut() {
                if let Some(team) = orbit.next_counted(&mut self.steps) {
                    self.steps.tick();
                    if team.contains_zero() {
                        self.seeds.remove(&team, &mut self.steps);
                    }
                    let out = self
                        .rf
                        .expand_team(&team)
                        .expect("orbit teams have the free width");
                    self.last_delay = self.steps.take();
                    self.interleave();
                    return Some(out);
                }
                self.orbit = None;
            }
            if let Some(seed) = self.seeds.min(&mut self.steps) {
                let orbit = OrbitEnumerator::with_counter(&seed, &mut self.steps)
                    .expect("seeds contain zero");
                self.orbit = Some(orbit);
                self.orbit_counts[self.level - 1] += 1;
                continue;
            }
            if !self.next_level() {
                self.done = true;
                self.last_delay = self.steps.take();
                return None;
            }
        }
    }
}

impl SolutionStream for OrbitStream {
    fn last_delay(&self) -> u64 {
        self.last_delay
    }

    fn seed_counts(&self) -> Option<&[usize]> {
        Some(&self.seed_counts)
    }
}

pub fn enumerate_orbit_interleaved(
    rf: &ReducedFormula,
    cfg: &EnumConfig,
) -> Result<OrbitStream, EnumError> {
    OrbitStream::new(rf, cfg)
}
