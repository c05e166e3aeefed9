use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;

use super::{enumerate, Algorithm, BoxedStream, EnumConfig, EnumError, SolutionStream};
use crate::formula::ReducedFormula;
use crate::steps::StepCounter;
use crate::team::{OrderKind, Team};

/// Heap key ordering teams by size, then lexicographically.
#[derive(Debug, PartialEq, Eq)]
struct Head(Team, usize);

impl Ord for Head {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.size_lex_cmp(&other.0).then(self.1.cmp(&other.1))
    }
}

impl PartialOrd for Head {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Union of several streams that are each sorted by size then lex, with
/// duplicates removed. Teams satisfying a disjunction of formulas are
/// exactly those satisfying one of the disjuncts, since no disjunct splits
/// a team in this fragment.
pub struct MergeStream {
    sources: Vec<BoxedStream>,
    heap: BinaryHeap<Reverse<Head>>,
    previous: Option<Team>,
    steps: StepCounter,
    last_delay: u64,
    primed: bool,
}

impl MergeStream {
    pub fn new(sources: Vec<BoxedStream>) -> Self {
        Self {
            sources,
            heap: BinaryHeap::new(),
            previous: None,
            steps: StepCounter::new(),
            last_delay: 0,
            primed: false,
        }
    }

    fn refill(&mut self, index: usize) {
        let source = &mut self.sources[index];
        let next = source.next();
        self.steps.add(source.last_delay());
        if let Some(team) = next {
            self.steps.add(self.heap.len().max(1).ilog2() as u64 + 1);
            self.heap.push(Reverse(Head(team, index)));
        }
    }
}

impl Iterator for MergeStream {
    type Item = Team;

    fn next(&mut self) -> Option<Team> {
        if !self.primed {
            self.primed = true;
            for i in 0..self.sources.len() {
                self.refill(i);
            }
        }
        while let Some(Reverse(Head(team, index))) = self.heap.pop() {
            self.steps.add(self.heap.len().max(1).ilog2() as u64 + 1);
            self.refill(index);
            self.steps.add(team.len() as u64);
            if self.previous.as_ref() == Some(&team) {
                continue;
            }
            self.previous = Some(team.clone());
            self.last_delay = self.steps.take();
            return Some(team);
        }
        self.last_delay = self.steps.take();
        None
    }
}

impl SolutionStream for MergeStream {
    fn last_delay(&self) -> u64 {
        self.last_delay
    }
}

/// Enumerates the teams satisfying at least one disjunct. The disjuncts
/// must be reduced over one shared variable order, and the component
/// algorithm must emit in size-then-lex order.
pub fn merge_disjunction(
    disjuncts: &[ReducedFormula],
    cfg: &EnumConfig,
) -> Result<MergeStream, EnumError> {
    if cfg.algorithm == Algorithm::Orbit {
        return Err(EnumError::UnsortedComponents(Algorithm::Orbit));
    }
    if let Some(first) = disjuncts.first() {
        if disjuncts
            .iter()
            .any(|d| d.original_order() != first.original_order())
        {
            return Err(EnumError::MismatchedOrders);
        }
    }
    let component = cfg.clone().with_order(OrderKind::SizeThenLex);
    let sources = disjuncts
        .iter()
        .map(|d| enumerate(d, &component))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(MergeStream::new(sources))
}
