//! End-to-end enumeration of the non-empty satisfying teams of a reduced
//! formula, delivered over the original variable order.
//!
//! Three strategies share the [`SolutionStream`] interface:
//!
//! * [`Algorithm::Orbit`] generates each orbit of the flipping-bits action
//!   from a zero-containing seed while the seeds of the next cardinality are
//!   built in budgeted slices; the delay is polynomial in the formula size
//!   for fixed team size.
//! * [`Algorithm::Polyspace`] walks teams in lexicographic order per
//!   cardinality keeping a single working team, trading delay for space.
//! * [`Algorithm::Brute`] checks every subset of the assignment space and
//!   serves as the reference.

mod brute;
mod merge;
mod orbit;
mod polyspace;
mod sorted;

use std::fmt;

use thiserror::Error;

use crate::exec::Execution;
use crate::formula::{FormulaError, ReducedFormula};
use crate::orbit::OrbitError;
use crate::team::{OrderKind, Team};

pub use brute::{enumerate_brute_force, BruteForceStream, BRUTE_FORCE_MAX_WIDTH};
pub use merge::{merge_disjunction, MergeStream};
pub use orbit::{enumerate_orbit_interleaved, OrbitStream};
pub use polyspace::{enumerate_polyspace, PolyspaceStream};
pub use sorted::{LevelSorted, LexSorted};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("brute force supports at most {limit} free variables, formula has {width}")]
    TooLarge { width: usize, limit: usize },
    #[error("disjuncts must share one variable order")]
    MismatchedOrders,
    #[error("{0} streams are not sorted by size then lex and cannot be merged")]
    UnsortedComponents(Algorithm),
    #[error("configuration requires algorithm {expected}, got {found}")]
    WrongAlgorithm { expected: Algorithm, found: Algorithm },
    #[error(transparent)]
    Orbit(#[from] OrbitError),
    #[error(transparent)]
    Formula(#[from] FormulaError),
}

/// A pull-based producer of teams that records, for every emission, the
/// elementary steps spent since the previous emission.
pub trait SolutionStream: Iterator<Item = Team> {
    /// Steps spent between the previous emission and the most recent one.
    fn last_delay(&self) -> u64;

    /// Working-memory usage, for streams that track it.
    fn space(&self) -> Option<SpaceUsage> {
        None
    }

    /// Sizes of the zero-containing seed sets found so far, by level.
    fn seed_counts(&self) -> Option<&[usize]> {
        None
    }
}

impl<S: SolutionStream + ?Sized> SolutionStream for Box<S> {
    fn last_delay(&self) -> u64 {
        (**self).last_delay()
    }

    fn space(&self) -> Option<SpaceUsage> {
        (**self).space()
    }

    fn seed_counts(&self) -> Option<&[usize]> {
        (**self).seed_counts()
    }
}

/// Peak working memory retained by a stream.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SpaceUsage {
    /// Teams held at once.
    pub peak_teams: usize,
    /// Assignments held at once across those teams.
    pub peak_assignments: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Orbit,
    Polyspace,
    Brute,
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algorithm::Orbit => "orbit",
            Algorithm::Polyspace => "polyspace",
            Algorithm::Brute => "brute",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumConfig {
    /// Largest team size to emit; `None` means `2^n`.
    pub max_size: Option<usize>,
    pub algorithm: Algorithm,
    /// Output order; `Size` keeps each algorithm's native order.
    pub order: OrderKind,
    /// Seed-construction work per orbit emission; `None` means the level
    /// under construction.
    pub interleave_budget: Option<usize>,
    pub execution: Execution,
}

impl EnumConfig {
    pub fn new(algorithm: Algorithm) -> Self {
        Self {
            max_size: None,
            algorithm,
            order: OrderKind::Size,
            interleave_budget: None,
            execution: Execution::default(),
        }
    }

    pub fn with_max_size(mut self, max_size: usize) -> Self {
        self.max_size = Some(max_size);
        self
    }

    pub fn with_order(mut self, order: OrderKind) -> Self {
        self.order = order;
        self
    }

    /// `max_size` clamped to the number of assignments over `width`
    /// variables.
    pub fn effective_max_size(&self, width: usize) -> usize {
        let space = 1usize.checked_shl(width as u32).unwrap_or(usize::MAX);
        self.max_size.map_or(space, |k| k.min(space))
    }

    fn expect(&self, expected: Algorithm) -> Result<(), EnumError> {
        if self.algorithm == expected {
            Ok(())
        } else {
            Err(EnumError::WrongAlgorithm {
                expected,
                found: self.algorithm,
            })
        }
    }
}

pub type BoxedStream = Box<dyn SolutionStream + Send>;

/// Builds the stream selected by `cfg`, applying the requested order.
pub fn enumerate(rf: &ReducedFormula, cfg: &EnumConfig) -> Result<BoxedStream, EnumError> {
    let native: BoxedStream = match cfg.algorithm {
        Algorithm::Orbit => Box::new(enumerate_orbit_interleaved(rf, cfg)?),
        Algorithm::Polyspace => Box::new(enumerate_polyspace(rf, cfg)?),
        Algorithm::Brute => Box::new(enumerate_brute_force(rf, cfg)?),
    };
    Ok(apply_order(native, cfg.algorithm, cfg.order))
}

fn apply_order(stream: BoxedStream, algorithm: Algorithm, order: OrderKind) -> BoxedStream {
    match (order, algorithm) {
        (OrderKind::Size, _) => stream,
        (OrderKind::SizeThenLex, Algorithm::Orbit) => Box::new(LevelSorted::new(stream)),
        (OrderKind::SizeThenLex, _) => stream,
        (OrderKind::Lex, _) => Box::new(LexSorted::new(stream)),
    }
}
