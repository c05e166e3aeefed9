//! Duplicate-free enumeration of the orbit of a team under the flipping-bits
//! action of GF(2)^n.
//!
//! The stabilizer of a zero-containing team `T` is a subspace contained in
//! `T`. A basis of it with pairwise distinct last-one positions is found by
//! testing each member; the unit vectors at the remaining positions span a
//! complement, and shifting `T` by every vector of that complement visits the
//! orbit exactly once.

use thiserror::Error;

use crate::enumerate::SolutionStream;
use crate::steps::StepCounter;
use crate::team::{Assignment, Team};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrbitError {
    #[error("the team does not contain the all-zero assignment")]
    MissingZero,
    #[error("cannot enumerate the orbit of the empty team")]
    EmptyTeam,
}

/// Basis of the stabilizer subgroup with distinct last-one positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilizerBasis {
    width: usize,
    basis: Vec<Assignment>,
    /// Bit `i - 1` set iff position `i` is the last one of a basis vector.
    last_mask: u64,
}

impl StabilizerBasis {
    pub fn basis(&self) -> &[Assignment] {
        &self.basis
    }

    /// Last-one positions of the basis vectors, ascending.
    pub fn last_set(&self) -> Vec<usize> {
        (1..=self.width)
            .filter(|i| self.last_mask >> (i - 1) & 1 == 1)
            .collect()
    }

    /// Positions not covered by a basis vector, ascending.
    pub fn complement_positions(&self) -> Vec<usize> {
        (1..=self.width)
            .filter(|i| self.last_mask >> (i - 1) & 1 == 0)
            .collect()
    }

    /// Size of the stabilizer subgroup, `2^|basis|`.
    pub fn stabilizer_order(&self) -> u64 {
        1 << self.basis.len()
    }
}

pub fn compute_stabilizer_basis(team: &Team) -> Result<StabilizerBasis, OrbitError> {
    compute_stabilizer_basis_counted(team, &mut StepCounter::new())
}

pub(crate) fn compute_stabilizer_basis_counted(
    team: &Team,
    steps: &mut StepCounter,
) -> Result<StabilizerBasis, OrbitError> {
    if !team.contains_zero() {
        return Err(OrbitError::MissingZero);
    }
    let width = team.width();
    let mut basis = Vec::new();
    let mut last_mask = 0u64;
    for s in &team.members()[1..] {
        let last = s.last_one_position().expect("members after zero are nonzero");
        steps.tick();
        if last_mask >> (last - 1) & 1 == 1 {
            continue;
        }
        let stabilizes = team.iter().all(|r| {
            steps.tick();
            team.contains_counted(&s.xor(r), steps)
        });
        if stabilizes {
            basis.push(*s);
            last_mask |= 1 << (last - 1);
        }
    }
    Ok(StabilizerBasis {
        width,
        basis,
        last_mask,
    })
}

/// Streams the orbit of a team. The first emission is the zero-containing
/// normalization of the input (the input itself when it contains zero); the
/// shift vectors follow in ascending integer order.
#[derive(Debug, Clone)]
pub struct OrbitEnumerator {
    base: Team,
    basis: StabilizerBasis,
    complement: Vec<Assignment>,
    next_index: u64,
    end: u64,
    buffer: Vec<Assignment>,
    steps: StepCounter,
    last_delay: u64,
}

impl OrbitEnumerator {
    pub fn new(team: &Team) -> Result<Self, OrbitError> {
        let mut steps = StepCounter::new();
        Self::with_counter(team, &mut steps).map(|mut e| {
            e.steps = steps;
            e
        })
    }

    /// Runs the precomputation, charging it to `steps`.
    pub(crate) fn with_counter(team: &Team, steps: &mut StepCounter) -> Result<Self, OrbitError> {
        let min = team.min().ok_or(OrbitError::EmptyTeam)?;
        let base = if min.is_zero() {
            team.clone()
        } else {
            steps.add(team.len() as u64);
            team.shift(&min).expect("shift by a member has matching width")
        };
        let basis = compute_stabilizer_basis_counted(&base, steps)?;
        let width = base.width();
        // Descending positions so that counter bit j selects the j-th least
        // significant free position and shifts come out in integer order.
        let complement: Vec<Assignment> = basis
            .complement_positions()
            .into_iter()
            .rev()
            .map(|p| Assignment::unit(p, width))
            .collect();
        let end = 1u64 << complement.len();
        Ok(Self {
            buffer: Vec::with_capacity(base.len()),
            base,
            basis,
            complement,
            next_index: 0,
            end,
            steps: StepCounter::new(),
            last_delay: 0,
        })
    }

    pub fn basis(&self) -> &StabilizerBasis {
        &self.basis
    }

    /// The zero-containing representative the orbit is generated from.
    pub fn base(&self) -> &Team {
        &self.base
    }

    /// Exact orbit size, `2^n / |stabilizer|`.
    pub fn orbit_size(&self) -> u64 {
        self.end
    }

    /// Next orbit element, charging its construction to `steps`.
    pub(crate) fn next_counted(&mut self, steps: &mut StepCounter) -> Option<Team> {
        if self.next_index == self.end {
            return None;
        }
        let index = self.next_index;
        self.next_index += 1;
        let mut shift = Assignment::zero(self.base.width());
        for (j, e) in self.complement.iter().enumerate() {
            if index >> j & 1 == 1 {
                steps.tick();
                shift = shift.xor(e);
            }
        }
        self.buffer.clear();
        self.buffer.extend(self.base.iter().map(|s| s.xor(&shift)));
        steps.add(self.base.len() as u64);
        self.buffer.sort_unstable_by(|a, b| {
            steps.tick();
            a.cmp(b)
        });
        Some(Team::from_sorted_unchecked(
            self.base.width(),
            self.buffer.clone(),
        ))
    }
}

impl Iterator for OrbitEnumerator {
    type Item = Team;

    fn next(&mut self) -> Option<Team> {
        let mut steps = std::mem::take(&mut self.steps);
        let out = self.next_counted(&mut steps);
        self.last_delay = steps.take();
        out
    }
}

impl SolutionStream for OrbitEnumerator {
    fn last_delay(&self) -> u64 {
        self.last_delay
    }
}

/// The orbit of `team` as a stream; teams without the zero assignment are
/// first shifted by their minimum.
pub fn enumerate_orbit(team: &Team) -> Result<OrbitEnumerator, OrbitError> {
    OrbitEnumerator::new(team)
}
