//! Assignments as GF(2) vectors, teams as sorted assignment sets, the team
//! orders, the flipping-bits action and pairwise model checking.

mod assignment;
mod check;
mod set;

use thiserror::Error;

pub use assignment::{first_assignment, last_one_position, next_assignment, Assignment, MAX_WIDTH};
pub use check::{model_check, pair_satisfies};
pub(crate) use check::{members_satisfy, pair_satisfies_counted};
pub use set::{apply_shift, compare_teams, symmetric_difference_size, OrderKind, Team, TeamOrdering};


#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TeamError {
    #[error("width mismatch: expected {expected} variables, found {found}")]
    WidthMismatch { expected: usize, found: usize },
    #[error("at most {MAX_WIDTH} variables are supported, got {0}")]
    WidthTooLarge(usize),
    #[error("value {bits:#b} does not fit in {width} bits")]
    ValueOutOfRange { bits: u64, width: usize },
    #[error("operation undefined on the zero vector")]
    ZeroVector,
    #[error("invalid digit {0:?} in assignment")]
    BadDigit(char),
    #[error("duplicate assignment in team")]
    DuplicateMember,
}
