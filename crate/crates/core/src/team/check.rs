use super::assignment::check_width;
use super::{Assignment, Team, TeamError};
use crate::formula::ReducedFormula;
use crate::steps::StepCounter;

/// Decides `team |= rf` by checking every 2-element subteam against every
/// atom, which is exact because dependence atoms and their conjunctions are
/// 2-coherent. A contradictory formula is satisfied only by the empty team.
pub fn model_check(rf: &ReducedFormula, team: &Team) -> Result<bool, TeamError> {
    model_check_counted(rf, team, &mut StepCounter::new())
}

pub(crate) fn model_check_counted(
    rf: &ReducedFormula,
    team: &Team,
    steps: &mut StepCounter,
) -> Result<bool, TeamError> {
    check_width(rf.width(), team.width())?;
    Ok(members_satisfy(rf, team.members(), steps))
}

/// Pairwise check on a sorted member slice; one step per atom evaluation.
pub(crate) fn members_satisfy(
    rf: &ReducedFormula,
    members: &[Assignment],
    steps: &mut StepCounter,
) -> bool {
    if rf.is_contradictory() {
        return members.is_empty();
    }
    let atoms = rf.atoms();
    for (i, a) in members.iter().enumerate() {
        for b in &members[i + 1..] {
            let diff = a.bits() ^ b.bits();
            for atom in atoms {
                steps.tick();
                if !atom.allows_difference(diff) {
                    return false;
                }
            }
        }
    }
    true
}

/// Decides `{0, s} |= rf` by evaluating, for each atom `dep(P; Q)`, the
/// classical formula `(OR of P) or (AND of not Q)` on `s`.
pub fn pair_satisfies(rf: &ReducedFormula, s: &Assignment) -> Result<bool, TeamError> {
    pair_satisfies_counted(rf, s, &mut StepCounter::new())
}

pub(crate) fn pair_satisfies_counted(
    rf: &ReducedFormula,
    s: &Assignment,
    steps: &mut StepCounter,
) -> Result<bool, TeamError> {
    check_width(rf.width(), s.width())?;
    if s.is_zero() {
        return Err(TeamError::ZeroVector);
    }
    if rf.is_contradictory() {
        return Ok(false);
    }
    for atom in rf.atoms() {
        steps.tick();
        let some_determinant_set = s.bits() & atom.determinant_mask() != 0;
        let no_dependent_set = s.bits() & atom.dependent_mask() == 0;
        if !(some_determinant_set || no_dependent_set) {
            return Ok(false);
        }
    }
    Ok(true)
}
