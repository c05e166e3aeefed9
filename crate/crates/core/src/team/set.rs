use std::cmp::Ordering;
use std::fmt;

use super::assignment::{check_width, Assignment, MAX_WIDTH};
use super::TeamError;
use crate::steps::StepCounter;

/// The comparison orders on teams.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderKind {
    /// Partial order by cardinality; distinct teams of equal size are
    /// incomparable.
    Size,
    /// Lexicographic order on the ascending member sequences.
    Lex,
    /// Cardinality first, ties broken lexicographically.
    SizeThenLex,
}

/// Outcome of [`compare_teams`]; `Incomparable` only arises under
/// [`OrderKind::Size`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TeamOrdering {
    Less,
    Equal,
    Greater,
    Incomparable,
}

impl From<Ordering> for TeamOrdering {
    fn from(o: Ordering) -> Self {
        match o {
            Ordering::Less => TeamOrdering::Less,
            Ordering::Equal => TeamOrdering::Equal,
            Ordering::Greater => TeamOrdering::Greater,
        }
    }
}

/// A set of assignments of equal width, kept strictly ascending.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Team {
    width: u8,
    members: Vec<Assignment>,
}

impl Team {
    pub fn empty(width: usize) -> Self {
        Self {
            width: width.min(MAX_WIDTH) as u8,
            members: Vec::new(),
        }
    }

    pub fn singleton(s: Assignment) -> Self {
        Self {
            width: s.width() as u8,
            members: vec![s],
        }
    }

    /// Builds a team from members in any order; duplicates collapse.
    pub fn from_members(
        width: usize,
        members: impl IntoIterator<Item = Assignment>,
    ) -> Result<Self, TeamError> {
        if width > MAX_WIDTH {
            return Err(TeamError::WidthTooLarge(width));
        }
        let mut members: Vec<Assignment> = members.into_iter().collect();
        for m in &members {
            check_width(width, m.width())?;
        }
        members.sort_unstable();
        members.dedup();
        Ok(Self {
            width: width as u8,
            members,
        })
    }

    /// Caller guarantees strictly ascending members of width `width`.
    pub(crate) fn from_sorted_unchecked(width: usize, members: Vec<Assignment>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(members.iter().all(|m| m.width() == width));
        Self {
            width: width as u8,
            members,
        }
    }

    /// Parses the textual team format: comma-separated bitstrings. An empty
    /// line is the empty team of width `empty_width`.
    pub fn parse(line: &str, empty_width: usize) -> Result<Self, TeamError> {
        let line = line.trim();
        if line.is_empty() {
            return Ok(Self::empty(empty_width));
        }
        let members = line
            .split(',')
            .map(|part| part.trim().parse::<Assignment>())
            .collect::<Result<Vec<_>, _>>()?;
        let width = members[0].width();
        let count = members.len();
        let team = Self::from_members(width, members)?;
        if team.len() != count {
            return Err(TeamError::DuplicateMember);
        }
        Ok(team)
    }

    #[inline]
    pub fn width(&self) -> usize {
        self.width as usize
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.members.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    #[inline]
    pub fn members(&self) -> &[Assignment] {
        &self.members
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Assignment> {
        self.members.iter()
    }

    pub fn into_members(self) -> Vec<Assignment> {
        self.members
    }

    pub fn min(&self) -> Option<Assignment> {
        self.members.first().copied()
    }

    pub fn max(&self) -> Option<Assignment> {
        self.members.last().copied()
    }

    /// Whether the all-zero assignment is a member.
    pub fn contains_zero(&self) -> bool {
        self.members.first().is_some_and(|m| m.is_zero())
    }

    pub fn contains(&self, s: &Assignment) -> bool {
        self.members.binary_search(s).is_ok()
    }

    /// Binary search charging one step per comparison.
    pub(crate) fn contains_counted(&self, s: &Assignment, steps: &mut StepCounter) -> bool {
        self.members
            .binary_search_by(|m| {
                steps.tick();
                m.cmp(s)
            })
            .is_ok()
    }

    /// Inserts `s`, keeping members sorted. Returns false if already present.
    pub fn insert(&mut self, s: Assignment) -> Result<bool, TeamError> {
        check_width(self.width(), s.width())?;
        match self.members.binary_search(&s) {
            Ok(_) => Ok(false),
            Err(at) => {
                self.members.insert(at, s);
                Ok(true)
            }
        }
    }

    pub fn remove(&mut self, s: &Assignment) -> bool {
        match self.members.binary_search(s) {
            Ok(at) => {
                self.members.remove(at);
                true
            }
            Err(_) => false,
        }
    }

    /// The team with `s` added; `s` must exceed every member.
    pub(crate) fn with_max(&self, s: Assignment) -> Self {
        debug_assert!(self.max().is_none_or(|m| m < s));
        let mut members = Vec::with_capacity(self.len() + 1);
        members.extend_from_slice(&self.members);
        members.push(s);
        Self::from_sorted_unchecked(self.width(), members)
    }

    /// Lexicographic comparison of the ascending member sequences; a proper
    /// prefix is smaller.
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        self.members.cmp(&other.members)
    }

    pub fn size_lex_cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.lex_cmp(other))
    }

    pub fn compare(&self, other: &Self, order: OrderKind) -> Result<TeamOrdering, TeamError> {
        check_width(self.width(), other.width())?;
        Ok(match order {
            OrderKind::Lex => self.lex_cmp(other).into(),
            OrderKind::SizeThenLex => self.size_lex_cmp(other).into(),
            OrderKind::Size => {
                if self == other {
                    TeamOrdering::Equal
                } else {
                    match self.len().cmp(&other.len()) {
                        Ordering::Equal => TeamOrdering::Incomparable,
                        o => o.into(),
                    }
                }
            }
        })
    }

    /// The flipping-bits action: `{z + s : s in self}`, re-sorted.
    pub fn shift(&self, z: &Assignment) -> Result<Self, TeamError> {
        check_width(self.width(), z.width())?;
        let mut members: Vec<Assignment> = self.members.iter().map(|s| s.xor(z)).collect();
        members.sort_unstable();
        Ok(Self::from_sorted_unchecked(self.width(), members))
    }

    pub fn symmetric_difference_size(&self, other: &Self) -> Result<usize, TeamError> {
        check_width(self.width(), other.width())?;
        let (a, b) = (&self.members, &other.members);
        let (mut i, mut j, mut common) = (0, 0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => {
                    common += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        Ok(a.len() + b.len() - 2 * common)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.members.iter().all(|m| other.contains(m))
    }
}

impl<'a> IntoIterator for &'a Team {
    type Item = &'a Assignment;
    type IntoIter = std::slice::Iter<'a, Assignment>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

/// The total order by size, then lexicographically.
impl Ord for Team {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size_lex_cmp(other)
    }
}

impl PartialOrd for Team {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Team {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, m) in self.members.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Team {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

pub fn compare_teams(a: &Team, b: &Team, order: OrderKind) -> Result<TeamOrdering, TeamError> {
    a.compare(b, order)
}

pub fn apply_shift(z: &Assignment, t: &Team) -> Result<Team, TeamError> {
    t.shift(z)
}

pub fn symmetric_difference_size(a: &Team, b: &Team) -> Result<usize, TeamError> {
    a.symmetric_difference_size(b)
}
