use std::fmt;
use std::str::FromStr;

use super::TeamError;

/// Largest supported number of variables in one assignment.
pub const MAX_WIDTH: usize = 63;

/// A total assignment over `width` ordered variables, read as a vector over
/// GF(2).
///
/// The variable at position 1 is the most significant bit, so the written
/// form `s(x1)s(x2)...s(xn)` read as a binary numeral is the integer key and
/// the order on assignments is integer order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Assignment {
    bits: u64,
    width: u8,
}

impl Assignment {
    pub fn new(bits: u64, width: usize) -> Result<Self, TeamError> {
        if width > MAX_WIDTH {
            return Err(TeamError::WidthTooLarge(width));
        }
        if width < 64 && bits >> width != 0 {
            return Err(TeamError::ValueOutOfRange { bits, width });
        }
        Ok(Self {
            bits,
            width: width as u8,
        })
    }

    /// Caller guarantees `width <= MAX_WIDTH` and `bits < 2^width`.
    #[inline]
    pub(crate) fn from_raw(bits: u64, width: usize) -> Self {
        debug_assert!(width <= MAX_WIDTH && bits >> width == 0);
        Self {
            bits,
            width: width as u8,
        }
    }

    pub fn zero(width: usize) -> Self {
        Self::from_raw(0, width.min(MAX_WIDTH))
    }

    /// The largest assignment (all ones).
    pub fn last(width: usize) -> Self {
        let width = width.min(MAX_WIDTH);
        Self::from_raw(full_mask(width), width)
    }

    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn width(&self) -> usize {
        self.width as usize
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    /// Value of the variable at 1-based `position`.
    pub fn get(&self, position: usize) -> bool {
        assert!(
            (1..=self.width()).contains(&position),
            "position {position} out of 1..={}",
            self.width
        );
        self.bits >> (self.width() - position) & 1 == 1
    }

    /// Binary increment; `None` for the all-ones assignment.
    pub fn next(&self) -> Option<Self> {
        if self.bits == full_mask(self.width()) {
            None
        } else {
            Some(Self::from_raw(self.bits + 1, self.width()))
        }
    }

    pub fn has_next(&self) -> bool {
        self.bits != full_mask(self.width())
    }

    /// Sum over GF(2).
    pub fn add(&self, other: &Self) -> Result<Self, TeamError> {
        check_width(self.width(), other.width())?;
        Ok(self.xor(other))
    }

    #[inline]
    pub(crate) fn xor(&self, other: &Self) -> Self {
        Self {
            bits: self.bits ^ other.bits,
            width: self.width,
        }
    }

    /// Greatest 1-based position holding a one.
    pub fn last_one_position(&self) -> Result<usize, TeamError> {
        if self.bits == 0 {
            return Err(TeamError::ZeroVector);
        }
        Ok(self.width() - self.bits.trailing_zeros() as usize)
    }

    /// The standard basis vector with a single one at 1-based `position`.
    pub fn unit(position: usize, width: usize) -> Self {
        assert!((1..=width).contains(&position));
        Self::from_raw(1 << (width - position), width)
    }
}

pub(crate) fn full_mask(width: usize) -> u64 {
    if width == 0 {
        0
    } else {
        u64::MAX >> (64 - width)
    }
}

pub(crate) fn check_width(expected: usize, found: usize) -> Result<(), TeamError> {
    if expected == found {
        Ok(())
    } else {
        Err(TeamError::WidthMismatch { expected, found })
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for position in 1..=self.width() {
            f.write_str(if self.get(position) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Assignment {
    type Err = TeamError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.len() > MAX_WIDTH {
            return Err(TeamError::WidthTooLarge(s.len()));
        }
        let mut bits = 0u64;
        for c in s.chars() {
            bits <<= 1;
            match c {
                '0' => {}
                '1' => bits |= 1,
                other => return Err(TeamError::BadDigit(other)),
            }
        }
        Ok(Self::from_raw(bits, s.len()))
    }
}

/// The smallest assignment over `n` variables.
pub fn first_assignment(n: usize) -> Assignment {
    Assignment::zero(n)
}

/// Successor in integer order, `None` after the last assignment.
pub fn next_assignment(s: &Assignment) -> Option<Assignment> {
    s.next()
}

pub fn last_one_position(s: &Assignment) -> Result<usize, TeamError> {
    s.last_one_position()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(s: &str) -> Assignment {
        s.parse().unwrap()
    }

    #[test]
    fn first_is_all_zero() {
        assert_eq!(first_assignment(1).to_string(), "0");
        assert_eq!(first_assignment(2).to_string(), "00");
        assert_eq!(first_assignment(3).to_string(), "000");
    }

    #[test]
    fn successor_is_binary_increment() {
        assert_eq!(next_assignment(&a("00")), Some(a("01")));
        assert_eq!(next_assignment(&a("01")), Some(a("10")));
        assert_eq!(next_assignment(&a("11")), None);
    }

    #[test]
    fn traversal_visits_every_assignment_once() {
        for n in 1..=6 {
            let mut seen = vec![first_assignment(n)];
            while let Some(s) = next_assignment(seen.last().unwrap()) {
                seen.push(s);
            }
            assert_eq!(seen.len(), 1 << n);
            assert!(seen.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn last_one_uses_msb_first_positions() {
        assert_eq!(last_one_position(&a("110")).unwrap(), 2);
        assert_eq!(last_one_position(&a("100")).unwrap(), 1);
        assert_eq!(last_one_position(&a("001")).unwrap(), 3);
        assert_eq!(last_one_position(&a("000")), Err(TeamError::ZeroVector));
    }

    #[test]
    fn written_form_is_the_integer_key() {
        assert_eq!(a("0110").bits(), 6);
        assert!(a("011") < a("100"));
        assert!(a("101").get(1) && !a("101").get(2) && a("101").get(3));
    }

    #[test]
    fn addition_checks_width() {
        assert_eq!(a("110").add(&a("011")).unwrap(), a("101"));
        assert!(matches!(
            a("11").add(&a("011")),
            Err(TeamError::WidthMismatch { .. })
        ));
    }

    #[test]
    fn rejects_bad_input() {
        assert!("01x".parse::<Assignment>().is_err());
        assert!(Assignment::new(4, 2).is_err());
        assert!(Assignment::new(0, 64).is_err());
    }
}
