use std::collections::VecDeque;

use super::SolutionStream;
use crate::team::Team;

/// Re-sorts each level of a size-ordered stream lexicographically.
///
/// A level is buffered completely, so the first team of every level carries
/// the delay of producing that whole level.
pub struct LevelSorted<S> {
    inner: S,
    buffer: VecDeque<Team>,
    lookahead: Option<(Team, u64)>,
    last_delay: u64,
}

impl<S: SolutionStream> LevelSorted<S> {
    pub fn new(inner: S) -> Self {
        Self {
            inner,
            buffer: VecDeque::new(),
            lookahead: None,
            last_delay: 0,
        }
    }

    fn pull(&mut self) -> Option<(Team, u64)> {
        self.lookahead
            .take()
            .or_else(|| self.inner.next().map(|t| (t, self.inner.last_delay())))
    }
}

impl<S: SolutionStream> Iterator for LevelSorted<S> {
    type Item = Team;

    fn next(&mut self) -> Option<Team> {
        if let Some(t) = self.buffer.pop_front() {
            self.last_delay = 0;
            return Some(t);
        }
        let (first, mut delay) = self.pull()?;
        let size = first.len();
        let mut level = vec![first];
        while let Some((t, d)) = self.pull() {
            if t.len() != size {
                self.lookahead = Some((t, d));
                break;
            }
            delay += d;
            level.push(t);
        }
        if self.lookahead.is_none() {
            delay += self.inner.last_delay();
        }
        level.sort_by(Team::lex_cmp);
        self.buffer = level.into();
        self.last_delay = delay;
        self.buffer.pop_front()
    }
}

impl<S: SolutionStream> SolutionStream for LevelSorted<S> {
    fn last_delay(&self) -> u64 {
        self.last_delay
    }

    fn seed_counts(&self) -> Option<&[usize]> {
        self.inner.seed_counts()
    }
}

/// Buffers the whole stream and replays it in lexicographic team order.
pub struct LexSorted<S> {
    inner: S,
    buffer: Option<VecDeque<Team>>,
    last_delay: u64,
}

impl<S: SolutionStream> LexSorted<S> {
    pub fn new(inner: S) -> Self {
        Self {
            inner,
            buffer: None,
            last_delay: 0,
        }
    }
}

impl<S: SolutionStream> Iterator for LexSorted<S> {
    type Item = Team;

    fn next(&mut self) -> Option<Team> {
        if self.buffer.is_none() {
            let mut total = 0;
            let mut all = Vec::new();
            while let Some(t) = self.inner.next() {
                total += self.inner.last_delay();
                all.push(t);
            }
            total += self.inner.last_delay();
            all.sort_by(Team::lex_cmp);
            self.buffer = Some(all.into());
            self.last_delay = total;
        } else {
            self.last_delay = 0;
        }
        self.buffer.as_mut().and_then(VecDeque::pop_front)
    }
}

impl<S: SolutionStream> SolutionStream for LexSorted<S> {
    fn last_delay(&self) -> u64 {
        self.last_delay
    }

    fn seed_counts(&self) -> Option<&[usize]> {
        self.inner.seed_counts()
    }
}
