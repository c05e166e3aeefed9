//! Machine-independent cost accounting.
//!
//! One step is one assignment comparison, one bit-vector addition, one trie
//! edge traversal, or one dependence-atom evaluation. Streams charge the steps
//! they spend between two emissions to a [`StepCounter`] and expose the total
//! as the delay of the emission that follows.

/// Accumulates elementary steps.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct StepCounter {
    count: u64,
}

impl StepCounter {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn tick(&mut self) {
        self.count += 1;
    }

    #[inline]
    pub fn add(&mut self, steps: u64) {
        self.count += steps;
    }

    pub fn get(&self) -> u64 {
        self.count
    }

    /// Returns the accumulated count and resets it to zero.
    pub fn take(&mut self) -> u64 {
        std::mem::take(&mut self.count)
    }
}
