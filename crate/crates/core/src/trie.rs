//! Binary tries over fixed-length bit keys.
//!
//! A key is a sequence of words of a fixed bit width, read most significant
//! bit first, so in-order traversal yields keys in lexicographic order. A
//! team of `k` sorted assignments over `n` variables is a `k * n` bit key and
//! lexicographic key order coincides with the lexicographic team order among
//! teams of equal size. Every operation costs one step per edge traversed.

use crate::steps::StepCounter;
use crate::team::{Assignment, Team};

const NONE: u32 = u32::MAX;

#[derive(Debug, Clone, Copy)]
struct TrieNode {
    child: [u32; 2],
    /// Number of keys stored below (or at) this node.
    count: u32,
}

impl TrieNode {
    const EMPTY: Self = Self {
        child: [NONE, NONE],
        count: 0,
    };
}

#[derive(Debug, Clone)]
pub struct BitTrie {
    words: usize,
    word_width: usize,
    nodes: Vec<TrieNode>,
    free: Vec<u32>,
}

impl BitTrie {
    pub fn new(words: usize, word_width: usize) -> Self {
        Self {
            words,
            word_width,
            nodes: vec![TrieNode::EMPTY],
            free: Vec::new(),
        }
    }

    pub fn key_bits(&self) -> usize {
        self.words * self.word_width
    }

    pub fn len(&self) -> usize {
        self.nodes[0].count as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Nodes currently allocated, for memory accounting.
    pub fn node_count(&self) -> usize {
        self.nodes.len() - self.free.len()
    }

    #[inline]
    fn bit(&self, key: &[u64], depth: usize) -> usize {
        let (word, offset) = (depth / self.word_width, depth % self.word_width);
        (key[word] >> (self.word_width - 1 - offset) & 1) as usize
    }

    fn alloc(&mut self) -> u32 {
        match self.free.pop() {
            Some(i) => {
                self.nodes[i as usize] = TrieNode::EMPTY;
                i
            }
            None => {
                self.nodes.push(TrieNode::EMPTY);
                (self.nodes.len() - 1) as u32
            }
        }
    }

    fn check_key(&self, key: &[u64]) {
        debug_assert_eq!(key.len(), self.words, "key length");
    }

    /// Returns false if the key was already present.
    pub fn insert(&mut self, key: &[u64], steps: &mut StepCounter) -> bool {
        self.check_key(key);
        let bits = self.key_bits();
        let mut path = Vec::with_capacity(bits + 1);
        let mut node = 0u32;
        path.push(node);
        for depth in 0..bits {
            steps.tick();
            let b = self.bit(key, depth);
            let mut next = self.nodes[node as usize].child[b];
            if next == NONE {
                next = self.alloc();
                self.nodes[node as usize].child[b] = next;
            }
            node = next;
            path.push(node);
        }
        if self.nodes[node as usize].count > 0 {
            return false;
        }
        for n in path {
            self.nodes[n as usize].count += 1;
        }
        true
    }

    pub fn contains(&self, key: &[u64], steps: &mut StepCounter) -> bool {
        self.check_key(key);
        let mut node = 0u32;
        for depth in 0..self.key_bits() {
            steps.tick();
            node = self.nodes[node as usize].child[self.bit(key, depth)];
            if node == NONE {
                return false;
            }
        }
        self.nodes[node as usize].count > 0
    }

    /// Removes the key and prunes branches left empty. Returns false if the
    /// key was absent.
    pub fn remove(&mut self, key: &[u64], steps: &mut StepCounter) -> bool {
        self.check_key(key);
        let bits = self.key_bits();
        let mut path = Vec::with_capacity(bits + 1);
        let mut node = 0u32;
        path.push(node);
        for depth in 0..bits {
            steps.tick();
            node = self.nodes[node as usize].child[self.bit(key, depth)];
            if node == NONE {
                return false;
            }
            path.push(node);
        }
        if self.nodes[node as usize].count == 0 {
            return false;
        }
        let mut detached = false;
        for (depth, &n) in path.iter().enumerate() {
            self.nodes[n as usize].count -= 1;
            if detached {
                self.free.push(n);
            } else if depth > 0 && self.nodes[n as usize].count == 0 {
                let parent = path[depth - 1] as usize;
                let b = self.bit(key, depth - 1);
                self.nodes[parent].child[b] = NONE;
                self.free.push(n);
                detached = true;
            }
        }
        true
    }

    /// Smallest key in lexicographic order.
    pub fn min(&self, steps: &mut StepCounter) -> Option<Vec<u64>> {
        if self.is_empty() {
            return None;
        }
        let mut key = vec![0u64; self.words];
        let mut node = 0usize;
        for depth in 0..self.key_bits() {
            steps.tick();
            let [zero, one] = self.nodes[node].child;
            let (b, next) = if zero != NONE { (0, zero) } else { (1, one) };
            key[depth / self.word_width] = key[depth / self.word_width] << 1 | b;
            node = next as usize;
        }
        Some(key)
    }

    /// All keys in lexicographic order.
    pub fn keys(&self) -> Vec<Vec<u64>> {
        let mut out = Vec::with_capacity(self.len());
        if self.is_empty() {
            return out;
        }
        let bits = self.key_bits();
        let mut stack = vec![(0u32, 0usize, vec![0u64; self.words])];
        while let Some((node, depth, key)) = stack.pop() {
            if depth == bits {
                out.push(key);
                continue;
            }
            let word = depth / self.word_width;
            for b in [1u64, 0] {
                let child = self.nodes[node as usize].child[b as usize];
                if child != NONE {
                    let mut k = key.clone();
                    k[word] = k[word] << 1 | b;
                    stack.push((child, depth + 1, k));
                }
            }
        }
        out
    }
}

/// A set of equal-size teams backed by a [`BitTrie`].
#[derive(Debug, Clone)]
pub struct TeamSet {
    team_size: usize,
    width: usize,
    trie: BitTrie,
    scratch: Vec<u64>,
}

impl TeamSet {
    pub fn new(team_size: usize, width: usize) -> Self {
        Self {
            team_size,
            width,
            trie: BitTrie::new(team_size, width),
            scratch: Vec::with_capacity(team_size),
        }
    }

    pub fn team_size(&self) -> usize {
        self.team_size
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn len(&self) -> usize {
        self.trie.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trie.is_empty()
    }

    pub fn node_count(&self) -> usize {
        self.trie.node_count()
    }

    fn load(&mut self, team: &Team) {
        assert_eq!(team.len(), self.team_size, "team size");
        assert_eq!(team.width(), self.width, "team width");
        self.scratch.clear();
        self.scratch.extend(team.iter().map(|s| s.bits()));
    }

    pub fn insert(&mut self, team: &Team, steps: &mut StepCounter) -> bool {
        self.load(team);
        let key = std::mem::take(&mut self.scratch);
        let inserted = self.trie.insert(&key, steps);
        self.scratch = key;
        inserted
    }

    pub fn remove(&mut self, team: &Team, steps: &mut StepCounter) -> bool {
        self.load(team);
        let key = std::mem::take(&mut self.scratch);
        let removed = self.trie.remove(&key, steps);
        self.scratch = key;
        removed
    }

    pub fn contains(&mut self, team: &Team, steps: &mut StepCounter) -> bool {
        if team.len() != self.team_size || team.width() != self.width {
            return false;
        }
        self.load(team);
        self.trie.contains(&self.scratch, steps)
    }

    fn to_team(&self, key: Vec<u64>) -> Team {
        let members = key
            .into_iter()
            .map(|bits| Assignment::from_raw(bits, self.width))
            .collect();
        Team::from_sorted_unchecked(self.width, members)
    }

    /// The lexicographically least team.
    pub fn min(&self, steps: &mut StepCounter) -> Option<Team> {
        self.trie.min(steps).map(|k| self.to_team(k))
    }

    /// All teams in ascending lexicographic order.
    pub fn teams(&self) -> Vec<Team> {
        self.trie
            .keys()
            .into_iter()
            .map(|k| self.to_team(k))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    #[test]
    fn insert_remove_min() {
        let mut steps = StepCounter::new();
        let mut trie = BitTrie::new(2, 3);
        assert!(trie.insert(&[0b000, 0b110], &mut steps));
        assert!(trie.insert(&[0b000, 0b010], &mut steps));
        assert!(!trie.insert(&[0b000, 0b010], &mut steps));
        assert_eq!(steps.get(), 18);
        assert_eq!(trie.len(), 2);
        assert_eq!(trie.min(&mut steps), Some(vec![0, 0b010]));
        assert!(trie.remove(&[0b000, 0b010], &mut steps));
        assert!(!trie.remove(&[0b000, 0b010], &mut steps));
        assert_eq!(trie.min(&mut steps), Some(vec![0, 0b110]));
        assert!(trie.remove(&[0b000, 0b110], &mut steps));
        assert!(trie.is_empty());
        assert_eq!(trie.min(&mut steps), None);
        assert_eq!(trie.node_count(), 1);
    }

    #[test]
    fn zero_length_keys() {
        let mut steps = StepCounter::new();
        let mut trie = BitTrie::new(1, 0);
        assert!(trie.insert(&[0], &mut steps));
        assert!(!trie.insert(&[0], &mut steps));
        assert!(trie.contains(&[0], &mut steps));
        assert_eq!(trie.keys(), vec![vec![0]]);
        assert!(trie.remove(&[0], &mut steps));
        assert!(trie.is_empty());
    }

    #[test]
    fn team_set_orders_lexicographically() {
        let mut steps = StepCounter::new();
        let mut set = TeamSet::new(2, 3);
        for t in ["000,111", "000,010", "000,110", "000,100"] {
            set.insert(&Team::parse(t, 3).unwrap(), &mut steps);
        }
        let listed: Vec<String> = set.teams().iter().map(|t| t.to_string()).collect();
        assert_eq!(listed, ["000,010", "000,100", "000,110", "000,111"]);
        assert_eq!(set.min(&mut steps).unwrap().to_string(), "000,010");
    }

    proptest! {
        #[test]
        fn behaves_like_a_btreeset(ops in proptest::collection::vec((any::<bool>(), 0u64..16, 0u64..16), 0..200)) {
            let mut steps = StepCounter::new();
            let mut trie = BitTrie::new(2, 4);
            let mut model = BTreeSet::new();
            for (insert, a, b) in ops {
                let key = [a, b];
                if insert {
                    prop_assert_eq!(trie.insert(&key, &mut steps), model.insert(key.to_vec()));
                } else {
                    prop_assert_eq!(trie.remove(&key, &mut steps), model.remove(key.as_slice()));
                }
                prop_assert_eq!(trie.len(), model.len());
                prop_assert_eq!(trie.min(&mut steps), model.iter().next().cloned());
            }
            prop_assert_eq!(trie.keys(), model.into_iter().collect::<Vec<_>>());
        }
    }
}
