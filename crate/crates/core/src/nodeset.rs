//! Subsets of simple roots, stored as bitmasks.

use std::fmt;

use serde::{Deserialize, Serialize};

/// A set of simple-root indices (0-based internally, printed 1-based).
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NodeSet(u32);

impl NodeSet {
    pub const MAX_NODES: usize = 32;

    pub const fn empty() -> Self {
        NodeSet(0)
    }

    pub fn full(n: usize) -> Self {
        assert!(n <= Self::MAX_NODES);
        if n == 32 {
            NodeSet(u32::MAX)
        } else {
            NodeSet((1u32 << n) - 1)
        }
    }

    pub const fn from_bits(bits: u32) -> Self {
        NodeSet(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    pub fn singleton(i: usize) -> Self {
        NodeSet(1 << i)
    }

    pub fn contains(self, i: usize) -> bool {
        i < Self::MAX_NODES && self.0 & (1 << i) != 0
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1 << i);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: NodeSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: NodeSet) -> NodeSet {
        NodeSet(self.0 | other.0)
    }

    pub fn intersection(self, other: NodeSet) -> NodeSet {
        NodeSet(self.0 & other.0)
    }

    pub fn difference(self, other: NodeSet) -> NodeSet {
        NodeSet(self.0 & !other.0)
    }

    /// Complement inside `{0, .., n-1}`.
    pub fn complement(self, n: usize) -> NodeSet {
        Self::full(n).difference(self)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..Self::MAX_NODES).filter(move |&i| self.contains(i))
    }

    pub fn max_index(self) -> Option<usize> {
        self.iter().last()
    }

    /// All subsets of `{0, .., n-1}`, in increasing bitmask order.
    pub fn subsets(n: usize) -> impl Iterator<Item = NodeSet> {
        assert!(n < Self::MAX_NODES);
        (0..1u32 << n).map(NodeSet)
    }

    /// Parses 1-based indices separated by commas or whitespace.
    pub fn parse_one_based(s: &str) -> Result<NodeSet, String> {
        let mut set = NodeSet::empty();
        for tok in s.split(|c: char| c == ',' || c.is_whitespace()) {
            if tok.is_empty() {
                continue;
            }
            let i: usize = tok
                .parse()
                .map_err(|_| format!("`{tok}` is not a simple root index"))?;
            if i == 0 || i > Self::MAX_NODES {
                return Err(format!("simple root index {i} out of range"));
            }
            set.insert(i - 1);
        }
        Ok(set)
    }

    pub fn to_one_based(self) -> Vec<usize> {
        self.iter().map(|i| i + 1).collect()
    }
}

impl FromIterator<usize> for NodeSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = NodeSet::empty();
        for i in iter {
            set.insert(i);
        }
        set
    }
}

impl fmt::Debug for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", i + 1)?;
        }
        f.write_str("}")
    }
}
