//! Labeled graphs with a fixed edge count, as m-subsets of the `C(n,2)` edge slots.
//!
//! Slots are numbered in graph6 column order: slot `j(j-1)/2 + i` is the pair
//! `(i, j)` with `i < j`. Subsets are visited in lexicographic order of their
//! sorted slot lists, and any contiguous range of that order can be visited on
//! its own, which is how exhaustive runs are sharded.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order for labeled enumeration.
pub const MAX_ENUMERATION_ORDER: usize = 8;

pub const fn slot_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

#[inline]
pub fn slot_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

/// The pair `(i, j)`, `i < j`, stored in slot `k`.
pub fn slot_pair(k: usize) -> (usize, usize) {
    let mut j = 1;
    while slot_index(0, j + 1) <= k {
        j += 1;
    }
    (k - slot_index(0, j), j)
}

/// Binomial coefficient, saturating at `u64::MAX`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Slot-indexed edge masks of `n`-vertex graphs, together with the slot table.
#[derive(Debug, Clone)]
pub struct SlotTable {
    n: usize,
    pairs: Vec<(usize, usize)>,
}

impl SlotTable {
    pub fn new(n: usize) -> Self {
        let pairs = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        SlotTable { n, pairs }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn slots(&self) -> usize {
        self.pairs.len()
    }

    pub fn pair(&self, k: usize) -> (usize, usize) {
        self.pairs[k]
    }

    /// Graph with the edges whose slots are set in `mask`.
    pub fn graph(&self, mask: u64) -> Graph {
        let mut adj = vec![0u64; self.n];
        let mut bits = mask;
        while bits != 0 {
            let (i, j) = self.pairs[bits.trailing_zeros() as usize];
            adj[i] |= 1u64 << j;
            adj[j] |= 1u64 << i;
            bits &= bits - 1;
        }
        Graph::from_adjacency(adj).expect("slot masks give simple graphs")
    }

    pub fn mask(&self, g: &Graph) -> u64 {
        g.edges().fold(0, |acc, (i, j)| acc | 1u64 << slot_index(i, j))
    }

    /// Reorders the mask so that slot 0 is the most significant of `slots()` bits;
    /// comparing the results as integers compares the `'0'`/`'1'` upper-triangle strings.
    pub fn string_key(&self, mask: u64) -> u64 {
        let s = self.slots();
        if s == 0 {
            return 0;
        }
        mask.reverse_bits() >> (64 - s)
    }

    pub fn mask_from_key(&self, key: u64) -> u64 {
        self.string_key(key)
    }

    pub fn key_to_string(&self, key: u64) -> String {
        let s = self.slots();
        (0..s)
            .map(|k| if key >> (s - 1 - k) & 1 == 1 { '1' } else { '0' })
            .collect()
    }
}

/// Iterator over a contiguous range of m-subsets of `0..slots` in lexicographic order,
/// yielded as bitmasks.
#[derive(Debug, Clone)]
pub struct EdgeSubsets {
    slots: usize,
    combo: Vec<usize>,
    remaining: u64,
}

impl EdgeSubsets {
    pub fn all(slots: usize, m: usize) -> Self {
        Self::range(slots, m, 0, binomial(slots as u64, m as u64))
    }

    /// Subsets with lexicographic rank in `start..start + count`.
    pub fn range(slots: usize, m: usize, start: u64, count: u64) -> Self {
        let total = binomial(slots as u64, m as u64);
        let start = start.min(total);
        let count = count.min(total - start);
        let combo = if count > 0 { unrank(slots, m, start) } else { Vec::new() };
        EdgeSubsets {
            slots,
            combo,
            remaining: count,
        }
    }
}

impl Iterator for EdgeSubsets {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let mask = self.combo.iter().fold(0u64, |acc, &k| acc | 1u64 << k);
        if self.remaining > 0 {
            let m = self.combo.len();
            let mut i = m;
            while i > 0 && self.combo[i - 1] == self.slots - m + i - 1 {
                i -= 1;
            }
            debug_assert!(i > 0);
            self.combo[i - 1] += 1;
            for t in i..m {
                self.combo[t] = self.combo[t - 1] + 1;
            }
        }
        Some(mask)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let r = usize::try_from(self.remaining).unwrap_or(usize::MAX);
        (r, Some(r))
    }
}

/// The m-subset of `0..slots` with lexicographic rank `rank`.
fn unrank(slots: usize, m: usize, mut rank: u64) -> Vec<usize> {
    let mut combo = Vec::with_capacity(m);
    let mut next = 0;
    for i in 0..m {
        let mut v = next;
        loop {
            let below = binomial((slots - v - 1) as u64, (m - i - 1) as u64);
            if rank < below {
                break;
            }
            rank -= below;
            v += 1;
        }
        combo.push(v);
        next = v + 1;
    }
    combo
}

/// Splits `total` items into `shards` contiguous `(start, count)` ranges.
pub fn shard_ranges(total: u64, shards: usize) -> Vec<(u64, u64)> {
    let k = shards.max(1) as u128;
    (0..k)
        .map(|i| {
            let a = (total as u128 * i / k) as u64;
            let b = (total as u128 * (i + 1) / k) as u64;
            (a, b - a)
        })
        .collect()
}

pub(crate) fn check_edge_count(n: usize, m: usize) -> Result<()> {
    if m > slot_count(n) {
        return Err(Error::Argument(format!(
            "{m} edges do not fit in a simple graph on {n} vertices (max {})",
            slot_count(n)
        )));
    }
    Ok(())
}

/// Every labeled graph on `n` vertices with exactly `m` edges, each once.
pub fn enumerate_graphs(n: usize, m: usize) -> Result<impl Iterator<Item = Graph>> {
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::Resource(format!(
            "labeled enumeration is limited to n <= {MAX_ENUMERATION_ORDER}; \
             use canonical or local-search mode"
        )));
    }
    check_edge_count(n, m)?;
    let table = SlotTable::new(n);
    Ok(EdgeSubsets::all(table.slots(), m).map(move |mask| table.graph(mask)))
}
