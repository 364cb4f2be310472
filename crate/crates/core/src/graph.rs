//! Small undirected simple graphs with one machine word of adjacency per vertex.

use std::fmt;

use crate::error::{Error, Result};

/// Hard upper bound on the vertex count; a neighbor set is a single `u64`.
pub const MAX_VERTICES: usize = 64;

#[inline]
pub(crate) const fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A subset of `0..n`, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: u64,
    n: usize,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet { bits: 0, n }
    }

    pub fn full(n: usize) -> Self {
        VertexSet {
            bits: low_bits(n),
            n,
        }
    }

    pub fn from_bits(bits: u64, n: usize) -> Result<Self> {
        if bits & !low_bits(n) != 0 {
            let vertex = 63 - (bits & !low_bits(n)).leading_zeros() as usize;
            return Err(Error::Index { vertex, n });
        }
        Ok(VertexSet { bits, n })
    }

    pub(crate) fn from_bits_unchecked(bits: u64, n: usize) -> Self {
        debug_assert_eq!(bits & !low_bits(n), 0);
        VertexSet { bits, n }
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(n: usize, vertices: I) -> Result<Self> {
        let mut set = VertexSet::empty(n);
        for v in vertices {
            set.insert(v)?;
        }
        Ok(set)
    }

    pub fn insert(&mut self, v: usize) -> Result<()> {
        if v >= self.n {
            return Err(Error::Index { vertex: v, n: self.n });
        }
        self.bits |= 1u64 << v;
        Ok(())
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.bits >> v & 1 == 1
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// Ambient vertex count.
    pub fn universe(&self) -> usize {
        self.n
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> {
        BitIter(self.bits)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Iterates set bits of a word from lowest to highest.
#[derive(Clone, Copy)]
pub(crate) struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

/// Undirected simple graph on vertices `0..n`.
///
/// `adj[u]` has bit `v` set iff `{u, v}` is an edge. Symmetry and the absence of
/// loops are maintained by every constructor and mutator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self> {
        Self::with_cap(n, MAX_VERTICES)
    }

    /// Edgeless graph on `n` vertices, refusing anything above `cap` (itself at most 64).
    pub fn with_cap(n: usize, cap: usize) -> Result<Self> {
        let cap = cap.min(MAX_VERTICES);
        if n > cap {
            return Err(Error::Resource(format!(
                "graph on {n} vertices exceeds the vertex cap of {cap}"
            )));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency words, validating symmetry and loops.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self> {
        let n = adj.len();
        let g = Graph::new(n)?;
        for (u, &row) in adj.iter().enumerate() {
            if row & !low_bits(n) != 0 {
                let vertex = 63 - (row & !low_bits(n)).leading_zeros() as usize;
                return Err(Error::Index { vertex, n });
            }
            if row >> u & 1 == 1 {
                return Err(Error::Loop(u));
            }
            for v in BitIter(row) {
                if adj[v] >> u & 1 == 0 {
                    return Err(Error::Argument(format!(
                        "adjacency is not symmetric at ({u}, {v})"
                    )));
                }
            }
        }
        Ok(Graph { adj, ..g })
    }

    /// Adds `{u, v}`; adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Loop(u));
        }
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
        Ok(())
    }

    /// Removes `{u, v}` if present.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.adj[u] &= !(1u64 << v);
        self.adj[v] &= !(1u64 << u);
        Ok(())
    }

    /// Consuming form of [`Graph::add_edge`].
    pub fn with_edge(mut self, u: usize, v: usize) -> Result<Self> {
        self.add_edge(u, v)?;
        Ok(self)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::Index { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(|row| row.count_ones() as usize).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).min().unwrap_or(0)
    }

    /// All degrees equal. The graphs on zero or one vertex count as regular.
    pub fn is_regular(&self) -> bool {
        self.max_degree() == self.min_degree()
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits_unchecked(self.adj[v], self.n)
    }

    #[inline]
    pub(crate) fn adjacency_word(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Edges `(u, v)` with `u < v`, ordered by `v` and then `u`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..self.n).flat_map(move |v| BitIter(self.adj[v] & low_bits(v)).map(move |u| (u, v)))
    }

    /// Vertices adjacent to every member of `set`; the whole vertex set when `set` is empty.
    pub fn common_neighborhood(&self, set: &VertexSet) -> Result<VertexSet> {
        if set.universe() != self.n {
            return Err(Error::Argument(format!(
                "vertex set over {} vertices used with a graph on {}",
                set.universe(),
                self.n
            )));
        }
        Ok(VertexSet::from_bits_unchecked(self.common_neighbors_bits(set.bits()), self.n))
    }

    #[inline]
    pub(crate) fn common_neighbors_bits(&self, set: u64) -> u64 {
        BitIter(set).fold(low_bits(self.n), |acc, v| acc & self.adj[v])
    }

    /// Every two members of `set` are adjacent.
    pub fn is_clique(&self, set: &VertexSet) -> bool {
        set.iter()
            .all(|v| (set.bits() & !(1u64 << v)) & !self.adj[v] == 0)
    }

    /// Graph obtained by relabelling vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::Argument(format!(
                "permutation of length {} for graph on {} vertices",
                perm.len(),
                self.n
            )));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.n || seen >> p & 1 == 1 {
                return Err(Error::Argument("not a permutation".into()));
            }
            seen |= 1u64 << p;
        }
        let mut adj = vec![0u64; self.n];
        for (u, v) in self.edges() {
            adj[perm[u]] |= 1u64 << perm[v];
            adj[perm[v]] |= 1u64 << perm[u];
        }
        Ok(Graph { n: self.n, adj })
    }

    pub fn complement(&self) -> Self {
        let all = low_bits(self.n);
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(u, row)| !row & all & !(1u64 << u))
            .collect();
        Graph { n: self.n, adj }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=", self.n)?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

/// Lower bound on `|M_1 ∩ ... ∩ M_k|` for subsets of a universe of size `universe`:
/// `max(0, Σ|M_i| - (k-1)·universe)`.
pub fn bonferroni_lower_bound(set_sizes: &[i64], universe_size: i64) -> Result<i64> {
    if universe_size < 0 {
        return Err(Error::Argument(format!("negative universe size {universe_size}")));
    }
    if let Some(bad) = set_sizes.iter().find(|&&s| s < 0 || s > universe_size) {
        return Err(Error::Argument(format!(
            "set size {bad} outside [0, {universe_size}]"
        )));
    }
    if set_sizes.is_empty() {
        return Ok(universe_size);
    }
    let total: i64 = set_sizes.iter().sum();
    let k = set_sizes.len() as i64;
    Ok((total - (k - 1) * universe_size).max(0))
}
