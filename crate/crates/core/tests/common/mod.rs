//! Naive reference implementations shared by the integration tests. Nothing
//! here goes through the library's bitset kernels or pruning.

#![allow(dead_code)]

use cliquedeg::Graph;
use rand::Rng;

/// Plain adjacency matrix.
pub struct Matrix {
    pub n: usize,
    pub a: Vec<Vec<bool>>,
}

impl Matrix {
    pub fn from_graph(g: &Graph) -> Self {
        let n = g.order();
        let a = (0..n).map(|u| (0..n).map(|v| g.has_edge(u, v)).collect()).collect();
        Matrix { n, a }
    }

    /// Graph whose edges are the pairs `(i, j)`, `i < j`, listed in column order
    /// and selected by the bits of `mask`.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        let mut a = vec![vec![false; n]; n];
        let pairs = (1..n).flat_map(|j| (0..j).map(move |i| (i, j)));
        for (k, (i, j)) in pairs.enumerate() {
            if mask >> k & 1 == 1 {
                a[i][j] = true;
                a[j][i] = true;
            }
        }
        Matrix { n, a }
    }

    pub fn degree(&self, v: usize) -> usize {
        self.a[v].iter().filter(|&&x| x).count()
    }

    pub fn edges(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    pub fn is_regular(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) == self.degree(0))
    }

    /// Largest degree sum over r-subsets that are cliques, 0 if none.
    pub fn delta(&self, r: usize) -> usize {
        let mut best = 0;
        for_each_subset(self.n, r, &mut |s| {
            let clique = s.iter().enumerate().all(|(i, &u)| s[i + 1..].iter().all(|&v| self.a[u][v]));
            if clique {
                best = best.max(s.iter().map(|&v| self.degree(v)).sum());
            }
        });
        best
    }

    /// Every greedy run: repeatedly pick, among the common neighbours of the
    /// vertices picked so far, any vertex of largest degree.
    pub fn greedy_runs(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        self.extend_runs(&mut Vec::new(), &mut out);
        out
    }

    fn extend_runs(&self, seq: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let cand: Vec<usize> = (0..self.n)
            .filter(|&v| seq.iter().all(|&u| self.a[u][v]))
            .collect();
        if cand.is_empty() {
            out.push(seq.clone());
            return;
        }
        let top = cand.iter().map(|&v| self.degree(v)).max().unwrap();
        for &v in cand.iter().filter(|&&v| self.degree(v) == top) {
            seq.push(v);
            self.extend_runs(seq, out);
            seq.pop();
        }
    }
}

pub fn for_each_subset(n: usize, k: usize, f: &mut dyn FnMut(&[usize])) {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for v in start..n {
            if n - v < k - cur.len() {
                break;
            }
            cur.push(v);
            go(v + 1, n, k, cur, f);
            cur.pop();
        }
    }
    go(0, n, k, &mut Vec::new(), f);
}

/// Edge count of the balanced complete r-partite graph, by counting pairs.
pub fn turan_pairs(r: usize, n: usize) -> u64 {
    let parts: Vec<u64> = (0..r).map(|i| (n / r + usize::from(i < n % r)) as u64).collect();
    let mut t = 0;
    for i in 0..r {
        for j in i + 1..r {
            t += parts[i] * parts[j];
        }
    }
    t
}

/// Minimum over all labeled graphs on n vertices with m edges of `Matrix::delta(r)`.
pub fn delta_min_bruteforce(n: usize, m: usize, r: usize) -> usize {
    let slots = n * (n.saturating_sub(1)) / 2;
    let mut best = usize::MAX;
    for mask in 0u64..1 << slots {
        if mask.count_ones() as usize == m {
            best = best.min(Matrix::from_mask(n, mask).delta(r));
        }
    }
    best
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n).unwrap();
    for v in 1..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}
