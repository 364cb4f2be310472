//! r-clique enumeration and the maximum degree sum over r-cliques.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{BitIter, Graph, VertexSet};

/// Largest degree sum over the r-cliques of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeltaResult {
    pub r: usize,
    /// Zero when the graph has no r-clique.
    pub value: usize,
    /// Lexicographically least maximizing clique; `None` iff there is no r-clique.
    pub witness: Option<VertexSet>,
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

/// Iterator over the r-cliques of a graph in lexicographic order of sorted member lists.
pub struct RCliques<'g> {
    g: &'g Graph,
    r: usize,
    // candidates[k]: untried vertices for position k, all adjacent to current[..k]
    candidates: Vec<u64>,
    current: Vec<usize>,
}

impl Iterator for RCliques<'_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        if self.r == 0 {
            return None;
        }
        loop {
            let k = self.current.len();
            if self.candidates[k] == 0 {
                if k == 0 {
                    return None;
                }
                self.current.pop();
                continue;
            }
            let cand = self.candidates[k];
            let v = cand.trailing_zeros() as usize;
            self.candidates[k] = cand & (cand - 1);
            if k + 1 == self.r {
                let bits = self.current.iter().fold(1u64 << v, |acc, &u| acc | 1u64 << u);
                return Some(VertexSet::from_bits_unchecked(bits, self.g.order()));
            }
            let next = self.candidates[k] & self.g.adjacency_word(v);
            if (next.count_ones() as usize) < self.r - k - 1 {
                continue;
            }
            self.current.push(v);
            self.candidates[k + 1] = next;
        }
    }
}

/// All r-cliques of `g`, each once, in lexicographic order. Empty for `r = 0` or `r > n`.
pub fn enumerate_r_cliques(g: &Graph, r: usize) -> RCliques<'_> {
    let mut candidates = vec![0u64; r.max(1)];
    if r <= g.order() {
        candidates[0] = g.vertices().bits();
    }
    RCliques {
        g,
        r,
        candidates,
        current: Vec::with_capacity(r),
    }
}

pub fn degree_sum(g: &Graph, set: &VertexSet) -> usize {
    set.iter().map(|v| g.degree(v)).sum()
}

/// Maximum of `Σ d(u)` over r-cliques, by branch and bound over the same
/// lexicographic search tree as [`enumerate_r_cliques`].
pub fn delta_r_exact(g: &Graph, r: usize) -> Result<DeltaResult> {
    if r == 0 {
        return Err(Error::Argument("clique size r must be at least 1".into()));
    }
    let mut search = MaxWeightClique {
        g,
        degrees: g.degrees(),
        r,
        best: None,
    };
    if r <= g.order() {
        search.descend(0, g.vertices().bits(), 0, 0);
    }
    Ok(match search.best {
        Some((value, bits)) => DeltaResult {
            r,
            value,
            witness: Some(VertexSet::from_bits_unchecked(bits, g.order())),
        },
        None => DeltaResult {
            r,
            value: 0,
            witness: None,
        },
    })
}

struct MaxWeightClique<'g> {
    g: &'g Graph,
    degrees: Vec<usize>,
    r: usize,
    best: Option<(usize, u64)>,
}

impl MaxWeightClique<'_> {
    fn descend(&mut self, depth: usize, mut cand: u64, sum: usize, chosen: u64) {
        let need = self.r - depth;
        while cand.count_ones() as usize >= need {
            if let Some((best, _)) = self.best {
                let top = BitIter(cand).map(|v| self.degrees[v]).max().unwrap_or(0);
                // later branches can at most tie, and ties keep the earlier witness
                if sum + need * top <= best {
                    return;
                }
            }
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            let value = sum + self.degrees[v];
            if need == 1 {
                if self.best.is_none_or(|(b, _)| value > b) {
                    self.best = Some((value, chosen | 1u64 << v));
                }
            } else {
                self.descend(depth + 1, cand & self.g.adjacency_word(v), value, chosen | 1u64 << v);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::turan::{complete_multipartite, turan_graph};

    fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n).unwrap();
        for v in 0..n {
            for u in 0..v {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    fn triangle_with_pendant() -> Graph {
        Graph::from_edges(4, [(0, 1), (1, 2), (0, 2), (0, 3)]).unwrap()
    }

    fn brute_delta(g: &Graph, r: usize) -> (usize, Option<Vec<usize>>) {
        // every r-subset, checked pairwise
        let n = g.order();
        let mut best: Option<(usize, Vec<usize>)> = None;
        for mask in 0u64..(1u64 << n) {
            if mask.count_ones() as usize != r {
                continue;
            }
            let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            let clique = vs.iter().all(|&a| vs.iter().all(|&b| a == b || g.has_edge(a, b)));
            if !clique {
                continue;
            }
            let s: usize = vs.iter().map(|&v| g.degree(v)).sum();
            let better = match &best {
                None => true,
                Some((b, w)) => s > *b || (s == *b && vs < *w),
            };
            if better {
                best = Some((s, vs));
            }
        }
        match best {
            Some((s, w)) => (s, Some(w)),
            None => (0, None),
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_r_cliques(&complete(4), 3).count(), 4);
        let c4 = complete_multipartite(&[2, 2]).unwrap();
        assert_eq!(enumerate_r_cliques(&c4, 3).count(), 0);
        let (t, _) = turan_graph(3, 6).unwrap();
        assert_eq!(enumerate_r_cliques(&t, 3).count(), 8);
        assert_eq!(enumerate_r_cliques(&t, 0).count(), 0);
        assert_eq!(enumerate_r_cliques(&complete(3), 4).count(), 0);
        assert_eq!(enumerate_r_cliques(&complete(5), 1).count(), 5);
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let cliques: Vec<_> = enumerate_r_cliques(&complete(4), 2).map(|c| c.to_vec()).collect();
        assert_eq!(
            cliques,
            vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]
        );
    }

    #[test]
    fn degree_sum_examples() {
        let k3 = complete(3);
        assert_eq!(degree_sum(&k3, &VertexSet::from_vertices(3, [0, 1]).unwrap()), 4);
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(degree_sum(&star, &VertexSet::from_vertices(4, [0, 1]).unwrap()), 4);
        let (t, _) = turan_graph(3, 6).unwrap();
        for c in enumerate_r_cliques(&t, 3) {
            assert_eq!(degree_sum(&t, &c), 12);
        }
    }

    #[test]
    fn delta_examples() {
        let c4 = complete_multipartite(&[2, 2]).unwrap();
        let d = delta_r_exact(&c4, 3).unwrap();
        assert_eq!((d.value, d.witness), (0, None));

        let d = delta_r_exact(&triangle_with_pendant(), 2).unwrap();
        assert_eq!(d.value, 5);
        assert_eq!(d.witness.unwrap().to_vec(), vec![0, 1]);

        let (t, _) = turan_graph(3, 6).unwrap();
        let d = delta_r_exact(&t, 3).unwrap();
        assert_eq!(d.value, 12);
        assert_eq!(d.witness.unwrap().to_vec(), vec![0, 2, 4]);

        assert!(delta_r_exact(&t, 0).is_err());
        assert_eq!(delta_r_exact(&t, 7).unwrap().witness, None);
    }

    #[test]
    fn delta_one_is_max_degree() {
        let g = triangle_with_pendant();
        let d = delta_r_exact(&g, 1).unwrap();
        assert_eq!(d.value, g.max_degree());
        assert_eq!(d.witness.unwrap().to_vec(), vec![0]);
    }

    #[test]
    fn delta_of_balanced_turan_graph() {
        for r in 2..=5 {
            for k in 1..=4 {
                let n = r * k;
                let (t, _) = turan_graph(r, n).unwrap();
                assert_eq!(delta_r_exact(&t, r).unwrap().value, (r - 1) * n);
            }
        }
    }

    #[test]
    fn branch_and_bound_matches_subset_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..400 {
            let n = rng.gen_range(0..=10);
            let p: f64 = rng.gen();
            let mut g = Graph::new(n).unwrap();
            for v in 0..n {
                for u in 0..v {
                    if rng.gen_bool(p) {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            for r in 1..=5 {
                let d = delta_r_exact(&g, r).unwrap();
                let (value, witness) = brute_delta(&g, r);
                assert_eq!(d.value, value, "{g:?} r={r}");
                assert_eq!(d.witness.map(|w| w.to_vec()), witness, "{g:?} r={r}");
            }
        }
    }
}
