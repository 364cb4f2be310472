//! Canonical forms for graphs on at most eight vertices.
//!
//! The canonical form of `G` is the lexicographically least upper-triangle
//! adjacency string (graph6 column order, `'0'`/`'1'`) over all relabellings of
//! `G`. It is found by a branch-and-bound search over permutations: choosing the
//! vertex for position `j` fixes column `j` of the string, so a partial labelling
//! whose columns already compare greater than the best complete one is abandoned.

use std::collections::BTreeSet;

use rayon::prelude::*;

use super::enumerate::{check_edge_count, slot_count, SlotTable};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_CANONICAL_ORDER: usize = 8;

fn check_order(n: usize) -> Result<()> {
    if n > MAX_CANONICAL_ORDER {
        return Err(Error::Resource(format!(
            "canonical form is limited to n <= {MAX_CANONICAL_ORDER}, got {n}"
        )));
    }
    Ok(())
}

/// The canonical string, e.g. `"101101"` for `C_4` on four vertices.
pub fn canonical_form(g: &Graph) -> Result<String> {
    let key = canonical_key(g)?;
    Ok(SlotTable::new(g.order()).key_to_string(key))
}

/// Canonical string packed into an integer, first character most significant.
pub fn canonical_key(g: &Graph) -> Result<u64> {
    check_order(g.order())?;
    let n = g.order();
    if n <= 1 {
        return Ok(0);
    }
    let adj: Vec<u64> = (0..n).map(|v| g.adjacency_word(v)).collect();
    let mut search = Search {
        n,
        adj,
        perm: Vec::with_capacity(n),
        cols: vec![0; n],
        best: None,
    };
    search.descend(0, 0);
    let best = search.best.expect("at least one labelling");
    Ok(best[1..]
        .iter()
        .enumerate()
        .fold(0u64, |acc, (i, &c)| acc << (i + 1) | c))
}

struct Search {
    n: usize,
    adj: Vec<u64>,
    perm: Vec<usize>,
    // cols[j]: bits adj(perm[i], perm[j]) for i < j, i = 0 most significant
    cols: Vec<u64>,
    best: Option<Vec<u64>>,
}

impl Search {
    fn descend(&mut self, depth: usize, used: u64) {
        if depth == self.n {
            let better = match &self.best {
                None => true,
                Some(b) => self.cols < *b,
            };
            if better {
                self.best = Some(self.cols.clone());
            }
            return;
        }
        let mut options: Vec<(u64, usize)> = (0..self.n)
            .filter(|&v| used >> v & 1 == 0)
            .map(|v| {
                let col = self.perm.iter().fold(0u64, |acc, &u| acc << 1 | (self.adj[u] >> v & 1));
                (col, v)
            })
            .collect();
        options.sort_unstable();
        for (col, v) in options {
            if let Some(best) = &self.best {
                // compare the prefix through this column with the best labelling
                match self.cols[..depth].cmp(&best[..depth]) {
                    std::cmp::Ordering::Greater => return,
                    std::cmp::Ordering::Equal if col > best[depth] => return,
                    _ => {}
                }
            }
            self.cols[depth] = col;
            self.perm.push(v);
            self.descend(depth + 1, used | 1u64 << v);
            self.perm.pop();
        }
        self.cols[depth] = 0;
    }
}

/// Canonical keys of every isomorphism class of graphs with `n` vertices and `m`
/// edges, sorted ascending. Classes with `m` edges are grown from those with
/// `m - 1` by adding each missing edge; above half the slots the complements
/// of the smaller classes are used.
pub fn isomorphism_classes(n: usize, m: usize) -> Result<Vec<u64>> {
    check_order(n)?;
    check_edge_count(n, m)?;
    let table = SlotTable::new(n);
    let slots = slot_count(n);
    if m > slots / 2 {
        let smaller = isomorphism_classes(n, slots - m)?;
        let mut keys: Vec<u64> = smaller
            .par_iter()
            .map(|&k| {
                let g = table.graph(table.mask_from_key(k)).complement();
                canonical_key(&g).expect("order checked")
            })
            .collect();
        keys.sort_unstable();
        return Ok(keys);
    }
    let mut level: Vec<u64> = vec![0];
    for _ in 0..m {
        let grown: Vec<Vec<u64>> = level
            .par_iter()
            .map(|&key| {
                let mask = table.mask_from_key(key);
                (0..slots)
                    .filter(|&s| mask >> s & 1 == 0)
                    .map(|s| canonical_key(&table.graph(mask | 1u64 << s)).expect("order checked"))
                    .collect()
            })
            .collect();
        let set: BTreeSet<u64> = grown.into_iter().flatten().collect();
        level = set.into_iter().collect();
    }
    Ok(level)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::enumerate::enumerate_graphs;
    use crate::turan::complete_multipartite;
    use std::collections::HashSet;

    /// Minimum over all n! relabellings, by explicit permutation enumeration.
    fn brute_canonical(g: &Graph) -> String {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best: Option<String> = None;
        loop {
            let h = g.permuted(&perm).unwrap();
            let s: String = (1..n)
                .flat_map(|j| (0..j).map(move |i| (i, j)))
                .map(|(i, j)| if h.has_edge(i, j) { '1' } else { '0' })
                .collect();
            if best.as_ref().is_none_or(|b| s < *b) {
                best = Some(s);
            }
            // next permutation
            let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else {
                break;
            };
            let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
            perm.swap(i - 1, j);
            perm[i..].reverse();
        }
        best.unwrap_or_default()
    }

    #[test]
    fn c4_relabellings_agree() {
        let c4 = complete_multipartite(&[2, 2]).unwrap();
        let s = canonical_form(&c4).unwrap();
        assert_eq!(s, "011110");
        for perm in [[1, 0, 2, 3], [3, 1, 0, 2], [2, 3, 1, 0]] {
            assert_eq!(canonical_form(&c4.permuted(&perm).unwrap()).unwrap(), s);
        }
    }

    #[test]
    fn path_and_triangle_differ() {
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let k3 = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_ne!(canonical_form(&p3).unwrap(), canonical_form(&k3).unwrap());
        assert_eq!(canonical_form(&p3).unwrap(), "011");
    }

    #[test]
    fn classes_of_four_vertices_three_edges() {
        let forms: HashSet<String> = enumerate_graphs(4, 3)
            .unwrap()
            .map(|g| canonical_form(&g).unwrap())
            .collect();
        assert_eq!(forms.len(), 3);
        assert_eq!(isomorphism_classes(4, 3).unwrap().len(), 3);
    }

    #[test]
    fn matches_permutation_brute_force() {
        for n in 0..=6 {
            for m in [0, n / 2, n, slot_count(n) / 2, slot_count(n)] {
                if m > slot_count(n) {
                    continue;
                }
                for g in enumerate_graphs(n, m).unwrap().step_by(7) {
                    assert_eq!(canonical_form(&g).unwrap(), brute_canonical(&g), "{g:?}");
                }
            }
        }
    }

    #[test]
    fn class_counts_match_known_totals() {
        // graphs up to isomorphism on n vertices, summed over m: 1, 2, 4, 11, 34, 156
        for (n, total) in [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156)] {
            let count: usize = (0..=slot_count(n))
                .map(|m| isomorphism_classes(n, m).unwrap().len())
                .sum();
            assert_eq!(count, total, "n={n}");
        }
    }

    #[test]
    fn classes_agree_with_labeled_dedup() {
        for n in 2..=5 {
            for m in 0..=slot_count(n) {
                let mut dedup: Vec<u64> = enumerate_graphs(n, m)
                    .unwrap()
                    .map(|g| canonical_key(&g).unwrap())
                    .collect::<BTreeSet<_>>()
                    .into_iter()
                    .collect();
                dedup.sort_unstable();
                assert_eq!(isomorphism_classes(n, m).unwrap(), dedup);
            }
        }
    }

    #[test]
    fn rejects_large_graphs() {
        assert!(matches!(canonical_form(&Graph::new(9).unwrap()), Err(Error::Resource(_))));
        assert!(matches!(isomorphism_classes(9, 1), Err(Error::Resource(_))));
    }
}
