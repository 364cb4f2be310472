//! Upper bounds on `Δ_r(n, m)` by steepest-descent edge swaps.
//!
//! A move removes one edge and adds one non-edge, keeping `m` fixed. Each run
//! takes the best improving move (ties to the least canonical form, or the
//! least labeled string above eight vertices), moves sideways to a random
//! equal-valued neighbour when nothing improves, and stops after `iter_budget`
//! consecutive sideways moves, at a strict local minimum, or at a value that
//! cannot be beaten. Runs are seeded independently as `seed + run index`.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::canonical::{canonical_key, MAX_CANONICAL_ORDER};
use super::enumerate::slot_count;
use super::exact::validate;
use super::near_regular::near_regular_graph;
use super::record::{Mode, ScanRecord};
use crate::cliques::delta_r_exact;
use crate::error::Result;
use crate::graph::Graph;
use crate::io::to_graph6;
use crate::turan::turan_size;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    pub seed: u64,
    /// Random starting graphs; one near-regular start is always added.
    pub restarts: usize,
    /// Consecutive non-improving moves allowed before a run stops.
    pub iter_budget: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            seed: 0,
            restarts: 4,
            iter_budget: 50,
        }
    }
}

/// Tie-break key: canonical string when affordable, labeled string otherwise.
fn tie_key(g: &Graph) -> Vec<u64> {
    if g.order() <= MAX_CANONICAL_ORDER {
        return vec![canonical_key(g).expect("order checked")];
    }
    let n = g.order();
    let mut words = Vec::with_capacity(slot_count(n).div_ceil(64));
    let (mut acc, mut filled) = (0u64, 0);
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u64;
            filled += 1;
            if filled == 64 {
                words.push(acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        words.push(acc << (64 - filled));
    }
    words
}

struct Outcome {
    value: usize,
    key: Vec<u64>,
    graph: Graph,
    examined: u64,
}

impl Outcome {
    fn better_than(&self, other: &Outcome) -> bool {
        (self.value, &self.key) < (other.value, &other.key)
    }
}

fn random_graph(n: usize, m: usize, rng: &mut ChaCha8Rng) -> Graph {
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let mut g = Graph::new(n).expect("order validated");
    for k in sample(rng, pairs.len(), m) {
        let (i, j) = pairs[k];
        g.add_edge(i, j).expect("valid pair");
    }
    g
}

fn descend(mut g: Graph, r: usize, floor: usize, budget: usize, rng: &mut ChaCha8Rng) -> Outcome {
    let value_of = |g: &Graph| delta_r_exact(g, r).expect("r >= 1").value;
    let mut value = value_of(&g);
    let mut best = Outcome {
        value,
        key: tie_key(&g),
        graph: g.clone(),
        examined: 1,
    };
    let mut sideways = 0;
    while value > floor && sideways < budget {
        let edges: Vec<(usize, usize)> = g.edges().collect();
        let non_edges: Vec<(usize, usize)> = g.complement().edges().collect();
        if edges.is_empty() || non_edges.is_empty() {
            break;
        }
        let mut top = usize::MAX;
        let mut ties: Vec<((usize, usize), (usize, usize))> = Vec::new();
        for &e in &edges {
            g.remove_edge(e.0, e.1).expect("edge");
            for &f in &non_edges {
                g.add_edge(f.0, f.1).expect("pair");
                let v = value_of(&g);
                best.examined += 1;
                if v < top {
                    top = v;
                    ties.clear();
                }
                if v == top {
                    ties.push((e, f));
                }
                g.remove_edge(f.0, f.1).expect("pair");
            }
            g.add_edge(e.0, e.1).expect("edge");
        }
        let apply = |g: &Graph, (e, f): ((usize, usize), (usize, usize))| {
            let mut h = g.clone();
            h.remove_edge(e.0, e.1).expect("edge");
            h.add_edge(f.0, f.1).expect("pair");
            h
        };
        if top < value {
            g = ties
                .iter()
                .map(|&mv| {
                    let h = apply(&g, mv);
                    (tie_key(&h), h)
                })
                .min_by(|a, b| a.0.cmp(&b.0))
                .map(|(_, h)| h)
                .expect("nonempty ties");
            sideways = 0;
        } else if top == value {
            g = apply(&g, ties[rng.gen_range(0..ties.len())]);
            sideways += 1;
        } else {
            break;
        }
        value = top;
        let key = tie_key(&g);
        if (value, &key) < (best.value, &best.key) {
            best.value = value;
            best.key = key;
            best.graph = g.clone();
        }
    }
    best
}

/// Upper bound on `Δ_r(n, m)` from `restarts` random starts plus one near-regular start.
/// Deterministic for a given seed.
pub fn delta_r_min_local_search(n: usize, m: usize, r: usize, opts: &SearchOptions) -> Result<ScanRecord> {
    validate(n, m, r)?;
    Graph::new(n)?;
    // nothing can go below ⌈2rm/n⌉ once m ≥ t_r(n)
    let floor = if r >= 2 && n >= r && m as u64 >= turan_size(r, n)? {
        (2 * r * m).div_ceil(n)
    } else {
        0
    };
    let runs: Vec<Outcome> = (0..=opts.restarts)
        .into_par_iter()
        .map(|run| {
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed.wrapping_add(run as u64));
            let start = if run == opts.restarts {
                near_regular_graph(n, m).expect("edge count validated")
            } else {
                random_graph(n, m, &mut rng)
            };
            descend(start, r, floor, opts.iter_budget, &mut rng)
        })
        .collect();
    let examined = runs.iter().map(|o| o.examined).sum();
    let best = runs
        .into_iter()
        .reduce(|a, b| if b.better_than(&a) { b } else { a })
        .expect("at least one run");
    Ok(ScanRecord::new(
        n,
        m,
        r,
        best.value,
        Mode::LocalSearch,
        to_graph6(&best.graph),
        examined,
    ))
}
