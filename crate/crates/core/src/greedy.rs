//! The greedy clique construction: repeatedly take a vertex of maximum degree
//! among the common neighbours of the vertices taken so far.
//!
//! A run starts from the whole vertex set and stops when the common
//! neighbourhood of the chosen vertices is empty, so every output is a maximal
//! clique listed in non-increasing degree order. Runs differ only in how ties
//! between vertices of equal degree are broken.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{low_bits, BitIter, Graph, VertexSet};
use crate::io::to_graph6;
use crate::turan::turan_size;

pub const DEFAULT_BRANCH_CAP: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TiePolicy {
    LowestIndex,
    AllBranches,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PSequence {
    pub vertices: Vec<usize>,
    /// `degree_sums[i]` is the degree sum of `vertices[..=i]`.
    pub degree_sums: Vec<usize>,
    pub tie_policy: TiePolicy,
}

impl PSequence {
    fn from_vertices(g: &Graph, vertices: Vec<usize>, tie_policy: TiePolicy) -> Self {
        let degree_sums = vertices
            .iter()
            .scan(0, |acc, &v| {
                *acc += g.degree(v);
                Some(*acc)
            })
            .collect();
        PSequence {
            vertices,
            degree_sums,
            tie_policy,
        }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Degree sum of the first `k` terms, if the sequence has that many.
    pub fn prefix_sum(&self, k: usize) -> Option<usize> {
        match k {
            0 => Some(0),
            k => self.degree_sums.get(k - 1).copied(),
        }
    }

    pub fn total(&self) -> usize {
        self.degree_sums.last().copied().unwrap_or(0)
    }

    /// Checks the defining properties against `g`: clique, maximal, greedy choice
    /// at every step and non-increasing degrees.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let n = g.order();
        if self.vertices.iter().any(|&v| v >= n) {
            return false;
        }
        let mut chosen = 0u64;
        let mut cand = low_bits(n);
        let mut prev_degree = usize::MAX;
        for (i, &v) in self.vertices.iter().enumerate() {
            if cand >> v & 1 == 0 {
                return false;
            }
            let best = BitIter(cand).map(|u| g.degree(u)).max().unwrap_or(0);
            if g.degree(v) != best || g.degree(v) > prev_degree {
                return false;
            }
            if self.prefix_sum(i + 1) != Some(self.prefix_sum(i).unwrap_or(0) + g.degree(v)) {
                return false;
            }
            prev_degree = g.degree(v);
            chosen |= 1u64 << v;
            cand &= g.adjacency_word(v);
        }
        let clique = g.is_clique(&VertexSet::from_bits_unchecked(chosen, n));
        clique && cand == 0 && self.degree_sums.len() == self.vertices.len()
    }
}

fn max_degree_among(g: &Graph, cand: u64) -> usize {
    BitIter(cand).map(|v| g.degree(v)).max().unwrap_or(0)
}

fn require_vertices(g: &Graph) -> Result<()> {
    if g.order() == 0 {
        return Err(Error::Argument("greedy clique needs at least one vertex".into()));
    }
    Ok(())
}

/// One run with ties broken towards the lowest vertex index.
pub fn p_sequence(g: &Graph) -> Result<PSequence> {
    require_vertices(g)?;
    let mut cand = g.vertices().bits();
    let mut vertices = Vec::new();
    while cand != 0 {
        let best = max_degree_among(g, cand);
        let v = BitIter(cand).find(|&v| g.degree(v) == best).expect("nonempty");
        vertices.push(v);
        cand &= g.adjacency_word(v);
    }
    Ok(PSequence::from_vertices(g, vertices, TiePolicy::LowestIndex))
}

/// Every sequence the greedy run can produce, branching on each degree tie.
/// Sequences come out in lexicographic order.
pub fn all_p_sequences(g: &Graph, branch_cap: usize) -> Result<Vec<PSequence>> {
    require_vertices(g)?;
    if branch_cap == 0 {
        return Err(Error::Argument("branch cap must be at least 1".into()));
    }
    let mut out = Vec::new();
    let mut path = Vec::new();
    branch(g, g.vertices().bits(), &mut path, &mut out, branch_cap)?;
    Ok(out)
}

fn branch(
    g: &Graph,
    cand: u64,
    path: &mut Vec<usize>,
    out: &mut Vec<PSequence>,
    cap: usize,
) -> Result<()> {
    if cand == 0 {
        if out.len() == cap {
            return Err(Error::BranchCap { cap });
        }
        out.push(PSequence::from_vertices(g, path.clone(), TiePolicy::AllBranches));
        return Ok(());
    }
    let best = max_degree_among(g, cand);
    for v in BitIter(cand).filter(|&v| g.degree(v) == best) {
        path.push(v);
        branch(g, cand & g.adjacency_word(v), path, out, cap)?;
        path.pop();
    }
    Ok(())
}

/// Vertex sets reachable as the first `depth` terms of some greedy run.
///
/// The candidate set after choosing a set `S` is the common neighbourhood of `S`,
/// which does not depend on the order in which `S` was chosen. Exploring sets
/// instead of sequences therefore covers every run's prefix while visiting each
/// reachable set once.
#[derive(Debug, Clone)]
pub struct PrefixSurvey {
    pub depth: usize,
    /// Reachable sets of size `depth`, keyed by bitmask, with one realizing order each.
    pub complete: BTreeMap<u64, Vec<usize>>,
    /// Runs that stopped before reaching `depth` terms.
    pub stalled: Vec<Vec<usize>>,
    pub states_visited: usize,
}

pub fn greedy_prefixes(g: &Graph, depth: usize, branch_cap: usize) -> Result<PrefixSurvey> {
    require_vertices(g)?;
    let mut layer: BTreeMap<u64, Vec<usize>> = BTreeMap::from([(0u64, Vec::new())]);
    let mut stalled = Vec::new();
    let mut visited = 1usize;
    for _ in 0..depth {
        let mut next = BTreeMap::new();
        for (set, order) in &layer {
            let cand = g.common_neighbors_bits(*set);
            if cand == 0 {
                stalled.push(order.clone());
                continue;
            }
            let best = max_degree_among(g, cand);
            for v in BitIter(cand).filter(|&v| g.degree(v) == best) {
                next.entry(set | 1u64 << v).or_insert_with(|| {
                    let mut o = order.clone();
                    o.push(v);
                    o
                });
            }
        }
        visited += next.len();
        if visited > branch_cap {
            return Err(Error::BranchCap { cap: branch_cap });
        }
        layer = next;
    }
    Ok(PrefixSurvey {
        depth,
        complete: layer,
        stalled,
        states_visited: visited,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationKind {
    /// A run stopped with fewer than `r` terms.
    ShortSequence,
    /// First-`r` degree sum below `(r-1)n`.
    BelowTuranBound,
    /// First-`r` degree sum equals `(r-1)n` although `m > t_r(n)`.
    EqualityAboveThreshold,
    /// No run exceeds (or, for regular graphs, reaches) `2rm/n`.
    AverageBound,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub sequence: Vec<usize>,
    pub first_r_sum: usize,
    pub graph6: String,
}

fn check_hypothesis(g: &Graph, r: usize) -> Result<u64> {
    let n = g.order();
    if r < 2 || n < r {
        return Err(Error::Precondition(format!("need n >= r >= 2, got n = {n}, r = {r}")));
    }
    let t = turan_size(r, n)?;
    let m = g.edge_count() as u64;
    if m < t {
        return Err(Error::Precondition(format!("m = {m} is below t_{r}({n}) = {t}")));
    }
    Ok(t)
}

fn set_degree_sum(g: &Graph, set: u64) -> usize {
    BitIter(set).map(|v| g.degree(v)).sum()
}

/// Outcome of checking, over every greedy run, that the run has at least `r`
/// terms, that its first `r` degrees sum to at least `(r-1)n`, and that equality
/// only occurs when `m = t_r(n)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TurextReport {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub r: usize,
    pub turan_size: u64,
    pub bound: usize,
    pub prefixes_examined: usize,
    pub min_first_r_sum: Option<usize>,
    pub equality_attained: bool,
    pub violations: Vec<Violation>,
}

impl TurextReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn check_turext(g: &Graph, r: usize, branch_cap: usize) -> Result<TurextReport> {
    let t = check_hypothesis(g, r)?;
    let survey = greedy_prefixes(g, r, branch_cap)?;
    turext_from_survey(g, r, t, &survey)
}

pub(crate) fn turext_from_survey(
    g: &Graph,
    r: usize,
    t: u64,
    survey: &PrefixSurvey,
) -> Result<TurextReport> {
    let n = g.order();
    let m = g.edge_count();
    let bound = (r - 1) * n;
    let g6 = to_graph6(g);
    let mut violations: Vec<Violation> = survey
        .stalled
        .iter()
        .map(|seq| Violation {
            kind: ViolationKind::ShortSequence,
            sequence: seq.clone(),
            first_r_sum: seq.iter().map(|&v| g.degree(v)).sum(),
            graph6: g6.clone(),
        })
        .collect();
    let mut min_sum = None::<usize>;
    let mut equality = false;
    for (&set, order) in &survey.complete {
        let s = set_degree_sum(g, set);
        min_sum = Some(min_sum.map_or(s, |x| x.min(s)));
        let kind = if s < bound {
            Some(ViolationKind::BelowTuranBound)
        } else if s == bound {
            equality = true;
            (m as u64 != t).then_some(ViolationKind::EqualityAboveThreshold)
        } else {
            None
        };
        if let Some(kind) = kind {
            violations.push(Violation {
                kind,
                sequence: order.clone(),
                first_r_sum: s,
                graph6: g6.clone(),
            });
        }
    }
    Ok(TurextReport {
        graph6: g6,
        n,
        m,
        r,
        turan_size: t,
        bound,
        prefixes_examined: survey.complete.len() + survey.stalled.len(),
        min_first_r_sum: min_sum,
        equality_attained: equality,
        violations,
    })
}

/// Outcome of comparing the best first-`r` degree sum over all greedy runs with
/// the average `2rm/n`: strictly above for non-regular graphs, at least equal
/// for regular ones.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdwextReport {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub r: usize,
    pub regular: bool,
    /// Largest first-`r` degree sum over all runs.
    pub best: Option<usize>,
    pub witness: Option<Vec<usize>>,
    /// `best·n` and `2rm`, compared as integers.
    pub best_times_n: usize,
    pub two_r_m: usize,
    /// Number of distinct first-`r` prefixes, and how many of them exceed `2rm/n` strictly.
    pub prefixes_examined: usize,
    pub prefixes_strict: usize,
    pub violations: Vec<Violation>,
}

impl EdwextReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn check_edwext(g: &Graph, r: usize, branch_cap: usize) -> Result<EdwextReport> {
    check_hypothesis(g, r)?;
    let survey = greedy_prefixes(g, r, branch_cap)?;
    Ok(edwext_from_survey(g, r, &survey))
}

pub(crate) fn edwext_from_survey(g: &Graph, r: usize, survey: &PrefixSurvey) -> EdwextReport {
    let n = g.order();
    let m = g.edge_count();
    let two_r_m = 2 * r * m;
    let regular = g.is_regular();
    let g6 = to_graph6(g);

    let mut best: Option<(usize, &Vec<usize>)> = None;
    let mut strict = 0;
    for (&set, order) in &survey.complete {
        let s = set_degree_sum(g, set);
        if s * n > two_r_m {
            strict += 1;
        }
        if best.is_none_or(|(b, _)| s > b) {
            best = Some((s, order));
        }
    }
    let best_times_n = best.map_or(0, |(b, _)| b * n);
    let holds = if regular {
        best.is_some() && best_times_n >= two_r_m
    } else {
        best.is_some() && best_times_n > two_r_m
    };
    let violations = if holds {
        Vec::new()
    } else {
        vec![Violation {
            kind: ViolationKind::AverageBound,
            sequence: best.map(|(_, o)| o.clone()).unwrap_or_default(),
            first_r_sum: best.map_or(0, |(b, _)| b),
            graph6: g6.clone(),
        }]
    };
    EdwextReport {
        graph6: g6,
        n,
        m,
        r,
        regular,
        best: best.map(|(b, _)| b),
        witness: best.map(|(_, o)| o.clone()),
        best_times_n,
        two_r_m,
        prefixes_examined: survey.complete.len(),
        prefixes_strict: strict,
        violations,
    }
}
