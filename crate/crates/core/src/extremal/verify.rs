//! Exhaustive and sampled verification of the greedy-clique degree bounds and of
//! the band `2rm/n ≤ Δ_r(n, m) < 2rm/n + r` for `m ≥ t_r(n)`.

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::enumerate::{binomial, shard_ranges, slot_count, EdgeSubsets, SlotTable};
use super::exact::{check_budget, merge_min, ExactOptions, Minimum, MAX_EXHAUSTIVE_ORDER};
use super::near_regular::near_regular_graph;
use crate::cliques::delta_r_exact;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::greedy::{edwext_from_survey, greedy_prefixes, turext_from_survey, DEFAULT_BRANCH_CAP};
use crate::io::to_graph6;
use crate::turan::turan_size;

/// Counterexamples kept verbatim per tally; the rest are only counted.
const KEEP_COUNTEREXAMPLES: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub check: String,
    pub n: usize,
    pub m: usize,
    pub r: usize,
    pub graph6: String,
    pub detail: String,
}

/// Aggregate of per-graph theorem checks.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct TheoremTally {
    pub graphs: u64,
    /// Distinct first-r greedy prefixes over all graphs.
    pub prefixes: u64,
    /// Graphs where some prefix sums to exactly `(r-1)n`.
    pub equality_graphs: u64,
    pub regular_graphs: u64,
    /// Prefixes whose degree sum exceeds `2rm/n` strictly.
    pub strict_prefixes: u64,
    /// Non-regular graphs on which every prefix is strictly above `2rm/n`.
    pub nonregular_all_prefixes_strict: u64,
    /// Graphs skipped because the greedy branching exceeded the cap.
    pub cap_skips: u64,
    pub violations: u64,
    pub counterexamples: Vec<Counterexample>,
}

impl TheoremTally {
    fn record(&mut self, c: Counterexample) {
        self.violations += 1;
        if self.counterexamples.len() < KEEP_COUNTEREXAMPLES {
            self.counterexamples.push(c);
        }
    }

    fn absorb(mut self, other: TheoremTally) -> TheoremTally {
        self.graphs += other.graphs;
        self.prefixes += other.prefixes;
        self.equality_graphs += other.equality_graphs;
        self.regular_graphs += other.regular_graphs;
        self.strict_prefixes += other.strict_prefixes;
        self.nonregular_all_prefixes_strict += other.nonregular_all_prefixes_strict;
        self.cap_skips += other.cap_skips;
        self.violations += other.violations;
        for c in other.counterexamples {
            if self.counterexamples.len() < KEEP_COUNTEREXAMPLES {
                self.counterexamples.push(c);
            }
        }
        self
    }

    /// Checks one graph with `m ≥ t_r(n)`.
    fn check(&mut self, g: &Graph, r: usize, t: u64, branch_cap: usize) {
        self.graphs += 1;
        let survey = match greedy_prefixes(g, r, branch_cap) {
            Ok(s) => s,
            Err(Error::BranchCap { .. }) => {
                self.cap_skips += 1;
                return;
            }
            Err(e) => unreachable!("graph has vertices: {e}"),
        };
        let turext = turext_from_survey(g, r, t, &survey).expect("hypothesis checked by caller");
        let edwext = edwext_from_survey(g, r, &survey);
        self.prefixes += edwext.prefixes_examined as u64;
        self.strict_prefixes += edwext.prefixes_strict as u64;
        self.equality_graphs += u64::from(turext.equality_attained);
        self.regular_graphs += u64::from(edwext.regular);
        if !edwext.regular && edwext.prefixes_strict == edwext.prefixes_examined {
            self.nonregular_all_prefixes_strict += 1;
        }
        let (n, m) = (g.order(), g.edge_count());
        for v in turext.violations.iter().chain(&edwext.violations) {
            self.record(Counterexample {
                check: format!("{:?}", v.kind),
                n,
                m,
                r,
                graph6: v.graph6.clone(),
                detail: format!("sequence {:?} with first-r degree sum {}", v.sequence, v.first_r_sum),
            });
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub branch_cap: usize,
    pub exact: ExactOptions,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            branch_cap: DEFAULT_BRANCH_CAP,
            exact: ExactOptions::default(),
        }
    }
}

/// Exact minimum at one `(n, m, r)` compared with the band, plus the near-regular witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BandRow {
    pub n: usize,
    pub m: usize,
    pub r: usize,
    pub delta_min: usize,
    pub witness: String,
    pub lower_holds: bool,
    pub upper_holds: bool,
    pub near_regular_delta: usize,
    pub near_regular_below_upper: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairSummary {
    pub n: usize,
    pub r: usize,
    pub turan_size: u64,
    #[serde(flatten)]
    pub tally: TheoremTally,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SkippedPair {
    pub n: usize,
    pub r: usize,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub n_max: usize,
    pub r_set: Vec<usize>,
    pub pairs: Vec<PairSummary>,
    pub bands: Vec<BandRow>,
    pub skipped: Vec<SkippedPair>,
    pub graphs_examined: u64,
    pub violations: u64,
    pub counterexamples: Vec<Counterexample>,
}

/// Every labeled graph with `n` vertices and `m ≥ t_r(n)` edges: both greedy
/// checks, plus the exact minimum for the band.
fn verify_edge_count(
    table: &SlotTable,
    m: usize,
    r: usize,
    t: u64,
    opts: &VerifyOptions,
) -> (TheoremTally, Minimum) {
    let total = binomial(table.slots() as u64, m as u64);
    let (tally, best) = shard_ranges(total, opts.exact.workers)
        .into_par_iter()
        .map(|(start, count)| {
            let mut tally = TheoremTally::default();
            let mut best = None;
            for mask in EdgeSubsets::range(table.slots(), m, start, count) {
                let g = table.graph(mask);
                tally.check(&g, r, t, opts.branch_cap);
                let value = delta_r_exact(&g, r).expect("r >= 2").value;
                best = merge_min(best, Some(Minimum { value, key: table.string_key(mask) }));
            }
            (tally, best)
        })
        .reduce(
            || (TheoremTally::default(), None),
            |(ta, ba), (tb, bb)| (ta.absorb(tb), merge_min(ba, bb)),
        );
    (tally, best.expect("at least one graph"))
}

pub fn verify_all(n_max: usize, r_set: &[usize], opts: &VerifyOptions) -> Result<VerifyReport> {
    if n_max > MAX_EXHAUSTIVE_ORDER {
        return Err(Error::Resource(format!(
            "verification enumerates labeled graphs and is limited to n <= {MAX_EXHAUSTIVE_ORDER}"
        )));
    }
    if let Some(&bad) = r_set.iter().find(|&&r| r < 2) {
        return Err(Error::Argument(format!("clique size r = {bad} is below 2")));
    }
    let mut r_sorted = r_set.to_vec();
    r_sorted.sort_unstable();
    r_sorted.dedup();

    let mut planned = 0u64;
    for n in 2..=n_max {
        for &r in r_sorted.iter().filter(|&&r| r <= n) {
            let t = turan_size(r, n)? as usize;
            planned += (t..=slot_count(n))
                .map(|m| binomial(slot_count(n) as u64, m as u64))
                .sum::<u64>();
        }
    }
    check_budget(planned, &opts.exact)?;

    let mut report = VerifyReport {
        n_max,
        r_set: r_sorted.clone(),
        pairs: Vec::new(),
        bands: Vec::new(),
        skipped: Vec::new(),
        graphs_examined: 0,
        violations: 0,
        counterexamples: Vec::new(),
    };
    for n in 2..=n_max {
        let table = SlotTable::new(n);
        for &r in &r_sorted {
            if r > n {
                report.skipped.push(SkippedPair {
                    n,
                    r,
                    reason: format!("r = {r} exceeds n = {n}"),
                });
                continue;
            }
            let t = turan_size(r, n)?;
            let mut pair = TheoremTally::default();
            for m in t as usize..=table.slots() {
                let (tally, best) = verify_edge_count(&table, m, r, t, opts);
                pair = pair.absorb(tally);
                let witness = table.graph(table.mask_from_key(best.key));
                let near = near_regular_graph(n, m)?;
                let near_delta = delta_r_exact(&near, r)?.value;
                let row = BandRow {
                    n,
                    m,
                    r,
                    delta_min: best.value,
                    witness: to_graph6(&witness),
                    lower_holds: best.value * n >= 2 * r * m,
                    upper_holds: best.value * n < 2 * r * m + r * n,
                    near_regular_delta: near_delta,
                    near_regular_below_upper: near_delta * n < 2 * r * m + r * n,
                };
                for (ok, check) in [
                    (row.lower_holds, "band-lower"),
                    (row.upper_holds, "band-upper"),
                    (row.near_regular_below_upper, "near-regular-upper"),
                ] {
                    if !ok {
                        pair.record(Counterexample {
                            check: check.into(),
                            n,
                            m,
                            r,
                            graph6: if check == "near-regular-upper" { to_graph6(&near) } else { row.witness.clone() },
                            detail: format!("delta_min = {}, near-regular delta = {}", row.delta_min, near_delta),
                        });
                    }
                }
                report.bands.push(row);
            }
            report.graphs_examined += pair.graphs;
            report.violations += pair.violations;
            for c in &pair.counterexamples {
                if report.counterexamples.len() < KEEP_COUNTEREXAMPLES {
                    report.counterexamples.push(c.clone());
                }
            }
            report.pairs.push(PairSummary {
                n,
                r,
                turan_size: t,
                tally: pair,
            });
        }
    }
    Ok(report)
}

/// Greedy checks on `samples` uniformly random labeled graphs with `n` vertices
/// and `m` edges. Sampling is split into fixed chunks with their own ChaCha
/// streams, so the result does not depend on the thread count.
pub fn sample_theorems(
    n: usize,
    m: usize,
    r: usize,
    samples: u64,
    seed: u64,
    branch_cap: usize,
) -> Result<TheoremTally> {
    const CHUNK: u64 = 4096;
    if r < 2 || n < r {
        return Err(Error::Precondition(format!("need n >= r >= 2, got n = {n}, r = {r}")));
    }
    let t = turan_size(r, n)?;
    if (m as u64) < t || m > slot_count(n) {
        return Err(Error::Precondition(format!(
            "m = {m} outside [t_{r}({n}) = {t}, {}]",
            slot_count(n)
        )));
    }
    let table = SlotTable::new(n);
    if table.slots() > 64 {
        return Err(Error::Resource("sampling supports n <= 11".into()));
    }
    let chunks = samples.div_ceil(CHUNK);
    let tally = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(c);
            let count = CHUNK.min(samples - c * CHUNK);
            let mut tally = TheoremTally::default();
            for _ in 0..count {
                let mask = sample(&mut rng, table.slots(), m)
                    .into_iter()
                    .fold(0u64, |acc, k| acc | 1u64 << k);
                tally.check(&table.graph(mask), r, t, branch_cap);
            }
            tally
        })
        .reduce(TheoremTally::default, TheoremTally::absorb);
    Ok(tally)
}
