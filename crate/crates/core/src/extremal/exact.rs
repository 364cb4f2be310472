//! Exact `Δ_r(n, m)` by exhaustive enumeration.

use rayon::prelude::*;

use super::canonical::{canonical_key, isomorphism_classes, MAX_CANONICAL_ORDER};
use super::enumerate::{binomial, check_edge_count, shard_ranges, EdgeSubsets, SlotTable};
use super::record::{Mode, ScanRecord};
use crate::cliques::delta_r_exact;
use crate::error::{Error, Result};
use crate::io::to_graph6;

pub const MAX_EXHAUSTIVE_ORDER: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactOptions {
    /// Number of contiguous shards of the enumeration order, processed in parallel.
    pub workers: usize,
    /// Refuse runs that would examine more graphs than this.
    pub max_graphs: Option<u64>,
}

impl Default for ExactOptions {
    fn default() -> Self {
        ExactOptions {
            workers: 1,
            max_graphs: None,
        }
    }
}

/// Running minimum of `(Δ_r, string key)` over part of the search space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Minimum {
    pub value: usize,
    pub key: u64,
}

pub(crate) fn merge_min(a: Option<Minimum>, b: Option<Minimum>) -> Option<Minimum> {
    match (a, b) {
        (Some(x), Some(y)) => Some(if (y.value, y.key) < (x.value, x.key) { y } else { x }),
        (x, None) => x,
        (None, y) => y,
    }
}

pub(crate) fn validate(n: usize, m: usize, r: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Argument("n must be at least 1".into()));
    }
    if r == 0 {
        return Err(Error::Argument("r must be at least 1".into()));
    }
    check_edge_count(n, m)
}

pub(crate) fn check_budget(count: u64, opts: &ExactOptions) -> Result<()> {
    if let Some(cap) = opts.max_graphs {
        if count > cap {
            return Err(Error::Resource(format!(
                "run would examine {count} graphs, more than --max-graphs {cap}"
            )));
        }
    }
    Ok(())
}

/// Minimum of `Δ_r` over every graph with `n` vertices and `m` edges.
///
/// `Exhaustive` walks all labeled graphs (`n ≤ 7`); `Canonical` walks one
/// graph per isomorphism class (`n ≤ 8`). Either way the witness is the
/// minimizer with the least canonical form.
pub fn delta_r_min_exact(n: usize, m: usize, r: usize, mode: Mode, opts: &ExactOptions) -> Result<ScanRecord> {
    validate(n, m, r)?;
    match mode {
        Mode::Exhaustive => labeled_min(n, m, r, opts),
        Mode::Canonical => class_min(n, m, r, opts),
        Mode::LocalSearch => Err(Error::Argument(
            "local search gives upper bounds; use delta_r_min_local_search".into(),
        )),
    }
}

fn labeled_min(n: usize, m: usize, r: usize, opts: &ExactOptions) -> Result<ScanRecord> {
    if n > MAX_EXHAUSTIVE_ORDER {
        return Err(Error::Resource(format!(
            "exhaustive labeled mode is limited to n <= {MAX_EXHAUSTIVE_ORDER}; \
             use canonical (n <= {MAX_CANONICAL_ORDER}) or local-search mode"
        )));
    }
    let table = SlotTable::new(n);
    let total = binomial(table.slots() as u64, m as u64);
    check_budget(total, opts)?;
    let best = shard_ranges(total, opts.workers)
        .into_par_iter()
        .map(|(start, count)| {
            let mut best = None;
            for mask in EdgeSubsets::range(table.slots(), m, start, count) {
                let value = delta_r_exact(&table.graph(mask), r).expect("r >= 1").value;
                best = merge_min(best, Some(Minimum { value, key: table.string_key(mask) }));
            }
            best
        })
        .reduce(|| None, merge_min)
        .expect("at least one graph");
    // The minimizers are closed under relabelling, so the least labeled string
    // among them is itself a canonical form.
    let witness = table.graph(table.mask_from_key(best.key));
    debug_assert!(n > MAX_CANONICAL_ORDER || canonical_key(&witness) == Ok(best.key));
    Ok(ScanRecord::new(n, m, r, best.value, Mode::Exhaustive, to_graph6(&witness), total))
}

fn class_min(n: usize, m: usize, r: usize, opts: &ExactOptions) -> Result<ScanRecord> {
    let classes = isomorphism_classes(n, m)?;
    check_budget(classes.len() as u64, opts)?;
    let table = SlotTable::new(n);
    let best = shard_ranges(classes.len() as u64, opts.workers)
        .into_par_iter()
        .map(|(start, count)| {
            classes[start as usize..(start + count) as usize]
                .iter()
                .fold(None, |best, &key| {
                    let g = table.graph(table.mask_from_key(key));
                    let value = delta_r_exact(&g, r).expect("r >= 1").value;
                    merge_min(best, Some(Minimum { value, key }))
                })
        })
        .reduce(|| None, merge_min)
        .expect("at least one class");
    let witness = table.graph(table.mask_from_key(best.key));
    Ok(ScanRecord::new(
        n,
        m,
        r,
        best.value,
        Mode::Canonical,
        to_graph6(&witness),
        classes.len() as u64,
    ))
}
