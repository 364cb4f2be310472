//! `Δ_r(n, m)`: exact minima by enumeration, upper bounds by local search, and
//! the scan, stability and verification experiments built on them.

pub mod canonical;
pub mod enumerate;
pub mod exact;
pub mod near_regular;
pub mod record;
pub mod scan;
pub mod search;
pub mod stability;
pub mod verify;

pub use canonical::{canonical_form, canonical_key, isomorphism_classes};
pub use enumerate::enumerate_graphs;
pub use exact::{delta_r_min_exact, ExactOptions};
pub use near_regular::near_regular_graph;
pub use record::{Fraction, Mode, ScanRecord};
pub use scan::{scan_m, Regime, ScanRow};
pub use search::{delta_r_min_local_search, SearchOptions};
pub use stability::{stability_experiment, StabilityParams, StabilityReport};
pub use verify::{sample_theorems, verify_all, TheoremTally, VerifyOptions, VerifyReport};

use crate::error::Result;

/// Mode selection plus the options of both computation routes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunOptions {
    pub mode: Mode,
    pub exact: ExactOptions,
    pub search: SearchOptions,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            mode: Mode::Exhaustive,
            exact: ExactOptions::default(),
            search: SearchOptions::default(),
        }
    }
}

pub fn delta_r_min(n: usize, m: usize, r: usize, opts: &RunOptions) -> Result<ScanRecord> {
    match opts.mode {
        Mode::LocalSearch => delta_r_min_local_search(n, m, r, &opts.search),
        mode => delta_r_min_exact(n, m, r, mode, &opts.exact),
    }
}
