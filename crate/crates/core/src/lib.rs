//! Degree sums over cliques.
//!
//! For a graph `G` and `r ≥ 1`, `Δ_r(G)` is the largest sum of degrees over the
//! r-cliques of `G` (zero when there are none), and `Δ_r(n, m)` is its minimum
//! over all graphs with `n` vertices and `m` edges. This crate provides
//!
//! - small bitset graphs, Turán graphs and exact `t_r(n)` arithmetic ([`graph`], [`turan`]),
//! - graph6 and edge-list I/O ([`io`]),
//! - r-clique enumeration and `Δ_r(G)` ([`cliques`]),
//! - the greedy maximum-degree clique construction and per-graph checks of its
//!   degree-sum guarantees ([`greedy`]),
//! - exact and heuristic `Δ_r(n, m)` together with scan, stability and
//!   verification experiments ([`extremal`]).

pub mod cli;
pub mod cliques;
pub mod error;
pub mod extremal;
pub mod graph;
pub mod greedy;
pub mod io;
pub mod turan;

pub use cliques::{degree_sum, delta_r_exact, enumerate_r_cliques, DeltaResult};
pub use error::{Error, Result};
pub use graph::{bonferroni_lower_bound, Graph, VertexSet, MAX_VERTICES};
pub use greedy::{
    all_p_sequences, check_edwext, check_turext, p_sequence, EdwextReport, PSequence, TiePolicy,
    TurextReport, DEFAULT_BRANCH_CAP,
};
pub use io::{from_edge_list, from_graph6, read_graphs, to_edge_list, to_graph6};
pub use turan::{complete_multipartite, turan_graph, turan_size, TuranDecomposition};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
