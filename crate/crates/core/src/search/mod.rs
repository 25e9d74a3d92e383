//! Exhaustive and heuristic searches over small graphs, and the named
//! verifiers built on them.

mod enumerate;
mod ingest;
mod predicate;
mod spex;
mod turan;
mod verify;

pub use enumerate::{
    count, enumerate, for_each_graph, par_filter_map, par_fold, CONNECTED_COUNTS, GRAPH_COUNTS,
};
pub use ingest::{ingest, Diagnostic, Ingested};
pub use predicate::Predicate;
pub use spex::{spex, SearchMode, SearchResult, SpexParams, DEFAULT_BUDGET, DEFAULT_RESTARTS};
pub use turan::{turan_number, TuranResult};
pub use verify::{
    internal_path_edges, verify, verify_with_population, Status, TheoremId, TheoremSpec,
    VerificationEntry, VerificationReport,
};

/// Largest order handled by the built-in generator.
pub const MAX_ENUM_ORDER: usize = 10;
