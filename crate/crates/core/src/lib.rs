//! Combinatorics-on-words machinery around Shirshov's height theorem:
//! n-divisibility deciders, selective heights, Dilworth colorings of
//! representative sets, the counting graphs behind the period-2, period-3 and
//! period-(n-1) bounds, the extremal lower-bound construction, class
//! encodings, Rauzy graphs and exact evaluation of the closed-form bounds.

pub mod bounds;
pub mod dilworth;
pub mod divisibility;
pub mod encoding;
pub mod error;
pub mod extremal;
mod lcp;
pub mod oracle;
pub mod power;
pub mod proof_graph;
pub mod rauzy;
pub mod verify;
pub mod word;

pub use bounds::{bound_table, BoundReport, Rounding};
pub use dilworth::{
    color_representatives, max_antichain, min_chain_cover, AntichainTooLarge, ChainColoring, OccurrencePoset,
    PosetElement, RepresentativeColoring,
};
pub use divisibility::{is_n_divisible, is_strongly_n_divisible, max_divisibility, Division, StrongDivision};
pub use encoding::{
    beth_empirical, is_n_good, pad_encode, pair_decode, pair_encode, BethEstimate, CycleClassFamily,
    Goodness, Pairing,
};
pub use error::{Error, Result};
pub use extremal::{certify_extremal, generate_extremal, BigStepPlan, ExtremalCertificate};
pub use power::{
    forcing_check, large_selective_height, scan_powers, shirshov_decompose, small_selective_height,
    PowerOccurrence, RepresentativeSet, Segment, SelectiveHeight, ShirshovDecomposition,
};
pub use proof_graph::{
    audit_cycle_graph, audit_gamma, build_cycle_graph, build_gamma, build_triangle_graph,
    check_triangle_lemma, pi_potential, reduce_multiedges, CycleAudit, GammaAudit, GraphKind, ProofGraph,
    WeightedEdge,
};
pub use rauzy::{build_rauzy, trajectory_cycle_stats, CycleStats, RauzyGraph};
pub use word::{Alphabet, CompareResult, Letter, Word, WordFormat};
