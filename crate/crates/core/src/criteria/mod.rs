//! Controllability criteria: fast sufficient tests, the Lie-rank decision,
//! and supporting diagnostics.

pub mod analyze;
pub mod chain;
pub mod commutant;
pub mod dark;
pub mod graph;
pub mod regularity;

pub use analyze::{analyze, class_verdicts, ChainAnalysis, ControllabilityReport, Evidence, Verdict};
pub use chain::{chain_criterion, extract_chain, ChainCriterionOutcome, ChainSpec, ChainVerdict};
pub use commutant::commutant_dimension;
pub use dark::detect_dark_states;
pub use graph::{build_transition_graph, graph_criterion, GraphAnalysis, GraphVerdict, TransitionGraph};
pub use regularity::{check_regularity, RegularityReport};
