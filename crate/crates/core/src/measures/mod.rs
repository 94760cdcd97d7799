//! Coherence, entanglement and correlation measures on reduced states.

mod coherence;
mod concurrence;
mod mutual;
mod report;
mod roof;
mod search;

pub use coherence::{foc_multipartite, foc_single, foc_tripartite, qc_l1};
pub use concurrence::{
    cf_pure, concurrence_one_vs_rest, gc_pure, heron_fill, squared_concurrences, TRIANGLE_TOLERANCE,
};
pub use mutual::mutual_information;
pub use report::{evaluate_point, evaluate_point_with, Measure, MeasureReport, MeasureSet, TRADEOFF_TOLERANCE};
pub use roof::{convex_roof, ensemble_objective, RoofConfig, RoofDiagnostics, RoofObjective, RoofOutcome};
pub use search::{pattern_search, SearchOutcome};
