//! The physical model: Kruskal-mode coefficients, the five-qubit state over
//! `(A, b, B, c, C)` and its reductions.

mod appendix;
mod params;
mod sites;
mod state;

pub use appendix::{appendix_oracle, APPENDIX_SUBSETS};
pub use params::{derive_coefficients, temperature_from_mass, HorizonParams};
pub use sites::{ScenarioId, Site, SubsetSelector};
pub use state::{build_pentapartite_state, reduce, reduce_to_scenario, SITE_DIMS};
