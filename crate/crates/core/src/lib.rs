//! States and quantum resources of a Dirac field shared across a
//! Schwarzschild event horizon.
//!
//! A GHZ-type state of three observers (Alice, Bob, Charlie) is rewritten in
//! the Kruskal basis for Bob's and Charlie's modes, giving a five-qubit pure
//! state over `(A, b, B, c, C)` where `b` and `c` are the partner modes
//! inside the horizon. From it the crate builds reduced states for any
//! subset of observers and evaluates
//!
//! * l1-norm coherence and first-order coherence,
//! * one-vs-rest concurrences, global concurrence and concurrence fill
//!   (closed form for pure states, numerical convex roof for mixed ones),
//! * quantum mutual information in bits,
//!
//! plus parameter sweeps over figure presets.
//!
//! Basis convention everywhere: site 0 is the most significant tensor
//! factor, so `|0_A 1_b 1_B 1_c 1_C⟩` is index `0b01111`.

// `!(x > 0.0)` style guards deliberately reject NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod horizon;
pub mod linalg;
pub mod measures;
pub mod sweep;

pub use error::{Error, Result};
pub use horizon::{HorizonParams, ScenarioId, Site, SubsetSelector};
pub use linalg::{ComplexMatrix, Ket, Spectrum, Tolerances};
pub use measures::{MeasureReport, RoofConfig};
