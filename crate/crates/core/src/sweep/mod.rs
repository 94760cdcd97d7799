//! Parameter sweeps over `(α, ω, T_H)`, figure presets, and table output.

mod emit;
mod preset;
mod run;
mod spec;

pub use emit::{column_names, data_section, emit, format_number, render, SIGNIFICANT_DIGITS};
pub use preset::FigurePreset;
pub use run::{grid_points, run_sweep, SweepRow, SweepTable};
pub use spec::{Axis, AxisSweep, Grid, OutputFormat, OutputSpec, Scale, SweepSpec};
