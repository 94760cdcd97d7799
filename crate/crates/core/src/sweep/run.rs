use std::time::{Duration, Instant};

use rayon::prelude::*;

use super::spec::{Axis, SweepSpec};
use crate::error::{Error, Result};
use crate::horizon::derive_coefficients;
use crate::measures::{evaluate_point_with, MeasureReport};

/// One evaluated grid point.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepRow {
    /// Values of the swept axes, in the spec's sweep order.
    pub coords: Vec<f64>,
    pub report: MeasureReport,
}

/// Rows in grid order (first swept axis slowest).
#[derive(Clone, Debug)]
pub struct SweepTable {
    pub spec: SweepSpec,
    pub rows: Vec<SweepRow>,
    pub wall_time: Duration,
}

/// Parameter points of `spec` in row order, as `(α, ω, T_H, coords)`.
pub fn grid_points(spec: &SweepSpec) -> Vec<([f64; 3], Vec<f64>)> {
    let axes: Vec<Vec<f64>> = spec.sweeps.iter().map(|s| s.grid.values()).collect();
    let mut points = vec![Vec::new()];
    for values in &axes {
        points = points
            .into_iter()
            .flat_map(|prefix| {
                values.iter().map(move |&v| {
                    let mut p = prefix.clone();
                    p.push(v);
                    p
                })
            })
            .collect();
    }
    points
        .into_iter()
        .map(|coords| {
            let value = |axis: Axis| {
                spec.sweeps
                    .iter()
                    .position(|s| s.axis == axis)
                    .map(|i| coords[i])
                    .or(spec.fixed(axis))
                    .expect("validated spec fixes every unswept axis")
            };
            ([value(Axis::Alpha), value(Axis::Omega), value(Axis::Th)], coords)
        })
        .collect()
}

/// Evaluates every grid point on a pool of `spec.threads` workers. The
/// result does not depend on the thread count.
pub fn run_sweep(spec: &SweepSpec) -> Result<SweepTable> {
    spec.validate()?;
    let started = Instant::now();
    let points = grid_points(spec);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(spec.threads.unwrap_or(0))
        .build()
        .map_err(|e| Error::Config(format!("cannot start worker pool: {e}")))?;
    log::info!("{} points, scenario {}", points.len(), spec.scenario.label());

    let rows = pool.install(|| {
        points
            .into_par_iter()
            .map(|([alpha, omega, th], coords)| {
                let p = derive_coefficients(alpha, omega, th)?;
                let report = evaluate_point_with(&p, &spec.scenario, &spec.roof, spec.measures)?;
                log::debug!("α={alpha} ω={omega} T_H={th} done");
                Ok(SweepRow { coords, report })
            })
            .collect::<Result<Vec<_>>>()
    })?;

    Ok(SweepTable { spec: spec.clone(), rows, wall_time: started.elapsed() })
}
