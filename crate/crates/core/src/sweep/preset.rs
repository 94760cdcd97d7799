use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt;
use std::str::FromStr;

use super::spec::{Axis, AxisSweep, Grid, SweepSpec};
use crate::error::{Error, Result};
use crate::horizon::ScenarioId;
use crate::measures::{Measure, MeasureSet};

/// Temperatures of the four α-sweep panels.
const PANEL_TEMPERATURES: [f64; 4] = [0.01, 1.0, 10.0, 100.0];

/// A figure panel of the published analysis, e.g. `fig6b`.
///
/// Figures come in groups of three per scenario (ABC, Abc, AbB, ABc from
/// figure 2 on): α sweeps at four temperatures, a temperature and a
/// frequency sweep, and the mutual information of the scenario's pairs
/// along the same four cuts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FigurePreset {
    figure: u8,
    panel: char,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    AlphaPanels,
    TemperatureAndFrequency,
    MutualInformation,
}

impl FigurePreset {
    pub fn all() -> Vec<FigurePreset> {
        (2..=13)
            .flat_map(|figure| {
                let panels: &[char] = match kind(figure) {
                    Kind::TemperatureAndFrequency => &['a', 'b'],
                    _ => &['a', 'b', 'c', 'd'],
                };
                panels.iter().map(move |&panel| FigurePreset { figure, panel })
            })
            .collect()
    }

    pub fn name(&self) -> String {
        format!("fig{}{}", self.figure, self.panel)
    }

    pub fn scenario(&self) -> ScenarioId {
        match (self.figure - 2) / 3 {
            0 => ScenarioId::ABC,
            1 => ScenarioId::Abc,
            2 => ScenarioId::AbB,
            _ => ScenarioId::ABc,
        }
    }

    /// Whether the panel plots mutual information rather than coherence and
    /// entanglement.
    pub fn is_mutual_information(&self) -> bool {
        kind(self.figure) == Kind::MutualInformation
    }

    pub fn spec(&self) -> SweepSpec {
        let mut spec = SweepSpec::new(self.scenario());
        spec.preset = Some(self.name());
        let alpha_sweep = |spec: &mut SweepSpec, t: f64| {
            spec.sweeps.push(AxisSweep { axis: Axis::Alpha, grid: Grid::linear(0.0, 1.0, 201) });
            spec.omega = Some(1.0);
            spec.t_hawking = Some(t);
        };
        let t_sweep = |spec: &mut SweepSpec| {
            spec.sweeps.push(AxisSweep { axis: Axis::Th, grid: Grid::log(0.01, 100.0, 200) });
            spec.alpha = Some(FRAC_1_SQRT_2);
            spec.omega = Some(1.0);
        };
        let omega_sweep = |spec: &mut SweepSpec| {
            spec.sweeps.push(AxisSweep { axis: Axis::Omega, grid: Grid::log(0.1, 10.0, 200) });
            spec.alpha = Some(FRAC_1_SQRT_2);
            spec.t_hawking = Some(0.1);
        };

        match (kind(self.figure), self.panel) {
            (Kind::AlphaPanels, p) => alpha_sweep(&mut spec, PANEL_TEMPERATURES[panel_index(p)]),
            (Kind::TemperatureAndFrequency, 'a') => t_sweep(&mut spec),
            (Kind::TemperatureAndFrequency, _) => omega_sweep(&mut spec),
            (Kind::MutualInformation, 'a') => alpha_sweep(&mut spec, 0.01),
            (Kind::MutualInformation, 'b') => alpha_sweep(&mut spec, 10.0),
            (Kind::MutualInformation, 'c') => t_sweep(&mut spec),
            (Kind::MutualInformation, _) => omega_sweep(&mut spec),
        }
        spec.measures = if self.is_mutual_information() {
            MeasureSet::from_iter([Measure::Mi])
        } else {
            MeasureSet::from_iter([Measure::Qc, Measure::Foc, Measure::Gc, Measure::Cf, Measure::Tradeoff])
        };
        spec
    }
}

fn kind(figure: u8) -> Kind {
    match (figure - 2) % 3 {
        0 => Kind::AlphaPanels,
        1 => Kind::TemperatureAndFrequency,
        _ => Kind::MutualInformation,
    }
}

fn panel_index(p: char) -> usize {
    (p as u8 - b'a') as usize
}

impl FromStr for FigurePreset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        FigurePreset::all()
            .into_iter()
            .find(|p| p.name() == lower)
            .ok_or_else(|| Error::Config(format!("unknown preset \"{s}\" (fig2a … fig13d)")))
    }
}

impl fmt::Display for FigurePreset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}
