use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::horizon::ScenarioId;
use crate::measures::{MeasureSet, RoofConfig};

/// A sweepable parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    Alpha,
    Omega,
    Th,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::Alpha, Axis::Omega, Axis::Th];

    /// Column and flag name.
    pub fn name(self) -> &'static str {
        match self {
            Axis::Alpha => "alpha",
            Axis::Omega => "omega",
            Axis::Th => "th",
        }
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Axis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "alpha" | "a" => Ok(Axis::Alpha),
            "omega" | "w" => Ok(Axis::Omega),
            "th" | "t" | "t_h" | "temperature" => Ok(Axis::Th),
            _ => Err(Error::Config(format!("unknown axis \"{s}\" (expected alpha, omega or th)"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Scale {
    #[default]
    Linear,
    Log,
}

/// `points` values from `start` to `stop` inclusive.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Grid {
    pub start: f64,
    pub stop: f64,
    pub points: usize,
    pub scale: Scale,
}

impl Grid {
    pub fn linear(start: f64, stop: f64, points: usize) -> Self {
        Self { start, stop, points, scale: Scale::Linear }
    }

    pub fn log(start: f64, stop: f64, points: usize) -> Self {
        Self { start, stop, points, scale: Scale::Log }
    }

    pub fn validate(&self) -> Result<()> {
        if self.points == 0 {
            return Err(Error::Config("grid needs at least one point".into()));
        }
        if !self.start.is_finite() || !self.stop.is_finite() {
            return Err(Error::Config("grid bounds must be finite".into()));
        }
        if self.scale == Scale::Log && !(self.start > 0.0 && self.stop > 0.0) {
            return Err(Error::Config(format!("log grid needs positive bounds, got [{}, {}]", self.start, self.stop)));
        }
        Ok(())
    }

    /// Grid values. The endpoints are reproduced exactly.
    pub fn values(&self) -> Vec<f64> {
        if self.points == 1 {
            return vec![self.start];
        }
        let last = (self.points - 1) as f64;
        (0..self.points)
            .map(|i| {
                if i == 0 {
                    return self.start;
                }
                if i == self.points - 1 {
                    return self.stop;
                }
                let t = i as f64 / last;
                match self.scale {
                    Scale::Linear => self.start + t * (self.stop - self.start),
                    Scale::Log => (self.start.ln() + t * (self.stop.ln() - self.start.ln())).exp(),
                }
            })
            .collect()
    }
}

/// `axis:start:stop:points[:log]`
impl FromStr for AxisSweep {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        if !(4..=5).contains(&parts.len()) {
            return Err(Error::Config(format!("malformed sweep \"{s}\" (expected axis:start:stop:points[:log])")));
        }
        let axis = parts[0].parse()?;
        let number = |p: &str| {
            p.trim().parse::<f64>().map_err(|_| Error::Config(format!("malformed number \"{p}\" in sweep \"{s}\"")))
        };
        let points = parts[3]
            .trim()
            .parse::<usize>()
            .map_err(|_| Error::Config(format!("malformed point count \"{}\" in sweep \"{s}\"", parts[3])))?;
        let scale = match parts.get(4).map(|p| p.trim().to_ascii_lowercase()) {
            None => Scale::Linear,
            Some(p) if p == "log" => Scale::Log,
            Some(p) if p == "lin" || p == "linear" => Scale::Linear,
            Some(p) => return Err(Error::Config(format!("unknown scale \"{p}\" in sweep \"{s}\""))),
        };
        let sweep = AxisSweep { axis, grid: Grid { start: number(parts[1])?, stop: number(parts[2])?, points, scale } };
        sweep.grid.validate()?;
        Ok(sweep)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AxisSweep {
    pub axis: Axis,
    pub grid: Grid,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            _ => Err(Error::Config(format!("unknown format \"{s}\" (expected csv or json)"))),
        }
    }
}

/// Where a table goes; no path means standard output.
#[derive(Clone, Debug, PartialEq, Default, Serialize, Deserialize)]
pub struct OutputSpec {
    pub path: Option<PathBuf>,
    pub format: OutputFormat,
}

/// A complete sweep: one or two swept axes, fixed values for the rest.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepSpec {
    pub scenario: ScenarioId,
    /// The first entry is the slow index of a 2-D sweep.
    pub sweeps: Vec<AxisSweep>,
    pub alpha: Option<f64>,
    pub omega: Option<f64>,
    pub t_hawking: Option<f64>,
    pub measures: MeasureSet,
    pub roof: RoofConfig,
    pub output: OutputSpec,
    /// Worker threads; `None` uses every available core.
    pub threads: Option<usize>,
    /// Display factor applied to the `gc` column on output.
    pub gc_scale: f64,
    /// Adds optimizer diagnostics and concurrences to the output.
    pub diagnostics: bool,
    /// Preset the spec was expanded from, if any.
    pub preset: Option<String>,
}

impl SweepSpec {
    /// A spec with nothing swept and nothing fixed.
    pub fn new(scenario: ScenarioId) -> Self {
        Self {
            scenario,
            sweeps: Vec::new(),
            alpha: None,
            omega: None,
            t_hawking: None,
            measures: MeasureSet::all(),
            roof: RoofConfig::default(),
            output: OutputSpec::default(),
            threads: None,
            gc_scale: 1.0,
            diagnostics: false,
            preset: None,
        }
    }

    pub fn fixed(&self, axis: Axis) -> Option<f64> {
        match axis {
            Axis::Alpha => self.alpha,
            Axis::Omega => self.omega,
            Axis::Th => self.t_hawking,
        }
    }

    pub fn set_fixed(&mut self, axis: Axis, value: Option<f64>) {
        match axis {
            Axis::Alpha => self.alpha = value,
            Axis::Omega => self.omega = value,
            Axis::Th => self.t_hawking = value,
        }
    }

    pub fn is_swept(&self, axis: Axis) -> bool {
        self.sweeps.iter().any(|s| s.axis == axis)
    }

    /// Number of grid points (rows).
    pub fn point_count(&self) -> usize {
        self.sweeps.iter().map(|s| s.grid.points).product()
    }

    pub fn validate(&self) -> Result<()> {
        if self.sweeps.is_empty() || self.sweeps.len() > 2 {
            return Err(Error::Config(format!("sweep one or two axes, not {}", self.sweeps.len())));
        }
        if self.sweeps.len() == 2 && self.sweeps[0].axis == self.sweeps[1].axis {
            return Err(Error::Config(format!("axis {} swept twice", self.sweeps[0].axis)));
        }
        for s in &self.sweeps {
            s.grid.validate()?;
            for v in [s.grid.start, s.grid.stop] {
                check_axis_value(s.axis, v)?;
            }
        }
        for axis in Axis::ALL {
            match (self.is_swept(axis), self.fixed(axis)) {
                (true, Some(_)) => return Err(Error::Config(format!("axis {axis} is both swept and fixed"))),
                (false, None) => return Err(Error::Config(format!("axis {axis} is neither swept nor fixed"))),
                (false, Some(v)) => check_axis_value(axis, v)?,
                (true, None) => {}
            }
        }
        if self.measures.is_empty() {
            return Err(Error::Config("no measures requested".into()));
        }
        if self.threads == Some(0) {
            return Err(Error::Config("thread count must be positive".into()));
        }
        if !(self.gc_scale.is_finite() && self.gc_scale > 0.0) {
            return Err(Error::Config(format!("gc scale must be positive, got {}", self.gc_scale)));
        }
        self.roof.validate()
    }
}

fn check_axis_value(axis: Axis, v: f64) -> Result<()> {
    let ok = match axis {
        Axis::Alpha => (0.0..=1.0).contains(&v),
        Axis::Omega | Axis::Th => v.is_finite() && v > 0.0,
    };
    if ok {
        Ok(())
    } else {
        let range = if axis == Axis::Alpha { "[0, 1]" } else { "(0, ∞)" };
        Err(Error::Config(format!("{axis} = {v} outside {range}")))
    }
}
