use std::collections::HashSet;
use std::fmt;
use std::path::PathBuf;

use clap::{Arg, ArgAction, ArgMatches, Command};
use horizon_core::measures::{MeasureSet, RoofConfig};
use horizon_core::sweep::{Axis, AxisSweep, FigurePreset, OutputFormat, SweepSpec};
use horizon_core::ScenarioId;

/// A rejected command line. `help` marks `--help`/`--version` output, which
/// is not an error.
#[derive(Debug, Clone, PartialEq)]
pub struct UsageError {
    pub message: String,
    pub help: bool,
}

impl UsageError {
    fn new(message: impl Into<String>) -> Self {
        Self { message: message.into(), help: false }
    }
}

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for UsageError {}

impl From<horizon_core::Error> for UsageError {
    fn from(e: horizon_core::Error) -> Self {
        UsageError::new(e.to_string())
    }
}

pub fn command() -> Command {
    let value = |name: &'static str, help: &'static str| Arg::new(name).long(name).action(ArgAction::Append).help(help);
    Command::new("horizon")
        .version(env!("CARGO_PKG_VERSION"))
        .about("Sweeps coherence, entanglement and mutual information of Dirac modes near a Schwarzschild horizon")
        .after_help(
            "Overrides apply left to right after the preset is expanded. Explicit --sweep flags replace the \
             preset's sweeps.\nExit codes: 0 ok, 2 usage, 3 numerical contract violation, 4 I/O.",
        )
        .arg(Arg::new("preset").long("preset").value_name("FIG").help("figure panel, fig2a … fig13d"))
        .arg(value("scenario", "observer subset: ABC, Abc, AbB, ABc or any 1–4 of A,b,B,c,C").value_name("SITES"))
        .arg(value("sweep", "axis:start:stop:points[:log], axis ∈ {alpha, omega, th}; at most two").value_name("SPEC"))
        .arg(value("alpha", "fixed α").value_name("X"))
        .arg(value("omega", "fixed mode frequency ω").value_name("X"))
        .arg(value("th", "fixed Hawking temperature T_H").value_name("X"))
        .arg(value("measures", "comma list of qc, foc, gc, cf, tradeoff, mi (or all)").value_name("LIST"))
        .arg(value("restarts", "convex-roof restarts per point").value_name("N"))
        .arg(value("iters", "pattern-search polls per restart").value_name("N"))
        .arg(value("seed", "optimizer seed").value_name("N"))
        .arg(value("threads", "worker threads (default: all cores)").value_name("N"))
        .arg(value("format", "csv or json").value_name("FMT"))
        .arg(value("out", "output file (default: stdout)").value_name("PATH"))
        .arg(
            Arg::new("fast")
                .long("fast")
                .action(ArgAction::Count)
                .help("smoke-test roof budget, 8 restarts × 500 polls"),
        )
        .arg(value("gc-scale", "display factor for the gc column").value_name("X"))
        .arg(
            Arg::new("diagnostics")
                .long("diagnostics")
                .action(ArgAction::Count)
                .help("add concurrences and optimizer diagnostics columns"),
        )
}

fn number<T: std::str::FromStr>(flag: &str, raw: &str) -> Result<T, UsageError> {
    raw.trim().parse().map_err(|_| UsageError::new(format!("--{flag}: cannot parse \"{raw}\"")))
}

/// Every occurrence of every flag, in command-line order.
fn ordered_flags(m: &ArgMatches) -> Vec<(usize, &'static str, Option<String>)> {
    const VALUED: [&str; 14] = [
        "scenario", "sweep", "alpha", "omega", "th", "measures", "restarts", "iters", "seed", "threads", "format",
        "out", "gc-scale", "preset",
    ];
    let mut flags = Vec::new();
    for id in VALUED {
        if let (Some(indices), Some(values)) = (m.indices_of(id), m.get_many::<String>(id)) {
            for (i, v) in indices.zip(values) {
                flags.push((i, id, Some(v.clone())));
            }
        }
    }
    for id in ["fast", "diagnostics"] {
        // count flags report the index of their default when absent
        if m.get_count(id) == 0 {
            continue;
        }
        if let Some(indices) = m.indices_of(id) {
            flags.extend(indices.map(|i| (i, id, None)));
        }
    }
    flags.sort_by_key(|&(i, _, _)| i);
    flags
}

/// Parses a command line (without the program name) into a validated spec.
pub fn parse_args<I, S>(argv: I) -> Result<SweepSpec, UsageError>
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv: Vec<String> = std::iter::once("horizon".to_string()).chain(argv.into_iter().map(Into::into)).collect();
    let matches = command().try_get_matches_from(argv).map_err(|e| {
        use clap::error::ErrorKind;
        let help = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
        UsageError { message: e.render().to_string(), help }
    })?;

    let mut spec = match matches.get_one::<String>("preset") {
        Some(name) => name.parse::<FigurePreset>()?.spec(),
        None => SweepSpec::new(ScenarioId::ABC),
    };
    let mut explicit_sweeps = false;
    let mut user_fixed: HashSet<Axis> = HashSet::new();

    for (_, flag, value) in ordered_flags(&matches) {
        let raw = value.as_deref().unwrap_or("");
        match flag {
            "preset" => {}
            "scenario" => spec.scenario = raw.parse()?,
            "sweep" => {
                let sweep: AxisSweep = raw.parse()?;
                if !explicit_sweeps {
                    explicit_sweeps = true;
                    spec.sweeps.clear();
                }
                if spec.is_swept(sweep.axis) {
                    return Err(UsageError::new(format!("--sweep: axis {} swept twice", sweep.axis)));
                }
                if spec.sweeps.len() == 2 {
                    return Err(UsageError::new("--sweep: at most two axes can be swept"));
                }
                if user_fixed.contains(&sweep.axis) {
                    return Err(UsageError::new(format!(
                        "--sweep: axis {} is already fixed by --{}",
                        sweep.axis, sweep.axis
                    )));
                }
                // a preset's fixed value gives way to an explicit sweep
                spec.set_fixed(sweep.axis, None);
                spec.sweeps.push(sweep);
            }
            "alpha" | "omega" | "th" => {
                let axis: Axis = flag.parse()?;
                if spec.is_swept(axis) {
                    return Err(UsageError::new(format!("--{flag}: axis {axis} is swept")));
                }
                spec.set_fixed(axis, Some(number(flag, raw)?));
                user_fixed.insert(axis);
            }
            "measures" => spec.measures = raw.parse::<MeasureSet>()?,
            "restarts" => spec.roof.restarts = number(flag, raw)?,
            "iters" => spec.roof.max_iters = number(flag, raw)?,
            "seed" => spec.roof.rng_seed = number(flag, raw)?,
            "threads" => spec.threads = Some(number(flag, raw)?),
            "format" => spec.output.format = raw.parse::<OutputFormat>()?,
            "out" => spec.output.path = Some(PathBuf::from(raw)),
            "fast" => {
                let fast = RoofConfig::fast();
                spec.roof.restarts = fast.restarts;
                spec.roof.max_iters = fast.max_iters;
            }
            "gc-scale" => spec.gc_scale = number(flag, raw)?,
            "diagnostics" => spec.diagnostics = true,
            other => unreachable!("unhandled flag {other}"),
        }
    }

    spec.validate()?;
    Ok(spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use horizon_core::sweep::Grid;

    #[test]
    fn command_is_well_formed() {
        command().debug_assert();
    }

    #[test]
    fn preset_then_overrides() {
        let spec = parse_args(["--preset", "fig2a", "--restarts", "4", "--fast", "--restarts", "2"]).unwrap();
        assert_eq!(spec.roof.restarts, 2);
        assert_eq!(spec.roof.max_iters, 500);
        let spec = parse_args(["--preset", "fig2a", "--restarts", "4", "--fast"]).unwrap();
        assert_eq!(spec.roof.restarts, 8);
    }

    #[test]
    fn bare_preset_keeps_defaults() {
        let spec = parse_args(["--preset", "fig2a"]).unwrap();
        assert_eq!(spec.roof, RoofConfig::default());
        assert!(!spec.diagnostics);
        assert_eq!(spec, "fig2a".parse::<FigurePreset>().unwrap().spec());
    }

    #[test]
    fn explicit_sweep_replaces_preset_sweep() {
        let spec = parse_args(["--preset", "fig2a", "--sweep", "th:0.01:100:5:log", "--alpha", "0.5"]).unwrap();
        assert_eq!(spec.sweeps.len(), 1);
        assert_eq!(spec.sweeps[0].grid, Grid::log(0.01, 100.0, 5));
        assert_eq!(spec.t_hawking, None);
        assert_eq!(spec.alpha, Some(0.5));
    }

    #[test]
    fn fixed_then_swept_conflicts() {
        let err = parse_args(["--alpha", "0.5", "--sweep", "alpha:0:1:3", "--omega", "1", "--th", "1"]).unwrap_err();
        assert!(err.message.contains("fixed"), "{err}");
        assert!(!err.help);
    }

    #[test]
    fn help_is_not_an_error() {
        let e = parse_args(["--help"]).unwrap_err();
        assert!(e.help);
        assert!(e.message.contains("--sweep"));
    }
}
