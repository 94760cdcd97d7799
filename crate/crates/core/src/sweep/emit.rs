use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use serde_json::{json, Value};

use super::run::{SweepRow, SweepTable};
use super::spec::{Axis, OutputFormat, OutputSpec};
use crate::error::{Error, Result};
use crate::horizon::SubsetSelector;
use crate::measures::{Measure, RoofDiagnostics};

/// Significant digits of every emitted number.
pub const SIGNIFICANT_DIGITS: usize = 12;

#[derive(Clone, Debug, PartialEq)]
enum Column {
    Axis(usize, Axis),
    Qc,
    Foc,
    Gc,
    Cf,
    Tradeoff,
    Mi(String),
    Concurrence(usize, char),
    Diag(RoofKind, DiagField),
}

#[derive(Clone, Copy, Debug, PartialEq)]
enum RoofKind {
    Cf,
    Gc,
}

#[derive(Clone, Copy, Debug, PartialEq)]
enum DiagField {
    Rank,
    Restarts,
    Median,
    Converged,
    UpperBound,
}

enum Cell {
    Num(f64),
    Int(usize),
    Bool(bool),
    Empty,
}

impl Column {
    fn name(&self) -> String {
        match self {
            Column::Axis(_, a) => a.name().to_string(),
            Column::Qc => "qc".into(),
            Column::Foc => "foc".into(),
            Column::Gc => "gc".into(),
            Column::Cf => "cf".into(),
            Column::Tradeoff => "tradeoff".into(),
            Column::Mi(pair) => format!("I_{pair}"),
            Column::Concurrence(_, site) => format!("C_{site}"),
            Column::Diag(kind, field) => {
                let prefix = match kind {
                    RoofKind::Cf => "cf",
                    RoofKind::Gc => "gc",
                };
                let suffix = match field {
                    DiagField::Rank => "rank",
                    DiagField::Restarts => "restarts",
                    DiagField::Median => "median",
                    DiagField::Converged => "converged",
                    DiagField::UpperBound => "upper_bound",
                };
                format!("{prefix}_{suffix}")
            }
        }
    }

    fn cell(&self, row: &SweepRow, gc_scale: f64) -> Cell {
        let r = &row.report;
        let num = |v: Option<f64>| v.map_or(Cell::Empty, Cell::Num);
        match self {
            Column::Axis(i, _) => Cell::Num(row.coords[*i]),
            Column::Qc => num(r.qc_l1),
            Column::Foc => num(r.foc),
            Column::Gc => num(r.gc.map(|g| g * gc_scale)),
            Column::Cf => num(r.cf),
            Column::Tradeoff => num(r.tradeoff_sum),
            Column::Mi(pair) => num(r.mutual_info_for(pair)),
            Column::Concurrence(i, _) => num(r.concurrences.map(|c| c[*i])),
            Column::Diag(kind, field) => {
                let d: Option<&RoofDiagnostics> = match kind {
                    RoofKind::Cf => r.cf_diagnostics.as_ref(),
                    RoofKind::Gc => r.gc_diagnostics.as_ref(),
                };
                match (d, field) {
                    (None, _) => Cell::Empty,
                    (Some(d), DiagField::Rank) => Cell::Int(d.rank),
                    (Some(d), DiagField::Restarts) => Cell::Int(d.restarts),
                    (Some(d), DiagField::Median) => Cell::Num(d.median),
                    (Some(d), DiagField::Converged) => Cell::Bool(d.converged),
                    (Some(d), DiagField::UpperBound) => Cell::Bool(d.upper_bound),
                }
            }
        }
    }
}

fn columns(table: &SweepTable) -> Vec<Column> {
    let spec = &table.spec;
    let m = spec.measures;
    let sites = spec.scenario.subset();
    let tripartite = sites.len() == 3;
    let mut cols: Vec<Column> = spec.sweeps.iter().enumerate().map(|(i, s)| Column::Axis(i, s.axis)).collect();
    if m.contains(Measure::Qc) {
        cols.push(Column::Qc);
    }
    if m.contains(Measure::Foc) {
        cols.push(Column::Foc);
    }
    if tripartite {
        if m.contains(Measure::Gc) {
            cols.push(Column::Gc);
        }
        if m.contains(Measure::Cf) {
            cols.push(Column::Cf);
        }
        if m.contains(Measure::Tradeoff) {
            cols.push(Column::Tradeoff);
        }
    }
    if m.contains(Measure::Mi) {
        for (x, y) in spec.scenario.mutual_information_pairs() {
            let label = SubsetSelector::new(vec![x, y]).map(|s| s.label()).unwrap_or_default();
            cols.push(Column::Mi(label));
        }
    }
    if spec.diagnostics && tripartite {
        let has_cf = m.contains(Measure::Cf) || m.contains(Measure::Tradeoff);
        let has_gc = m.contains(Measure::Gc);
        if has_cf || has_gc {
            for (i, site) in sites.sites().iter().enumerate() {
                cols.push(Column::Concurrence(i, site.label()));
            }
        }
        for (kind, present) in [(RoofKind::Cf, has_cf), (RoofKind::Gc, has_gc)] {
            if present {
                for field in [
                    DiagField::Rank,
                    DiagField::Restarts,
                    DiagField::Median,
                    DiagField::Converged,
                    DiagField::UpperBound,
                ] {
                    cols.push(Column::Diag(kind, field));
                }
            }
        }
    }
    cols
}

/// Column names of the emitted table.
pub fn column_names(table: &SweepTable) -> Vec<String> {
    columns(table).iter().map(Column::name).collect()
}

/// `x` to [`SIGNIFICANT_DIGITS`] significant digits, fixed-point for
/// moderate exponents and scientific otherwise, trailing zeros removed.
pub fn format_number(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return if x.is_nan() {
            "nan".into()
        } else if x > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        };
    }
    let sci = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    let negative = mantissa.starts_with('-');
    let digits: String = mantissa.chars().filter(char::is_ascii_digit).collect();
    let sign = if negative { "-" } else { "" };

    if (-5..SIGNIFICANT_DIGITS as i32).contains(&exp) {
        let (int_part, frac_part) = if exp >= 0 {
            let split = exp as usize + 1;
            (digits[..split].to_string(), digits[split..].to_string())
        } else {
            ("0".to_string(), format!("{}{}", "0".repeat((-exp - 1) as usize), digits))
        };
        let frac = frac_part.trim_end_matches('0');
        if frac.is_empty() {
            format!("{sign}{int_part}")
        } else {
            format!("{sign}{int_part}.{frac}")
        }
    } else {
        let frac = digits[1..].trim_end_matches('0');
        let mant = if frac.is_empty() { digits[..1].to_string() } else { format!("{}.{frac}", &digits[..1]) };
        format!("{sign}{mant}e{exp}")
    }
}

fn csv_cell(c: &Cell) -> String {
    match c {
        Cell::Num(x) => format_number(*x),
        Cell::Int(n) => n.to_string(),
        Cell::Bool(b) => b.to_string(),
        Cell::Empty => String::new(),
    }
}

fn json_cell(c: &Cell) -> Value {
    match c {
        Cell::Num(x) => format_number(*x)
            .parse::<f64>()
            .ok()
            .and_then(serde_json::Number::from_f64)
            .map_or(Value::Null, Value::Number),
        Cell::Int(n) => json!(n),
        Cell::Bool(b) => json!(b),
        Cell::Empty => Value::Null,
    }
}

fn notes(table: &SweepTable) -> Vec<String> {
    let names = column_names(table);
    let mut notes = Vec::new();
    if names.iter().any(|n| n == "cf" || n == "gc" || n == "tradeoff") {
        notes.push("cf and gc of mixed states are convex-roof upper bounds from a numerical search".to_string());
    }
    if table.spec.gc_scale != 1.0 && names.iter().any(|n| n == "gc") {
        notes.push(format!("gc column multiplied by {}", table.spec.gc_scale));
    }
    notes
}

fn meta(table: &SweepTable) -> Value {
    json!({
        "version": env!("CARGO_PKG_VERSION"),
        "spec": table.spec,
        "seed": table.spec.roof.rng_seed,
        "wall_time_s": table.wall_time.as_secs_f64(),
        "notes": notes(table),
    })
}

/// The table as text in `format`. For CSV, provenance lines start with `#`
/// and everything after them depends only on the spec.
pub fn render(table: &SweepTable, format: OutputFormat) -> Result<String> {
    if table.rows.is_empty() {
        return Err(Error::Argument("nothing to emit: the table is empty".into()));
    }
    let cols = columns(table);
    let scale = table.spec.gc_scale;
    match format {
        OutputFormat::Csv => {
            let spec_json = serde_json::to_string(&table.spec).map_err(|e| Error::Argument(e.to_string()))?;
            let mut out = String::new();
            out.push_str(&format!("# horizon {}\n", env!("CARGO_PKG_VERSION")));
            out.push_str(&format!("# spec: {spec_json}\n"));
            out.push_str(&format!("# seed: {}\n", table.spec.roof.rng_seed));
            out.push_str(&format!("# wall_time_s: {:.3}\n", table.wall_time.as_secs_f64()));
            for note in notes(table) {
                out.push_str(&format!("# note: {note}\n"));
            }
            let header: Vec<String> = cols.iter().map(Column::name).collect();
            out.push_str(&header.join(","));
            out.push('\n');
            for row in &table.rows {
                let cells: Vec<String> = cols.iter().map(|c| csv_cell(&c.cell(row, scale))).collect();
                out.push_str(&cells.join(","));
                out.push('\n');
            }
            Ok(out)
        }
        OutputFormat::Json => {
            let rows: Vec<Value> = table
                .rows
                .iter()
                .map(|row| Value::Array(cols.iter().map(|c| json_cell(&c.cell(row, scale))).collect()))
                .collect();
            let doc = json!({
                "meta": meta(table),
                "columns": cols.iter().map(Column::name).collect::<Vec<_>>(),
                "rows": rows,
            });
            let mut text = serde_json::to_string_pretty(&doc).map_err(|e| Error::Argument(e.to_string()))?;
            text.push('\n');
            Ok(text)
        }
    }
}

/// The CSV text after its `#` provenance lines.
pub fn data_section(csv: &str) -> String {
    csv.lines().filter(|l| !l.starts_with('#')).map(|l| format!("{l}\n")).collect()
}

/// Writes the table to `output.path`, or to standard output without one.
/// Files are written beside the target and renamed into place, so a failed
/// write leaves no partial file behind.
pub fn emit(table: &SweepTable, output: &OutputSpec) -> Result<()> {
    let text = render(table, output.format)?;
    match &output.path {
        None => io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|source| Error::Io { path: "<stdout>".into(), source }),
        Some(path) => write_atomically(path, text.as_bytes()),
    }
}

fn write_atomically(path: &Path, bytes: &[u8]) -> Result<()> {
    let mut partial = PathBuf::from(path);
    let mut name = path.file_name().map(|n| n.to_os_string()).unwrap_or_default();
    name.push(".partial");
    partial.set_file_name(name);
    let io_err = |p: &Path| {
        let p = p.display().to_string();
        move |source| Error::Io { path: p, source }
    };
    if let Err(e) = fs::write(&partial, bytes) {
        let _ = fs::remove_file(&partial);
        return Err(io_err(&partial)(e));
    }
    fs::rename(&partial, path).map_err(|e| {
        let _ = fs::remove_file(&partial);
        io_err(path)(e)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn number_formatting() {
        assert_eq!(format_number(0.0), "0");
        assert_eq!(format_number(1.0), "1");
        assert_eq!(format_number(-0.5), "-0.5");
        assert_eq!(format_number(0.1), "0.1");
        assert_eq!(format_number(std::f64::consts::PI), "3.14159265359");
        assert_eq!(format_number(1.0 / 3.0), "0.333333333333");
        assert_eq!(format_number(123456.789), "123456.789");
        assert_eq!(format_number(2.5e-7), "2.5e-7");
        assert_eq!(format_number(1.234e-5), "0.00001234");
        assert_eq!(format_number(6.02214076e23), "6.02214076e23");
        assert_eq!(format_number(0.9999999999999), "1");
        assert_eq!(format_number(f64::NAN), "nan");
    }

    #[test]
    fn twelve_digits_round_trip_closely() {
        for x in [std::f64::consts::FRAC_1_SQRT_2, 1e-3 / 7.0, 12345.678901234] {
            let back: f64 = format_number(x).parse().unwrap();
            assert!((back / x - 1.0).abs() < 1e-11, "{x}");
        }
    }

    #[test]
    fn data_section_drops_provenance() {
        assert_eq!(data_section("# a\n# b\nx,y\n1,2\n"), "x,y\n1,2\n");
    }
}
