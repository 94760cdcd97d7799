use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::coherence::{foc_multipartite, qc_l1};
use super::concurrence::squared_concurrences;
use super::mutual::mutual_information;
use super::roof::{convex_roof, RoofConfig, RoofDiagnostics, RoofObjective, RoofOutcome};
use crate::error::{Error, Result};
use crate::horizon::{build_pentapartite_state, reduce, reduce_to_scenario, HorizonParams, ScenarioId, SubsetSelector};

/// Slack allowed on `foc² + cf ≤ 1`.
pub const TRADEOFF_TOLERANCE: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Measure {
    Qc,
    Foc,
    Gc,
    Cf,
    Tradeoff,
    Mi,
}

impl Measure {
    pub const ALL: [Measure; 6] = [Measure::Qc, Measure::Foc, Measure::Gc, Measure::Cf, Measure::Tradeoff, Measure::Mi];

    pub fn name(self) -> &'static str {
        match self {
            Measure::Qc => "qc",
            Measure::Foc => "foc",
            Measure::Gc => "gc",
            Measure::Cf => "cf",
            Measure::Tradeoff => "tradeoff",
            Measure::Mi => "mi",
        }
    }
}

impl FromStr for Measure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Measure::ALL.into_iter().find(|m| m.name().eq_ignore_ascii_case(s.trim())).ok_or_else(|| {
            Error::Argument(format!("unknown measure \"{s}\" (expected qc, foc, gc, cf, tradeoff or mi)"))
        })
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A set of measures, iterated in the fixed order of [`Measure::ALL`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct MeasureSet(u8);

impl MeasureSet {
    pub fn all() -> Self {
        Self::from_iter(Measure::ALL)
    }

    pub fn empty() -> Self {
        MeasureSet(0)
    }

    pub fn contains(self, m: Measure) -> bool {
        self.0 & (1 << m as u8) != 0
    }

    pub fn insert(&mut self, m: Measure) {
        self.0 |= 1 << m as u8;
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = Measure> {
        Measure::ALL.into_iter().filter(move |&m| self.contains(m))
    }
}

impl Default for MeasureSet {
    fn default() -> Self {
        Self::all()
    }
}

impl FromIterator<Measure> for MeasureSet {
    fn from_iter<I: IntoIterator<Item = Measure>>(iter: I) -> Self {
        let mut set = MeasureSet::empty();
        for m in iter {
            set.insert(m);
        }
        set
    }
}

/// Comma-separated names, or `all`.
impl FromStr for MeasureSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim().eq_ignore_ascii_case("all") {
            return Ok(Self::all());
        }
        let set = s.split(',').map(str::parse).collect::<Result<MeasureSet>>()?;
        if set.is_empty() {
            return Err(Error::Argument("no measures requested".into()));
        }
        Ok(set)
    }
}

impl fmt::Display for MeasureSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<_> = self.iter().map(Measure::name).collect();
        f.write_str(&names.join(","))
    }
}

impl TryFrom<String> for MeasureSet {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<MeasureSet> for String {
    fn from(s: MeasureSet) -> String {
        s.to_string()
    }
}

/// Measure values at one parameter point. Entries not requested, or not
/// defined for the scenario's number of qubits, are `None`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MeasureReport {
    pub scenario: String,
    pub alpha: f64,
    pub omega: f64,
    pub t_hawking: f64,
    pub qc_l1: Option<f64>,
    pub foc: Option<f64>,
    /// One-vs-rest concurrences `C_{x(yz)}, C_{y(zx)}, C_{z(xy)}`, averaged
    /// over the minimizing ensemble for mixed states.
    pub concurrences: Option<[f64; 3]>,
    pub gc: Option<f64>,
    pub cf: Option<f64>,
    pub tradeoff_sum: Option<f64>,
    /// `(pair label, bits)` in the scenario's pair order.
    pub mutual_info: Vec<(String, f64)>,
    pub cf_diagnostics: Option<RoofDiagnostics>,
    pub gc_diagnostics: Option<RoofDiagnostics>,
}

impl MeasureReport {
    /// Mutual information of the pair labelled `label` (e.g. `"AB"`).
    pub fn mutual_info_for(&self, label: &str) -> Option<f64> {
        self.mutual_info.iter().find(|(l, _)| l == label).map(|&(_, v)| v)
    }

    /// Whether CF was obtained by search and is therefore an upper bound.
    pub fn cf_is_upper_bound(&self) -> bool {
        self.cf_diagnostics.as_ref().is_some_and(|d| d.upper_bound)
    }
}

/// Every measure at `p` for `scenario`.
pub fn evaluate_point(p: &HorizonParams, scenario: &ScenarioId, cfg: &RoofConfig) -> Result<MeasureReport> {
    evaluate_point_with(p, scenario, cfg, MeasureSet::all())
}

/// The requested measures at `p` for `scenario`. Concurrence-based measures
/// need a three-qubit scenario and are skipped otherwise; `tradeoff` implies
/// `foc` and `cf`.
pub fn evaluate_point_with(
    p: &HorizonParams,
    scenario: &ScenarioId,
    cfg: &RoofConfig,
    measures: MeasureSet,
) -> Result<MeasureReport> {
    let psi = build_pentapartite_state(p);
    let rho = reduce_to_scenario(&psi, scenario)?;
    let tripartite = rho.rows() == 8;

    let want_tradeoff = measures.contains(Measure::Tradeoff) && tripartite;
    let want_cf = (measures.contains(Measure::Cf) || want_tradeoff) && tripartite;
    let want_gc = measures.contains(Measure::Gc) && tripartite;
    let want_foc = measures.contains(Measure::Foc) || want_tradeoff;

    let mut report = MeasureReport {
        scenario: scenario.label(),
        alpha: p.alpha,
        omega: p.omega,
        t_hawking: p.t_hawking,
        qc_l1: None,
        foc: None,
        concurrences: None,
        gc: None,
        cf: None,
        tradeoff_sum: None,
        mutual_info: Vec::new(),
        cf_diagnostics: None,
        gc_diagnostics: None,
    };

    if measures.contains(Measure::Qc) {
        report.qc_l1 = Some(qc_l1(&rho)?);
    }
    if want_foc {
        report.foc = Some(foc_multipartite(&rho)?);
    }

    let mut concurrence_source: Option<RoofOutcome> = None;
    if want_cf {
        let out = convex_roof(&rho, RoofObjective::ConcurrenceFill, cfg)?;
        report.cf = Some(out.value.clamp(0.0, 1.0));
        report.cf_diagnostics = Some(out.diagnostics.clone());
        concurrence_source = Some(out);
    }
    if want_gc {
        let out = convex_roof(&rho, RoofObjective::GlobalConcurrence, cfg)?;
        report.gc = Some(out.value.max(0.0));
        report.gc_diagnostics = Some(out.diagnostics.clone());
        concurrence_source.get_or_insert(out);
    }
    if let Some(out) = &concurrence_source {
        let mut avg = [0.0; 3];
        for (weight, psi) in &out.ensemble {
            for (a, c2) in avg.iter_mut().zip(squared_concurrences(psi.amplitudes())) {
                *a += weight * c2.sqrt();
            }
        }
        report.concurrences = Some(avg.map(|c| c.clamp(0.0, 1.0)));
    }

    if want_tradeoff {
        let (foc, cf) = (report.foc.unwrap_or(0.0), report.cf.unwrap_or(0.0));
        let sum = foc * foc + cf;
        report.tradeoff_sum = Some(sum);
        if sum > 1.0 + TRADEOFF_TOLERANCE {
            if report.cf_is_upper_bound() {
                log::warn!(
                    "foc² + cf = {sum:.9} exceeds 1 at α={}, ω={}, T_H={} ({}); cf is a search upper bound",
                    p.alpha,
                    p.omega,
                    p.t_hawking,
                    report.scenario
                );
            } else {
                return Err(Error::Contract(format!(
                    "trade-off violated for a pure state: foc² + cf = {sum:.12} at α={}, ω={}, T_H={}",
                    p.alpha, p.omega, p.t_hawking
                )));
            }
        }
    }

    if measures.contains(Measure::Mi) {
        for (x, y) in scenario.mutual_information_pairs() {
            let pair = SubsetSelector::new(vec![x, y])?;
            let rho_pair = reduce(&psi, &pair)?;
            report.mutual_info.push((pair.label(), mutual_information(&rho_pair, [2, 2])?));
        }
    }

    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::horizon::derive_coefficients;
    use std::f64::consts::FRAC_1_SQRT_2;

    #[test]
    fn measure_set_parsing() {
        let s: MeasureSet = "cf, foc,mi".parse().unwrap();
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![Measure::Foc, Measure::Cf, Measure::Mi]);
        assert_eq!(s.to_string(), "foc,cf,mi");
        assert_eq!("all".parse::<MeasureSet>().unwrap(), MeasureSet::all());
        assert!("cf,entropy".parse::<MeasureSet>().is_err());
        assert!("".parse::<MeasureSet>().is_err());
    }

    #[test]
    fn product_state_point() {
        let p = derive_coefficients(0.0, 1.0, 3.0).unwrap();
        let r = evaluate_point(&p, &ScenarioId::ABC, &RoofConfig::fast()).unwrap();
        assert!(r.cf.unwrap().abs() < 1e-12);
        assert!(r.qc_l1.unwrap().abs() < 1e-12);
        assert!((r.foc.unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn cold_ghz_point() {
        let p = derive_coefficients(FRAC_1_SQRT_2, 1.0, 0.01).unwrap();
        let r = evaluate_point(&p, &ScenarioId::ABC, &RoofConfig::fast()).unwrap();
        assert!((r.cf.unwrap() - 1.0).abs() < 1e-6);
        assert!((r.gc.unwrap() - 1.5).abs() < 1e-6);
        assert!(r.foc.unwrap().abs() < 1e-6);
        assert!((r.tradeoff_sum.unwrap() - 1.0).abs() < 1e-6);
        for c in r.concurrences.unwrap() {
            assert!((c - 1.0).abs() < 1e-6);
        }
        assert!((r.mutual_info_for("AB").unwrap() - 1.0).abs() < 1e-9);
        assert_eq!(r.mutual_info_for("AB"), r.mutual_info_for("AC"));
    }

    #[test]
    fn cold_anti_particle_point() {
        let p = derive_coefficients(FRAC_1_SQRT_2, 1.0, 0.01).unwrap();
        let r = evaluate_point(&p, &ScenarioId::Abc, &RoofConfig::fast()).unwrap();
        assert!(r.cf.unwrap() < 1e-6);
        assert!(r.gc.unwrap() < 1e-6);
        assert!(r.mutual_info_for("Ab").unwrap() < 1e-9);
        assert!(r.mutual_info_for("Ac").unwrap() < 1e-9);
    }

    #[test]
    fn subset_of_measures() {
        let p = derive_coefficients(0.5, 1.0, 1.0).unwrap();
        let set: MeasureSet = "qc,mi".parse().unwrap();
        let r = evaluate_point_with(&p, &ScenarioId::AbB, &RoofConfig::fast(), set).unwrap();
        assert!(r.qc_l1.is_some());
        assert!(r.cf.is_none() && r.gc.is_none() && r.foc.is_none() && r.concurrences.is_none());
        let labels: Vec<_> = r.mutual_info.iter().map(|(l, _)| l.as_str()).collect();
        assert_eq!(labels, ["AB", "Ab"]);
    }

    #[test]
    fn tradeoff_pulls_in_its_inputs() {
        let p = derive_coefficients(0.5, 1.0, 0.01).unwrap();
        let set: MeasureSet = "tradeoff".parse().unwrap();
        let r = evaluate_point_with(&p, &ScenarioId::ABC, &RoofConfig::fast(), set).unwrap();
        let (foc, cf) = (r.foc.unwrap(), r.cf.unwrap());
        assert!((r.tradeoff_sum.unwrap() - (foc * foc + cf)).abs() < 1e-15);
    }

    #[test]
    fn two_qubit_custom_scenario_skips_tripartite_measures() {
        let p = derive_coefficients(0.5, 1.0, 1.0).unwrap();
        let r = evaluate_point(&p, &"Bb".parse().unwrap(), &RoofConfig::fast()).unwrap();
        assert!(r.cf.is_none() && r.tradeoff_sum.is_none());
        assert!(r.qc_l1.unwrap() > 0.0);
        assert_eq!(r.mutual_info.len(), 1);
    }
}
