use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One of the five modes. Declaration order is the global tensor order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Site {
    /// Alice, in flat space.
    A,
    /// Anti-Bob, inside the horizon.
    AntiB,
    /// Bob, outside the horizon.
    B,
    /// Anti-Charlie, inside the horizon.
    AntiC,
    /// Charlie, outside the horizon.
    C,
}

impl Site {
    pub const ALL: [Site; 5] = [Site::A, Site::AntiB, Site::B, Site::AntiC, Site::C];

    /// Position in the global `(A, b, B, c, C)` ordering.
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn label(self) -> char {
        match self {
            Site::A => 'A',
            Site::AntiB => 'b',
            Site::B => 'B',
            Site::AntiC => 'c',
            Site::C => 'C',
        }
    }

    pub fn from_label(c: char) -> Option<Site> {
        Site::ALL.into_iter().find(|s| s.label() == c)
    }
}

impl fmt::Display for Site {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// Ordered, duplicate-free list of sites, e.g. `"Bb"` or `"AbB"`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct SubsetSelector(Vec<Site>);

impl SubsetSelector {
    pub fn new(sites: Vec<Site>) -> Result<Self> {
        if sites.is_empty() {
            return Err(Error::Argument("empty site subset".into()));
        }
        for (i, s) in sites.iter().enumerate() {
            if sites[..i].contains(s) {
                return Err(Error::Argument(format!("site {s} listed twice")));
            }
        }
        Ok(Self(sites))
    }

    pub fn sites(&self) -> &[Site] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn indices(&self) -> Vec<usize> {
        self.0.iter().map(|s| s.index()).collect()
    }

    /// Same sites, in global order.
    pub fn canonical(&self) -> Self {
        let mut sites = self.0.clone();
        sites.sort();
        Self(sites)
    }

    pub fn label(&self) -> String {
        self.0.iter().map(|s| s.label()).collect()
    }
}

impl FromStr for SubsetSelector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let sites = s
            .chars()
            .map(|c| Site::from_label(c).ok_or_else(|| Error::Argument(format!("unknown site '{c}' in \"{s}\""))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(sites)
    }
}

impl TryFrom<String> for SubsetSelector {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<SubsetSelector> for String {
    fn from(s: SubsetSelector) -> String {
        s.label()
    }
}

impl fmt::Display for SubsetSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Which observers' joint state is examined.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum ScenarioId {
    /// Alice, Bob, Charlie: all accessible modes.
    ABC,
    /// Alice, anti-Bob, anti-Charlie.
    Abc,
    /// Alice, anti-Bob, Bob.
    AbB,
    /// Alice, Bob, anti-Charlie.
    ABc,
    /// Any 1–4 sites; reduced in global order.
    Custom(SubsetSelector),
}

impl ScenarioId {
    pub fn subset(&self) -> SubsetSelector {
        let sites = match self {
            ScenarioId::ABC => vec![Site::A, Site::B, Site::C],
            ScenarioId::Abc => vec![Site::A, Site::AntiB, Site::AntiC],
            ScenarioId::AbB => vec![Site::A, Site::AntiB, Site::B],
            ScenarioId::ABc => vec![Site::A, Site::B, Site::AntiC],
            ScenarioId::Custom(s) => return s.canonical(),
        };
        SubsetSelector(sites)
    }

    /// Observer pairs whose mutual information is reported for this scenario.
    pub fn mutual_information_pairs(&self) -> Vec<(Site, Site)> {
        use Site::*;
        match self {
            ScenarioId::ABC => vec![(A, B), (A, C)],
            ScenarioId::Abc => vec![(A, AntiB), (A, AntiC)],
            ScenarioId::AbB => vec![(A, B), (A, AntiB)],
            ScenarioId::ABc => vec![(A, B), (A, AntiC)],
            ScenarioId::Custom(s) => {
                let sites = s.canonical().0;
                let mut pairs = Vec::new();
                for i in 0..sites.len() {
                    for j in i + 1..sites.len() {
                        pairs.push((sites[i], sites[j]));
                    }
                }
                pairs
            }
        }
    }

    pub fn label(&self) -> String {
        match self {
            ScenarioId::Custom(s) => s.canonical().label(),
            named => named.subset().label(),
        }
    }
}

impl FromStr for ScenarioId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let subset: SubsetSelector = s.parse()?;
        if subset.len() > 4 {
            return Err(Error::Argument(format!("scenario \"{s}\" must leave at least one site traced out")));
        }
        let canonical = subset.canonical();
        Ok(match canonical.label().as_str() {
            "ABC" => ScenarioId::ABC,
            "Abc" => ScenarioId::Abc,
            "AbB" => ScenarioId::AbB,
            "ABc" => ScenarioId::ABc,
            _ => ScenarioId::Custom(canonical),
        })
    }
}

impl TryFrom<String> for ScenarioId {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<ScenarioId> for String {
    fn from(s: ScenarioId) -> String {
        s.label()
    }
}

impl fmt::Display for ScenarioId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}
