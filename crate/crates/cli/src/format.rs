//! On-disk JSON formats: `linkfile-v1` inputs and `ReportFileV1` outputs.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use so3period::bracket::Poly;
use so3period::link::{FramedLinkDiagram, PdCode};
use so3period::periodicity::PeriodicityReport;

use crate::CliError;

pub const LINKFILE_FORMAT: &str = "linkfile-v1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LinkFileV1 {
    pub format: String,
    pub crossings: Vec<[u32; 4]>,
    pub components: Vec<Vec<u32>>,
    pub framings: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub colors: Option<Vec<Option<u32>>>,
}

impl LinkFileV1 {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let f: Self = serde_json::from_str(text).map_err(|e| CliError::Input(format!("invalid link file: {e}")))?;
        if f.format != LINKFILE_FORMAT {
            return Err(CliError::Input(format!(
                "unsupported format {:?} (expected {LINKFILE_FORMAT:?})",
                f.format
            )));
        }
        Ok(f)
    }

    pub fn from_diagram(d: &FramedLinkDiagram) -> Self {
        let colors = d.colors().iter().any(Option::is_some).then(|| d.colors().to_vec());
        Self {
            format: LINKFILE_FORMAT.to_string(),
            crossings: d.pd().crossings().to_vec(),
            components: d.pd().components().to_vec(),
            framings: d.framings().to_vec(),
            colors,
        }
    }

    pub fn to_diagram(&self) -> Result<FramedLinkDiagram, CliError> {
        let pd = PdCode::new(self.crossings.clone(), self.components.clone())?;
        let n = pd.component_count();
        let colors = self.colors.clone().unwrap_or_else(|| vec![None; n]);
        Ok(FramedLinkDiagram::new(pd, self.framings.clone(), colors)?)
    }
}

/// Coefficient map keyed by exponent; coefficients are exact integers or
/// fractions written as strings.
pub type CoefficientMap = BTreeMap<i64, String>;

pub fn poly_map(p: &Poly) -> CoefficientMap {
    p.terms().map(|(e, c)| (e, c.to_string())).collect()
}

pub fn dense_map<T: ToString>(coeffs: &[T], is_zero: impl Fn(&T) -> bool) -> CoefficientMap {
    coeffs.iter().enumerate().filter(|(_, c)| !is_zero(c)).map(|(e, c)| (e as i64, c.to_string())).collect()
}

pub fn int_map(coeffs: &[BigInt]) -> CoefficientMap {
    dense_map(coeffs, |c| c == &BigInt::from(0))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportFileV1 {
    pub criterion: String,
    pub p: u64,
    pub verdict: String,
    pub passing_j: Vec<u64>,
    pub invariant: CoefficientMap,
    pub ring: String,
    pub notes: String,
    #[serde(default)]
    pub degenerate: bool,
    #[serde(default)]
    pub difference: CoefficientMap,
    #[serde(default)]
    pub difference_ring: String,
}

impl ReportFileV1 {
    pub fn new(report: &PeriodicityReport, invariant: CoefficientMap, ring: String) -> Self {
        Self {
            criterion: report.criterion.name().to_string(),
            p: report.p,
            verdict: report.verdict.to_string(),
            passing_j: report.passing_j.clone(),
            invariant,
            ring,
            notes: report.note(),
            degenerate: report.degenerate,
            difference: poly_map(&report.difference),
            difference_ring: report.ring.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("invalid report: {e}")))
    }
}
