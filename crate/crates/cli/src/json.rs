//! JSON form of [`VerificationReport`].

use cyclo_core::{Counterexample, Param, Status, VerificationReport};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportJson {
    pub claim_id: String,
    pub range: String,
    pub status: String,
    pub counterexamples: Vec<CounterexampleJson>,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CounterexampleJson {
    /// `name=value` strings.
    pub params: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

impl From<&VerificationReport> for ReportJson {
    fn from(r: &VerificationReport) -> Self {
        Self {
            claim_id: r.claim_id().to_string(),
            range: r.range().to_string(),
            status: r.status().as_str().to_string(),
            counterexamples: r
                .counterexamples()
                .iter()
                .map(|cx| CounterexampleJson {
                    params: cx.params.iter().map(Param::to_string).collect(),
                    lhs: cx.lhs.clone(),
                    rhs: cx.rhs.clone(),
                })
                .collect(),
            elapsed_ms: r.elapsed_ms(),
        }
    }
}

impl TryFrom<ReportJson> for VerificationReport {
    type Error = CliError;

    fn try_from(j: ReportJson) -> Result<Self, CliError> {
        let status = Status::parse(&j.status).ok_or_else(|| CliError::Usage(format!("unknown status {:?}", j.status)))?;
        let cxs = j
            .counterexamples
            .into_iter()
            .map(|cx| {
                Ok(Counterexample {
                    params: cx.params.iter().map(|p| p.parse()).collect::<Result<_, _>>()?,
                    lhs: cx.lhs,
                    rhs: cx.rhs,
                })
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        Ok(VerificationReport::from_parts(j.claim_id, j.range, status, cxs, j.elapsed_ms)?)
    }
}

pub fn render_report(r: &VerificationReport) -> String {
    serde_json::to_string_pretty(&ReportJson::from(r)).expect("report serializes")
}

pub fn render_reports(rs: &[VerificationReport]) -> String {
    let js: Vec<ReportJson> = rs.iter().map(ReportJson::from).collect();
    serde_json::to_string_pretty(&js).expect("reports serialize")
}

pub fn parse_report(text: &str) -> Result<VerificationReport, CliError> {
    serde_json::from_str::<ReportJson>(text)?.try_into()
}
