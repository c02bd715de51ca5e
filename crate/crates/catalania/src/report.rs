//! JSON rendering of verification reports.

use catalania_core::identities::{IdentityReport, Params, Status};
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

/// Parameter list as a JSON object, keys in grid order.
struct ParamsDto<'a>(&'a Params);

impl Serialize for ParamsDto<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in self.0 {
            map.serialize_entry(k, &v.to_string())?;
        }
        map.end()
    }
}

#[derive(Serialize)]
struct CounterexampleDto<'a> {
    params: ParamsDto<'a>,
    lhs: String,
    rhs: String,
    detail: &'a str,
}

#[derive(Serialize)]
struct ReportDto<'a> {
    id: &'static str,
    grid: &'a str,
    status: &'static str,
    checked: usize,
    skipped: Vec<ParamsDto<'a>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    counterexample: Option<CounterexampleDto<'a>>,
}

impl<'a> From<&'a IdentityReport> for ReportDto<'a> {
    fn from(r: &'a IdentityReport) -> Self {
        let counterexample = match &r.status {
            Status::Pass => None,
            Status::Fail(c) => Some(CounterexampleDto {
                params: ParamsDto(&c.params),
                lhs: c.lhs.to_string(),
                rhs: c.rhs.to_string(),
                detail: &c.detail,
            }),
        };
        ReportDto {
            id: r.id.as_str(),
            grid: &r.grid,
            status: if r.passed() { "pass" } else { "fail" },
            checked: r.checked,
            skipped: r.skipped.iter().map(ParamsDto).collect(),
            counterexample,
        }
    }
}

/// Pretty JSON array, newline-terminated.
pub fn reports_to_json(reports: &[IdentityReport]) -> String {
    let dtos: Vec<ReportDto<'_>> = reports.iter().map(ReportDto::from).collect();
    let mut s = serde_json::to_string_pretty(&dtos).expect("plain data");
    s.push('\n');
    s
}
