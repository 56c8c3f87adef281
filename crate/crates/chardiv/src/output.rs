//! Text, CSV and JSON renderings of census results.
//!
//! CSV is UTF-8 with LF line endings. No field ever contains a comma (census
//! parameters use `;` and `.`), so rows need no quoting. JSON carries exact
//! integers as decimal strings.

use std::fmt::Write as _;
use std::str::FromStr;

use chardiv_core::census::{BoundReport, CensusReport};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Text,
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(Format::Text),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format `{other}` (expected text, csv or json)")),
        }
    }
}

pub const CENSUS_CSV_HEADER: &str = "n,kind,params,numerator,denominator,ratio";

/// A census report flattened to strings, as written to CSV and JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRow {
    pub n: usize,
    pub kind: String,
    pub params: String,
    pub numerator: String,
    pub denominator: String,
    pub ratio: String,
}

impl From<&CensusReport> for CensusRow {
    fn from(r: &CensusReport) -> Self {
        Self {
            n: r.n,
            kind: r.kind.name().to_string(),
            params: r.kind.params(),
            numerator: r.numerator.to_string(),
            denominator: r.denominator.to_string(),
            ratio: r.ratio(),
        }
    }
}

pub fn census_csv(reports: &[CensusReport]) -> String {
    let mut out = String::from(CENSUS_CSV_HEADER);
    out.push('\n');
    for r in reports.iter().map(CensusRow::from) {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            r.n, r.kind, r.params, r.numerator, r.denominator, r.ratio
        );
    }
    out
}

pub fn census_json(reports: &[CensusReport]) -> String {
    let rows: Vec<CensusRow> = reports.iter().map(CensusRow::from).collect();
    let mut out = serde_json::to_string_pretty(&rows).expect("rows serialize");
    out.push('\n');
    out
}

pub fn census_text(reports: &[CensusReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let _ = writeln!(out, "{r}");
    }
    out
}

pub fn render_census(reports: &[CensusReport], format: Format) -> String {
    match format {
        Format::Text => census_text(reports),
        Format::Csv => census_csv(reports),
        Format::Json => census_json(reports),
    }
}

/// Parses JSON written by [`census_json`].
pub fn parse_census_json(input: &str) -> serde_json::Result<Vec<CensusRow>> {
    serde_json::from_str(input)
}

pub const BOUND_CSV_HEADER: &str = "n,q,b,n_b,p_b,max_cores,bound,holds";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundRow {
    pub n: usize,
    pub q: u64,
    pub b: u64,
    pub n_b: u64,
    pub p_b: u64,
    pub max_cores: u64,
    pub bound: String,
    pub holds: bool,
}

impl From<&BoundReport> for BoundRow {
    fn from(r: &BoundReport) -> Self {
        Self {
            n: r.n,
            q: r.q,
            b: r.b,
            n_b: r.n_b,
            p_b: r.p_b,
            max_cores: r.max_cores,
            bound: r.bound.to_string(),
            holds: r.holds,
        }
    }
}

pub fn render_bound(report: &BoundReport, format: Format) -> String {
    let row = BoundRow::from(report);
    match format {
        Format::Text => format!("{report}\n"),
        Format::Csv => format!(
            "{BOUND_CSV_HEADER}\n{},{},{},{},{},{},{},{}\n",
            row.n, row.q, row.b, row.n_b, row.p_b, row.max_cores, row.bound, row.holds
        ),
        Format::Json => {
            let mut out = serde_json::to_string_pretty(&row).expect("row serializes");
            out.push('\n');
            out
        }
    }
}

/// Named scalar results of the single-partition commands.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Record {
    pub fields: Vec<(&'static str, String)>,
}

impl Record {
    pub fn single(name: &'static str, value: impl ToString) -> Self {
        Self {
            fields: vec![(name, value.to_string())],
        }
    }

    pub fn with(mut self, name: &'static str, value: impl ToString) -> Self {
        self.fields.push((name, value.to_string()));
        self
    }

    /// Text prints a lone value bare, otherwise `name=value` per line.
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text if self.fields.len() == 1 => format!("{}\n", self.fields[0].1),
            Format::Text => self
                .fields
                .iter()
                .map(|(k, v)| format!("{k}={v}\n"))
                .collect(),
            Format::Csv => {
                let header: Vec<&str> = self.fields.iter().map(|(k, _)| *k).collect();
                let values: Vec<&str> = self.fields.iter().map(|(_, v)| v.as_str()).collect();
                format!("{}\n{}\n", header.join(","), values.join(","))
            }
            Format::Json => {
                let map: serde_json::Map<String, serde_json::Value> = self
                    .fields
                    .iter()
                    .map(|(k, v)| (k.to_string(), serde_json::Value::String(v.clone())))
                    .collect();
                let mut out = serde_json::to_string_pretty(&map).expect("map serializes");
                out.push('\n');
                out
            }
        }
    }
}
