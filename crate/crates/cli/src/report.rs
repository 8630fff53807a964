use std::fmt;

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl Status {
    pub fn from_pass(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn exit_code(self) -> u8 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Error => 2,
        }
    }

    fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Error => "ERROR",
        }
    }
}

/// Rows for csv output; every cell is already formatted.
#[derive(Clone, Debug, Default)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: Vec<&'static str>) -> Self {
        Self {
            header,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }
}

/// Result of one subcommand before it is wrapped into a report.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub status: Status,
    /// Short description for the text status line, e.g. `lemma n=1..16`.
    pub summary: String,
    pub payload: Value,
    pub table: Option<Table>,
    /// Extra lines printed after the status line in text mode.
    pub details: Vec<String>,
}

impl Outcome {
    pub fn new(status: Status, summary: impl Into<String>, payload: Value) -> Self {
        Self {
            status,
            summary: summary.into(),
            payload,
            table: None,
            details: Vec::new(),
        }
    }

    pub fn with_table(mut self, table: Table) -> Self {
        self.table = Some(table);
        self
    }

    pub fn with_details(mut self, details: Vec<String>) -> Self {
        self.details = details;
        self
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub status: Status,
    pub payload: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
    #[serde(skip)]
    pub summary: String,
    #[serde(skip)]
    pub table: Option<Table>,
    #[serde(skip)]
    pub details: Vec<String>,
}

impl RunReport {
    pub fn from_outcome(command: String, outcome: Outcome, timing_ms: Option<u128>) -> Self {
        Self {
            command,
            status: outcome.status,
            payload: outcome.payload,
            timing_ms,
            summary: outcome.summary,
            table: outcome.table,
            details: outcome.details,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug)]
pub struct FormatUnsupported {
    pub command: String,
}

impl fmt::Display for FormatUnsupported {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FormatUnsupported: `{}` has no tabular payload for csv",
            self.command
        )
    }
}

impl std::error::Error for FormatUnsupported {}

pub fn emit_report(report: &RunReport, format: Format) -> Result<String, FormatUnsupported> {
    match format {
        Format::Json => {
            let mut out = serde_json::to_string_pretty(report).expect("report is valid json");
            out.push('\n');
            Ok(out)
        }
        Format::Csv => {
            let table = report.table.as_ref().ok_or_else(|| FormatUnsupported {
                command: report.command.clone(),
            })?;
            let mut out = table.header.join(",");
            out.push('\n');
            for row in &table.rows {
                out.push_str(&row.join(","));
                out.push('\n');
            }
            Ok(out)
        }
        Format::Text => {
            let mut out = format!("{} {}", report.status.label(), report.summary);
            if let Some(ms) = report.timing_ms {
                out.push_str(&format!(" ({ms}ms)"));
            }
            out.push('\n');
            for line in &report.details {
                out.push_str(line);
                out.push('\n');
            }
            Ok(out)
        }
    }
}
