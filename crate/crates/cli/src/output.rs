//! Rendering of command results as JSON, CSV or plain text.

use std::io::Write;

use eo_core::report::{Report, Status};
use serde_json::Value;

use crate::args::Format;
use crate::error::CliError;

/// One command result in all three renderings.
pub struct Output {
    pub json: Value,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub pretty: String,
    pub pass: bool,
    pub default_format: Format,
}

impl Output {
    /// A computed value, shown as text unless asked otherwise.
    pub fn value(json: Value, header: &[&str], rows: Vec<Vec<String>>, pretty: String) -> Self {
        Output {
            json,
            header: header.iter().map(|s| s.to_string()).collect(),
            rows,
            pretty,
            pass: true,
            default_format: Format::Pretty,
        }
    }

    pub fn report(report: &Report) -> Result<Self, CliError> {
        let rows: Vec<Vec<String>> = report
            .records
            .iter()
            .map(|r| vec![r.id.clone(), status_name(r.status).into(), r.residual.clone(), format!("{:.3}", r.wall_ms)])
            .collect();
        let mut pretty = String::new();
        for r in &report.records {
            pretty += &format!(
                "{:<5} {:<34} {} ({:.1} ms)\n",
                status_name(r.status).to_uppercase(),
                r.id,
                r.residual,
                r.wall_ms
            );
        }
        pretty += &format!("{}: {}", report.suite, status_name(report.status));
        Ok(Output {
            json: serde_json::to_value(report)?,
            header: ["id", "status", "residual", "wall_ms"].iter().map(|s| s.to_string()).collect(),
            rows,
            pretty,
            pass: report.passed(),
            default_format: Format::Json,
        })
    }

    pub fn render(&self, format: Option<Format>, out: &mut impl Write) -> Result<(), CliError> {
        let stdout = |e: std::io::Error| CliError::io("<stdout>", e);
        match format.unwrap_or(self.default_format) {
            Format::Json => {
                serde_json::to_writer_pretty(&mut *out, &self.json).map_err(|e| stdout(e.into()))?;
                writeln!(out).map_err(stdout)?;
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(&mut *out);
                w.write_record(&self.header).map_err(|e| stdout(e.into()))?;
                for row in &self.rows {
                    w.write_record(row).map_err(|e| stdout(e.into()))?;
                }
                w.flush().map_err(stdout)?;
            }
            Format::Pretty => writeln!(out, "{}", self.pretty).map_err(stdout)?,
        }
        Ok(())
    }
}

pub fn status_name(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "fail",
        Status::Skipped => "skipped",
    }
}

pub fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}
