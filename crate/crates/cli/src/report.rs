//! Report tables and atomic file output.
//!
//! CSV reports start with `#` comment lines carrying the version, the JSON
//! config echo, the seed and an approximate peak RSS, followed by a header
//! row and data rows. Column order is fixed per command.

use std::io::{self, Write};
use std::path::Path;
use std::time::Duration;

use anyhow::Context;
use serde::Serialize;

use crate::{CliResult, ReportFormat};

/// Everything needed to replay a run.
#[derive(Serialize)]
pub struct ConfigEcho<'a, C: Serialize> {
    pub version: &'static str,
    pub argv: &'a [String],
    pub command: &'a C,
}

pub struct Table {
    pub title: &'static str,
    pub columns: &'static [&'static str],
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(title: &'static str, columns: &'static [&'static str]) -> Self {
        Table { title, columns, rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

pub fn millis(d: Duration) -> String {
    d.as_millis().to_string()
}

pub fn pct(x: f64) -> String {
    format!("{x:.3}")
}

/// Peak resident set size in kB, from `/proc/self/status` where available.
pub fn peak_rss_kb() -> Option<u64> {
    let status = std::fs::read_to_string("/proc/self/status").ok()?;
    let line = status.lines().find(|l| l.starts_with("VmHWM:"))?;
    line.split_whitespace().nth(1)?.parse().ok()
}

fn render<C: Serialize>(
    table: &Table,
    format: ReportFormat,
    seed: u64,
    config: &ConfigEcho<C>,
) -> anyhow::Result<Vec<u8>> {
    let echo = serde_json::to_string(config)?;
    let rss = peak_rss_kb().map_or_else(|| "unavailable".to_string(), |kb| format!("{kb} kB"));
    let mut out = Vec::new();
    match format {
        ReportFormat::Csv => {
            writeln!(out, "# fdom {}", config.version)?;
            writeln!(out, "# {}", table.title)?;
            writeln!(out, "# seed: {seed}")?;
            writeln!(out, "# peak_rss (approximate): {rss}")?;
            writeln!(out, "# config: {echo}")?;
            let mut w = csv::Writer::from_writer(&mut out);
            w.write_record(table.columns)?;
            for row in &table.rows {
                w.write_record(row)?;
            }
            w.flush()?;
        }
        ReportFormat::Markdown => {
            writeln!(out, "## {}\n", table.title)?;
            writeln!(out, "| {} |", table.columns.join(" | "))?;
            writeln!(out, "|{}", "---|".repeat(table.columns.len()))?;
            for row in &table.rows {
                writeln!(out, "| {} |", row.join(" | "))?;
            }
            writeln!(out)?;
            writeln!(out, "- version: fdom {}", config.version)?;
            writeln!(out, "- seed: {seed}")?;
            writeln!(out, "- peak RSS (approximate): {rss}")?;
            writeln!(out, "- config: `{echo}`")?;
        }
    }
    Ok(out)
}

/// Writes the rendered report to `path`, or to standard output.
pub fn emit<C: Serialize>(
    table: &Table,
    format: ReportFormat,
    seed: u64,
    config: &ConfigEcho<C>,
    path: Option<&Path>,
) -> CliResult {
    let bytes = render(table, format, seed, config)?;
    match path {
        Some(path) => write_atomic(path, |w| w.write_all(&bytes).map_err(Into::into))?,
        None => io::stdout().lock().write_all(&bytes).context("writing report")?,
    }
    Ok(())
}

/// Writes through a temporary file in the destination directory and renames
/// it into place, so readers never observe a partial file.
pub fn write_atomic<F>(path: &Path, fill: F) -> anyhow::Result<()>
where
    F: FnOnce(&mut io::BufWriter<&mut tempfile::NamedTempFile>) -> anyhow::Result<()>,
{
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)
        .with_context(|| format!("creating temporary file in {}", dir.display()))?;
    {
        let mut w = io::BufWriter::new(&mut tmp);
        fill(&mut w)?;
        w.flush()?;
    }
    tmp.persist(path).with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}
