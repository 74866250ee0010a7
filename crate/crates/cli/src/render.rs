//! Output shaping shared by the subcommands. JSON emits one object per
//! line; CSV puts one header before the rows; tables pad columns for
//! reading. Rows always appear in input order.

use std::io::Write;

use clap::ValueEnum;
use domchain_core::{Parameter, ParameterReport, VertexSet, CSV_HEADER};

/// Writes to stdout, treating a closed pipe as a normal end of output
/// (`domchain ... | head` must not panic). Other write errors are real.
pub fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let outcome = out.write_all(text.as_bytes()).and_then(|()| out.flush());
    if let Err(e) = outcome {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        panic!("cannot write to stdout: {e}");
    }
}

pub fn emitln(text: &str) {
    emit(&format!("{text}\n"));
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Table,
}

/// Escapes a string for embedding in hand-built JSON. graph6 bytes can
/// include backslashes, so this cannot be skipped.
pub fn json_str(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}

fn projected_json(report: &ParameterReport, params: &[Parameter]) -> String {
    let fields: Vec<String> = params
        .iter()
        .map(|&p| format!("{}:{}", json_str(p.key()), report.value(p)))
        .collect();
    format!("{{{}}}", fields.join(","))
}

fn projected_row(report: &ParameterReport, params: &[Parameter]) -> Vec<String> {
    params.iter().map(|&p| report.value(p).to_string()).collect()
}

fn full_row(report: &ParameterReport) -> Vec<String> {
    report.csv_row().split(',').map(str::to_string).collect()
}

/// Pads every column to its widest cell. The first row is the header.
pub fn tabulate(rows: &[Vec<String>]) -> String {
    let columns = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut widths = vec![0usize; columns];
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (i, cell) in row.iter().enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            line.push_str(&format!("{cell:<width$}", width = widths[i]));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// Renders compute output for one batch. `params` empty means the full
/// eleven-column report.
pub fn render_reports(
    rows: &[(String, &ParameterReport)],
    params: &[Parameter],
    format: OutputFormat,
) -> String {
    match format {
        OutputFormat::Json => {
            let mut out = String::new();
            for (_, report) in rows {
                if params.is_empty() {
                    out.push_str(&report.to_json());
                } else {
                    out.push_str(&projected_json(report, params));
                }
                out.push('\n');
            }
            out
        }
        OutputFormat::Csv => {
            let mut out = String::new();
            if params.is_empty() {
                out.push_str(CSV_HEADER);
            } else {
                let keys: Vec<&str> = params.iter().map(|p| p.key()).collect();
                out.push_str(&keys.join(","));
            }
            out.push('\n');
            for (_, report) in rows {
                if params.is_empty() {
                    out.push_str(&report.csv_row());
                } else {
                    out.push_str(&projected_row(report, params).join(","));
                }
                out.push('\n');
            }
            out
        }
        OutputFormat::Table => {
            let mut table: Vec<Vec<String>> = Vec::with_capacity(rows.len() + 1);
            let mut header = vec!["graph".to_string()];
            if params.is_empty() {
                header.extend(CSV_HEADER.split(',').map(str::to_string));
            } else {
                header.extend(params.iter().map(|p| p.key().to_string()));
            }
            table.push(header);
            for (origin, report) in rows {
                let mut row = vec![origin.clone()];
                if params.is_empty() {
                    row.extend(full_row(report));
                } else {
                    row.extend(projected_row(report, params));
                }
                table.push(row);
            }
            tabulate(&table)
        }
    }
}

pub fn witness_cell(witness: VertexSet) -> String {
    witness.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn witness_json(witness: VertexSet) -> String {
    let inner: Vec<String> = witness.iter().map(|v| v.to_string()).collect();
    format!("[{}]", inner.join(","))
}
