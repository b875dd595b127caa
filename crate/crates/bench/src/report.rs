//! Table and CSV output.

use std::io::{Read, Write};

use crate::experiment::TimingRecord;
use crate::fit::FitResult;

#[derive(Clone, Debug)]
pub struct ReportRow {
    pub scene: String,
    pub method: String,
    /// `(error lines, lines)`; `None` prints a dash.
    pub errors: Option<(usize, usize)>,
    pub fit: Option<FitResult>,
}

fn cell(x: Option<f64>) -> String {
    x.map_or_else(|| "—".to_string(), |v| format!("{v:.6}"))
}

pub fn format_table(rows: &[ReportRow]) -> String {
    let header = [
        "Scene",
        "Method",
        "Errors",
        "ms/Quadric",
        "ms/Comp",
        "Const ms",
        "Σ Residual",
    ];
    let body: Vec<[String; 7]> = rows
        .iter()
        .map(|r| {
            [
                r.scene.clone(),
                r.method.clone(),
                r.errors
                    .map_or_else(|| "—".to_string(), |(e, n)| format!("{e}/{n}")),
                cell(r.fit.and_then(|f| f.per_quadric)),
                cell(r.fit.map(|f| f.per_comparison)),
                cell(r.fit.map(|f| f.constant)),
                cell(r.fit.map(|f| f.residual)),
            ]
        })
        .collect();
    let mut widths = header.map(|h| h.chars().count());
    for row in &body {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: &[String]| -> String {
        let parts: Vec<String> = cells
            .iter()
            .zip(widths)
            .map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        parts.join("  ").trim_end().to_string()
    };
    let mut out = line(&header.map(String::from));
    out.push('\n');
    out.push_str(&widths.map(|w| "-".repeat(w)).join("  "));
    out.push('\n');
    for row in &body {
        out.push_str(&line(row));
        out.push('\n');
    }
    out
}

pub fn write_records_csv<W: Write>(out: W, records: &[TimingRecord]) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in records {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_records_csv<R: Read>(input: R) -> csv::Result<Vec<TimingRecord>> {
    csv::Reader::from_reader(input).deserialize().collect()
}

/// Comparison counts against time with the per-quadric term removed.
pub fn write_adjusted_csv<W: Write>(out: W, points: &[(u64, f64)]) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["comparisons", "adjusted_ms"])?;
    for (c, t) in points {
        w.write_record([c.to_string(), format!("{t:.9}")])?;
    }
    w.flush()?;
    Ok(())
}
