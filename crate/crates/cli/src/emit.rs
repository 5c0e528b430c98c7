//! Output files: the indicator series (CSV or JSON), normalized prices and
//! per-window diagram dumps.
//!
//! Files are written to a temporary sibling and renamed into place, so an
//! interrupted run never leaves a partial file behind.

use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};
use tdamarket_core::geometry::PriceTable;
use tdamarket_core::norms::NormSeries;
use tdamarket_core::persistence::PersistenceDiagram;

use crate::config::OutputFormat;
use crate::error::PipelineError;

/// One output row. `c1` is `None` for the first window.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub t: usize,
    pub timestamp: String,
    pub l0: f64,
    pub l1: f64,
    pub c1: Option<f64>,
}

pub const CSV_HEADER: [&str; 5] = ["t", "timestamp", "l0", "l1", "c1"];

/// Pairs each window with the timestamp of its first return row.
pub fn records(series: &NormSeries, return_timestamps: &[String]) -> Vec<OutputRecord> {
    series
        .rows
        .iter()
        .map(|r| OutputRecord {
            t: r.t,
            timestamp: return_timestamps[r.t].clone(),
            l0: r.l0,
            l1: r.l1,
            c1: r.c1,
        })
        .collect()
}

/// Shortest representation that parses back to the same `f64`.
pub fn format_float(v: f64) -> String {
    if v.is_infinite() {
        return if v > 0.0 { "inf".into() } else { "-inf".into() };
    }
    format!("{v:?}")
}

fn csv_writer(buf: &mut Vec<u8>) -> csv::Writer<&mut Vec<u8>> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(buf)
}

fn into_bytes(w: csv::Writer<&mut Vec<u8>>) -> Result<(), PipelineError> {
    w.into_inner()
        .map_err(|e| PipelineError::io("<buffer>", e.into_error()))?;
    Ok(())
}

fn csv_err(e: csv::Error) -> PipelineError {
    PipelineError::io("<buffer>", std::io::Error::other(e))
}

pub fn to_csv(records: &[OutputRecord]) -> Result<Vec<u8>, PipelineError> {
    let mut buf = Vec::new();
    let mut w = csv_writer(&mut buf);
    w.write_record(CSV_HEADER).map_err(csv_err)?;
    for r in records {
        let c1 = r.c1.map(format_float).unwrap_or_default();
        w.write_record([
            r.t.to_string(),
            r.timestamp.clone(),
            format_float(r.l0),
            format_float(r.l1),
            c1,
        ])
        .map_err(csv_err)?;
    }
    into_bytes(w)?;
    Ok(buf)
}

pub fn to_json(records: &[OutputRecord]) -> Result<Vec<u8>, PipelineError> {
    let mut buf =
        serde_json::to_vec_pretty(records).map_err(|e| PipelineError::io("<buffer>", e.into()))?;
    buf.push(b'\n');
    Ok(buf)
}

pub fn encode(records: &[OutputRecord], format: OutputFormat) -> Result<Vec<u8>, PipelineError> {
    match format {
        OutputFormat::Csv => to_csv(records),
        OutputFormat::Json => to_json(records),
    }
}

/// Parses a series written by [`to_csv`].
pub fn parse_csv(bytes: &[u8]) -> Result<Vec<OutputRecord>, PipelineError> {
    let mut rdr = csv::Reader::from_reader(bytes);
    let bad = |line: u64, message: String| PipelineError::Parse {
        path: "<series>".into(),
        line,
        message,
    };
    let headers = rdr.headers().map_err(|e| bad(1, e.to_string()))?;
    if headers.iter().ne(CSV_HEADER) {
        return Err(bad(1, format!("unexpected header {headers:?}")));
    }
    let mut out = Vec::new();
    for rec in rdr.records() {
        let rec = rec.map_err(|e| bad(0, e.to_string()))?;
        let line = rec.position().map_or(0, |p| p.line());
        let num = |i: usize| -> Result<f64, PipelineError> {
            rec[i]
                .parse()
                .map_err(|_| bad(line, format!("bad number {:?}", &rec[i])))
        };
        out.push(OutputRecord {
            t: rec[0]
                .parse()
                .map_err(|_| bad(line, format!("bad index {:?}", &rec[0])))?,
            timestamp: rec[1].to_owned(),
            l0: num(2)?,
            l1: num(3)?,
            c1: if rec[4].is_empty() {
                None
            } else {
                Some(num(4)?)
            },
        });
    }
    Ok(out)
}

/// Parses a series written by [`to_json`].
pub fn parse_json(bytes: &[u8]) -> Result<Vec<OutputRecord>, PipelineError> {
    serde_json::from_slice(bytes).map_err(|e| PipelineError::Parse {
        path: "<series>".into(),
        line: e.line() as u64,
        message: e.to_string(),
    })
}

/// Per-asset min-max scaling to `[0, 1]`; constant assets map to 0.
pub fn normalized_csv(table: &PriceTable) -> Result<Vec<u8>, PipelineError> {
    let n = table.cols();
    let mut lo = vec![f64::INFINITY; n];
    let mut hi = vec![f64::NEG_INFINITY; n];
    for i in 0..table.rows() {
        for (j, &v) in table.row(i).iter().enumerate() {
            lo[j] = lo[j].min(v);
            hi[j] = hi[j].max(v);
        }
    }
    let mut buf = Vec::new();
    let mut w = csv_writer(&mut buf);
    let mut header = vec!["date".to_string()];
    header.extend(table.labels().iter().cloned());
    w.write_record(&header).map_err(csv_err)?;
    for i in 0..table.rows() {
        let mut rec = vec![table.timestamps()[i].clone()];
        rec.extend(table.row(i).iter().enumerate().map(|(j, &v)| {
            let span = hi[j] - lo[j];
            format_float(if span > 0.0 { (v - lo[j]) / span } else { 0.0 })
        }));
        w.write_record(&rec).map_err(csv_err)?;
    }
    into_bytes(w)?;
    Ok(buf)
}

/// One diagram row per bar: `t,timestamp,dim,birth,death`, `inf` for
/// essential classes.
pub fn diagrams_csv(
    windows: &[(usize, PersistenceDiagram, PersistenceDiagram)],
    return_timestamps: &[String],
) -> Result<Vec<u8>, PipelineError> {
    let mut buf = Vec::new();
    let mut w = csv_writer(&mut buf);
    w.write_record(["t", "timestamp", "dim", "birth", "death"])
        .map_err(csv_err)?;
    for (t, h0, h1) in windows {
        for p in h0.pairs().iter().chain(h1.pairs()) {
            w.write_record([
                t.to_string(),
                return_timestamps[*t].clone(),
                p.dim.to_string(),
                format_float(p.birth),
                format_float(p.death),
            ])
            .map_err(csv_err)?;
        }
    }
    into_bytes(w)?;
    Ok(buf)
}

/// Writes `bytes` to `path` via a temporary file and rename; `-` means
/// stdout.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<(), PipelineError> {
    if path == Path::new("-") {
        let mut out = std::io::stdout().lock();
        return out
            .write_all(bytes)
            .and_then(|_| out.flush())
            .map_err(|e| PipelineError::io("<stdout>", e));
    }
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| PipelineError::io(dir, e))?;
    tmp.write_all(bytes)
        .and_then(|_| tmp.as_file().sync_all())
        .map_err(|e| PipelineError::io(path, e))?;
    tmp.persist(path)
        .map_err(|e| PipelineError::io(path, e.error))?;
    Ok(())
}
