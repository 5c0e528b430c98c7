//! Reading closing-price CSVs and aligning them on their timestamps.
//!
//! Each file has a timestamp in its first column and one asset per further
//! column. Files are inner-joined: a timestamp survives only if every file
//! holding a selected asset has it and every selected cell parses as a
//! number. Dropped rows are counted and logged.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fs::File;
use std::io::{self, Read};
use std::path::{Path, PathBuf};

use tdamarket_core::geometry::PriceTable;

use crate::config::RunConfig;
use crate::error::PipelineError;

/// Aligned prices plus the number of timestamps that did not survive.
#[derive(Debug, Clone, PartialEq)]
pub struct Ingested {
    pub table: PriceTable,
    pub dropped_rows: usize,
}

/// One parsed input file. Cells are `None` when empty or non-numeric.
#[derive(Debug)]
struct PriceFile {
    path: PathBuf,
    assets: Vec<String>,
    rows: BTreeMap<String, Vec<Option<f64>>>,
}

fn open(path: &Path) -> Result<File, PipelineError> {
    File::open(path).map_err(|e| match e.kind() {
        io::ErrorKind::NotFound => PipelineError::FileNotFound(path.to_path_buf()),
        _ => PipelineError::io(path, e),
    })
}

fn parse_error(path: &Path, line: u64, message: impl Into<String>) -> PipelineError {
    PipelineError::Parse {
        path: path.to_path_buf(),
        line,
        message: message.into(),
    }
}

fn read_price_file<R: Read>(path: &Path, reader: R) -> Result<PriceFile, PipelineError> {
    let mut csv = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(reader);
    let csv_error = |e: csv::Error| {
        let line = e.position().map_or(0, |p| p.line());
        match e.into_kind() {
            csv::ErrorKind::Io(io) => PipelineError::io(path, io),
            other => parse_error(path, line, format!("{other:?}")),
        }
    };
    let headers = csv.headers().map_err(csv_error)?.clone();
    if headers.len() < 2 {
        return Err(parse_error(
            path,
            1,
            "expected a timestamp column and at least one asset column",
        ));
    }
    let assets: Vec<String> = headers.iter().skip(1).map(str::to_owned).collect();
    if let Some(i) = assets.iter().position(String::is_empty) {
        return Err(parse_error(
            path,
            1,
            format!("asset column {} has an empty name", i + 2),
        ));
    }
    let mut seen = HashSet::new();
    if let Some(dup) = assets.iter().find(|a| !seen.insert(a.as_str())) {
        return Err(PipelineError::DuplicateAsset(dup.clone()));
    }

    let mut rows = BTreeMap::new();
    for record in csv.records() {
        let record = record.map_err(csv_error)?;
        let line = record.position().map_or(0, |p| p.line());
        let timestamp = record.get(0).unwrap_or_default();
        if timestamp.is_empty() {
            return Err(parse_error(path, line, "empty timestamp"));
        }
        let values = record
            .iter()
            .skip(1)
            .map(|cell| cell.parse::<f64>().ok().filter(|v| v.is_finite()))
            .collect();
        if rows.insert(timestamp.to_owned(), values).is_some() {
            return Err(parse_error(
                path,
                line,
                format!("duplicate timestamp {timestamp:?}"),
            ));
        }
    }
    Ok(PriceFile {
        path: path.to_path_buf(),
        assets,
        rows,
    })
}

/// Reads every input, selects the configured assets and inner-joins them.
pub fn ingest(config: &RunConfig) -> Result<Ingested, PipelineError> {
    config.validate()?;
    let files = config
        .inputs
        .iter()
        .map(|p| read_price_file(p, open(p)?))
        .collect::<Result<Vec<_>, _>>()?;
    align(&files, config.assets.as_deref(), config.window)
}

fn align(
    files: &[PriceFile],
    selection: Option<&[String]>,
    window: usize,
) -> Result<Ingested, PipelineError> {
    // asset name -> (file, column)
    let mut location: HashMap<&str, (usize, usize)> = HashMap::new();
    let mut all_assets = Vec::new();
    for (f, file) in files.iter().enumerate() {
        for (c, name) in file.assets.iter().enumerate() {
            if location.insert(name, (f, c)).is_some() {
                return Err(PipelineError::DuplicateAsset(name.clone()));
            }
            all_assets.push(name.clone());
        }
    }
    let selected: Vec<String> = match selection {
        Some(names) => {
            for name in names {
                if !location.contains_key(name.as_str()) {
                    return Err(PipelineError::UnknownAsset(name.clone()));
                }
            }
            names.to_vec()
        }
        None => all_assets,
    };
    if selected.len() < 2 {
        return Err(PipelineError::Config(format!(
            "need at least two assets, found {}",
            selected.len()
        )));
    }
    let columns: Vec<(usize, usize)> = selected.iter().map(|a| location[a.as_str()]).collect();
    let used_files: Vec<usize> = {
        let mut f: Vec<usize> = columns.iter().map(|c| c.0).collect();
        f.sort_unstable();
        f.dedup();
        f
    };

    let mut all_timestamps: HashSet<&str> = HashSet::new();
    for &f in &used_files {
        all_timestamps.extend(files[f].rows.keys().map(String::as_str));
    }
    // BTreeMap iteration keeps timestamps sorted
    let base = &files[used_files[0]].rows;
    let mut timestamps = Vec::new();
    let mut values = Vec::new();
    for ts in base.keys() {
        let row: Option<Vec<f64>> = columns
            .iter()
            .map(|&(f, c)| files[f].rows.get(ts).and_then(|r| r[c]))
            .collect();
        if let Some(row) = row {
            if let Some(i) = row.iter().position(|&v| v <= 0.0) {
                return Err(PipelineError::NonPositivePrice {
                    timestamp: ts.clone(),
                    asset: selected[i].clone(),
                });
            }
            timestamps.push(ts.clone());
            values.extend(row);
        }
    }
    let dropped_rows = all_timestamps.len() - timestamps.len();
    if dropped_rows > 0 {
        let names: Vec<String> = used_files
            .iter()
            .map(|&f| files[f].path.display().to_string())
            .collect();
        log::warn!(
            "dropped {dropped_rows} of {} timestamps with missing or non-numeric prices ({})",
            all_timestamps.len(),
            names.join(", ")
        );
    }
    if timestamps.len() < window + 1 {
        return Err(PipelineError::TooFewCommonRows {
            rows: timestamps.len(),
            window,
        });
    }
    let table = PriceTable::new(values, selected, timestamps)?;
    Ok(Ingested {
        table,
        dropped_rows,
    })
}
