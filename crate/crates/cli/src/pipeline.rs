//! End-to-end runs: ingest, returns, windows, indicators, emission.

use rayon::prelude::*;
use tdamarket_core::geometry::{
    log_returns, sliding_windows, PriceTable, ReturnMatrix, WindowCloud,
};
use tdamarket_core::norms::{window_diagrams, window_indicators, MaxScale, NormSeries};
use tdamarket_core::persistence::PersistenceDiagram;

use crate::config::RunConfig;
use crate::emit::{self, OutputRecord};
use crate::error::PipelineError;
use crate::ingest::ingest;

#[derive(Debug, Clone, PartialEq)]
pub struct RunOutput {
    pub series: NormSeries,
    pub records: Vec<OutputRecord>,
    pub dropped_rows: usize,
}

fn with_pool<T: Send>(
    threads: Option<usize>,
    job: impl FnOnce() -> T + Send,
) -> Result<T, PipelineError> {
    match threads {
        None => Ok(job()),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| {
                    PipelineError::Config(format!("cannot start {n} worker threads: {e}"))
                })?;
            Ok(pool.install(job))
        }
    }
}

/// Indicators of every window, computed in parallel and joined in order.
pub fn norm_series(
    windows: &[WindowCloud],
    max_scale: MaxScale,
    labels: Vec<String>,
    threads: Option<usize>,
) -> Result<NormSeries, PipelineError> {
    let first = windows
        .first()
        .ok_or(tdamarket_core::norms::NormError::NoWindows)?;
    let indicators = with_pool(threads, || {
        windows
            .par_iter()
            .map(|w| window_indicators(w, max_scale))
            .collect::<Result<Vec<_>, _>>()
    })??;
    Ok(NormSeries::from_indicators(
        &indicators,
        first.len(),
        labels,
    ))
}

/// Returns and windows of an aligned price table.
pub fn prepare(
    table: &PriceTable,
    window: usize,
) -> Result<(ReturnMatrix, Vec<WindowCloud>), PipelineError> {
    let returns = log_returns(table)?;
    let windows = sliding_windows(&returns, window)?;
    Ok((returns, windows))
}

/// Runs the pipeline on an in-memory table without writing anything.
pub fn analyze_table(
    table: &PriceTable,
    config: &RunConfig,
) -> Result<(NormSeries, Vec<OutputRecord>), PipelineError> {
    let (returns, windows) = prepare(table, config.window)?;
    let series = norm_series(
        &windows,
        config.max_scale,
        table.labels().to_vec(),
        config.threads,
    )?;
    let records = emit::records(&series, returns.timestamps());
    Ok((series, records))
}

/// Ingests, analyzes and writes the configured outputs.
pub fn run(config: &RunConfig) -> Result<RunOutput, PipelineError> {
    let ingested = ingest(config)?;
    let (series, records) = analyze_table(&ingested.table, config)?;
    emit::write_atomic(&config.out, &emit::encode(&records, config.format)?)?;
    if let Some(path) = &config.normalized_out {
        emit::write_atomic(path, &emit::normalized_csv(&ingested.table)?)?;
    }
    log::info!(
        "wrote {} windows to {}",
        records.len(),
        config.out.display()
    );
    Ok(RunOutput {
        series,
        records,
        dropped_rows: ingested.dropped_rows,
    })
}

/// Per-window diagrams for the `diagram` subcommand.
pub fn diagrams(config: &RunConfig) -> Result<Vec<u8>, PipelineError> {
    let ingested = ingest(config)?;
    let (returns, windows) = prepare(&ingested.table, config.window)?;
    let all: Vec<(usize, PersistenceDiagram, PersistenceDiagram)> =
        with_pool(config.threads, || {
            windows
                .par_iter()
                .map(|w| {
                    window_diagrams(w, config.max_scale).map(|(h0, h1)| (w.window_start(), h0, h1))
                })
                .collect::<Result<Vec<_>, _>>()
        })??;
    emit::diagrams_csv(&all, returns.timestamps())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_prices_give_zero_indicators() {
        let rows = vec![[7.0, 3.0]; 40];
        let table = PriceTable::from_rows(&rows).unwrap();
        let config = RunConfig {
            window: 30,
            ..Default::default()
        };
        let (series, records) = analyze_table(&table, &config).unwrap();
        assert_eq!(series.len(), 40 - 1 - 30 + 1);
        assert!(series.rows.iter().all(|r| r.l0 == 0.0 && r.l1 == 0.0));
        assert_eq!(records[0].c1, None);
        assert_eq!(records[0].timestamp, table.timestamps()[1]);
    }

    #[test]
    fn thread_count_does_not_change_results() {
        let rows: Vec<[f64; 3]> = (0..60)
            .map(|i| {
                let x = i as f64;
                [
                    100.0 + (x * 0.7).sin(),
                    50.0 + (x * 1.3).cos(),
                    20.0 + (x * 0.37).sin() * 2.0,
                ]
            })
            .collect();
        let table = PriceTable::from_rows(&rows).unwrap();
        let one = analyze_table(
            &table,
            &RunConfig {
                window: 20,
                threads: Some(1),
                ..Default::default()
            },
        )
        .unwrap();
        let four = analyze_table(
            &table,
            &RunConfig {
                window: 20,
                threads: Some(4),
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(one, four);
    }
}
