//! Pinned output for the variance-burst regime change.
//!
//! Set `TDAMARKET_BLESS=1` to rewrite the golden file after a verified change.

use std::fmt::Write as _;
use std::path::Path;

use tdamarket::{emit, run, RunConfig};
use tdamarket_testkit::synth;

const GOLDEN: &str = concat!(
    env!("CARGO_MANIFEST_DIR"),
    "/tests/golden/variance_burst.csv"
);

#[test]
fn variance_burst_matches_golden_file() {
    let returns = synth::variance_burst_returns(2008, 300, 4, 0.01, 120, 180, 25.0);
    let prices = synth::prices_from_returns(100.0, &returns);
    let mut text = String::from("date,a,b,c,d\n");
    for (i, row) in prices.iter().enumerate() {
        let cells: Vec<String> = row.iter().map(|v| emit::format_float(*v)).collect();
        writeln!(text, "d{i:04},{}", cells.join(",")).unwrap();
    }
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("burst.csv");
    let out = dir.path().join("out.csv");
    std::fs::write(&input, text).unwrap();
    run(&RunConfig {
        inputs: vec![input],
        out: out.clone(),
        ..RunConfig::default()
    })
    .unwrap();
    let got = std::fs::read(&out).unwrap();

    let records = emit::parse_csv(&got).unwrap();
    let peak = records.iter().max_by(|a, b| a.l1.total_cmp(&b.l1)).unwrap();
    assert!(
        peak.t + 29 >= 120 && peak.t <= 180,
        "l1 peak at window {}",
        peak.t
    );

    if std::env::var_os("TDAMARKET_BLESS").is_some() || !Path::new(GOLDEN).exists() {
        std::fs::write(GOLDEN, &got).unwrap();
    }
    let want = std::fs::read(GOLDEN).unwrap();
    assert!(got == want, "output differs from {GOLDEN}");
}
