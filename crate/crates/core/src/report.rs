//! Plain-text key-value reports with a stable, diffable schema.
//!
//! Every report starts with `schema:` and `command:` lines; the remaining
//! keys are fixed per command (see the README for the full schema). Rates
//! are printed unreduced as `k/n` so the raw parameters stay visible.
//! Identical inputs and flags produce byte-identical reports.

use std::fmt::Display;

use crate::code::EaqeccCode;
use crate::decoder::{SimReport, SyndromeTable};
use crate::DistanceResult;

/// Schema identifier emitted by every report.
pub const SCHEMA: &str = "eaqecc-report/1";

/// Accumulates `key: value` lines.
pub struct Report {
    lines: Vec<String>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        let mut report = Report { lines: Vec::new() };
        report.push("schema", SCHEMA);
        report.push("command", command);
        report
    }

    pub fn push(&mut self, key: &str, value: impl Display) {
        self.lines.push(format!("{key}: {value}"));
    }

    /// The finished report, one line per key, newline-terminated.
    pub fn render(&self) -> String {
        let mut out = self.lines.join("\n");
        out.push('\n');
        out
    }
}

/// Code parameters, the generator listing in Pauli-label form (tagged with
/// its standard-form role), and the augmented check matrix in 0/1 block form.
pub fn push_code(report: &mut Report, code: &EaqeccCode) {
    let params = code.params();
    report.push("n", params.n);
    report.push("k", params.k);
    report.push("c", params.c);
    report.push("s", params.s);
    report.push("rate", format!("{}/{}", params.k, params.n));
    report.push(
        "net_rate",
        format!("{}/{}", params.k as i64 - params.c as i64, params.n),
    );
    report.push("dropped_dependent", code.dropped_dependent());

    report.push("generators", code.syndrome_len());
    let mut index = 0;
    for (i, pair) in code.form().pairs().iter().enumerate() {
        index += 1;
        report.push(
            &format!("generator_{index}"),
            format!("zbar_{} {}", i + 1, pair.zbar),
        );
        index += 1;
        report.push(
            &format!("generator_{index}"),
            format!("xbar_{} {}", i + 1, pair.xbar),
        );
    }
    for (i, iso) in code.form().isotropic().iter().enumerate() {
        index += 1;
        report.push(
            &format!("generator_{index}"),
            format!("iso_{} {}", i + 1, iso),
        );
    }

    report.push("augmented_rows", code.augmented().len());
    for (i, row) in code.augmented().rows().iter().enumerate() {
        report.push(&format!("augmented_{}", i + 1), row.to_binary_row());
    }
}

/// The outcome of a bounded distance search.
pub fn push_distance(report: &mut Report, max_weight: usize, result: DistanceResult) {
    report.push("max_weight", max_weight);
    report.push("distance", result);
}

/// Monte Carlo results; the channel and seed are always echoed.
pub fn push_sim(report: &mut Report, table: &SyndromeTable, sim: &SimReport) {
    report.push("table_max_weight", table.covered_weight());
    report.push("table_entries", table.len());
    report.push("trials", sim.trials);
    report.push("failures", sim.failures);
    report.push("decoder_misses", sim.decoder_misses);
    report.push("block_error_rate", sim.block_error_rate);
    report.push("seed", sim.seed);
    report.push("px", sim.channel.px());
    report.push("py", sim.channel.py());
    report.push("pz", sim.channel.pz());
}
