//! Run the shipped obligation ledgers and summarize their verdicts. The
//! length-44 collection verifies outright; the longer ones classify every
//! obligation and surface the claims that do not survive recomputation.
//!
//!     cargo run --release --example verify_ledger

use bwbverify::collections::{self, Status};
use bwbverify::ParabolicData;

fn main() {
    let p = ParabolicData::e6_p2();
    for (name, source) in collections::builtin_scripts() {
        let script = collections::parse_script(p, source).unwrap();
        let report = collections::verify_collection(p, &script, 1).unwrap();
        println!(
            "{name:<14} {:>4} proven {:>3} refuted {:>3} unknown  -> {}",
            report.counts.proven, report.counts.refuted, report.counts.unknown, report.verdict
        );
        for row in &report.obligations {
            if row.status == Status::Refuted {
                println!("    refuted: {} :: {}", row.args, row.witness);
            }
        }
    }
}
