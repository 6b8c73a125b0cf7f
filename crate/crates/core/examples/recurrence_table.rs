//! Print the nonzero part of the count table and the totals.
//!
//! cargo run --example recurrence_table -- 25

use pebbling::recurrence::CountTable;
use pebbling::{m_max, zero_threshold};

fn main() {
    let k_max: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("k_max must be an integer"))
        .unwrap_or(20);
    let table = CountTable::build(k_max);

    for k in 2..=k_max {
        let row: Vec<String> = (1..=m_max(k).unwrap_or(0))
            .filter(|&m| k > zero_threshold(m))
            .map(|m| format!("G({k},{m})={}", table.g(k, m).unwrap()))
            .collect();
        println!(
            "G({k}) = {:<12} {}",
            table.g_total(k).unwrap(),
            row.join("  ")
        );
    }
}
