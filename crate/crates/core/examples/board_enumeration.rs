//! Count reachable boards by brute force and set them next to the table.
//!
//! cargo run --release --example board_enumeration -- 1 9

use pebbling::board::enumerate_counts;
use pebbling::recurrence::CountTable;

fn main() -> pebbling::Result<()> {
    let mut args = std::env::args()
        .skip(1)
        .map(|s| s.parse::<usize>().expect("integer argument"));
    let m = args.next().unwrap_or(0);
    let steps = args.next().unwrap_or(9);

    let counts = enumerate_counts(m, steps)?;
    let table = CountTable::build(counts.last_complete());
    println!(
        "{:>4} {:>10} {:>10} {:>10}",
        "k", "visited", "clean", "G(k,m)"
    );
    for (k, clean) in &counts.clean {
        let expect = table.g(*k, m)?;
        let mark = if *clean == expect { "" } else { "  MISMATCH" };
        println!(
            "{k:>4} {:>10} {clean:>10} {expect:>10}{mark}",
            counts.visited[k]
        );
    }
    Ok(())
}
