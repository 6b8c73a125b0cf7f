//! How fast exact counts approach their asymptotic forms.

use pebbling::asymptotics::{find_zstar, ratio_report, PrecisionPolicy};
use pebbling::recurrence::CountTable;

fn main() -> pebbling::Result<()> {
    let policy = PrecisionPolicy::new(50);
    let table = CountTable::build(300);
    let cert = find_zstar(&policy)?;
    let ks: Vec<usize> = (1..=12).map(|i| 25 * i).collect();
    let report = ratio_report(&table, &cert, &policy, &ks, &[0, 1, 2, 5])?;

    for e in &report.entries {
        match (&e.ratio, e.gap) {
            (Some(r), Some(gap)) => println!("k={:<4} m={}  ratio {r}  gap {gap:.2e}", e.k, e.m),
            _ => println!("k={:<4} m={}  inapplicable", e.k, e.m),
        }
    }
    for m in [0, 1, 2, 5] {
        println!("m={m}: gaps decreasing = {}", report.gaps_decreasing(m));
    }
    Ok(())
}
