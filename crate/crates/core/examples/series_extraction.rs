//! Read counts off the generating functions and compare with the recurrence.

use pebbling::genfunc::{g_from_series, g_total_from_series, gm_series, s_series};
use pebbling::recurrence::CountTable;
use pebbling::series::IntSeries;

fn main() -> pebbling::Result<()> {
    let order = 40;
    println!("S    = {}", head(&s_series(order), 8));
    println!("1/S  = {}", head(&s_series(order).invert()?, 8));
    for m in 1..=3 {
        println!("g_{m}  = {}", head(&gm_series(m, order), 6));
    }

    let table = CountTable::build(order as usize);
    for k in [10, 20, 30, 40] {
        let series = g_total_from_series(k, order)?;
        assert_eq!(series, table.g_total(k)?);
        println!("G({k}) = {series}");
    }
    assert_eq!(g_from_series(25, 2, order)?, table.g(25, 2)?);
    Ok(())
}

fn head(s: &IntSeries, n: usize) -> String {
    let terms: Vec<String> = s
        .terms()
        .take(n)
        .map(|(e, c)| format!("{c} z^{e}"))
        .collect();
    format!("{} + O(z^{})", terms.join(" + "), s.order() + 1)
}
