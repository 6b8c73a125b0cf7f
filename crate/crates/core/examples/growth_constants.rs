//! Locate the dominant singularity and print the growth constants.
//!
//! cargo run --release --example growth_constants -- 40

use pebbling::asymptotics::{AsymptoticConstants, PrecisionPolicy};
use pebbling::precision::to_decimal;

fn main() -> pebbling::Result<()> {
    let digits = std::env::args()
        .nth(1)
        .map_or(30, |s| s.parse().expect("digits must be an integer"));
    let policy = PrecisionPolicy::new(digits);
    let c = AsymptoticConstants::compute(&policy)?;

    println!(
        "series order {}, {} bits, grid sign changes {}",
        c.certificate.series_order, c.certificate.bits, c.certificate.grid_sign_changes
    );
    println!(
        "bracket width {}",
        to_decimal(&c.certificate.bracket_width(), digits + 4)
    );
    for d in c.decimals() {
        println!("{:<20} {}", d.name, d.value);
    }
    Ok(())
}
