//! W0(l): the number of configurations with l pebbles above the minimum,
//! which stops depending on m once m >= l - 3.

use pebbling::genfunc::w0_values;
use pebbling::recurrence::CountTable;
use pebbling::zero_threshold;

fn main() -> pebbling::Result<()> {
    let l_max = 11;
    let w = w0_values(l_max)?;
    let table = CountTable::build(zero_threshold(8) - 1 + l_max);

    print!("{:>3} {:>6}", "l", "W0");
    for m in 3..=8 {
        print!(" {:>6}", format!("m={m}"));
    }
    println!();
    for (l, w0) in &w {
        print!("{l:>3} {w0:>6}");
        for m in 3..=8 {
            let g = table.g(zero_threshold(m) - 1 + l, m)?;
            let cell = if m + 3 >= *l {
                g.to_string()
            } else {
                format!("({g})")
            };
            print!(" {cell:>6}");
        }
        println!();
    }
    println!("values in parentheses are past the collapse range");
    Ok(())
}
