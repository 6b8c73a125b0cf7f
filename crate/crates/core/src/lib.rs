//! Exact and asymptotic counts of reachable configurations for chessboard
//! pebbling.
//!
//! A pebble at cell `(i, j)` of the quadrant may be replaced by two pebbles at
//! `(i + 1, j)` and `(i, j + 1)` when both are empty. Starting from the
//! arrangements described in [`board::initial_board`], this crate counts the
//! reachable configurations `G(k, m)` three independent ways:
//!
//! * [`recurrence`] builds the exact big-integer table from the defining
//!   recurrences,
//! * [`board`] enumerates boards by breadth-first search,
//! * [`genfunc`] extracts the counts as coefficients of exact truncated
//!   q-series built on [`series::IntSeries`].
//!
//! [`asymptotics`] locates the dominant singularity `z_*` of the generating
//! functions to arbitrary precision and evaluates the growth constants. The
//! [`cli`] module drives all of it from the `pebbling` binary.
//!
//! ```
//! use pebbling::recurrence::CountTable;
//!
//! let table = CountTable::build(7);
//! let totals: Vec<u64> = (2..=7)
//!     .map(|k| table.g_total(k).unwrap().try_into().unwrap())
//!     .collect();
//! assert_eq!(totals, [1, 2, 4, 9, 20, 46]);
//! ```

pub mod asymptotics;
pub mod board;
pub mod cli;
pub mod error;
pub mod genfunc;
pub mod precision;
pub mod recurrence;
pub mod report;
pub mod series;
pub mod verify;

pub use error::{Error, Result};

/// `m(m+5)/2 + 1`: for `k` at or below this value `G(k, m)` is zero.
pub const fn zero_threshold(m: usize) -> usize {
    m * (m + 5) / 2 + 1
}

/// Largest `m` with `m(m+5)/2 + 2 <= k`, or `None` when even `m = 0` is
/// below threshold (`k < 2`).
pub fn m_max(k: usize) -> Option<usize> {
    if k < 2 {
        return None;
    }
    let mut m = 0;
    while zero_threshold(m + 1) < k {
        m += 1;
    }
    Some(m)
}
