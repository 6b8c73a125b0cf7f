//! Exact table of `G(k, m)` built from the defining recurrences
//!
//! ```text
//! G(k,0) = 2 G(k-1,0) + G(k,1) + [k = 2]
//! G(k,1) = G(k-3,0) + 2 G(k-2,1) + G(k-1,2) + G(k-4,1)
//! G(k,m) = G(k-m-2,m-1) + 2 G(k-m-1,m) + G(k-m,m+1)        (m >= 2)
//! ```
//!
//! with `G(k, m) = 0` whenever `k <= m(m+5)/2 + 1`. Within each `k` the rows
//! are filled from the largest feasible `m` down to `m = 1` (every right-hand
//! side then refers to a strictly smaller `k`), and `G(k, 0)` last since it
//! needs `G(k, 1)` at the same `k`.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::report::{Check, VerificationReport};
use crate::{m_max, zero_threshold};

/// Dense in `k`, sparse in `m`: row `k` holds `G(k, 0..=m_max(k))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    k_max: usize,
    rows: Vec<Vec<BigUint>>,
}

impl CountTable {
    pub fn build(k_max: usize) -> Self {
        let mut table = CountTable {
            k_max,
            rows: Vec::with_capacity(k_max + 1),
        };
        for k in 0..=k_max {
            let width = m_max(k).map_or(1, |m| m + 1);
            table.rows.push(vec![BigUint::zero(); width]);
            let Some(top) = m_max(k) else { continue };
            for m in (1..=top).rev() {
                let value = if m >= 2 {
                    table.at(k as i64 - m as i64 - 2, m - 1)
                        + table.at(k as i64 - m as i64 - 1, m) * 2u32
                        + table.at(k as i64 - m as i64, m + 1)
                } else {
                    table.at(k as i64 - 3, 0)
                        + table.at(k as i64 - 2, 1) * 2u32
                        + table.at(k as i64 - 1, 2)
                        + table.at(k as i64 - 4, 1)
                };
                table.rows[k][m] = value;
            }
            let mut total = table.at(k as i64 - 1, 0) * 2u32 + table.at(k as i64, 1);
            if k == 2 {
                total += 1u32;
            }
            table.rows[k][0] = total;
        }
        table
    }

    /// Value during construction: zero below threshold or for negative `k`.
    fn at(&self, k: i64, m: usize) -> BigUint {
        if k < 0 || k as usize <= zero_threshold(m) {
            return BigUint::zero();
        }
        self.rows[k as usize].get(m).cloned().unwrap_or_default()
    }

    pub fn k_max(&self) -> usize {
        self.k_max
    }

    /// `G(k, m)`. Indices at or below the zero threshold answer 0 even
    /// beyond `k_max`; anything else outside the table is an error.
    pub fn g(&self, k: usize, m: usize) -> Result<BigUint> {
        if k <= zero_threshold(m) {
            return Ok(BigUint::zero());
        }
        if k > self.k_max {
            return Err(Error::TableTooSmall {
                k,
                m,
                k_max: self.k_max,
            });
        }
        Ok(self.rows[k][m].clone())
    }

    /// Total number of reachable configurations `G(k) = G(k, 0)`, `k >= 2`.
    pub fn g_total(&self, k: usize) -> Result<BigUint> {
        if k < 2 {
            return Err(Error::UndefinedIndex { k });
        }
        self.g(k, 0)
    }

    /// Stored `(k, m, G(k, m))` entries in `(k, m)` order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &BigUint)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(k, row)| row.iter().enumerate().map(move |(m, g)| (k, m, g)))
    }

    #[cfg(test)]
    pub(crate) fn corrupt(&mut self, k: usize, m: usize, value: BigUint) {
        self.rows[k][m] = value;
    }
}

fn pow2(e: usize) -> BigUint {
    BigUint::one() << e
}

/// Checks the two derived boundary conditions against the table:
///
/// * `total-as-power-sum`: `G(k,0) = 2^(k-2) + sum_{l=1..k} 2^(k-l) G(l,1)` for `k >= 2`,
/// * `m1-eliminated`: `G(k,1) = 2G(k-2,1) + G(k-1,2) + G(k-4,1) + 2^(k-5)
///   + sum_{l=1..k-3} 2^(k-l-3) G(l,1)` for `k >= 5`.
pub fn verify_boundary_identities(table: &CountTable) -> VerificationReport {
    const SUITE: &str = "boundary";
    let g = |k: i64, m: usize| table.at(k, m);
    let k_max = table.k_max();
    let mut report = VerificationReport::new();

    // running sum_{l=1..k} 2^(k-l) G(l,1)
    let mut weighted = BigUint::zero();
    let mut first_bad = None;
    for k in 1..=k_max {
        weighted = weighted * 2u32 + g(k as i64, 1);
        if k >= 2 && first_bad.is_none() && g(k as i64, 0) != pow2(k - 2) + &weighted {
            first_bad = Some(k);
        }
    }
    let through = (k_max >= 2).then_some(k_max as i64);
    report.push(match first_bad {
        None => Check::pass(SUITE, "total-as-power-sum", through),
        Some(k) => Check::fail(SUITE, "total-as-power-sum", through, format!("k = {k}")),
    });

    let mut first_bad = None;
    for k in 5..=k_max {
        let tail: BigUint = (1..=k - 3).map(|l| pow2(k - l - 3) * g(l as i64, 1)).sum();
        let k = k as i64;
        let rhs = g(k - 2, 1) * 2u32 + g(k - 1, 2) + g(k - 4, 1) + pow2(k as usize - 5) + tail;
        if g(k, 1) != rhs {
            first_bad = Some(k);
            break;
        }
    }
    let through = (k_max >= 5).then_some(k_max as i64);
    report.push(match first_bad {
        None => Check::pass(SUITE, "m1-eliminated", through),
        Some(k) => Check::fail(SUITE, "m1-eliminated", through, format!("k = {k}")),
    });
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn first_totals() {
        let t = CountTable::build(7);
        let got: Vec<_> = (2..=7).map(|k| t.g_total(k).unwrap()).collect();
        assert_eq!(got, [1u64, 2, 4, 9, 20, 46].map(n));
    }

    #[test]
    fn first_m1_values() {
        let t = CountTable::build(7);
        assert_eq!(t.g(4, 1).unwrap(), n(0));
        assert_eq!(t.g(5, 1).unwrap(), n(1));
        assert_eq!(t.g(6, 1).unwrap(), n(2));
        assert_eq!(t.g(7, 1).unwrap(), n(6));
    }

    #[test]
    fn lookups() {
        let t = CountTable::build(12);
        assert_eq!(t.g(1, 0).unwrap(), n(0));
        assert_eq!(t.g(6, 0).unwrap(), n(20));
        assert_eq!(t.g(9, 2).unwrap(), n(1));
        assert_eq!(t.g(12, 2).unwrap(), n(15));
        // below threshold answers zero even beyond the table
        assert_eq!(t.g(100, 12).unwrap(), n(0));
        assert_eq!(
            t.g(13, 0),
            Err(Error::TableTooSmall {
                k: 13,
                m: 0,
                k_max: 12
            })
        );
        assert_eq!(t.g_total(1), Err(Error::UndefinedIndex { k: 1 }));
        assert_eq!(t.g_total(2).unwrap(), n(1));
        assert_eq!(t.g_total(3).unwrap(), n(2));
    }

    #[test]
    fn build_zero() {
        let t = CountTable::build(0);
        assert_eq!(t.k_max(), 0);
        assert_eq!(t.g(0, 0).unwrap(), n(0));
    }

    #[test]
    fn general_recurrence_holds() {
        let t = CountTable::build(120);
        for (k, m, v) in t.entries() {
            if m >= 2 {
                let k = k as i64;
                let rhs = t.at(k - m as i64 - 2, m - 1)
                    + t.at(k - m as i64 - 1, m) * 2u32
                    + t.at(k - m as i64, m + 1);
                assert_eq!(*v, rhs, "G({k},{m})");
            }
        }
    }

    #[test]
    fn zero_threshold_is_sharp() {
        let t = CountTable::build(150);
        for k in 0..=150 {
            let top = m_max(k).map_or(0, |m| m + 1);
            for m in 0..=top {
                let zero = t.g(k, m).unwrap().is_zero();
                assert_eq!(zero, k <= zero_threshold(m), "G({k},{m})");
            }
        }
    }

    #[test]
    fn totals_grow() {
        let t = CountTable::build(200);
        for k in 3..200 {
            assert!(t.g_total(k + 1).unwrap() > t.g_total(k).unwrap());
        }
    }

    #[test]
    fn totals_leave_u64_early() {
        let t = CountTable::build(80);
        assert!(t.g_total(60).unwrap() > n(u64::MAX));
    }

    #[test]
    fn boundary_identities_hold() {
        let report = verify_boundary_identities(&CountTable::build(50));
        assert!(report.all_passed(), "{report}");
        assert_eq!(report.len(), 2);
    }

    #[test]
    fn boundary_identities_at_range_edge() {
        let report = verify_boundary_identities(&CountTable::build(5));
        assert!(report.all_passed(), "{report}");
        assert_eq!(
            report.get("m1-eliminated").unwrap().verified_through,
            Some(5)
        );
    }

    #[test]
    fn corrupted_total_is_located() {
        let mut t = CountTable::build(40);
        t.corrupt(17, 0, n(12345));
        let report = verify_boundary_identities(&t);
        let bad = report.first_failure().unwrap();
        assert_eq!(bad.name, "total-as-power-sum");
        assert_eq!(bad.first_failure.as_deref(), Some("k = 17"));
        assert!(report.get("m1-eliminated").unwrap().passed);
    }

    #[test]
    fn deterministic() {
        assert_eq!(CountTable::build(90), CountTable::build(90));
    }
}
