//! Every verification suite behind one entry point.

use astro_float::BigFloat;
use serde::Serialize;

use crate::asymptotics::{AsymptoticConstants, PrecisionPolicy};
use crate::board::{enumerate_counts, initial_board};
use crate::error::Result;
use crate::genfunc::{verify_against_table, verify_series_identities, verify_w_collapse};
use crate::precision::{consts, parse_decimal, pow10_neg, RM};
use crate::recurrence::{verify_boundary_identities, CountTable};
use crate::report::{Check, VerificationReport};
use crate::zero_threshold;

/// Published decimal values of the constants with the tolerance each is
/// known to.
pub const REFERENCE_CONSTANTS: [(&str, &str, usize); 5] = [
    ("z_star", "0.430729593137930", 15),
    ("a", "2.321642199494", 12),
    ("c_star", "0.12268707", 8),
    ("c_1", "2.027402047468498", 14),
    ("theorem_b_prefactor", "0.287777704935052", 13),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct VerifyConfig {
    pub k_max: usize,
    pub m_max: usize,
    pub order: i64,
    pub max_steps: usize,
    pub policy: PrecisionPolicy,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            k_max: 80,
            m_max: 10,
            order: 200,
            max_steps: 9,
            policy: PrecisionPolicy::new(20),
        }
    }
}

/// Brute-force clean counts from `initial_board(m)`, `m = 0..=m_max`,
/// against the table, over every fully explored pebble total.
pub fn verify_oracle(
    table: &CountTable,
    m_max: usize,
    max_steps: usize,
) -> Result<VerificationReport> {
    const SUITE: &str = "oracle";
    let mut report = VerificationReport::new();
    for m in 0..=m_max {
        let base = initial_board(m).pebbles();
        if base > table.k_max() {
            break;
        }
        let steps = max_steps.min(table.k_max() - base);
        let counts = enumerate_counts(m, steps)?;
        let name = format!("clean counts m={m}");
        let through = Some(counts.last_complete() as i64);
        let bad = counts.clean.iter().find_map(|(&k, clean)| {
            let expect = table.g(k, m).ok()?;
            (*clean != expect).then(|| format!("k = {k}: boards {clean}, table {expect}"))
        });
        report.push(match bad {
            None => Check::pass(SUITE, name, through),
            Some(f) => Check::fail(SUITE, name, through, f),
        });
    }
    Ok(report)
}

fn within(
    value: &BigFloat,
    reference: &str,
    places: usize,
    policy: &PrecisionPolicy,
) -> Result<bool> {
    let places = places.min(policy.digits);
    let p = policy.bits();
    let mut cc = consts()?;
    let r = parse_decimal(reference, p, &mut cc)?;
    // one unit in the last compared place, as the reference is truncated
    Ok(value.sub(&r, p, RM).abs() <= pow10_neg(places, p))
}

/// Root certificate sanity, agreement with [`REFERENCE_CONSTANTS`] and
/// stability of every reported digit when precision and series order double.
pub fn verify_constants(policy: &PrecisionPolicy) -> Result<VerificationReport> {
    const SUITE: &str = "constants";
    let mut report = VerificationReport::new();
    let coarse = AsymptoticConstants::compute(policy)?;
    let cert = &coarse.certificate;
    let digits = policy.digits as i64;

    report.push(if cert.grid_sign_changes == 1 {
        Check::pass(SUITE, "single sign change", None)
    } else {
        Check::fail(
            SUITE,
            "single sign change",
            None,
            format!("{}", cert.grid_sign_changes),
        )
    });
    report.push(if cert.residual <= pow10_neg(policy.digits, cert.bits) {
        Check::pass(SUITE, "root residual", Some(digits))
    } else {
        Check::fail(
            SUITE,
            "root residual",
            Some(digits),
            "residual above 10^-digits",
        )
    });

    let values = [
        ("z_star", &cert.z_star),
        ("a", &coarse.a),
        ("c_star", &coarse.c_star),
        ("c_1", &coarse.c_1),
        ("theorem_b_prefactor", &coarse.theorem_b_prefactor),
    ];
    for ((name, value), (rname, reference, places)) in values.iter().zip(REFERENCE_CONSTANTS) {
        debug_assert_eq!(*name, rname);
        let check = format!("reference {name}");
        let through = Some(places.min(policy.digits) as i64);
        report.push(if within(value, reference, places, policy)? {
            Check::pass(SUITE, check, through)
        } else {
            let got = crate::precision::to_decimal(value, places);
            Check::fail(SUITE, check, through, format!("{got} vs {reference}"))
        });
    }

    let fine = AsymptoticConstants::compute(&policy.refined())?;
    let fine_digits = fine.decimals();
    let unstable = coarse.decimals().into_iter().find(|c| {
        let f = fine_digits
            .iter()
            .find(|f| f.name == c.name)
            .expect("same names");
        !f.value.starts_with(&c.value)
    });
    report.push(match unstable {
        None => Check::pass(SUITE, "refinement stable", Some(digits)),
        Some(c) => Check::fail(SUITE, "refinement stable", Some(digits), c.name.to_string()),
    });
    Ok(report)
}

/// Boundary identities, series identities, oracle equality, coefficient
/// equality, W-collapse and constants, in that order.
pub fn verify_all(config: &VerifyConfig) -> Result<VerificationReport> {
    let table = CountTable::build(config.k_max);
    let mut report = verify_boundary_identities(&table);
    report.extend(verify_series_identities(config.order));
    report.extend(verify_oracle(&table, 2, config.max_steps)?);
    report.extend(verify_against_table(&table, config.m_max, config.order));
    // rows whose collapsed range fits inside the table
    let ms = (3..=8).filter(|&m| zero_threshold(m) - 1 + m + 3 <= config.k_max);
    report.extend(verify_w_collapse(&table, ms));
    report.extend(verify_constants(&config.policy)?);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    #[test]
    fn oracle_agrees_on_small_levels() {
        let table = CountTable::build(20);
        let report = verify_oracle(&table, 2, 5).unwrap();
        assert!(report.all_passed(), "{report}");
        assert_eq!(report.len(), 3);
    }

    #[test]
    fn oracle_reports_a_corrupted_count() {
        let mut table = CountTable::build(20);
        table.corrupt(7, 1, BigUint::from(5u32));
        let report = verify_oracle(&table, 1, 5).unwrap();
        let bad = report.first_failure().unwrap();
        assert_eq!(bad.name, "clean counts m=1");
        assert_eq!(
            bad.first_failure.as_deref(),
            Some("k = 7: boards 6, table 5")
        );
    }

    #[test]
    fn constants_at_fifteen_digits() {
        let report = verify_constants(&PrecisionPolicy::new(15)).unwrap();
        assert!(report.all_passed(), "{report}");
    }
}
