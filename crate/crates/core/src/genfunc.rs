//! Generating functions for `G(k, m)` as exact truncated q-series.
//!
//! The building blocks are
//!
//! ```text
//! S_k(z) = sum_{i>=1} (-1)^(i+1) z^(i(i+2k-1)/2) prod_{j=1..i} (1 - z^j)^-2
//! S(z)   = (2z^2 - 3z + 2) S_1(z) - (4z^2 - 4z + 1) S_2(z) + 2z^2 - z - 1
//! ```
//!
//! and the ordinary generating function of row `m`,
//!
//! ```text
//! g_m(z) = sum_k G(k,m) z^k
//!        = z^(1 + m(m+3)/2) / S(z)
//!          * sum_{n>=1} (-1)^n z^(n(n+1)/2 + nm)
//!            prod_{L=0..m} (1 - z^(L+n))^-1 prod_{L=1..n-1} (1 - z^L)^-2 .
//! ```
//!
//! `S(0) = -1`, so `1/S` is again an integer series and every quantity here
//! is computed exactly. Reading off the coefficient of `z^k` is the Cauchy
//! integral `(1/2 pi i) \oint z^(-k-1) g_m(z) dz` on a small circle.
//!
//! The closed form above solves the three-term row recurrence all the way
//! down to `m = 0`, but the true `G(k, 0)` obeys a different boundary
//! equation: the `m = 0` instance has coefficients `G(k,0) + G(k-1,1)`. Totals
//! are therefore read from
//!
//! ```text
//! G(k) = 2^(k-2) + sum_{l=1..k} 2^(k-l) [z^l] g_1(z),   k >= 2.
//! ```

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::recurrence::CountTable;
use crate::report::{Check, VerificationReport};
use crate::series::IntSeries;
use crate::zero_threshold;

const SUITE: &str = "series";

fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

/// `S_k(z)` through `order`.
pub fn sk_series(k: usize, order: i64) -> IntSeries {
    assert!(k >= 1, "S_k is defined for k >= 1");
    let mut sum = IntSeries::zero(order);
    let mut denom = IntSeries::one().truncate(order);
    let mut i = 1i64;
    loop {
        let exponent = i * (i + 2 * k as i64 - 1) / 2;
        if exponent > order {
            break;
        }
        denom = squared_step(&denom, i as u64);
        let term = denom.shift(exponent).truncate(order);
        sum = if i % 2 == 1 {
            &sum + &term
        } else {
            &sum - &term
        };
        i += 1;
    }
    sum
}

fn squared_step(s: &IntSeries, j: u64) -> IntSeries {
    s.div_one_minus_power(j)
        .and_then(|t| t.div_one_minus_power(j))
        .expect("running products are truncated")
}

/// `S(z)` through `order`.
pub fn s_series(order: i64) -> IntSeries {
    let s1 = sk_series(1, order);
    let s2 = sk_series(2, order);
    let a = IntSeries::poly_i64(0, &[2, -3, 2]);
    let b = IntSeries::poly_i64(0, &[1, -4, 4]);
    let c = IntSeries::poly_i64(0, &[-1, -1, 2]);
    &(&(&a * &s1) - &(&b * &s2)) + &c
}

/// `sum_{n>=1} sign(n) z^e(n) prod_{L=0..m} (1-z^(L+n))^-1 prod_{L<n} (1-z^L)^-2`
/// through `order`, where `e` is increasing in `n`.
fn pochhammer_sum(
    m: usize,
    order: i64,
    exponent: impl Fn(i64) -> i64,
    negative: impl Fn(i64) -> bool,
) -> IntSeries {
    let mut sum = IntSeries::zero(order);
    // prod_{L=1..n-1} (1 - z^L)^-2
    let mut squared = IntSeries::one().truncate(order);
    let mut n = 1i64;
    loop {
        let e = exponent(n);
        if e > order {
            break;
        }
        if n > 1 {
            squared = squared_step(&squared, (n - 1) as u64);
        }
        let mut term = squared.truncate(order - e);
        for l in 0..=m as i64 {
            term = term.div_one_minus_power((l + n) as u64).expect("truncated");
        }
        let term = term.shift(e);
        sum = if negative(n) {
            &sum - &term
        } else {
            &sum + &term
        };
        n += 1;
    }
    sum
}

/// Ordinary generating function `sum_k G(k,m) z^k` in closed form, through
/// `order`. Its valuation is `m(m+5)/2 + 2`. See the module docs for why the
/// `m = 0` instance is not the generating function of the totals.
pub fn gm_series(m: usize, order: i64) -> IntSeries {
    let m_i = m as i64;
    let base = 1 + m_i * (m_i + 3) / 2;
    let inner_order = order - base;
    if inner_order < 0 {
        return IntSeries::zero(order);
    }
    let inner = pochhammer_sum(
        m,
        inner_order,
        |n| n * (n + 1) / 2 + n * m_i,
        |n| n % 2 == 1,
    );
    let s_inv = s_series(inner_order).invert().expect("S(0) = -1 is a unit");
    (&s_inv * &inner).shift(base)
}

/// `V_m(z) = (-1)^m z^-m g_m(z)` as a Laurent series, through `order - m`.
pub fn v_series(m: usize, order: i64) -> IntSeries {
    let g = gm_series(m, order).shift(-(m as i64));
    if m % 2 == 1 {
        -g
    } else {
        g
    }
}

/// `U_m(z) = sum_{n>=1} (-1)^(n+m) z^(n(n-1)/2 + n(m+1) + m(m+1)/2)
/// prod_{L=0..m} (1-z^(L+n))^-1 prod_{L<n} (1-z^L)^-2` through `order`.
pub fn u_series(m: usize, order: i64) -> IntSeries {
    let m_i = m as i64;
    pochhammer_sum(
        m,
        order,
        |n| n * (n - 1) / 2 + n * (m_i + 1) + m_i * (m_i + 1) / 2,
        |n| (n + m_i) % 2 == 1,
    )
}

fn to_count(value: BigInt, k: usize, m: usize) -> Result<BigUint> {
    match value.sign() {
        Sign::Minus => Err(Error::NegativeCoefficient {
            k,
            m,
            value: value.to_string(),
        }),
        _ => Ok(value.magnitude().clone()),
    }
}

fn require_order(order: i64, k: usize) -> Result<()> {
    if order < k as i64 {
        Err(Error::OrderTooSmall {
            order,
            needed: k as i64,
        })
    } else {
        Ok(())
    }
}

/// `G(k, m)` as the coefficient of `z^k` in the generating function of row
/// `m` (the totals formula for `m = 0`). Requires `order >= k`.
pub fn g_from_series(k: usize, m: usize, order: i64) -> Result<BigUint> {
    require_order(order, k)?;
    if m == 0 {
        if k < 2 {
            return Ok(BigUint::zero());
        }
        return g_total_from_series(k, order);
    }
    let c = gm_series(m, order).coeff(k as i64).expect("order checked");
    to_count(c, k, m)
}

/// Totals `G(k) = 2^(k-2) + sum_{l=1..k} 2^(k-l) [z^l] g_1(z)` for `k >= 2`.
pub fn g_total_from_series(k: usize, order: i64) -> Result<BigUint> {
    if k < 2 {
        return Err(Error::UndefinedIndex { k });
    }
    require_order(order, k)?;
    let g1 = gm_series(1, order);
    let totals = totals_from_row1(&g1, k);
    to_count(totals[k].clone(), k, 0)
}

/// `[G(0)', G(1)', ..., G(k)']` with `G(j)' = 2^(j-2) + sum_{l<=j} 2^(j-l) [z^l] g_1`;
/// only entries with `j >= 2` are meaningful.
fn totals_from_row1(g1: &IntSeries, k: usize) -> Vec<BigInt> {
    let mut weighted = BigInt::zero();
    let mut out = Vec::with_capacity(k + 1);
    for j in 0..=k {
        if j >= 1 {
            weighted = weighted * 2 + g1.coeff(j as i64).unwrap_or_default();
        }
        let head = if j >= 2 {
            BigInt::one() << (j - 2)
        } else {
            BigInt::zero()
        };
        out.push(head + &weighted);
    }
    out
}

/// `prod_{L>=1} (1 - z^L)^-1` through `order`: the partition numbers.
pub fn partition_product_series(order: i64) -> IntSeries {
    let mut p = IntSeries::one().truncate(order);
    for l in 1..=order.max(0) {
        p = p.div_one_minus_power(l as u64).expect("truncated");
    }
    p
}

/// `S(z)^-1 prod_{L>=1} (1 - z^L)^-1` through `order`. Its negated
/// coefficients are `W0(l) = -[z^(l-2)]`.
pub fn w0_series(order: i64) -> IntSeries {
    let s_inv = s_series(order).invert().expect("S(0) = -1 is a unit");
    &s_inv * &partition_product_series(order)
}

/// `S(z)^-1 prod_{L=0..m} (1 - z^(L+1))^-1`: the finite-`m` bracket whose
/// low coefficients do not depend on `m`.
pub fn finite_w_series(m: usize, order: i64) -> IntSeries {
    let mut p = IntSeries::one().truncate(order);
    for l in 0..=m as u64 {
        p = p.div_one_minus_power(l + 1).expect("truncated");
    }
    let s_inv = s_series(order).invert().expect("S(0) = -1 is a unit");
    &s_inv * &p
}

/// `W0(l)`, the number of clean configurations with `k = m(m+5)/2 + l`
/// pebbles for any `m >= l - 3`. Requires `l >= 2`.
pub fn w0(l: usize) -> Result<BigUint> {
    if l < 2 {
        return Err(Error::BelowMinimal { l });
    }
    let series = w0_series(l as i64 - 2);
    w0_from(&series, l)
}

fn w0_from(series: &IntSeries, l: usize) -> Result<BigUint> {
    let c = -series.coeff(l as i64 - 2).expect("order matches");
    match c.sign() {
        Sign::Plus => Ok(c.magnitude().clone()),
        _ => Err(Error::Numeric(format!("W0({l}) = {c} is not positive"))),
    }
}

/// `W0(2), ..., W0(l_max)` from one series.
pub fn w0_values(l_max: usize) -> Result<Vec<(usize, BigUint)>> {
    if l_max < 2 {
        return Ok(Vec::new());
    }
    let series = w0_series(l_max as i64 - 2);
    (2..=l_max)
        .map(|l| w0_from(&series, l).map(|v| (l, v)))
        .collect()
}

fn compare(name: String, lhs: &IntSeries, rhs: &IntSeries) -> Check {
    let through = Some(lhs.common_order(rhs));
    match lhs.first_difference(rhs) {
        None => Check::pass(SUITE, name, through),
        Some(e) => Check::fail(SUITE, name, through, format!("z^{e}")),
    }
}

/// `z^(m+1) (V_(m+1) + V_(m-1)) = (2 z^(m+1) - 1) V_m`.
pub fn check_v_recurrence(
    m: usize,
    v_prev: &IntSeries,
    v_m: &IntSeries,
    v_next: &IntSeries,
) -> Check {
    let e = m as i64 + 1;
    let lhs = (v_next + v_prev).shift(e);
    let factor = IntSeries::poly_i64(0, &[-1]) + IntSeries::monomial(big(2), e);
    compare(format!("v-recurrence m={m}"), &lhs, &(&factor * v_m))
}

/// `((z^4 + 2z^2 - 1)(1 - 2z) + z^3) V_1 - z^2 (1 - 2z) V_2 = z^4`, the
/// boundary equation multiplied through by `1 - 2z`.
pub fn check_boundary_equation(v1: &IntSeries, v2: &IntSeries) -> Check {
    let one_minus_2z = IntSeries::poly_i64(0, &[1, -2]);
    let a = &(IntSeries::poly_i64(0, &[-1, 0, 2, 0, 1]) * &one_minus_2z)
        + &IntSeries::poly_i64(3, &[1]);
    let b = IntSeries::poly_i64(2, &[1]) * &one_minus_2z;
    let lhs = &(&a * v1) - &(&b * v2);
    compare(
        "boundary-equation".into(),
        &lhs,
        &IntSeries::poly_i64(4, &[1]),
    )
}

/// `S_(k-1) + (z^(k-1) - 2) S_k + S_(k+1) = z^(k-1)`.
pub fn check_sk_recurrence(
    k: usize,
    s_prev: &IntSeries,
    s_k: &IntSeries,
    s_next: &IntSeries,
) -> Check {
    let e = k as i64 - 1;
    let factor = IntSeries::monomial(big(1), e) + IntSeries::poly_i64(0, &[-2]);
    let lhs = &(s_prev + &(&factor * s_k)) + s_next;
    compare(
        format!("sk-recurrence k={k}"),
        &lhs,
        &IntSeries::monomial(big(1), e),
    )
}

/// `z U_1 = -z S_1 + (1 + z) S_2 - S_3`.
pub fn check_u1_expansion(u1: &IntSeries, s: &[IntSeries]) -> Check {
    let lhs = u1.shift(1);
    let rhs = &(&(IntSeries::poly_i64(1, &[-1]) * &s[1])
        + &(IntSeries::poly_i64(0, &[1, 1]) * &s[2]))
        - &s[3];
    compare("u1-expansion".into(), &lhs, &rhs)
}

/// `z^3 U_2 = -z^3 S_1 + (z + z^2 + z^3) S_2 - (1 + z + z^2) S_3 + S_4`.
pub fn check_u2_expansion(u2: &IntSeries, s: &[IntSeries]) -> Check {
    let lhs = u2.shift(3);
    let rhs = IntSeries::poly_i64(3, &[-1]) * &s[1] + IntSeries::poly_i64(1, &[1, 1, 1]) * &s[2]
        - IntSeries::poly_i64(0, &[1, 1, 1]) * &s[3]
        + s[4].clone();
    compare("u2-expansion".into(), &lhs, &rhs)
}

/// Every functional identity linking the series, checked coefficient by
/// coefficient through (about) `order`: the row recurrence for `V_m`,
/// `m = 1..6`; the boundary equation between `V_1` and `V_2`; the three-term
/// recurrence of `S_k`, `k = 2..8`; and the expansions of `U_1`, `U_2` in
/// the `S_k`.
pub fn verify_series_identities(order: i64) -> VerificationReport {
    let mut report = VerificationReport::new();

    let v: Vec<IntSeries> = (0..=7).map(|m| v_series(m, order)).collect();
    for m in 1..=6 {
        report.push(check_v_recurrence(m, &v[m - 1], &v[m], &v[m + 1]));
    }
    report.push(check_boundary_equation(&v[1], &v[2]));

    // s[0] is a placeholder so that s[k] = S_k
    let s: Vec<IntSeries> = std::iter::once(IntSeries::zero(order))
        .chain((1..=9).map(|k| sk_series(k, order)))
        .collect();
    for k in 2..=8 {
        report.push(check_sk_recurrence(k, &s[k - 1], &s[k], &s[k + 1]));
    }
    report.push(check_u1_expansion(&u_series(1, order), &s));
    report.push(check_u2_expansion(&u_series(2, order), &s));
    report
}

/// Coefficient extraction against the recurrence table: `[z^k] g_m = G(k,m)`
/// for `1 <= m <= m_max`, `k <= min(order, k_max)`, and the totals formula
/// against `G(k)` for `2 <= k <= min(order, k_max)`.
pub fn verify_against_table(table: &CountTable, m_max: usize, order: i64) -> VerificationReport {
    let mut report = VerificationReport::new();
    let k_top = (table.k_max() as i64).min(order).max(0) as usize;
    let mut rows: Vec<(usize, IntSeries)> = Vec::new();
    for m in 1..=m_max.max(1) {
        let series = gm_series(m, k_top as i64);
        let name = format!("coefficients m={m}");
        let bad = (0..=k_top).find(|&k| {
            let expect = BigInt::from(table.g(k, m).expect("within table"));
            series.coeff(k as i64).expect("within order") != expect
        });
        report.push(match bad {
            None => Check::pass(SUITE, name, Some(k_top as i64)),
            Some(k) => Check::fail(SUITE, name, Some(k_top as i64), format!("k = {k}")),
        });
        rows.push((m, series));
    }
    let g1 = &rows[0].1;
    let totals = totals_from_row1(g1, k_top);
    let bad =
        (2..=k_top).find(|&k| totals[k] != BigInt::from(table.g_total(k).expect("within table")));
    report.push(match bad {
        None => Check::pass(SUITE, "coefficients totals", Some(k_top as i64)),
        Some(k) => Check::fail(
            SUITE,
            "coefficients totals",
            Some(k_top as i64),
            format!("k = {k}"),
        ),
    });
    report
}

/// `W0(l) = G(m(m+5)/2 + l, m)` for `m` in `ms` and `2 <= l <= m + 3`, plus
/// `m`-independence of the finite bracket's low coefficients.
pub fn verify_w_collapse(
    table: &CountTable,
    ms: impl IntoIterator<Item = usize>,
) -> VerificationReport {
    let mut report = VerificationReport::new();
    let ms: Vec<usize> = ms.into_iter().collect();
    let l_top = ms.iter().map(|m| m + 3).max().unwrap_or(2);
    let w = w0_series(l_top as i64);
    let w_at = |l: usize| -w.coeff(l as i64 - 2).expect("order");
    report.push(if w_at(2).is_one() {
        Check::pass(SUITE, "w0(2) = 1", Some(2))
    } else {
        Check::fail(SUITE, "w0(2) = 1", Some(2), format!("w0(2) = {}", w_at(2)))
    });
    for m in ms {
        let name = format!("w-collapse m={m}");
        let mut failure = None;
        let base = zero_threshold(m) - 1;
        for l in 2..=m + 3 {
            match table.g(base + l, m) {
                Ok(g) if BigInt::from(g.clone()) == w_at(l) => {}
                Ok(g) => {
                    failure = Some(format!("l = {l}: W0 = {}, G = {g}", w_at(l)));
                    break;
                }
                Err(e) => {
                    failure = Some(e.to_string());
                    break;
                }
            }
        }
        let finite = finite_w_series(m, m as i64 + 1);
        if failure.is_none() {
            if let Some(e) = (0..=m as i64 + 1).find(|&e| finite.coeff(e) != w.coeff(e)) {
                failure = Some(format!("finite bracket differs at z^{e}"));
            }
        }
        report.push(match failure {
            None => Check::pass(SUITE, name, Some(m as i64 + 3)),
            Some(f) => Check::fail(SUITE, name, Some(m as i64 + 3), f),
        });
    }
    report
}
