//! High-precision numerics around the dominant singularity.
//!
//! The generating functions of every row share the denominator `S(z)`, whose
//! only zero in `(0, 1/2)` is the dominant singularity `z_*`. Counts grow
//! like `z_*^-k`; this module locates `z_*` to any number of digits and
//! evaluates the constants in front of the growth:
//!
//! ```text
//! G(k)   ~ c_* a^k,                          a = 1 / z_*
//! G(k,m) ~ z_*^(m(m+3)/2 - k) / S'(z_*)
//!          * sum_{n>=1} (-1)^(n+1) z_*^(n(n+1)/2 + nm)
//!            prod_{L=0..m} (1 - z_*^(L+n))^-1 prod_{L<n} (1 - z_*^L)^-2
//! W(l,m) ~ [z_* prod_{L>=1} (1 - z_*^L)^-1 / S'(z_*)] z_*^-l        (l, m large)
//! c_1    = -(log z_* / 2 pi) exp(-pi^2 / (2 log z_*)) prod_{j>=1} (1 - z_*^j)^2 / S'(z_*)
//! ```
//!
//! `S` and `S'` are evaluated from the exact integer coefficients of the
//! truncated series, with an explicit bound on the neglected tail.
//!
//! # Tail bound
//!
//! The coefficients of `prod_{j<=i} (1 - z^j)^-2` are dominated termwise by
//! those of `P2(z) = prod_{j>=1} (1 - z^j)^-2`, so for every `0 < r < 1` the
//! coefficients of `S_1` and `S_2` satisfy `|s_n| <= A(r) r^-n` with
//! `A(r) = P2(r) r / (1 - r)`. Folding in the polynomial multipliers of `S`
//! gives `|c_n| <= B(r) r^-n` with `B(r) = (3 + 7r + 6r^2) A(r)`, hence, with
//! `q = z / r`,
//!
//! ```text
//! |sum_{n>N} c_n z^n|       <= B q^(N+1) / (1 - q)
//! |sum_{n>N} n c_n z^(n-1)| <= (B / z) q^(N+1) ((N+1)/(1-q) + q/(1-q)^2)
//! ```
//!
//! minimised over a grid of `r`. At `r = 1/2` the product `P2` is below 12.02.

use astro_float::{BigFloat, Consts};
use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::genfunc::s_series;
use crate::precision::{
    bits_for_digits, checked, consts, from_bigint, from_i64, from_ratio, pow10_neg, to_decimal,
    to_f64, RM,
};
use crate::recurrence::CountTable;
use crate::zero_threshold;

/// Largest `|z|` the automatic series order is sized for.
pub const DESIGN_RADIUS: f64 = 0.45;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PrecisionPolicy {
    /// Target number of correct decimal places.
    pub digits: usize,
    /// Extra working digits.
    pub guard: usize,
    /// Truncation order of `S`; chosen from the tail bound when `None`.
    pub series_order: Option<usize>,
}

impl Default for PrecisionPolicy {
    fn default() -> Self {
        PrecisionPolicy::new(15)
    }
}

impl PrecisionPolicy {
    pub fn new(digits: usize) -> Self {
        PrecisionPolicy {
            digits,
            guard: 10,
            series_order: None,
        }
    }

    pub fn with_order(mut self, order: usize) -> Self {
        self.series_order = Some(order);
        self
    }

    pub fn working_digits(&self) -> usize {
        self.digits + self.guard
    }

    pub fn bits(&self) -> usize {
        bits_for_digits(self.working_digits())
    }

    /// Explicit order, or the smallest order whose tail bound at
    /// [`DESIGN_RADIUS`] reaches the working precision.
    pub fn resolved_order(&self) -> usize {
        self.series_order
            .unwrap_or_else(|| required_order(DESIGN_RADIUS, self.working_digits()))
    }

    /// Same policy with digits, guard digits and series order doubled.
    pub fn refined(&self) -> Self {
        PrecisionPolicy {
            digits: 2 * self.digits,
            guard: 2 * self.guard,
            series_order: Some(2 * self.resolved_order()),
        }
    }

    fn validate(&self) -> Result<()> {
        if self.digits == 0 {
            return Err(Error::InvalidConfig("digits must be positive".into()));
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// tail bounds (log10 domain)

/// `log P2(r)`, rounded up.
fn ln_p2(r: f64) -> f64 {
    let mut acc = 0.0;
    let mut rj = r;
    while rj > 1e-18 {
        acc -= 2.0 * (-rj).ln_1p();
        rj *= r;
    }
    // remaining factors: -ln(1 - x) <= x / (1 - x)
    acc += 2.0 * rj / ((1.0 - r) * (1.0 - rj));
    acc * (1.0 + 1e-9) + 1e-12
}

/// A power of ten at least `10^log10`.
fn pow10_upper(log10: f64, p: usize) -> BigFloat {
    let e = log10.ceil();
    if e <= 0.0 {
        pow10_neg((-e) as usize, p)
    } else {
        BigFloat::from_u64(10, p).powi(e as usize, p, RM)
    }
}

fn log10_sum(a: f64, b: f64) -> f64 {
    let hi = a.max(b);
    if hi == f64::NEG_INFINITY {
        return hi;
    }
    hi + (10f64.powf(a - hi) + 10f64.powf(b - hi)).log10()
}

/// `(log10 value tail, log10 derivative tail)` for the order-`order`
/// truncation of `S` at `z`.
pub fn s_tail_log10(z: f64, order: usize) -> (f64, f64) {
    if z <= 0.0 {
        return (f64::NEG_INFINITY, f64::NEG_INFINITY);
    }
    let n = order as f64;
    let mut best = (f64::INFINITY, f64::INFINITY);
    for step in 1..40 {
        let r = z + (1.0 - z) * step as f64 / 40.0;
        let q = z / r;
        let ln_b = ln_p2(r) + (r / (1.0 - r)).ln() + (3.0 + 7.0 * r + 6.0 * r * r).ln();
        let ln_tail = ln_b + (n + 1.0) * q.ln();
        let value = ln_tail - (1.0 - q).ln();
        let deriv = ln_tail - z.ln() + ((n + 1.0) / (1.0 - q) + q / ((1.0 - q) * (1.0 - q))).ln();
        let ten = std::f64::consts::LN_10;
        best.0 = best.0.min(value / ten);
        best.1 = best.1.min(deriv / ten);
    }
    best
}

/// Smallest order whose value and derivative tails at radius `rho` are
/// below `10^-digits`.
pub fn required_order(rho: f64, digits: usize) -> usize {
    let target = -(digits as f64);
    let mut order = 8;
    loop {
        let (v, d) = s_tail_log10(rho, order);
        if v <= target && d <= target {
            return order;
        }
        order += 1;
    }
}

// ---------------------------------------------------------------------------
// evaluation of S and S'

/// A value together with `log10` of a bound on its absolute error.
#[derive(Debug, Clone)]
pub struct Bounded {
    pub value: BigFloat,
    pub log10_error: f64,
}

impl Bounded {
    /// Sign of the value when it exceeds the error bound.
    pub fn certain_sign(&self) -> Option<i8> {
        if self.value.is_zero() {
            return None;
        }
        let mag = to_f64(&self.value).abs().log10();
        if mag > self.log10_error + 0.5 {
            Some(if self.value.is_negative() { -1 } else { 1 })
        } else {
            None
        }
    }
}

/// `S` as a polynomial with exact integer coefficients rounded to the working
/// precision, plus its derivative.
pub struct SFunction {
    policy: PrecisionPolicy,
    order: usize,
    bits: usize,
    coeffs: Vec<BigFloat>,
    deriv: Vec<BigFloat>,
    /// `sum |c_n| r^n`-style magnitude used for the rounding term, per unit.
    log10_rounding: f64,
}

impl SFunction {
    pub fn new(policy: &PrecisionPolicy) -> Result<Self> {
        policy.validate()?;
        let order = policy.resolved_order();
        let bits = policy.bits();
        let exact: Vec<BigInt> = s_series(order as i64).dense(order)?;
        let coeffs: Vec<BigFloat> = exact.iter().map(|c| from_bigint(c, bits)).collect();
        let deriv = exact
            .iter()
            .enumerate()
            .skip(1)
            .map(|(n, c)| from_bigint(&(c * BigInt::from(n)), bits))
            .collect();
        let max_coeff = exact.iter().map(|c| c.bits()).max().unwrap_or(0) as f64;
        // Horner with N steps at `bits` precision: error below
        // 2 N 2^-bits sum |c_n| z^n <= 2 N^2 2^-bits max|c_n| (|z| < 1)
        let log10_rounding = (2.0 * (order as f64 + 1.0).powi(2)).log10()
            + (max_coeff + 1.0 - bits as f64) * std::f64::consts::LOG10_2;
        Ok(SFunction {
            policy: *policy,
            order,
            bits,
            coeffs,
            deriv,
            log10_rounding,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn bits(&self) -> usize {
        self.bits
    }

    pub fn policy(&self) -> &PrecisionPolicy {
        &self.policy
    }

    fn check_domain(z: &BigFloat) -> Result<f64> {
        let zf = to_f64(z);
        if z.is_negative() || zf >= 0.5 {
            return Err(Error::OutOfDomain { z: format!("{zf}") });
        }
        Ok(zf)
    }

    fn horner(&self, poly: &[BigFloat], z: &BigFloat) -> BigFloat {
        let p = self.bits;
        let mut acc = BigFloat::from_u64(0, p);
        for c in poly.iter().rev() {
            acc = acc.mul(z, p, RM).add(c, p, RM);
        }
        acc
    }

    /// `S(z)` for `0 <= z < 1/2`, with its error bound.
    pub fn value(&self, z: &BigFloat) -> Result<Bounded> {
        let zf = Self::check_domain(z)?;
        let (tail, _) = s_tail_log10(zf, self.order);
        Ok(Bounded {
            value: self.horner(&self.coeffs, z),
            log10_error: log10_sum(tail, self.log10_rounding),
        })
    }

    /// `S'(z)` for `0 <= z < 1/2`, with its error bound.
    pub fn derivative(&self, z: &BigFloat) -> Result<Bounded> {
        let zf = Self::check_domain(z)?;
        let (_, tail) = s_tail_log10(zf, self.order);
        Ok(Bounded {
            value: self.horner(&self.deriv, z),
            log10_error: log10_sum(tail, self.log10_rounding),
        })
    }

    fn require(&self, b: Bounded) -> Result<BigFloat> {
        if b.log10_error > -(self.policy.digits as f64) {
            return Err(Error::PrecisionUnreachable {
                log10_bound: b.log10_error,
                digits: self.policy.digits,
            });
        }
        Ok(b.value)
    }
}

/// `S(z)` to within `10^-digits`; fails if the series order is too small at
/// this `z`.
pub fn eval_s(z: &BigFloat, policy: &PrecisionPolicy) -> Result<BigFloat> {
    let s = SFunction::new(policy)?;
    let b = s.value(z)?;
    s.require(b)
}

/// `S'(z)` to within `10^-digits`.
pub fn eval_s_prime(z: &BigFloat, policy: &PrecisionPolicy) -> Result<BigFloat> {
    let s = SFunction::new(policy)?;
    let b = s.derivative(z)?;
    s.require(b)
}

// ---------------------------------------------------------------------------
// root

#[derive(Debug, Clone)]
pub struct RootCertificate {
    pub digits: usize,
    pub series_order: usize,
    pub bits: usize,
    pub z_star: BigFloat,
    /// Bound on `|S(z_star)|` including the truncation tail.
    pub residual: BigFloat,
    /// Interval on whose ends `S` has certified opposite signs.
    pub bracket: (BigFloat, BigFloat),
    pub s_prime: BigFloat,
    pub grid_sign_changes: usize,
}

impl RootCertificate {
    /// Growth rate `a = 1 / z_*`.
    pub fn a(&self) -> BigFloat {
        self.z_star.reciprocal(self.bits, RM)
    }

    pub fn bracket_width(&self) -> BigFloat {
        self.bracket.1.sub(&self.bracket.0, self.bits, RM)
    }
}

/// Scan `(0.01, 0.49)` in steps of `0.01`, require exactly one sign change
/// of `S`, bisect it to width `10^-(digits+2)` and finish with Newton steps.
pub fn find_zstar(policy: &PrecisionPolicy) -> Result<RootCertificate> {
    let s = SFunction::new(policy)?;
    find_zstar_with(&s)
}

pub fn find_zstar_with(s: &SFunction) -> Result<RootCertificate> {
    let p = s.bits();
    let digits = s.policy().digits;
    let sign_at = |z: &BigFloat| -> Result<Option<i8>> { Ok(s.value(z)?.certain_sign()) };

    let mut changes = 0;
    let mut bracket = None;
    let mut prev: Option<(BigFloat, i8)> = None;
    for t in 1..=49 {
        let z = from_ratio(t, 100, p);
        let Some(sign) = sign_at(&z)? else {
            return Err(Error::UnresolvedSign {
                z: format!("{}", t as f64 / 100.0),
            });
        };
        if let Some((pz, ps)) = &prev {
            if *ps != sign {
                changes += 1;
                bracket = Some((pz.clone(), z.clone(), *ps));
            }
        }
        prev = Some((z, sign));
    }
    let Some((mut lo, mut hi, lo_sign)) = bracket.filter(|_| changes == 1) else {
        return Err(Error::RootStructure {
            sign_changes: changes,
        });
    };

    let width_goal = pow10_neg(digits + 2, p);
    let two = from_i64(2, p);
    let mut unresolved = None;
    while hi.sub(&lo, p, RM) > width_goal {
        let mid = lo.add(&hi, p, RM).div(&two, p, RM);
        match sign_at(&mid)? {
            Some(sg) if sg == lo_sign => lo = mid,
            Some(_) => hi = mid,
            // |S(mid)| is below the evaluation error
            None => {
                unresolved = Some(mid);
                break;
            }
        }
    }

    let mut z = unresolved.unwrap_or_else(|| lo.add(&hi, p, RM).div(&two, p, RM));
    for _ in 0..3 {
        let f = s.value(&z)?.value;
        let df = s.derivative(&z)?.value;
        if df.is_zero() {
            break;
        }
        let next = z.sub(&f.div(&df, p, RM), p, RM);
        if next < lo || next > hi {
            break;
        }
        z = next;
    }

    let at_root = s.value(&z)?;
    let residual = at_root
        .value
        .abs()
        .add(&pow10_upper(at_root.log10_error, p), p, RM);
    if residual > pow10_neg(digits, p) {
        return Err(Error::PrecisionUnreachable {
            log10_bound: to_f64(&residual).log10(),
            digits,
        });
    }
    let s_prime = s.require(s.derivative(&z)?)?;
    Ok(RootCertificate {
        digits,
        series_order: s.order(),
        bits: p,
        z_star: z,
        residual,
        bracket: (lo, hi),
        s_prime,
        grid_sign_changes: changes,
    })
}

// ---------------------------------------------------------------------------
// constants

struct Work {
    p: usize,
    eps: BigFloat,
    cc: Consts,
}

impl Work {
    fn new(policy: &PrecisionPolicy) -> Result<Self> {
        let p = policy.bits();
        Ok(Work {
            p,
            eps: pow10_neg(policy.working_digits() + 2, p),
            cc: consts()?,
        })
    }

    fn one(&self) -> BigFloat {
        from_i64(1, self.p)
    }

    /// `prod_{L>=start} (1 - z^L)`, stopping once `4 z^L` is below eps.
    fn pochhammer_tail(&self, z: &BigFloat, start: usize) -> BigFloat {
        let p = self.p;
        let four = from_i64(4, p);
        let mut zl = z.powi(start, p, RM);
        let mut acc = self.one();
        while zl.mul(&four, p, RM) >= self.eps {
            acc = acc.mul(&self.one().sub(&zl, p, RM), p, RM);
            zl = zl.mul(z, p, RM);
        }
        acc
    }

    /// `z^e` for a possibly negative integer exponent.
    fn zpow(&self, z: &BigFloat, e: i64) -> BigFloat {
        let p = self.p;
        if e >= 0 {
            z.powi(e as usize, p, RM)
        } else {
            z.reciprocal(p, RM).powi((-e) as usize, p, RM)
        }
    }

    /// `sum_{n>=1} (-1)^(n+1) z^e(n) F_n(z)` where `|F_n| <= bound`, summed
    /// until the majorant of the remaining terms falls below `eps` relative to
    /// the first term.
    fn alternating_sum(
        &self,
        z: &BigFloat,
        bound: f64,
        exponent: impl Fn(usize) -> usize,
        factor: impl Fn(usize) -> BigFloat,
    ) -> BigFloat {
        let p = self.p;
        let mut sum = BigFloat::from_u64(0, p);
        let scale = z.powi(exponent(1), p, RM);
        let bound = BigFloat::from_f64(2.0 * bound, p);
        let mut n = 1;
        loop {
            let zn = z.powi(exponent(n), p, RM);
            let term = zn.mul(&factor(n), p, RM);
            sum = if n % 2 == 1 {
                sum.add(&term, p, RM)
            } else {
                sum.sub(&term, p, RM)
            };
            let next = z.powi(exponent(n + 1), p, RM);
            if next.mul(&bound, p, RM) < self.eps.mul(&scale, p, RM) {
                break;
            }
            n += 1;
        }
        sum
    }
}

/// `prod_{j>=1} (1 - 2^-j)^-1`, the largest value of the single product on
/// `(0, 1/2]`, rounded up.
const PARTITION_PRODUCT_MAX: f64 = 3.4628;
/// `prod_{j>=1} (1 - 2^-j)^-2`, rounded up.
const SQUARED_PRODUCT_MAX: f64 = 12.02;

/// Prefactor `c_*` of `G(k) ~ c_* a^k`:
/// `z^2 / ((1-2z) S'(z)) sum_{n>=1} (-1)^(n+1) z^(n(n+3)/2)
/// / ((1-z^n)(1-z^(n+1))) prod_{L<n} (1-z^L)^-2` at `z = z_*`.
pub fn c_star(cert: &RootCertificate, policy: &PrecisionPolicy) -> Result<BigFloat> {
    let w = Work::new(policy)?;
    let p = w.p;
    let z = &cert.z_star;
    let one = w.one();
    let factor = |n: usize| {
        let mut denom =
            one.sub(&z.powi(n, p, RM), p, RM)
                .mul(&one.sub(&z.powi(n + 1, p, RM), p, RM), p, RM);
        for l in 1..n {
            let f = one.sub(&z.powi(l, p, RM), p, RM);
            denom = denom.mul(&f, p, RM).mul(&f, p, RM);
        }
        denom.reciprocal(p, RM)
    };
    // (1 - z^n)(1 - z^(n+1)) >= 1/4 on (0, 1/2]
    let sum = w.alternating_sum(z, 4.0 * SQUARED_PRODUCT_MAX, |n| n * (n + 3) / 2, factor);
    let pre = z
        .powi(2, p, RM)
        .div(&one.sub(&z.mul(&from_i64(2, p), p, RM), p, RM), p, RM)
        .div(&cert.s_prime, p, RM);
    checked(pre.mul(&sum, p, RM), "c_*")
}

/// `c_1 = -(log z / 2 pi) exp(-pi^2 / (2 log z)) prod_{j>=1} (1 - z^j)^2 / S'(z)`.
pub fn c1(cert: &RootCertificate, policy: &PrecisionPolicy) -> Result<BigFloat> {
    let mut w = Work::new(policy)?;
    let p = w.p;
    let z = &cert.z_star;
    let two = from_i64(2, p);
    let log_z = z.ln(p, RM, &mut w.cc);
    let pi = w.cc.pi(p, RM);
    let lead = log_z.neg().div(&pi.mul(&two, p, RM), p, RM);
    let expo = pi
        .mul(&pi, p, RM)
        .div(&two.mul(&log_z, p, RM), p, RM)
        .neg()
        .exp(p, RM, &mut w.cc);
    let prod = w.pochhammer_tail(z, 1);
    let value = lead
        .mul(&expo, p, RM)
        .mul(&prod, p, RM)
        .mul(&prod, p, RM)
        .div(&cert.s_prime, p, RM);
    checked(value, "c_1")
}

/// `z prod_{L>=1} (1 - z^L)^-1 / S'(z)`: the constant multiplying `z_*^-l` in
/// the large-`m` asymptotics of `W(l, m)`.
pub fn theorem_b_prefactor(cert: &RootCertificate, policy: &PrecisionPolicy) -> Result<BigFloat> {
    let w = Work::new(policy)?;
    let p = w.p;
    let z = &cert.z_star;
    let prod = w.pochhammer_tail(z, 1);
    checked(z.div(&prod, p, RM).div(&cert.s_prime, p, RM), "prefactor")
}

/// Fixed-`m` asymptotic value of `G(k, m)` (the full `n`-sum). For `m = 0`
/// this is the closed-form row, not the totals; use [`c_star`] for `G(k)`.
pub fn asymptotic_g(
    k: usize,
    m: usize,
    cert: &RootCertificate,
    policy: &PrecisionPolicy,
) -> Result<BigFloat> {
    let w = Work::new(policy)?;
    let p = w.p;
    let z = &cert.z_star;
    let one = w.one();
    let factor = |n: usize| {
        let mut denom = one.clone();
        for l in 0..=m {
            denom = denom.mul(&one.sub(&z.powi(l + n, p, RM), p, RM), p, RM);
        }
        for l in 1..n {
            let f = one.sub(&z.powi(l, p, RM), p, RM);
            denom = denom.mul(&f, p, RM).mul(&f, p, RM);
        }
        denom.reciprocal(p, RM)
    };
    let sum = w.alternating_sum(
        z,
        PARTITION_PRODUCT_MAX * SQUARED_PRODUCT_MAX,
        |n| n * (n + 1) / 2 + n * m,
        factor,
    );
    let e = (m * (m + 3) / 2) as i64 - k as i64;
    let value = w.zpow(z, e).div(&cert.s_prime, p, RM).mul(&sum, p, RM);
    checked(value, "asymptotic G")
}

/// Everything the `constants` report prints, at one precision.
#[derive(Debug, Clone)]
pub struct AsymptoticConstants {
    pub policy: PrecisionPolicy,
    pub certificate: RootCertificate,
    pub a: BigFloat,
    pub c_star: BigFloat,
    pub c_1: BigFloat,
    pub theorem_b_prefactor: BigFloat,
}

/// One constant rendered for output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecimalConstant {
    pub name: &'static str,
    pub value: String,
    pub digits: usize,
}

impl AsymptoticConstants {
    pub fn compute(policy: &PrecisionPolicy) -> Result<Self> {
        let certificate = find_zstar(policy)?;
        Ok(AsymptoticConstants {
            a: certificate.a(),
            c_star: c_star(&certificate, policy)?,
            c_1: c1(&certificate, policy)?,
            theorem_b_prefactor: theorem_b_prefactor(&certificate, policy)?,
            certificate,
            policy: *policy,
        })
    }

    /// All constants truncated to `digits` decimal places, in a fixed order.
    pub fn decimals(&self) -> Vec<DecimalConstant> {
        let d = self.policy.digits;
        let entry = |name, x: &BigFloat| DecimalConstant {
            name,
            value: to_decimal(x, d),
            digits: d,
        };
        vec![
            entry("z_star", &self.certificate.z_star),
            entry("a", &self.a),
            entry("s_prime", &self.certificate.s_prime),
            entry("c_star", &self.c_star),
            entry("c_1", &self.c_1),
            entry("theorem_b_prefactor", &self.theorem_b_prefactor),
        ]
    }
}

// ---------------------------------------------------------------------------
// exact / asymptotic ratios

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RatioEntry {
    pub k: usize,
    pub m: usize,
    /// Exact count, absent when `(k, m)` is below the zero threshold.
    pub exact: Option<String>,
    /// `exact / asymptotic` to 20 places.
    pub ratio: Option<String>,
    /// `|ratio - 1|`.
    pub gap: Option<f64>,
}

impl RatioEntry {
    pub fn is_applicable(&self) -> bool {
        self.exact.is_some()
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct RatioReport {
    pub entries: Vec<RatioEntry>,
}

impl RatioReport {
    /// True when the gaps for row `m` shrink strictly as `k` grows.
    pub fn gaps_decreasing(&self, m: usize) -> bool {
        let gaps: Vec<f64> = self
            .entries
            .iter()
            .filter(|e| e.m == m)
            .filter_map(|e| e.gap)
            .collect();
        gaps.windows(2).all(|w| w[1] < w[0])
    }
}

/// Compare exact counts with their asymptotic approximations: `G(k)`
/// against `c_* a^k` for `m = 0`, `G(k, m)` against [`asymptotic_g`]
/// otherwise.
pub fn ratio_report(
    table: &CountTable,
    cert: &RootCertificate,
    policy: &PrecisionPolicy,
    ks: &[usize],
    ms: &[usize],
) -> Result<RatioReport> {
    let p = policy.bits();
    let cs = if ms.contains(&0) {
        Some(c_star(cert, policy)?)
    } else {
        None
    };
    let a = cert.a();
    let one = from_i64(1, p);
    let mut report = RatioReport::default();
    for &m in ms {
        for &k in ks {
            if k <= zero_threshold(m) {
                report.entries.push(RatioEntry {
                    k,
                    m,
                    exact: None,
                    ratio: None,
                    gap: None,
                });
                continue;
            }
            let exact = table.g(k, m)?;
            let approx = match &cs {
                Some(cs) if m == 0 => cs.mul(&a.powi(k, p, RM), p, RM),
                _ => asymptotic_g(k, m, cert, policy)?,
            };
            let ratio = from_bigint(&BigInt::from(exact.clone()), p).div(&approx, p, RM);
            let gap = to_f64(&ratio.sub(&one, p, RM)).abs();
            report.entries.push(RatioEntry {
                k,
                m,
                exact: Some(exact.to_string()),
                ratio: Some(to_decimal(&ratio, 20)),
                gap: Some(gap),
            });
        }
    }
    Ok(report)
}
