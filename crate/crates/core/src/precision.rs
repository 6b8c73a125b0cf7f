//! Small conveniences over [`astro_float::BigFloat`]: conversions from exact
//! integers and truncated decimal output.

use astro_float::{BigFloat, Consts, RoundingMode, Sign};
use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

pub use astro_float::BigFloat as Real;

pub const RM: RoundingMode = RoundingMode::ToEven;

/// Binary precision carrying `digits` decimal digits plus a safety word.
pub fn bits_for_digits(digits: usize) -> usize {
    (digits as f64 * std::f64::consts::LOG2_10).ceil() as usize + 64
}

pub fn consts() -> Result<Consts> {
    Consts::new().map_err(|e| Error::Numeric(format!("constant cache: {e:?}")))
}

/// Rejects NaN and infinities produced by an operation.
pub fn checked(x: BigFloat, what: &str) -> Result<BigFloat> {
    if x.is_nan() || x.is_inf() {
        Err(Error::Numeric(format!("{what} is not finite")))
    } else {
        Ok(x)
    }
}

pub fn from_i64(x: i64, p: usize) -> BigFloat {
    BigFloat::from_i64(x, p)
}

/// `num / den` rounded to `p` bits.
pub fn from_ratio(num: i64, den: i64, p: usize) -> BigFloat {
    BigFloat::from_i64(num, p).div(&BigFloat::from_i64(den, p), p, RM)
}

/// Exact integer rounded to `p` bits.
pub fn from_bigint(x: &BigInt, p: usize) -> BigFloat {
    let words = x.magnitude().to_u64_digits();
    let exact = p.max(64 * words.len() + 64);
    let radix = BigFloat::from_u128(1u128 << 64, 128);
    let mut acc = BigFloat::from_u64(0, exact);
    for &w in words.iter().rev() {
        acc = acc
            .mul(&radix, exact, RM)
            .add(&BigFloat::from_u64(w, 64), exact, RM);
    }
    acc.set_precision(p, RM).expect("precision is positive");
    if x.sign() == num_bigint::Sign::Minus {
        acc.inv_sign();
    }
    acc
}

/// `10^-d` rounded to `p` bits.
pub fn pow10_neg(d: usize, p: usize) -> BigFloat {
    BigFloat::from_u64(10, p).powi(d, p, RM).reciprocal(p, RM)
}

/// `|x|` split into its integer mantissa `M` and binary exponent `e`, with
/// `|x| = M * 2^e`.
fn mantissa_exponent(x: &BigFloat) -> Option<(BigUint, i64)> {
    let (words, nbits, _, exponent, _) = x.as_raw_parts()?;
    let digits: Vec<u32> = words
        .iter()
        .flat_map(|&w| [w as u32, (w >> 32) as u32])
        .collect();
    let m = BigUint::from_slice(&digits);
    let _ = nbits;
    let total_bits = (words.len() * 64) as i64;
    Some((m, exponent as i64 - total_bits))
}

/// `floor(|x| * 10^places)` as an exact integer.
fn scaled_floor(x: &BigFloat, places: usize) -> BigUint {
    if x.is_zero() {
        return BigUint::zero();
    }
    let (m, e) = mantissa_exponent(x).expect("finite value");
    let scaled = m * BigUint::from(10u32).pow(places as u32);
    if e >= 0 {
        scaled << e as usize
    } else {
        scaled >> (-e) as usize
    }
}

/// Decimal string with exactly `places` digits after the point, truncated
/// toward zero (so the printed digits are a prefix of the true expansion).
pub fn to_decimal(x: &BigFloat, places: usize) -> String {
    let n = scaled_floor(x, places).to_string();
    let n = format!("{n:0>width$}", width = places + 1);
    let (int, frac) = n.split_at(n.len() - places);
    let negative = x.is_negative() && n.bytes().any(|b| b != b'0');
    let sign = if negative { "-" } else { "" };
    if places == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac}")
    }
}

/// Nearest `f64`, for reporting only.
pub fn to_f64(x: &BigFloat) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    let Some((m, e)) = mantissa_exponent(x) else {
        return f64::NAN;
    };
    let bits = m.bits() as i64;
    let top = if bits > 64 {
        &m >> (bits - 64) as usize
    } else {
        m.clone()
    };
    let shift = e + (bits - 64).max(0);
    let v = top.to_f64().unwrap_or(f64::NAN) * 2f64.powi(shift.clamp(-2000, 2000) as i32);
    if x.sign() == Some(Sign::Neg) {
        -v
    } else {
        v
    }
}

/// Parse a decimal literal such as `"0.43"` at `p` bits.
pub fn parse_decimal(s: &str, p: usize, cc: &mut Consts) -> Result<BigFloat> {
    checked(
        BigFloat::parse(s, astro_float::Radix::Dec, p, RM, cc),
        "decimal literal",
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimal_truncates() {
        let p = 256;
        let x = from_ratio(2, 3, p);
        assert_eq!(to_decimal(&x, 5), "0.66666");
        assert_eq!(to_decimal(&x.neg(), 3), "-0.666");
        assert_eq!(to_decimal(&from_i64(46, p), 2), "46.00");
        assert_eq!(to_decimal(&from_ratio(1, 8, p), 3), "0.125");
        assert_eq!(to_decimal(&from_i64(0, p), 2), "0.00");
        assert_eq!(to_decimal(&from_ratio(-1, 1000, p), 2), "0.00");
        assert_eq!(to_decimal(&from_ratio(123456, 1, p), 0), "123456");
    }

    #[test]
    fn bigint_conversion_is_exact() {
        let p = 512;
        let big: BigInt = "-123456789012345678901234567890123456789".parse().unwrap();
        assert_eq!(
            to_decimal(&from_bigint(&big, p), 1),
            "-123456789012345678901234567890123456789.0"
        );
        assert_eq!(to_decimal(&from_bigint(&BigInt::from(0), p), 1), "0.0");
    }

    #[test]
    fn f64_conversion() {
        let p = 256;
        assert_eq!(to_f64(&from_ratio(1, 4, p)), 0.25);
        assert!((to_f64(&from_ratio(-1, 3, p)) + 1.0 / 3.0).abs() < 1e-16);
        assert!((to_f64(&pow10_neg(30, p)) / 1e-30 - 1.0).abs() < 1e-12);
    }
}
