//! Truncated Laurent series with exact integer coefficients.
//!
//! An [`IntSeries`] stores the coefficients of `z^v, z^(v+1), ..., z^N`
//! together with the truncation order `N`: every coefficient of `z^n` with
//! `n <= N` is known exactly, everything above `N` is unknown. Polynomials
//! carry an unbounded order and stay exact under ring operations.
//!
//! Orders propagate the usual way: a sum is known through the smaller of the
//! two orders, a product of `(v1, N1)` and `(v2, N2)` through
//! `min(N1 + v2, N2 + v1)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Order of an exact polynomial.
pub const EXACT: i64 = i64::MAX;

fn order_plus(order: i64, shift: i64) -> i64 {
    if order == EXACT {
        EXACT
    } else {
        order + shift
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntSeries {
    valuation: i64,
    coeffs: Vec<BigInt>,
    order: i64,
}

impl IntSeries {
    /// Series known through `order` with the given coefficients starting at
    /// `z^valuation`. Coefficients above `order` are dropped.
    pub fn truncated(valuation: i64, coeffs: Vec<BigInt>, order: i64) -> Self {
        let mut s = IntSeries {
            valuation,
            coeffs,
            order,
        };
        s.normalize();
        s
    }

    /// Exact polynomial `sum coeffs[i] z^(valuation + i)`.
    pub fn polynomial(valuation: i64, coeffs: Vec<BigInt>) -> Self {
        Self::truncated(valuation, coeffs, EXACT)
    }

    pub fn from_i64s(valuation: i64, coeffs: &[i64], order: i64) -> Self {
        Self::truncated(
            valuation,
            coeffs.iter().map(|&c| BigInt::from(c)).collect(),
            order,
        )
    }

    pub fn poly_i64(valuation: i64, coeffs: &[i64]) -> Self {
        Self::from_i64s(valuation, coeffs, EXACT)
    }

    /// The zero series known through `order`.
    pub fn zero(order: i64) -> Self {
        Self::truncated(0, Vec::new(), order)
    }

    pub fn one() -> Self {
        Self::poly_i64(0, &[1])
    }

    pub fn monomial(coeff: BigInt, exponent: i64) -> Self {
        Self::polynomial(exponent, vec![coeff])
    }

    /// `1 / (1 - z^j)` through `order`.
    pub fn geometric(j: u64, order: i64) -> Self {
        assert!(j > 0, "geometric series needs a positive step");
        let len = if order < 0 { 0 } else { order as usize + 1 };
        let coeffs = (0..len)
            .map(|n| {
                if (n as u64).is_multiple_of(j) {
                    BigInt::one()
                } else {
                    BigInt::zero()
                }
            })
            .collect();
        Self::truncated(0, coeffs, order)
    }

    fn normalize(&mut self) {
        if self.order != EXACT {
            let keep = (self.order - self.valuation + 1).clamp(0, self.coeffs.len() as i64);
            self.coeffs.truncate(keep as usize);
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.valuation += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.valuation = if self.order == EXACT {
                0
            } else {
                self.order + 1
            };
        }
    }

    /// Exponent of the lowest nonzero known coefficient. For a series whose
    /// known coefficients all vanish this is `order + 1`.
    pub fn valuation(&self) -> i64 {
        self.valuation
    }

    /// Largest exponent whose coefficient is known; [`EXACT`] for polynomials.
    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn is_exact(&self) -> bool {
        self.order == EXACT
    }

    /// True when every known coefficient is zero.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `z^n`, or `None` when `n` lies above the order.
    pub fn coeff(&self, n: i64) -> Option<BigInt> {
        if n > self.order {
            return None;
        }
        let idx = n - self.valuation;
        if idx < 0 || idx >= self.coeffs.len() as i64 {
            Some(BigInt::zero())
        } else {
            Some(self.coeffs[idx as usize].clone())
        }
    }

    /// Nonzero stored coefficients as `(exponent, coefficient)` pairs.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.valuation + i as i64, c))
    }

    /// Dense coefficients of `z^0 ..= z^upto`; negative exponents are ignored.
    pub fn dense(&self, upto: usize) -> Result<Vec<BigInt>> {
        if (upto as i64) > self.order {
            return Err(Error::OrderTooSmall {
                order: self.order,
                needed: upto as i64,
            });
        }
        Ok((0..=upto as i64)
            .map(|n| self.coeff(n).unwrap_or_default())
            .collect())
    }

    /// Multiply by `z^e`.
    pub fn shift(&self, e: i64) -> Self {
        if self.is_zero() {
            return Self::zero(order_plus(self.order, e));
        }
        IntSeries {
            valuation: self.valuation + e,
            coeffs: self.coeffs.clone(),
            order: order_plus(self.order, e),
        }
    }

    /// Forget every coefficient above `order`.
    pub fn truncate(&self, order: i64) -> Self {
        Self::truncated(self.valuation, self.coeffs.clone(), order.min(self.order))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::truncated(
            self.valuation,
            self.coeffs.iter().map(|x| x * c).collect(),
            self.order,
        )
    }

    fn add_impl(&self, rhs: &IntSeries, negate_rhs: bool) -> Self {
        let order = self.order.min(rhs.order);
        if self.is_zero() && rhs.is_zero() {
            return Self::zero(order);
        }
        let lo = match (self.is_zero(), rhs.is_zero()) {
            (true, _) => rhs.valuation,
            (_, true) => self.valuation,
            _ => self.valuation.min(rhs.valuation),
        };
        let hi_self = self.valuation + self.coeffs.len() as i64;
        let hi_rhs = rhs.valuation + rhs.coeffs.len() as i64;
        let hi = hi_self.max(hi_rhs).min(order_plus(order, 1));
        let len = (hi - lo).max(0) as usize;
        let mut out = vec![BigInt::zero(); len];
        for (i, c) in self.coeffs.iter().enumerate() {
            let idx = self.valuation + i as i64 - lo;
            if (idx as usize) < len {
                out[idx as usize] += c;
            }
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            let idx = rhs.valuation + i as i64 - lo;
            if (idx as usize) < len {
                if negate_rhs {
                    out[idx as usize] -= c;
                } else {
                    out[idx as usize] += c;
                }
            }
        }
        Self::truncated(lo, out, order)
    }

    fn mul_impl(&self, rhs: &IntSeries) -> Self {
        let order =
            order_plus(self.order, rhs.valuation).min(order_plus(rhs.order, self.valuation));
        if self.is_zero() || rhs.is_zero() {
            return Self::zero(order);
        }
        let lo = self.valuation + rhs.valuation;
        let full = self.coeffs.len() + rhs.coeffs.len() - 1;
        let len = if order == EXACT {
            full
        } else {
            ((order - lo + 1).max(0) as usize).min(full)
        };
        let mut out = vec![BigInt::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if i >= len {
                break;
            }
            for (j, b) in rhs.coeffs.iter().take(len - i).enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::truncated(lo, out, order)
    }

    /// Multiply by `1 / (1 - z^j)` in linear time. The order is unchanged.
    pub fn div_one_minus_power(&self, j: u64) -> Result<Self> {
        if self.is_exact() {
            return Err(Error::UnboundedOrder);
        }
        assert!(j > 0, "division by 1 - z^0");
        if self.is_zero() {
            return Ok(self.clone());
        }
        let len = (self.order - self.valuation + 1).max(0) as usize;
        let mut out: Vec<BigInt> = Vec::with_capacity(len);
        let j = j as usize;
        for n in 0..len {
            let mut c = self.coeffs.get(n).cloned().unwrap_or_default();
            if n >= j {
                c += &out[n - j];
            }
            out.push(c);
        }
        Ok(Self::truncated(self.valuation, out, self.order))
    }

    /// Multiplicative inverse. The coefficient at the valuation must be `+1`
    /// or `-1`; the result has valuation `-v` and order `N - 2v`.
    pub fn invert(&self) -> Result<Self> {
        if self.is_exact() {
            return Err(Error::UnboundedOrder);
        }
        let lead = match self.coeffs.first() {
            Some(c) if c.abs().is_one() => c.clone(),
            Some(c) => {
                return Err(Error::NotInvertible {
                    leading: c.to_string(),
                })
            }
            None => {
                return Err(Error::NotInvertible {
                    leading: "0".into(),
                })
            }
        };
        let v = self.valuation;
        let order = self.order - 2 * v;
        let len = (self.order - v + 1).max(0) as usize;
        let mut inv: Vec<BigInt> = Vec::with_capacity(len);
        inv.push(lead.clone());
        for n in 1..len {
            let mut acc = BigInt::zero();
            for (i, a) in self.coeffs.iter().enumerate().take(n + 1).skip(1) {
                acc += a * &inv[n - i];
            }
            // lead is a unit, so dividing by it is multiplying by it
            inv.push(-(acc * &lead));
        }
        Ok(Self::truncated(-v, inv, order))
    }

    /// Formal derivative `d/dz`.
    pub fn derivative(&self) -> Self {
        if self.is_zero() {
            return Self::zero(order_plus(self.order, -1));
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c * BigInt::from(self.valuation + i as i64))
            .collect();
        Self::truncated(self.valuation - 1, coeffs, order_plus(self.order, -1))
    }

    /// Order through which `self` and `other` can be compared.
    pub fn common_order(&self, other: &IntSeries) -> i64 {
        self.order.min(other.order)
    }

    /// First exponent at which the two series provably differ.
    pub fn first_difference(&self, other: &IntSeries) -> Option<i64> {
        let diff = self - other;
        if diff.is_zero() {
            None
        } else {
            Some(diff.valuation)
        }
    }

    pub fn agrees_with(&self, other: &IntSeries) -> bool {
        self.first_difference(other).is_none()
    }
}

impl Add for &IntSeries {
    type Output = IntSeries;
    fn add(self, rhs: &IntSeries) -> IntSeries {
        self.add_impl(rhs, false)
    }
}

impl Sub for &IntSeries {
    type Output = IntSeries;
    fn sub(self, rhs: &IntSeries) -> IntSeries {
        self.add_impl(rhs, true)
    }
}

impl Mul for &IntSeries {
    type Output = IntSeries;
    fn mul(self, rhs: &IntSeries) -> IntSeries {
        self.mul_impl(rhs)
    }
}

impl Neg for &IntSeries {
    type Output = IntSeries;
    fn neg(self) -> IntSeries {
        IntSeries {
            valuation: self.valuation,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            order: self.order,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntSeries {
            type Output = IntSeries;
            fn $m(self, rhs: IntSeries) -> IntSeries {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&IntSeries> for IntSeries {
            type Output = IntSeries;
            fn $m(self, rhs: &IntSeries) -> IntSeries {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for IntSeries {
    type Output = IntSeries;
    fn neg(self) -> IntSeries {
        -&self
    }
}

/// Debug format: a header line `valuation v / order N` followed by one
/// `n c_n` line per stored coefficient.
impl fmt::Display for IntSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_exact() {
            writeln!(f, "valuation {} / order inf", self.valuation)?;
        } else {
            writeln!(f, "valuation {} / order {}", self.valuation, self.order)?;
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            writeln!(f, "{} {}", self.valuation + i as i64, c)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: i64, c: &[i64], n: i64) -> IntSeries {
        IntSeries::from_i64s(v, c, n)
    }

    #[test]
    fn shift_moves_valuation() {
        let t = IntSeries::poly_i64(0, &[1, 1]).shift(3);
        assert_eq!(t, IntSeries::poly_i64(3, &[1, 1]));
        assert_eq!(t.valuation(), 3);
    }

    #[test]
    fn add_contracts_order() {
        let a = s(0, &[1, -1], 5);
        let b = s(1, &[1], 2);
        let sum = &a + &b;
        assert_eq!(sum, s(0, &[1], 2));
        assert_eq!(sum.order(), 2);
    }

    #[test]
    fn negate() {
        assert_eq!(
            -IntSeries::poly_i64(0, &[-1, 1]),
            IntSeries::poly_i64(0, &[1, -1])
        );
    }

    #[test]
    fn mul_polynomials_is_exact() {
        let p = IntSeries::poly_i64(0, &[1, 1]) * IntSeries::poly_i64(0, &[1, -1]);
        assert_eq!(p, IntSeries::poly_i64(0, &[1, 0, -1]));
        assert!(p.is_exact());
    }

    #[test]
    fn geometric_times_its_denominator() {
        let p = IntSeries::geometric(1, 4) * IntSeries::poly_i64(0, &[1, -1]);
        assert_eq!(p, s(0, &[1], 4));
    }

    #[test]
    fn geometric_squared() {
        let g = IntSeries::geometric(1, 4);
        assert_eq!(&g * &g, s(0, &[1, 2, 3, 4, 5], 4));
    }

    #[test]
    fn product_order_rule() {
        let a = s(2, &[1, 1], 6);
        let b = s(-1, &[1, 3], 3);
        // min(6 - 1, 3 + 2)
        assert_eq!((&a * &b).order(), 5);
    }

    #[test]
    fn invert_one_minus_z() {
        let inv = s(0, &[1, -1], 4).invert().unwrap();
        assert_eq!(inv, s(0, &[1, 1, 1, 1, 1], 4));
    }

    #[test]
    fn invert_laurent() {
        let a = s(2, &[-1, 1, 2], 6);
        let inv = a.invert().unwrap();
        assert_eq!(inv.valuation(), -2);
        assert_eq!(inv.order(), 2);
        let one = &a * &inv;
        assert_eq!(one, s(0, &[1], 4));
    }

    #[test]
    fn invert_rejects_non_units() {
        assert!(matches!(
            s(0, &[2, -1], 5).invert(),
            Err(Error::NotInvertible { .. })
        ));
        assert!(matches!(
            s(0, &[], 5).invert(),
            Err(Error::NotInvertible { .. })
        ));
        assert_eq!(
            IntSeries::poly_i64(0, &[1, -1]).invert(),
            Err(Error::UnboundedOrder)
        );
    }

    #[test]
    fn div_one_minus_power_matches_mul() {
        let a = s(1, &[3, -2, 0, 5, 1], 9);
        for j in 1..5 {
            assert_eq!(
                a.div_one_minus_power(j).unwrap(),
                &a * &IntSeries::geometric(j, 9)
            );
        }
    }

    #[test]
    fn zero_series_keeps_order() {
        let z = s(0, &[0, 0], 3);
        assert!(z.is_zero());
        assert_eq!(z.valuation(), 4);
        assert_eq!(z.coeff(3), Some(BigInt::zero()));
        assert_eq!(z.coeff(4), None);
        let p = &z * &s(0, &[1, 1], 10);
        assert_eq!(p.order(), 3);
    }

    #[test]
    fn derivative_of_geometric() {
        let d = IntSeries::geometric(1, 5).derivative();
        assert_eq!(d, s(0, &[1, 2, 3, 4, 5], 4));
    }

    #[test]
    fn first_difference_reports_exponent() {
        let a = s(0, &[1, 2, 3, 4], 3);
        let b = s(0, &[1, 2, 9, 4], 8);
        assert_eq!(a.first_difference(&b), Some(2));
        assert_eq!(a.first_difference(&a.truncate(2)), None);
    }

    #[test]
    fn display_format() {
        let text = s(-1, &[1, 0, -2], 4).to_string();
        assert_eq!(text, "valuation -1 / order 4\n-1 1\n0 0\n1 -2\n");
    }
}
