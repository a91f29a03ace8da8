//! Truncated formal power series in one indeterminate `q`.
//!
//! A [`QSeries`] of order `N` stores the exact integer coefficients
//! `a_0..=a_N`. The order is part of the value: binary operations insist on
//! equal orders and return [`Error::OrderMismatch`] otherwise, so a
//! truncation bug shows up as an error instead of as silently wrong
//! coefficients.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Truncated power series `a_0 + a_1 q + ... + a_N q^N` with big-integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QSeries {
    // Always exactly `order + 1` entries.
    coeffs: Vec<BigInt>,
}

/// Multiplicities up to this size are applied as repeated sparse factors.
const REPEAT_LIMIT: u32 = 16;

impl QSeries {
    pub fn zero(order: usize) -> Self {
        QSeries {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(BigInt::one(), 0, order)
    }

    /// `coeff * q^power`, which is the zero series when `power > order`.
    pub fn monomial(coeff: BigInt, power: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if power <= order {
            s.coeffs[power] = coeff;
        }
        s
    }

    /// Builds a series from `a_0..=a_N`; the order is `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptyCoefficients);
        }
        Ok(QSeries { coeffs })
    }

    /// Convenience constructor for small literal coefficients.
    pub fn from_i64s(coeffs: &[i64]) -> Result<Self> {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `1 + q^m + q^{2m} + ...` truncated at `order`, i.e. `1/(1 - q^m)`.
    pub fn geometric(m: usize, order: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::ZeroExponent);
        }
        let mut s = Self::zero(order);
        for k in (0..=order).step_by(m) {
            s.coeffs[k] = BigInt::one();
        }
        Ok(s)
    }

    /// `1 - q^e` truncated at `order`.
    pub fn one_minus_qpow(e: usize, order: usize) -> Self {
        let mut s = Self::one(order);
        if e <= order {
            s.coeffs[e] -= 1;
        }
        s
    }

    /// Inclusive truncation degree.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `q^k`. Asking past the order is an error: the
    /// truncation carries no information there.
    pub fn coefficient(&self, k: usize) -> Result<&BigInt> {
        self.coeffs.get(k).ok_or(Error::IndexOutOfRange {
            index: k,
            order: self.order(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// True when the series is `1` up to its order.
    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// Smallest `k >= 1` with a nonzero coefficient, together with that coefficient.
    pub fn lowest_nonconstant_term(&self) -> Option<(usize, &BigInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .skip(1)
            .find(|(_, c)| !c.is_zero())
    }

    /// First index where the two series differ, comparing up to the smaller order.
    pub fn first_difference(&self, other: &QSeries) -> Option<usize> {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .position(|(a, b)| a != b)
    }

    /// Drops every term above `order`.
    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order() {
            return Err(Error::IndexOutOfRange {
                index: order,
                order: self.order(),
            });
        }
        Ok(QSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    fn check_order(&self, other: &QSeries) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    /// `ca * self + cb * other`, coefficient-wise.
    pub fn linear_combine(
        &self,
        other: &QSeries,
        ca: impl Into<BigInt>,
        cb: impl Into<BigInt>,
    ) -> Result<Self> {
        self.check_order(other)?;
        let (ca, cb) = (ca.into(), cb.into());
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| &ca * a + &cb * b)
            .collect();
        Ok(QSeries { coeffs })
    }

    pub fn add(&self, other: &QSeries) -> Result<Self> {
        self.linear_combine(other, 1, 1)
    }

    pub fn sub(&self, other: &QSeries) -> Result<Self> {
        self.linear_combine(other, 1, -1)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        QSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplication by `q^k`; terms pushed past the order are dropped.
    pub fn shift(&self, k: usize) -> Self {
        let n = self.coeffs.len();
        let mut coeffs = vec![BigInt::zero(); n];
        if k < n {
            coeffs[k..].clone_from_slice(&self.coeffs[..n - k]);
        }
        QSeries { coeffs }
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &QSeries) -> Result<Self> {
        self.check_order(other)?;
        let n = self.coeffs.len();
        let mut coeffs = vec![BigInt::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..n - i].iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Ok(QSeries { coeffs })
    }

    /// Reciprocal of a series whose constant term is `1` or `-1`.
    ///
    /// Uses the triangular recurrence `b_0 = a_0`,
    /// `b_k = -a_0 * sum_{i=1..k} a_i b_{k-i}`, which keeps every
    /// coefficient integral.
    pub fn invert(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.abs() != BigInt::one() {
            return Err(Error::NonUnitConstantTerm);
        }
        let n = self.coeffs.len();
        let mut inv: Vec<BigInt> = Vec::with_capacity(n);
        inv.push(a0.clone());
        for k in 1..n {
            let mut acc = BigInt::zero();
            for i in 1..=k {
                let ai = &self.coeffs[i];
                if !ai.is_zero() {
                    acc += ai * &inv[k - i];
                }
            }
            inv.push(-(a0 * acc));
        }
        Ok(QSeries { coeffs: inv })
    }

    /// In-place multiplication by `1 - q^e`. O(N).
    pub fn mul_one_minus_qpow(&mut self, e: usize) -> Result<()> {
        if e == 0 {
            return Err(Error::ZeroExponent);
        }
        for k in (e..self.coeffs.len()).rev() {
            let lower = self.coeffs[k - e].clone();
            self.coeffs[k] -= lower;
        }
        Ok(())
    }

    /// In-place division by `1 - q^e`, i.e. multiplication by
    /// [`QSeries::geometric`]`(e)`. O(N).
    pub fn div_one_minus_qpow(&mut self, e: usize) -> Result<()> {
        if e == 0 {
            return Err(Error::ZeroExponent);
        }
        for k in e..self.coeffs.len() {
            let lower = self.coeffs[k - e].clone();
            self.coeffs[k] += lower;
        }
        Ok(())
    }

    /// In-place multiplication by `(1 - q^e)^c` for any integer `c`.
    ///
    /// Small `|c|` applies the sparse factor repeatedly; larger exponents go
    /// through the generalized binomial expansion of `(1 - x)^c`.
    pub fn mul_one_minus_qpow_pow(&mut self, e: usize, c: &BigInt) -> Result<()> {
        if e == 0 {
            return Err(Error::ZeroExponent);
        }
        match c.abs().to_u32() {
            Some(times) if times <= REPEAT_LIMIT => {
                for _ in 0..times {
                    if c.is_positive() {
                        self.mul_one_minus_qpow(e)?;
                    } else {
                        self.div_one_minus_qpow(e)?;
                    }
                }
            }
            _ => self.mul_binomial(e, c),
        }
        Ok(())
    }

    fn mul_binomial(&mut self, e: usize, c: &BigInt) {
        let terms = self.order() / e + 1;
        let factor = one_minus_x_pow(c, terms);
        // Descending k reads only lower, not yet updated, entries.
        for k in (0..self.coeffs.len()).rev() {
            let mut acc = BigInt::zero();
            for (j, t) in factor.iter().enumerate().skip(1) {
                let Some(idx) = k.checked_sub(j * e) else {
                    break;
                };
                if !t.is_zero() {
                    acc += t * &self.coeffs[idx];
                }
            }
            self.coeffs[k] += acc;
        }
    }
}

/// Coefficients of `x^0..x^{terms-1}` in `(1 - x)^c`, for any integer `c`.
///
/// `t_0 = 1`, `t_j = t_{j-1} * (j - 1 - c) / j`; the division is exact.
pub(crate) fn one_minus_x_pow(c: &BigInt, terms: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(terms);
    let mut t = BigInt::one();
    for j in 0..terms {
        if j > 0 {
            t = t * (BigInt::from(j - 1) - c) / BigInt::from(j);
        }
        out.push(t.clone());
    }
    out
}

/// `a_0 + a_1 q + ...` with zero terms omitted, unit coefficients elided and
/// signs folded into the separators, e.g. `1 + q - q^2 + 2*q^4`.
impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    match k {
                        1 => f.write_str("q")?,
                        _ => write!(f, "q^{k}")?,
                    }
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}
