//! Formal Dirichlet series `sum_{n=1..N} c_n n^{-s}` and the stripping trick
//! run over them.
//!
//! Multiplying `zeta(s)` by `(1 - n^{-s})` for the smallest surviving
//! `n >= 2` again and again leaves exactly the primes as the stripped
//! indices, which is Euler's product `zeta(s) = prod_p 1/(1 - p^{-s})`.
//! `s` is never evaluated.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::fps::one_minus_x_pow;

/// Coefficients `c_1..=c_N` of `n^{-s}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DirichletSeries {
    // coeffs[n - 1] is c_n
    coeffs: Vec<BigInt>,
}

impl DirichletSeries {
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptyCoefficients);
        }
        Ok(DirichletSeries { coeffs })
    }

    pub fn from_i64s(coeffs: &[i64]) -> Result<Self> {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The multiplicative identity: `c_1 = 1`, everything else 0.
    pub fn identity(limit: usize) -> Result<Self> {
        if limit == 0 {
            return Err(Error::InvalidArgument("limit must be at least 1"));
        }
        let mut coeffs = vec![BigInt::zero(); limit];
        coeffs[0] = BigInt::one();
        Ok(DirichletSeries { coeffs })
    }

    /// `1 - n^{-s}`.
    pub fn one_minus_index(n: usize, limit: usize) -> Result<Self> {
        let mut s = Self::identity(limit)?;
        if n == 0 {
            return Err(Error::InvalidArgument("index starts at 1"));
        }
        if n <= limit {
            s.coeffs[n - 1] -= 1;
        }
        Ok(s)
    }

    pub fn limit(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// `c_n` for `1 <= n <= limit`.
    pub fn coefficient(&self, n: usize) -> Result<&BigInt> {
        n.checked_sub(1)
            .and_then(|i| self.coeffs.get(i))
            .ok_or(Error::IndexOutOfRange {
                index: n,
                order: self.limit(),
            })
    }

    pub fn is_identity(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// Dirichlet convolution: `(f g)_n = sum_{d | n} f_d g_{n/d}`.
    pub fn dmul(&self, other: &DirichletSeries) -> Result<Self> {
        if self.limit() != other.limit() {
            return Err(Error::LimitMismatch {
                left: self.limit(),
                right: other.limit(),
            });
        }
        let limit = self.limit();
        let mut coeffs = vec![BigInt::zero(); limit];
        for (i, f) in self.coeffs.iter().enumerate() {
            if f.is_zero() {
                continue;
            }
            let d = i + 1;
            for (j, g) in other.coeffs[..limit / d].iter().enumerate() {
                if !g.is_zero() {
                    coeffs[d * (j + 1) - 1] += f * g;
                }
            }
        }
        Ok(DirichletSeries { coeffs })
    }

    /// In-place multiplication by `(1 - n^{-s})^c`, for `n >= 2`.
    ///
    /// The factor lives on the powers `n^j`, with the coefficients of
    /// `(1 - x)^c`.
    pub fn mul_one_minus_index_pow(&mut self, n: usize, c: &BigInt) -> Result<()> {
        if n < 2 {
            return Err(Error::InvalidArgument("stripped index must be at least 2"));
        }
        let limit = self.limit();
        let mut powers = Vec::new();
        let mut p = n;
        while p <= limit {
            powers.push(p);
            p = match p.checked_mul(n) {
                Some(next) => next,
                None => break,
            };
        }
        let factor = one_minus_x_pow(c, powers.len() + 1);
        // descending: every read is at a strictly smaller, untouched index
        for m in (1..=limit).rev() {
            let mut acc = BigInt::zero();
            for (&pw, t) in powers.iter().zip(&factor[1..]) {
                if m % pw == 0 && !t.is_zero() {
                    acc += t * &self.coeffs[m / pw - 1];
                }
            }
            self.coeffs[m - 1] += acc;
        }
        Ok(())
    }

    /// Smallest index `n >= 2` with a nonzero coefficient.
    pub fn lowest_nonunit_term(&self) -> Option<(usize, &BigInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .skip(1)
            .find(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i + 1, c))
    }

    /// Cancels the smallest nontrivial term, returning its index and coefficient.
    pub fn strip_step(&mut self) -> Result<(usize, BigInt)> {
        if !self.coeffs[0].is_one() {
            return Err(Error::ConstantTermNotOne);
        }
        let (n, c) = self
            .lowest_nonunit_term()
            .map(|(n, c)| (n, c.clone()))
            .ok_or(Error::NothingToStrip)?;
        self.mul_one_minus_index_pow(n, &c)?;
        Ok((n, c))
    }

    /// Strips until the identity is left; returns every `(index, coefficient)`.
    pub fn strip_all(mut self) -> Result<Vec<(usize, BigInt)>> {
        let mut out = Vec::new();
        loop {
            match self.strip_step() {
                Ok(step) => out.push(step),
                Err(Error::NothingToStrip) => return Ok(out),
                Err(e) => return Err(e),
            }
        }
    }
}

/// `zeta(s)` truncated at `limit`: every coefficient 1.
pub fn zeta_series(limit: usize) -> Result<DirichletSeries> {
    if limit == 0 {
        return Err(Error::InvalidArgument("limit must be at least 1"));
    }
    DirichletSeries::from_coeffs(vec![BigInt::one(); limit])
}

/// Indices stripped from `zeta(s)` up to `limit`, in increasing order.
pub fn euler_strip(limit: usize) -> Result<Vec<usize>> {
    let steps = zeta_series(limit)?.strip_all()?;
    Ok(steps.into_iter().map(|(n, _)| n).collect())
}
