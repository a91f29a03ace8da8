//! Polynomials in `z` whose coefficients are truncated q-series.
//!
//! The `z`-degree is exact; only `q` is truncated, at the shared order
//! [`ZPolynomial::qorder`]. The substitution `z -> z q^j` is what lets one
//! convergent of the continued fraction be reused to build the next.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::fps::QSeries;

/// `sum_d zcoeffs[d] * z^d`, every coefficient truncated at `qorder`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ZPolynomial {
    qorder: usize,
    // No trailing zero series; the zero polynomial is empty.
    zcoeffs: Vec<QSeries>,
}

impl ZPolynomial {
    pub fn zero(qorder: usize) -> Self {
        ZPolynomial {
            qorder,
            zcoeffs: Vec::new(),
        }
    }

    pub fn one(qorder: usize) -> Self {
        Self::constant(QSeries::one(qorder))
    }

    pub fn constant(c: QSeries) -> Self {
        ZPolynomial {
            qorder: c.order(),
            zcoeffs: alloc::vec![c],
        }
        .normalized()
    }

    /// `coeff * z^zdeg * q^qdeg`.
    pub fn monomial(coeff: BigInt, zdeg: usize, qdeg: usize, qorder: usize) -> Self {
        let mut zcoeffs = alloc::vec![QSeries::zero(qorder); zdeg + 1];
        zcoeffs[zdeg] = QSeries::monomial(coeff, qdeg, qorder);
        ZPolynomial { qorder, zcoeffs }.normalized()
    }

    /// Builds from coefficients indexed by `z`-degree. Every entry must be
    /// truncated at `qorder`.
    pub fn from_coeffs(qorder: usize, zcoeffs: Vec<QSeries>) -> Result<Self> {
        if let Some(bad) = zcoeffs.iter().find(|c| c.order() != qorder) {
            return Err(Error::OrderMismatch {
                left: qorder,
                right: bad.order(),
            });
        }
        Ok(ZPolynomial { qorder, zcoeffs }.normalized())
    }

    /// Builds from `(coefficient, z-degree, q-degree)` terms.
    pub fn from_terms(qorder: usize, terms: &[(i64, usize, usize)]) -> Self {
        terms
            .iter()
            .map(|&(c, zd, qd)| Self::monomial(BigInt::from(c), zd, qd, qorder))
            .fold(Self::zero(qorder), |acc, m| {
                acc.zadd(&m).expect("same qorder")
            })
    }

    fn normalized(mut self) -> Self {
        while self.zcoeffs.last().is_some_and(QSeries::is_zero) {
            self.zcoeffs.pop();
        }
        self
    }

    pub fn qorder(&self) -> usize {
        self.qorder
    }

    /// Highest `z`-degree present; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.zcoeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.zcoeffs.is_empty()
    }

    pub fn zcoeffs(&self) -> &[QSeries] {
        &self.zcoeffs
    }

    /// Coefficient of `z^d`; the zero series above the degree.
    pub fn coeff(&self, d: usize) -> QSeries {
        self.zcoeffs
            .get(d)
            .cloned()
            .unwrap_or_else(|| QSeries::zero(self.qorder))
    }

    fn check_qorder(&self, other: &ZPolynomial) -> Result<()> {
        if self.qorder != other.qorder {
            return Err(Error::OrderMismatch {
                left: self.qorder,
                right: other.qorder,
            });
        }
        Ok(())
    }

    /// Replaces `z` by `z q^j`: the `z^d` coefficient is multiplied by `q^{jd}`.
    pub fn subst_zq(&self, j: usize) -> Self {
        let zcoeffs = self
            .zcoeffs
            .iter()
            .enumerate()
            .map(|(d, c)| c.shift(j.saturating_mul(d)))
            .collect();
        ZPolynomial {
            qorder: self.qorder,
            zcoeffs,
        }
        .normalized()
    }

    pub fn zadd(&self, other: &ZPolynomial) -> Result<Self> {
        self.check_qorder(other)?;
        let len = self.zcoeffs.len().max(other.zcoeffs.len());
        let zcoeffs = (0..len)
            .map(|d| match (self.zcoeffs.get(d), other.zcoeffs.get(d)) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => Ok(a.clone()),
                (None, Some(b)) => Ok(b.clone()),
                (None, None) => unreachable!(),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ZPolynomial {
            qorder: self.qorder,
            zcoeffs,
        }
        .normalized())
    }

    pub fn zsub(&self, other: &ZPolynomial) -> Result<Self> {
        self.zadd(&other.zneg())
    }

    pub fn zneg(&self) -> Self {
        let minus_one = -BigInt::one();
        ZPolynomial {
            qorder: self.qorder,
            zcoeffs: self.zcoeffs.iter().map(|c| c.scale(&minus_one)).collect(),
        }
    }

    pub fn zmul(&self, other: &ZPolynomial) -> Result<Self> {
        self.check_qorder(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.qorder));
        }
        let mut zcoeffs =
            alloc::vec![QSeries::zero(self.qorder); self.zcoeffs.len() + other.zcoeffs.len() - 1];
        for (i, a) in self.zcoeffs.iter().enumerate() {
            for (j, b) in other.zcoeffs.iter().enumerate() {
                zcoeffs[i + j] = zcoeffs[i + j].add(&a.mul(b)?)?;
            }
        }
        Ok(ZPolynomial {
            qorder: self.qorder,
            zcoeffs,
        }
        .normalized())
    }

    /// Multiplication by `z^k q^m`.
    pub fn zshift(&self, k: usize, m: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut zcoeffs = alloc::vec![QSeries::zero(self.qorder); k];
        zcoeffs.extend(self.zcoeffs.iter().map(|c| c.shift(m)));
        ZPolynomial {
            qorder: self.qorder,
            zcoeffs,
        }
        .normalized()
    }

    /// Sets `z = q^t`: `sum_d q^{td} * coeff_d`, truncated at `qorder`.
    pub fn eval_z_at_qpow(&self, t: usize) -> QSeries {
        self.zcoeffs
            .iter()
            .enumerate()
            .fold(QSeries::zero(self.qorder), |acc, (d, c)| {
                acc.add(&c.shift(t.saturating_mul(d))).expect("same qorder")
            })
    }

    /// Keeps only `z`-degrees `<= zdeg` and `q`-orders `<= qorder`.
    pub fn truncate(&self, zdeg: usize, qorder: usize) -> Result<Self> {
        let zcoeffs = self
            .zcoeffs
            .iter()
            .take(zdeg + 1)
            .map(|c| c.truncate(qorder))
            .collect::<Result<Vec<_>>>()?;
        Ok(ZPolynomial { qorder, zcoeffs }.normalized())
    }
}

/// Written term by term in the style `1+zq+zq^2+zq^3+z^2q^4`, ordered by
/// `z`-degree and then by `q`-degree.
impl fmt::Display for ZPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, series) in self.zcoeffs.iter().enumerate() {
            for (k, c) in series.coeffs().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                if c.is_negative() {
                    f.write_str("-")?;
                } else if !first {
                    f.write_str("+")?;
                }
                first = false;
                let mag = c.abs();
                if !mag.is_one() || (d == 0 && k == 0) {
                    write!(f, "{mag}")?;
                }
                match d {
                    0 => {}
                    1 => f.write_str("z")?,
                    _ => write!(f, "z^{d}")?,
                }
                match k {
                    0 => {}
                    1 => f.write_str("q")?,
                    _ => write!(f, "q^{k}")?,
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    const N: usize = 12;

    fn zp(terms: &[(i64, usize, usize)]) -> ZPolynomial {
        ZPolynomial::from_terms(N, terms)
    }

    #[test]
    fn subst_zq_examples() {
        let h1 = zp(&[(1, 0, 0), (1, 1, 1)]);
        assert_eq!(h1.subst_zq(1), zp(&[(1, 0, 0), (1, 1, 2)]));
        assert_eq!(h1.subst_zq(0), h1);
        let h2 = zp(&[(1, 0, 0), (1, 1, 1), (1, 1, 2)]);
        assert_eq!(h2.subst_zq(1), zp(&[(1, 0, 0), (1, 1, 2), (1, 1, 3)]));
    }

    #[test]
    fn ring_examples() {
        let a = zp(&[(1, 0, 0), (1, 1, 0)]);
        let b = zp(&[(1, 0, 0), (-1, 1, 0)]);
        assert_eq!(a.zmul(&b).unwrap(), zp(&[(1, 0, 0), (-1, 2, 0)]));

        let one = ZPolynomial::one(N);
        let h1 = zp(&[(1, 0, 0), (1, 1, 1)]);
        let h2 = h1.subst_zq(1).zadd(&one.zshift(1, 1)).unwrap();
        assert_eq!(h2, zp(&[(1, 0, 0), (1, 1, 1), (1, 1, 2)]));
        assert_eq!(one.zshift(1, 1), zp(&[(1, 1, 1)]));

        assert!(a.zadd(&ZPolynomial::one(N + 1)).is_err());
        assert!(a.zmul(&ZPolynomial::one(N + 1)).is_err());
    }

    #[test]
    fn zero_normalization() {
        let a = zp(&[(1, 0, 0), (1, 3, 2)]);
        let diff = a.zsub(&a).unwrap();
        assert!(diff.is_zero());
        assert_eq!(diff, ZPolynomial::zero(N));
        assert_eq!(diff.degree(), None);
        // q-shift past the truncation kills the top coefficient
        let high = zp(&[(1, 0, 0), (1, 2, 1)]);
        assert_eq!(high.subst_zq(6).degree(), Some(0));
        assert_eq!(zp(&[(0, 4, 0)]), ZPolynomial::zero(N));
    }

    #[test]
    fn eval_examples() {
        let h1 = zp(&[(1, 0, 0), (1, 1, 1)]);
        let one = QSeries::one(N);
        let q = |k| QSeries::monomial(BigInt::one(), k, N);
        assert_eq!(h1.eval_z_at_qpow(0), one.add(&q(1)).unwrap());
        assert_eq!(h1.eval_z_at_qpow(1), one.add(&q(2)).unwrap());
        assert_eq!(ZPolynomial::one(N).eval_z_at_qpow(5), QSeries::one(N));
    }

    #[test]
    fn display() {
        let h3 = zp(&[(1, 0, 0), (1, 1, 1), (1, 1, 2), (1, 1, 3), (1, 2, 4)]);
        assert_eq!(h3.to_string(), "1+zq+zq^2+zq^3+z^2q^4");
        assert_eq!(zp(&[(-2, 1, 0), (3, 2, 1)]).to_string(), "-2z+3z^2q");
        assert_eq!(zp(&[(-1, 0, 0)]).to_string(), "-1");
        assert_eq!(ZPolynomial::zero(3).to_string(), "0");
    }

    #[test]
    fn from_coeffs_checks_order() {
        assert!(ZPolynomial::from_coeffs(3, alloc::vec![QSeries::one(4)]).is_err());
        let p =
            ZPolynomial::from_coeffs(3, alloc::vec![QSeries::one(3), QSeries::zero(3)]).unwrap();
        assert_eq!(p.degree(), Some(0));
    }
}
