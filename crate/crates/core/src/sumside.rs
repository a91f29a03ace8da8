//! The sum sides of the Rogers-Ramanujan identities.
//!
//! Both sums are specialisations of
//! `H(z, q) = sum_k q^{k^2} z^k / (q;q)_k`, the power-series solution of
//! `H(z, q) = H(zq, q) + zq H(zq^2, q)` with `a_0 = 1`. Setting `z = 1`
//! gives the first sum, `z = q` the second.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use crate::fps::QSeries;
use crate::prodmake::ResiduePattern;
use crate::zpoly::ZPolynomial;

/// Which of the two identities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Identity {
    /// `sum q^{k^2}/(q;q)_k = prod 1/((1-q^{5m+1})(1-q^{5m+4}))`
    First,
    /// `sum q^{k^2+k}/(q;q)_k = prod 1/((1-q^{5m+2})(1-q^{5m+3}))`
    Second,
}

impl Identity {
    /// The `t` in `q^{k^2 + tk}`.
    pub fn shift(self) -> usize {
        match self {
            Identity::First => 0,
            Identity::Second => 1,
        }
    }

    pub fn sum_side(self, order: usize) -> QSeries {
        rr_sum(self.shift(), order)
    }

    /// Exponents `{1,4}` or `{2,3}` mod 5, each with multiplicity `-1`.
    pub fn product_pattern(self) -> ResiduePattern {
        let residues: &[usize] = match self {
            Identity::First => &[1, 4],
            Identity::Second => &[2, 3],
        };
        ResiduePattern::new(5, residues.iter().copied(), -BigInt::one()).expect("valid pattern")
    }
}

/// `(q;q)_k = (1-q)(1-q^2)...(1-q^k)`; `1` for `k = 0`.
pub fn qrfac(k: usize, order: usize) -> QSeries {
    let mut s = QSeries::one(order);
    for j in 1..=k.min(order) {
        s.mul_one_minus_qpow(j).expect("j >= 1");
    }
    s
}

/// `q^{k^2 + tk} / (q;q)_k`, the `k`-th summand.
pub fn rr_term(k: usize, t: usize, order: usize) -> QSeries {
    let power = k.saturating_mul(k).saturating_add(t.saturating_mul(k));
    let mut s = QSeries::monomial(BigInt::one(), power, order);
    if power <= order {
        for j in 1..=k {
            s.div_one_minus_qpow(j).expect("j >= 1");
        }
    }
    s
}

/// Number of summands that survive truncation: those with `k^2 + tk <= order`.
fn term_count(t: usize, order: usize) -> usize {
    (0..)
        .take_while(|&k: &usize| k * k + t * k <= order)
        .count()
}

/// `sum_{k >= 0} q^{k^2 + tk} / (q;q)_k` truncated at `order`.
///
/// `t = 0` and `t = 1` are the two Rogers-Ramanujan sums.
pub fn rr_sum(t: usize, order: usize) -> QSeries {
    (0..term_count(t, order))
        .map(|k| rr_term(k, t, order))
        .fold(QSeries::zero(order), |acc, term| {
            acc.add(&term).expect("same order")
        })
}

/// Checks `a_k (1 - q^k) = q^{2k-1} a_{k-1}` for `1 <= k <= kmax`, where
/// `a_k = q^{k^2}/(q;q)_k`.
pub fn coeff_recurrence_check(kmax: usize, order: usize) -> bool {
    coeff_recurrence_holds(kmax, order, |k| rr_term(k, 0, order))
}

/// The same recurrence for an arbitrary coefficient sequence `a`.
pub fn coeff_recurrence_holds(kmax: usize, order: usize, a: impl Fn(usize) -> QSeries) -> bool {
    let mut prev = a(0);
    for k in 1..=kmax {
        let cur = a(k);
        let mut lhs = cur.clone();
        lhs.mul_one_minus_qpow(k).expect("k >= 1");
        let rhs = prev.shift(2 * k - 1);
        if lhs.order() != order || lhs != rhs {
            return false;
        }
        prev = cur;
    }
    true
}

/// `sum_{k=0..=kmax} z^k q^{k^2}/(q;q)_k`: `H(z, q)` cut at `z`-degree `kmax`.
pub fn h_bivariate(kmax: usize, order: usize) -> ZPolynomial {
    let coeffs: Vec<QSeries> = (0..=kmax).map(|k| rr_term(k, 0, order)).collect();
    ZPolynomial::from_coeffs(order, coeffs).expect("uniform order")
}
