//! Convergents of the golden-mean fraction `1 + 1/(1 + 1/(1 + ...))` and of
//! the Rogers-Ramanujan fraction `c(z, q) = 1 + zq/(1 + zq^2/(1 + ...))`.
//!
//! The `n`-th Rogers-Ramanujan convergent is `H_n(z, q) / H_{n-1}(zq, q)`,
//! and the numerators obey
//! `H_k(z, q) = H_{k-1}(zq, q) + zq H_{k-2}(zq^2, q)` with `H_{-1} = H_0 = 1`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::fps::QSeries;
use crate::sumside::rr_sum;
use crate::zpoly::ZPolynomial;

pub use num_rational::BigRational;

/// `(1 + sqrt 5) / 2`
pub const GOLDEN_MEAN: f64 = 1.618_033_988_749_895;

/// `F_0 = F_1 = 1`, `F_n = F_{n-1} + F_{n-2}`.
pub fn fibonacci(n: usize) -> BigInt {
    let (mut a, mut b) = (BigInt::one(), BigInt::one());
    for _ in 0..n {
        let next = &a + &b;
        a = core::mem::replace(&mut b, next);
    }
    a
}

/// `w_1 = 1`, `w_n = 1 + 1/w_{n-1}`.
pub fn golden_convergent(n: usize) -> Result<BigRational> {
    if n == 0 {
        return Err(Error::InvalidArgument("convergent index starts at 1"));
    }
    let one = BigRational::one();
    let mut w = one.clone();
    for _ in 1..n {
        w = &one + w.recip();
    }
    Ok(w)
}

/// `|w_n - (1 + sqrt 5)/2|` in floating point. Diagnostic only.
pub fn golden_error(n: usize) -> Result<f64> {
    let w = golden_convergent(n)?;
    let approx = w
        .to_f64()
        .ok_or(Error::InvalidArgument("convergent not representable"))?;
    let diff = approx - GOLDEN_MEAN;
    Ok(if diff < 0.0 { -diff } else { diff })
}

/// `H_0..=H_n`, each truncated at `qorder`.
pub fn rr_numerators(n: usize, qorder: usize) -> Vec<ZPolynomial> {
    let one = ZPolynomial::one(qorder);
    let mut out = Vec::with_capacity(n + 1);
    out.push(one.clone());
    // H_{-1}
    let mut before = one;
    for k in 1..=n {
        let prev = &out[k - 1];
        let next = prev
            .subst_zq(1)
            .zadd(&before.subst_zq(2).zshift(1, 1))
            .expect("same qorder");
        before = prev.clone();
        out.push(next);
    }
    out
}

/// Numerator and denominator of the `n`-th convergent `c_n(z, q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RrConvergent {
    pub numerator: ZPolynomial,
    pub denominator: ZPolynomial,
}

impl RrConvergent {
    /// The convergent at `z = 1` as a power series.
    pub fn series(&self) -> QSeries {
        let num = self.numerator.eval_z_at_qpow(0);
        let den = self.denominator.eval_z_at_qpow(0);
        num.mul(&den.invert().expect("denominator has constant term 1"))
            .expect("same order")
    }
}

/// `(H_n(z, q), H_{n-1}(zq, q))` for `n >= 1`.
pub fn rr_convergent(n: usize, qorder: usize) -> Result<RrConvergent> {
    if n == 0 {
        return Err(Error::InvalidArgument("convergent index starts at 1"));
    }
    let mut hs = rr_numerators(n, qorder);
    let numerator = hs.pop().expect("n + 1 entries");
    let denominator = hs.pop().expect("n >= 1").subst_zq(1);
    Ok(RrConvergent {
        numerator,
        denominator,
    })
}

/// `c(1, q)` as a power series: the first sum divided by the second.
pub fn cfrac_series(qorder: usize) -> QSeries {
    let second = rr_sum(1, qorder).invert().expect("constant term 1");
    rr_sum(0, qorder).mul(&second).expect("same order")
}

/// Highest `q`-order through which the `n`-th convergent at `z = 1` agrees
/// with [`cfrac_series`]. Returns `qorder` when they agree everywhere.
pub fn convergent_agreement(n: usize, qorder: usize) -> Result<usize> {
    let approx = rr_convergent(n, qorder)?.series();
    Ok(match approx.first_difference(&cfrac_series(qorder)) {
        None => qorder,
        Some(0) => unreachable!("both constant terms are 1"),
        Some(k) => k - 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn ratio(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn fibonacci_examples() {
        let first: Vec<_> = (0..8).map(|n| fibonacci(n).to_i64().unwrap()).collect();
        assert_eq!(first, [1, 1, 2, 3, 5, 8, 13, 21]);
        assert_eq!(fibonacci(30), BigInt::from(1_346_269));
    }

    #[test]
    fn golden_convergent_examples() {
        let table: Vec<_> = (1..=5).map(|n| golden_convergent(n).unwrap()).collect();
        assert_eq!(
            table,
            [
                ratio(1, 1),
                ratio(2, 1),
                ratio(3, 2),
                ratio(5, 3),
                ratio(8, 5)
            ]
        );
        assert_eq!(golden_convergent(9).unwrap(), ratio(55, 34));
        assert!(golden_convergent(0).is_err());
    }

    #[test]
    fn golden_convergent_is_fibonacci_ratio() {
        for n in 1..=200 {
            let w = golden_convergent(n).unwrap();
            assert_eq!(w.numer(), &fibonacci(n));
            assert_eq!(w.denom(), &fibonacci(n - 1));
        }
    }

    #[test]
    fn golden_error_examples() {
        let e5 = golden_error(5).unwrap();
        assert!((e5 - 0.018_033_988_75).abs() < 1e-9);
        assert!((golden_error(1).unwrap() - 0.618_033_988_75).abs() < 1e-9);
        assert!(golden_error(20).unwrap() < 1e-7);
        for n in 2..30 {
            assert!(
                golden_error(n + 1).unwrap() < golden_error(n).unwrap(),
                "n={n}"
            );
        }
    }

    #[test]
    fn numerators_match_displayed_convergents() {
        let n = 10;
        let hs = rr_numerators(4, n);
        let zp = |t: &[(i64, usize, usize)]| ZPolynomial::from_terms(n, t);
        assert_eq!(hs[0], ZPolynomial::one(n));
        assert_eq!(hs[1], zp(&[(1, 0, 0), (1, 1, 1)]));
        assert_eq!(hs[2].to_string(), "1+zq+zq^2");
        assert_eq!(hs[3].to_string(), "1+zq+zq^2+zq^3+z^2q^4");
        assert_eq!(
            hs[4].to_string(),
            "1+zq+zq^2+zq^3+zq^4+z^2q^4+z^2q^5+z^2q^6"
        );
    }

    #[test]
    fn convergent_examples() {
        let c1 = rr_convergent(1, 10).unwrap();
        assert_eq!(c1.numerator.to_string(), "1+zq");
        assert_eq!(c1.denominator, ZPolynomial::one(10));
        let c2 = rr_convergent(2, 10).unwrap();
        assert_eq!(c2.numerator.to_string(), "1+zq+zq^2");
        assert_eq!(c2.denominator.to_string(), "1+zq^2");
        let c3 = rr_convergent(3, 10).unwrap();
        assert_eq!(c3.denominator.to_string(), "1+zq^2+zq^3");
        let c4 = rr_convergent(4, 10).unwrap();
        assert_eq!(c4.denominator.to_string(), "1+zq^2+zq^3+zq^4+z^2q^6");
        assert!(rr_convergent(0, 10).is_err());
    }

    /// Simplifies `1 + zq/(1 + zq^2/(... 1 + zq^n/1))` bottom-up as a pair
    /// (numerator, denominator), with no recurrence and no seed values.
    fn nested_fraction(n: usize, qorder: usize) -> (ZPolynomial, ZPolynomial) {
        let one = ZPolynomial::one(qorder);
        let (mut num, mut den) = (one.clone(), one);
        for j in (1..=n).rev() {
            // 1 + zq^j / (num/den) = (num + zq^j den) / num
            let next = num.zadd(&den.zshift(1, j)).unwrap();
            den = num;
            num = next;
        }
        (num, den)
    }

    #[test]
    fn recurrence_seeds_match_direct_simplification() {
        let qorder = 40;
        for n in 1..=6 {
            let (num, den) = nested_fraction(n, qorder);
            let c = rr_convergent(n, qorder).unwrap();
            assert_eq!(c.numerator, num, "n={n}");
            assert_eq!(c.denominator, den, "n={n}");
        }
    }

    #[test]
    fn denominator_is_shifted_previous_numerator() {
        for n in 2..=12 {
            let cur = rr_convergent(n, 60).unwrap();
            let prev = rr_convergent(n - 1, 60).unwrap();
            assert_eq!(cur.denominator, prev.numerator.subst_zq(1));
        }
    }

    #[test]
    fn cfrac_series_examples() {
        assert_eq!(cfrac_series(0), QSeries::one(0));
        assert_eq!(cfrac_series(1), QSeries::from_i64s(&[1, 1]).unwrap());
        // deep convergent as an independent route
        let deep = rr_convergent(25, 12).unwrap().series();
        assert_eq!(cfrac_series(12), deep);
        assert_eq!(
            cfrac_series(12),
            QSeries::from_i64s(&[1, 1, 0, -1, 0, 1, 1, -1, -2, 0, 2, 2, -1]).unwrap()
        );
    }

    #[test]
    fn convergents_approach_the_series() {
        for n in 1..=15 {
            let agree = convergent_agreement(n, 200).unwrap();
            assert!(agree >= n, "n={n} agree={agree}");
        }
    }
}
